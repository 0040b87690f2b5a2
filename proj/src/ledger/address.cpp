/*
   Copyright 2026 The dgov Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <dgov/ledger/address.hpp>

#include <algorithm>

#include <dgov/algebra/hash.hpp>
#include <dgov/common/error.hpp>

namespace dgov::ledger {

Address Address::from_label(std::string_view label) {
    const auto d = algebra::tagged_hash("DGOV-ADDRESS-V1", as_bytes(label));
    Address a;
    std::copy_n(d.begin(), a.bytes.size(), a.bytes.begin());
    return a;
}

Address Address::from_hex(std::string_view hex) {
    if (hex.starts_with("0x")) hex.remove_prefix(2);
    const auto b = dgov::from_hex(hex);
    if (b.size() != 20) throw DecodeError("address must be 20 bytes");
    Address a;
    std::copy(b.begin(), b.end(), a.bytes.begin());
    return a;
}

std::string Address::to_hex() const { return "0x" + dgov::to_hex(bytes); }

}  // namespace dgov::ledger
