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

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <dgov/common/bytes.hpp>

namespace dgov::ledger {

// 20-byte account identifier. Sender authenticity is simulated: whoever builds a
// transaction chooses its sender.
struct Address {
    std::array<std::uint8_t, 20> bytes{};

    // Deterministic address for a human-readable account label.
    static Address from_label(std::string_view label);
    static Address from_hex(std::string_view hex);
    std::string to_hex() const;
    ByteView view() const { return {bytes.data(), bytes.size()}; }

    friend auto operator<=>(const Address&, const Address&) = default;
};

}  // namespace dgov::ledger
