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
#include <optional>

#include <dgov/algebra/rng.hpp>
#include <dgov/common/bytes.hpp>

namespace dgov::storage {

using SymmetricKey = std::array<std::uint8_t, 32>;

inline constexpr std::size_t kDemNonceSize = 12;
inline constexpr std::size_t kDemTagSize = 16;

SymmetricKey random_key(algebra::Rng& rng);

// AES-256-GCM with a fresh 96-bit nonce. Output: nonce || ciphertext || tag.
Bytes dem_encrypt(const SymmetricKey& key, ByteView plaintext, algebra::Rng& rng);

// Empty optional on authentication failure or truncated input.
std::optional<Bytes> dem_decrypt(const SymmetricKey& key, ByteView blob);

}  // namespace dgov::storage
