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
#include <cstdint>
#include <string_view>

#include <dgov/algebra/group.hpp>
#include <dgov/algebra/matrix.hpp>
#include <dgov/algebra/scalar.hpp>
#include <dgov/common/bytes.hpp>

namespace dgov::algebra {

// Fixed ASCII context tags. Every tagged hash absorbs u8(len(tag)) || tag first.
inline constexpr std::string_view kCommitTag = "DGOV-COMMIT-V1";
inline constexpr std::string_view kMaskTag = "DGOV-MASK-V1";
inline constexpr std::string_view kKemTag = "DGOV-KEM-V1";
inline constexpr std::string_view kCasTag = "DGOV-CAS-V1";
inline constexpr std::string_view kStateTag = "DGOV-STATE-V1";
inline constexpr std::string_view kSeededRngTag = "DGOV-SEEDED-RNG-V1";
inline constexpr std::string_view kHashToG2Dst = "DGOV-V1-H2G2_XMD:SHA-256_SSWU_RO_";

using Digest64 = std::array<std::uint8_t, 64>;
using Digest32 = std::array<std::uint8_t, 32>;

// Incremental BLAKE2b-512 with a leading domain tag.
class TaggedHasher {
  public:
    explicit TaggedHasher(std::string_view tag);
    ~TaggedHasher();
    TaggedHasher(const TaggedHasher&) = delete;
    TaggedHasher& operator=(const TaggedHasher&) = delete;

    TaggedHasher& update(ByteView data);
    TaggedHasher& update_u32(std::uint32_t v);
    // u32 length prefix followed by the bytes.
    TaggedHasher& update_prefixed(ByteView data);
    Digest64 finalize();

  private:
    void* ctx_;
};

Digest64 tagged_hash(std::string_view tag, ByteView data);

// First 32 bytes of the tagged digest; used for symmetric keys, content hashes and state hashes.
Digest32 derive_key(std::string_view tag, ByteView data);

// COMMIT: BLAKE2b-512 reduced mod p, never zero.
Scalar commit_hash(ByteView data);

// One component of g2^h for h = H(GID, C); index is 1-based.
G2Point hash_to_g2(std::string_view domain, ByteView gid, const G1Point& c, std::uint32_t index);

// Pairwise masking oracle H(shared, GID, C) with `len` outputs.
ScalarVector mask_oracle(const G2Point& shared, ByteView gid, const G1Point& c, std::size_t len);

}  // namespace dgov::algebra
