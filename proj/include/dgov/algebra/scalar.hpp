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
#include <optional>
#include <span>
#include <string>

#include <blst.h>

#include <dgov/algebra/rng.hpp>
#include <dgov/common/bytes.hpp>

namespace dgov::algebra {

// Element of Z_p, p the prime order of the BLS12-381 groups. Stored in
// Montgomery form; the canonical encoding is 32 bytes big-endian.
class Scalar {
  public:
    static constexpr std::size_t kEncodedSize = 32;
    using Encoded = std::array<std::uint8_t, kEncodedSize>;

    Scalar() = default;

    static Scalar zero() { return {}; }
    static Scalar one() { return from_u64(1); }
    static Scalar from_u64(std::uint64_t v);
    static Scalar from_i64(std::int64_t v);

    // Uniform over Z_p (64 random bytes reduced mod p).
    static Scalar random(Rng& rng);
    // Uniform over Z_p^*.
    static Scalar random_nonzero(Rng& rng);

    // Reduces an arbitrary-length big-endian integer mod p.
    static Scalar from_bytes_wide(ByteView be);
    // Canonical decoding; rejects values >= p.
    static std::optional<Scalar> from_bytes(ByteView be);
    Encoded to_bytes() const;
    std::string to_hex() const;

    bool is_zero() const;
    // Throws PreconditionError on zero.
    Scalar inverse() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    friend bool operator==(const Scalar& a, const Scalar& b);

    // Little-endian integer form consumed by blst's point multiplication.
    blst_scalar to_blst() const;

  private:
    blst_fr fr_{};
};

}  // namespace dgov::algebra
