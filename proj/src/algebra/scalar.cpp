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

#include <dgov/algebra/scalar.hpp>

#include <cstring>

#include <dgov/common/error.hpp>

namespace dgov::algebra {

Scalar Scalar::from_u64(std::uint64_t v) {
    Scalar s;
    const std::uint64_t limbs[4] = {v, 0, 0, 0};
    blst_fr_from_uint64(&s.fr_, limbs);
    return s;
}

Scalar Scalar::from_i64(std::int64_t v) {
    if (v >= 0) return from_u64(static_cast<std::uint64_t>(v));
    // Negate in unsigned space; avoids overflow on INT64_MIN.
    return -from_u64(~static_cast<std::uint64_t>(v) + 1);
}

Scalar Scalar::random(Rng& rng) {
    std::array<std::uint8_t, 64> wide{};
    rng.fill(wide);
    return from_bytes_wide(wide);
}

Scalar Scalar::random_nonzero(Rng& rng) {
    for (;;) {
        Scalar s = random(rng);
        if (!s.is_zero()) return s;
    }
}

Scalar Scalar::from_bytes_wide(ByteView be) {
    blst_scalar tmp;
    blst_scalar_from_be_bytes(&tmp, be.data(), be.size());
    Scalar s;
    blst_fr_from_scalar(&s.fr_, &tmp);
    return s;
}

std::optional<Scalar> Scalar::from_bytes(ByteView be) {
    if (be.size() != kEncodedSize) return std::nullopt;
    blst_scalar tmp;
    blst_scalar_from_bendian(&tmp, be.data());
    // fr_check rejects zero as well; zero is a legal encoding here.
    bool all_zero = true;
    for (auto b : be) all_zero = all_zero && b == 0;
    if (!all_zero && !blst_scalar_fr_check(&tmp)) return std::nullopt;
    Scalar s;
    blst_fr_from_scalar(&s.fr_, &tmp);
    return s;
}

Scalar::Encoded Scalar::to_bytes() const {
    blst_scalar tmp;
    blst_scalar_from_fr(&tmp, &fr_);
    Encoded out{};
    blst_bendian_from_scalar(out.data(), &tmp);
    return out;
}

std::string Scalar::to_hex() const {
    return dgov::to_hex(to_bytes());
}

bool Scalar::is_zero() const {
    static const blst_fr kZero{};
    return std::memcmp(&fr_, &kZero, sizeof(blst_fr)) == 0;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw PreconditionError("inverse of zero scalar");
    Scalar r;
    blst_fr_inverse(&r.fr_, &fr_);
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar r;
    blst_fr_add(&r.fr_, &fr_, &o.fr_);
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    Scalar r;
    blst_fr_sub(&r.fr_, &fr_, &o.fr_);
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar r;
    blst_fr_mul(&r.fr_, &fr_, &o.fr_);
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r;
    blst_fr_cneg(&r.fr_, &fr_, true);
    return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
    // Montgomery form is canonical (fully reduced), so limb equality is value equality.
    return std::memcmp(&a.fr_, &b.fr_, sizeof(blst_fr)) == 0;
}

blst_scalar Scalar::to_blst() const {
    blst_scalar out;
    blst_scalar_from_fr(&out, &fr_);
    return out;
}

}  // namespace dgov::algebra
