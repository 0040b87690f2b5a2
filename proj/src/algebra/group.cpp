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

#include <dgov/algebra/group.hpp>

#include <algorithm>
#include <cstring>

#include <blst_aux.h>

namespace dgov::algebra {

GtPoint::GtPoint() : f_(*blst_fp12_one()) {}

const GtPoint& GtPoint::generator() {
    static const GtPoint g = [] {
        blst_fp12 ml;
        blst_miller_loop(&ml, blst_p2_affine_generator(), blst_p1_affine_generator());
        blst_fp12 out;
        blst_final_exp(&out, &ml);
        return GtPoint(out);
    }();
    return g;
}

bool GtPoint::is_one() const {
    return blst_fp12_is_one(&f_);
}

GtPoint GtPoint::operator*(const GtPoint& o) const {
    GtPoint r;
    blst_fp12_mul(&r.f_, &f_, &o.f_);
    return r;
}

GtPoint GtPoint::inverse() const {
    // GT sits in the cyclotomic subgroup, where the inverse is the conjugate.
    GtPoint r = *this;
    blst_fp12_conjugate(&r.f_);
    return r;
}

GtPoint GtPoint::pow(const Scalar& e) const {
    // Fixed 4-bit window over the big-endian exponent.
    const auto bytes = e.to_bytes();
    std::array<blst_fp12, 16> table;
    table[0] = *blst_fp12_one();
    table[1] = f_;
    for (std::size_t i = 2; i < table.size(); ++i) blst_fp12_mul(&table[i], &table[i - 1], &f_);

    blst_fp12 acc = *blst_fp12_one();
    bool started = false;
    for (auto byte : bytes) {
        for (int half = 0; half < 2; ++half) {
            const unsigned nib = half == 0 ? (byte >> 4) : (byte & 0x0f);
            if (started) {
                for (int s = 0; s < 4; ++s) blst_fp12_cyclotomic_sqr(&acc, &acc);
            }
            if (nib != 0) {
                blst_fp12_mul(&acc, &acc, &table[nib]);
                started = true;
            }
        }
    }
    return GtPoint(acc);
}

bool operator==(const GtPoint& a, const GtPoint& b) {
    return blst_fp12_is_equal(&a.f_, &b.f_);
}

GtPoint::Encoded GtPoint::to_bytes() const {
    Encoded out{};
    blst_bendian_from_fp12(out.data(), &f_);
    return out;
}

std::optional<GtPoint> GtPoint::from_bytes(ByteView in) {
    if (in.size() != kEncodedSize) return std::nullopt;
    blst_fp12 f;
    const std::uint8_t* p = in.data();
    // Same coefficient order as blst_bendian_from_fp12.
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            blst_fp_from_bendian(&f.fp6[j].fp2[i].fp[0], p);
            p += 48;
            blst_fp_from_bendian(&f.fp6[j].fp2[i].fp[1], p);
            p += 48;
        }
    }
    GtPoint r(f);
    // Non-canonical field encodings (>= q) do not survive the round trip.
    const auto canonical = r.to_bytes();
    if (!std::equal(canonical.begin(), canonical.end(), in.begin())) return std::nullopt;
    if (!blst_fp12_in_group(&f)) return std::nullopt;
    return r;
}

GtPoint GtPoint::random(Rng& rng) {
    return generator().pow(Scalar::random_nonzero(rng));
}

}  // namespace dgov::algebra
