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
#include <string>

#include <blst.h>

#include <dgov/algebra/scalar.hpp>
#include <dgov/common/bytes.hpp>

namespace dgov::algebra {

// G1 and G2 are written additively (p + q, s * p); GT multiplicatively.
// "g^a" in the protocol corresponds to `a * g` here.

struct G1Traits {
    using Point = blst_p1;
    using Affine = blst_p1_affine;
    static constexpr std::size_t kCompressedSize = 48;
    static const Point* generator() { return blst_p1_generator(); }
    static void add(Point* out, const Point* a, const Point* b) { blst_p1_add_or_double(out, a, b); }
    static void neg(Point* p) { blst_p1_cneg(p, true); }
    static void mult(Point* out, const Point* p, const byte* s, std::size_t bits) { blst_p1_mult(out, p, s, bits); }
    static bool is_inf(const Point* p) { return blst_p1_is_inf(p); }
    static bool equal(const Point* a, const Point* b) { return blst_p1_is_equal(a, b); }
    static void compress(byte* out, const Point* p) { blst_p1_compress(out, p); }
    static BLST_ERROR uncompress(Affine* out, const byte* in) { return blst_p1_uncompress(out, in); }
    static bool affine_in_group(const Affine* a) { return blst_p1_affine_in_g1(a); }
    static void from_affine(Point* out, const Affine* in) { blst_p1_from_affine(out, in); }
    static void to_affine(Affine* out, const Point* in) { blst_p1_to_affine(out, in); }
};

struct G2Traits {
    using Point = blst_p2;
    using Affine = blst_p2_affine;
    static constexpr std::size_t kCompressedSize = 96;
    static const Point* generator() { return blst_p2_generator(); }
    static void add(Point* out, const Point* a, const Point* b) { blst_p2_add_or_double(out, a, b); }
    static void neg(Point* p) { blst_p2_cneg(p, true); }
    static void mult(Point* out, const Point* p, const byte* s, std::size_t bits) { blst_p2_mult(out, p, s, bits); }
    static bool is_inf(const Point* p) { return blst_p2_is_inf(p); }
    static bool equal(const Point* a, const Point* b) { return blst_p2_is_equal(a, b); }
    static void compress(byte* out, const Point* p) { blst_p2_compress(out, p); }
    static BLST_ERROR uncompress(Affine* out, const byte* in) { return blst_p2_uncompress(out, in); }
    static bool affine_in_group(const Affine* a) { return blst_p2_affine_in_g2(a); }
    static void from_affine(Point* out, const Affine* in) { blst_p2_from_affine(out, in); }
    static void to_affine(Affine* out, const Point* in) { blst_p2_to_affine(out, in); }
};

template <class Traits>
class EcPoint {
  public:
    static constexpr std::size_t kEncodedSize = Traits::kCompressedSize;
    using Encoded = std::array<std::uint8_t, kEncodedSize>;
    using Raw = typename Traits::Point;
    using Affine = typename Traits::Affine;

    // Identity (point at infinity).
    EcPoint() = default;
    explicit EcPoint(const Raw& raw) : p_(raw) {}

    static EcPoint identity() { return {}; }
    static EcPoint generator() { return EcPoint(*Traits::generator()); }

    bool is_identity() const { return Traits::is_inf(&p_); }

    EcPoint operator+(const EcPoint& o) const {
        EcPoint r;
        Traits::add(&r.p_, &p_, &o.p_);
        return r;
    }
    EcPoint operator-() const {
        EcPoint r = *this;
        Traits::neg(&r.p_);
        return r;
    }
    EcPoint operator-(const EcPoint& o) const { return *this + (-o); }
    EcPoint& operator+=(const EcPoint& o) { return *this = *this + o; }
    EcPoint& operator-=(const EcPoint& o) { return *this = *this - o; }

    friend EcPoint operator*(const Scalar& s, const EcPoint& p) {
        EcPoint r;
        if (s.is_zero() || p.is_identity()) return r;
        blst_scalar raw = s.to_blst();
        Traits::mult(&r.p_, &p.p_, raw.b, 255);
        return r;
    }

    friend bool operator==(const EcPoint& a, const EcPoint& b) { return Traits::equal(&a.p_, &b.p_); }

    Encoded to_bytes() const {
        Encoded out{};
        Traits::compress(out.data(), &p_);
        return out;
    }

    // Rejects off-curve points and points outside the prime-order subgroup.
    static std::optional<EcPoint> from_bytes(ByteView in) {
        if (in.size() != kEncodedSize) return std::nullopt;
        Affine a;
        if (Traits::uncompress(&a, in.data()) != BLST_SUCCESS) return std::nullopt;
        if (!Traits::affine_in_group(&a)) return std::nullopt;
        EcPoint r;
        Traits::from_affine(&r.p_, &a);
        return r;
    }

    Affine to_affine() const {
        Affine a;
        Traits::to_affine(&a, &p_);
        return a;
    }

    const Raw& raw() const { return p_; }

  private:
    Raw p_{};
};

using G1Point = EcPoint<G1Traits>;
using G2Point = EcPoint<G2Traits>;

// Element of the target group GT (order-p subgroup of Fp12^*), written multiplicatively.
class GtPoint {
  public:
    static constexpr std::size_t kEncodedSize = 48 * 12;
    using Encoded = std::array<std::uint8_t, kEncodedSize>;

    GtPoint();  // identity
    explicit GtPoint(const blst_fp12& raw) : f_(raw) {}

    static GtPoint one() { return {}; }
    // e(g1, g2).
    static const GtPoint& generator();

    bool is_one() const;

    GtPoint operator*(const GtPoint& o) const;
    GtPoint& operator*=(const GtPoint& o) { return *this = *this * o; }
    GtPoint operator/(const GtPoint& o) const { return *this * o.inverse(); }
    GtPoint inverse() const;
    GtPoint pow(const Scalar& e) const;

    friend bool operator==(const GtPoint& a, const GtPoint& b);

    Encoded to_bytes() const;
    // Rejects elements outside GT.
    static std::optional<GtPoint> from_bytes(ByteView in);

    static GtPoint random(Rng& rng);

    const blst_fp12& raw() const { return f_; }

  private:
    blst_fp12 f_;
};

}  // namespace dgov::algebra
