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

#include <set>
#include <string>

#include <gtest/gtest.h>
#include <openssl/evp.h>

#include <dgov/algebra/encoding.hpp>
#include <dgov/algebra/hash.hpp>
#include <dgov/algebra/ops.hpp>

namespace dgov::algebra {
namespace {

const G1Point g1 = G1Point::generator();
const G2Point g2 = G2Point::generator();

TEST(Scalar, FieldIdentities) {
    SeededRng rng("scalar-identities");
    for (int i = 0; i < 50; ++i) {
        const auto a = Scalar::random_nonzero(rng);
        const auto b = Scalar::random(rng);
        EXPECT_EQ(a * a.inverse(), Scalar::one());
        EXPECT_EQ(a + (-a), Scalar::zero());
        EXPECT_EQ((a + b) - b, a);
        EXPECT_EQ(Scalar::from_bytes(a.to_bytes()).value(), a);
    }
    EXPECT_EQ(-Scalar::zero(), Scalar::zero());
    EXPECT_EQ(Scalar::from_i64(-3) + Scalar::from_u64(3), Scalar::zero());
    EXPECT_THROW(Scalar::zero().inverse(), PreconditionError);
}

TEST(Scalar, RejectsNonCanonical) {
    // p = 0x73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001
    const auto p = from_hex("73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001");
    EXPECT_FALSE(Scalar::from_bytes(p).has_value());
    auto pm1 = p;
    pm1.back() = 0x00;
    EXPECT_EQ(Scalar::from_bytes(pm1).value(), -Scalar::one());
    // Wide reduction of p itself is zero.
    EXPECT_TRUE(Scalar::from_bytes_wide(p).is_zero());
}

TEST(Group, IdentityAndEncoding) {
    EXPECT_TRUE(G1Point::identity().is_identity());
    EXPECT_EQ(Scalar::zero() * g1, G1Point::identity());
    EXPECT_EQ(g1 - g1, G1Point::identity());
    EXPECT_EQ(G1Point::identity() + g1, g1);
    EXPECT_EQ(Scalar::from_u64(2) * g2, g2 + g2);
    // Compressed generator encoding (ZCash serialization).
    EXPECT_EQ(to_hex(g1.to_bytes()),
              "97f1d3a73197d7942695638c4fa9ac0fc3688c4f9774b905a14e3a3f171bac586c55e83ff97a1aeffb3af00adb22c6bb");
    EXPECT_EQ(G1Point::from_bytes(G1Point::identity().to_bytes()).value(), G1Point::identity());
    auto bad = g1.to_bytes();
    bad[10] ^= 1;
    EXPECT_FALSE(G1Point::from_bytes(bad).has_value());
}

TEST(Gt, EncodingRoundTripAndRejection) {
    SeededRng rng("gt-encoding");
    const auto x = GtPoint::random(rng);
    EXPECT_EQ(GtPoint::from_bytes(x.to_bytes()).value(), x);
    EXPECT_EQ(GtPoint::from_bytes(GtPoint::one().to_bytes()).value(), GtPoint::one());
    auto bad = x.to_bytes();
    bad[100] ^= 1;
    EXPECT_FALSE(GtPoint::from_bytes(bad).has_value());
    EXPECT_EQ(x * x.inverse(), GtPoint::one());
}

TEST(Pairing, SmallBilinearity) {
    const auto lhs = pairing(Scalar::from_u64(2) * g1, Scalar::from_u64(3) * g2);
    EXPECT_EQ(lhs, GtPoint::generator().pow(Scalar::from_u64(6)));
    EXPECT_TRUE(pairing(G1Point::identity(), g2).is_one());
    EXPECT_FALSE(GtPoint::generator().is_one());
}

TEST(Pairing, BilinearityProperty) {
    SeededRng rng("bilinearity");
    for (int i = 0; i < 100; ++i) {
        const auto a = Scalar::random(rng);
        const auto b = Scalar::random(rng);
        ASSERT_EQ(pairing(a * g1, b * g2), GtPoint::generator().pow(a * b));
    }
}

TEST(Gt, PowMatchesRepeatedMultiplication) {
    auto acc = GtPoint::one();
    for (std::uint64_t e = 0; e < 40; ++e) {
        ASSERT_EQ(GtPoint::generator().pow(Scalar::from_u64(e)), acc);
        acc *= GtPoint::generator();
    }
    // Group order: g^{p-1} = g^{-1}.
    EXPECT_EQ(GtPoint::generator().pow(-Scalar::one()), GtPoint::generator().inverse());
}

TEST(VectorPairing, MatchesComponentwiseProduct) {
    EXPECT_EQ(vector_pairing({g1, g1}, {g2, g2}), GtPoint::generator().pow(Scalar::from_u64(2)));
    EXPECT_EQ(vector_pairing({g1}, {g2}), pairing(g1, g2));
    SeededRng rng("vector-pairing");
    G1Vector u;
    G2Vector w;
    auto oracle = GtPoint::one();
    for (int i = 0; i < 3; ++i) {
        u.push_back(Scalar::random(rng) * g1);
        w.push_back(Scalar::random(rng) * g2);
        oracle *= pairing(u.back(), w.back());
    }
    EXPECT_EQ(vector_pairing(u, w), oracle);
    // Identity entries contribute 1.
    u[1] = G1Point::identity();
    EXPECT_EQ(vector_pairing(u, w), pairing(u[0], w[0]) * pairing(u[2], w[2]));
    EXPECT_THROW(vector_pairing({g1}, {g2, g2}), DimensionError);
}

ScalarMatrix random_matrix(std::size_t r, std::size_t c, Rng& rng) {
    ScalarMatrix m(r, c);
    for (auto& x : m.data()) x = Scalar::random(rng);
    return m;
}

TEST(PowerMulti, Examples) {
    SeededRng rng("power-multi");
    const auto base = matrix_exp_base(g1, random_matrix(2, 2, rng));
    EXPECT_EQ(power_multi(base, ScalarMatrix(2, 2, Scalar::one())), base);
    for (const auto& p : power_multi(base, ScalarMatrix(2, 2)).data()) EXPECT_TRUE(p.is_identity());
    const auto s = random_matrix(2, 2, rng);
    const auto out = power_multi(base, s);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(out(i, j), s(i, j) * base(i, j));
    EXPECT_THROW(power_multi(base, ScalarMatrix(2, 3)), DimensionError);
}

TEST(PowerMulti, CompositionCommutes) {
    SeededRng rng("power-multi-commute");
    for (int t = 0; t < 10; ++t) {
        const auto m = random_matrix(3, 2, rng);
        const auto base = matrix_exp_base(g1, m);
        const auto s1 = random_matrix(3, 2, rng);
        const auto s2 = random_matrix(3, 2, rng);
        const auto lhs = power_multi(power_multi(base, s1), s2);
        ASSERT_EQ(lhs, power_multi(power_multi(base, s2), s1));
        ASSERT_EQ(lhs, matrix_exp_base(g1, hadamard(hadamard(m, s1), s2)));
    }
}

TEST(MatrixExpBase, Examples) {
    SeededRng rng("matrix-exp-base");
    ScalarMatrix id(2, 2);
    id(0, 0) = Scalar::one();
    id(1, 1) = Scalar::one();
    const auto m = matrix_exp_base(g2, id);
    EXPECT_EQ(m(0, 0), g2);
    EXPECT_TRUE(m(0, 1).is_identity());
    const auto r = random_matrix(3, 2, rng);
    const auto gm = matrix_exp_base(g1, r);
    for (std::size_t i = 0; i < r.size(); ++i) EXPECT_EQ(gm.data()[i], r.data()[i] * g1);
}

TEST(MultiExpMatvec, MatchesExponentSide) {
    SeededRng rng("multi-exp-matvec");
    const auto m = random_matrix(3, 2, rng);
    const auto gm = matrix_exp_base(g1, m);
    EXPECT_EQ(multi_exp_matvec(gm, {Scalar::zero(), Scalar::one()}), gm.col(1));
    for (const auto& p : multi_exp_matvec(gm, {Scalar::zero(), Scalar::zero()})) EXPECT_TRUE(p.is_identity());
    const ScalarVector s{Scalar::random(rng), Scalar::random(rng)};
    EXPECT_EQ(multi_exp_matvec(gm, s), vector_exp_base(g1, mat_vec(m, s)));
    EXPECT_THROW(multi_exp_matvec(gm, ScalarVector(3)), DimensionError);
}

TEST(SameRatio, ScalarPairs) {
    const auto five = Scalar::from_u64(5);
    EXPECT_TRUE(same_ratio({g1, five * g1}, {g2, five * g2}));
    EXPECT_FALSE(same_ratio({g1, five * g1}, {g2, Scalar::from_u64(6) * g2}));
    EXPECT_FALSE(same_ratio({G1Point::identity(), g1}, {g2, g2}));
    EXPECT_FALSE(same_ratio({g1, g1}, {g2, G2Point::identity()}));
}

TEST(SameRatio, CompleteAndSoundOnKnownExponents) {
    SeededRng rng("same-ratio");
    for (int i = 0; i < 30; ++i) {
        const auto a = Scalar::random_nonzero(rng);
        const auto b = Scalar::random_nonzero(rng);
        const auto s = Scalar::random_nonzero(rng);
        const auto t = (i % 2 == 0) ? s : Scalar::random_nonzero(rng);
        EXPECT_EQ(same_ratio({a * g1, (a * s) * g1}, {b * g2, (b * t) * g2}), s == t);
    }
}

TEST(SameRatio, MatrixAgreesWithEntrywise) {
    SeededRng rng("same-ratio-matrix");
    ScalarMatrix base(2, 2), s(2, 2);
    for (auto& x : base.data()) x = Scalar::random_nonzero(rng);
    for (auto& x : s.data()) x = Scalar::random_nonzero(rng);
    const auto b1 = matrix_exp_base(g1, base);
    const auto b2 = matrix_exp_base(g2, base);
    EXPECT_TRUE(same_ratio_matrix(b1, power_multi(b1, s), b2, power_multi(b2, s)));
    auto s_bad = s;
    s_bad(1, 0) += Scalar::one();
    EXPECT_FALSE(same_ratio_matrix(b1, power_multi(b1, s), b2, power_multi(b2, s_bad)));
}

TEST(LinMatrix, Structure) {
    SeededRng rng("lin-matrix");
    for (std::size_t k = 1; k <= 4; ++k) {
        for (int t = 0; t < 10; ++t) {
            const auto lin = sample_lin_matrix(k, rng);
            ASSERT_EQ(lin.a.rows(), k + 1);
            ASSERT_EQ(lin.a.cols(), k);
            for (const auto& x : mat_vec(lin.a.transposed(), lin.a_perp)) ASSERT_TRUE(x.is_zero());
            for (std::size_t i = 0; i < k; ++i) {
                ASSERT_FALSE(lin.a(i, i).is_zero());
                ASSERT_EQ(lin.a(k, i), Scalar::one());
                for (std::size_t j = 0; j < k; ++j) {
                    if (i != j) {
                        ASSERT_TRUE(lin.a(i, j).is_zero());
                    }
                }
            }
        }
    }
    const auto one = sample_lin_matrix(1, rng);
    EXPECT_EQ(one.a_perp[0], one.a(0, 0).inverse());
    EXPECT_EQ(one.a_perp[1], -Scalar::one());
    EXPECT_THROW(sample_lin_matrix(0, rng), PreconditionError);
}

// Independent BLAKE2b-512 oracle over the raw input.
Digest64 blake2b_oracle(ByteView data) {
    Digest64 out{};
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_blake2b512(), nullptr);
    return out;
}

TEST(Hash, Blake2bKnownAnswer) {
    // RFC 7693 Appendix A.
    EXPECT_EQ(to_hex(blake2b_oracle(as_bytes("abc"))),
              "ba80a53f981c4d0d6a2797b69f12f6e94c212f14685ac4b74b12bb6fdbffa2d1"
              "7d87c5392aab792dc252d5de4533cc9518d38aa8dbf1925ab92386edd4009923");
}

TEST(Hash, CommitHashDeterministicAndDistinct) {
    EXPECT_EQ(commit_hash(as_bytes("abc")), commit_hash(as_bytes("abc")));
    EXPECT_NE(commit_hash(as_bytes("abc")), commit_hash(as_bytes("abd")));
    EXPECT_FALSE(commit_hash({}).is_zero());
    // u8(len(tag)) || tag || data, hashed and reduced mod p.
    Bytes framed{static_cast<std::uint8_t>(kCommitTag.size())};
    framed.insert(framed.end(), kCommitTag.begin(), kCommitTag.end());
    framed.push_back('x');
    EXPECT_EQ(commit_hash(as_bytes("x")), Scalar::from_bytes_wide(blake2b_oracle(framed)));
    EXPECT_NE(tagged_hash(kMaskTag, as_bytes("x")), tagged_hash(kCommitTag, as_bytes("x")));
}

TEST(Hash, HashToG2) {
    const auto c = Scalar::from_u64(7) * g1;
    const auto gid = as_bytes("gid-1");
    const auto p = hash_to_g2("H1", gid, c, 1);
    EXPECT_EQ(p, hash_to_g2("H1", gid, c, 1));
    EXPECT_FALSE(p.is_identity());
    EXPECT_NE(p, hash_to_g2("H1", gid, c, 2));
    EXPECT_NE(p, hash_to_g2("H1", gid, Scalar::from_u64(8) * g1, 1));
    EXPECT_NE(p, hash_to_g2("H1", as_bytes("gid-2"), c, 1));
    std::set<std::string> seen;
    for (std::uint32_t i = 1; i <= 100; ++i) seen.insert(to_hex(hash_to_g2("H1", gid, c, i).to_bytes()));
    EXPECT_EQ(seen.size(), 100U);
    EXPECT_TRUE(G2Point::from_bytes(p.to_bytes()).has_value());
}

TEST(Hash, MaskOracleSymmetry) {
    SeededRng rng("mask-oracle");
    const auto si = Scalar::random_nonzero(rng);
    const auto sj = Scalar::random_nonzero(rng);
    const auto yi = si * g2;
    const auto yj = sj * g2;
    const auto c = Scalar::random_nonzero(rng) * g1;
    const auto gid = as_bytes("gid");
    const auto a = mask_oracle(sj * yi, gid, c, 3);
    EXPECT_EQ(a, mask_oracle(si * yj, gid, c, 3));
    EXPECT_EQ(a.size(), 3U);
    EXPECT_NE(a, mask_oracle(sj * yi, as_bytes("gid2"), c, 3));
    EXPECT_NE(a[0], a[1]);
}

TEST(Hash, OraclesAreDomainSeparated) {
    SeededRng rng("domain-separation");
    std::set<std::string> outputs;
    const auto c = g1;
    std::size_t expected = 0;
    for (int i = 0; i < 10000; ++i) {
        Bytes data(16);
        rng.fill(data);
        outputs.insert(commit_hash(data).to_hex());
        outputs.insert(to_hex(derive_key(kCasTag, data)));
        ++expected;
        ++expected;
        if (i % 50 == 0) {
            outputs.insert(mask_oracle(Scalar::from_bytes_wide(data) * g2, data, c, 1)[0].to_hex());
            ++expected;
        }
    }
    EXPECT_EQ(outputs.size(), expected);
}

TEST(Rng, SeededIsDeterministic) {
    SeededRng a("seed"), b("seed"), c("other");
    EXPECT_EQ(a.next_u64(), b.next_u64());
    EXPECT_NE(a.next_u64(), c.next_u64());
    b.next_u64();
    auto fa = a.fork("x");
    auto fb = b.fork("x");
    EXPECT_EQ(Scalar::random(fa), Scalar::random(fb));
}

TEST(Encoding, RoundTrip) {
    SeededRng rng("encoding");
    ByteWriter w;
    const auto s = Scalar::random(rng);
    const auto m = matrix_exp_base(g1, random_matrix(3, 2, rng));
    const G2Vector v{g2, Scalar::random(rng) * g2};
    const auto gt = GtPoint::random(rng);
    w.u8(kFormatVersion).put(s).put(m).put(v).put(gt).str("hello").u64(42);
    const auto bytes = std::move(w).take();
    ByteReader r(bytes);
    r.expect_version();
    EXPECT_EQ(r.scalar(), s);
    EXPECT_EQ(r.matrix<G1Point>(), m);
    EXPECT_EQ(r.vec<G2Point>(), v);
    EXPECT_EQ(r.gt(), gt);
    EXPECT_EQ(r.str(), "hello");
    EXPECT_EQ(r.u64(), 42U);
    r.expect_end();

    ByteReader truncated(ByteView(bytes).first(bytes.size() - 1));
    truncated.expect_version();
    EXPECT_THROW(
        {
            truncated.scalar();
            truncated.matrix<G1Point>();
            truncated.vec<G2Point>();
            truncated.gt();
            truncated.str();
            truncated.u64();
        },
        DecodeError);
}

}  // namespace
}  // namespace dgov::algebra
