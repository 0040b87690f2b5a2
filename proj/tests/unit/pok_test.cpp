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

#include <gtest/gtest.h>

#include <dgov/algebra/hash.hpp>
#include <dgov/pok/pok.hpp>

namespace dgov::pok {
namespace {

using algebra::commit_hash;
using algebra::SeededRng;

const G1Point g1 = G1Point::generator();
const G2Point g2 = G2Point::generator();

ScalarMatrix random_nonzero_matrix(std::size_t r, std::size_t c, Rng& rng) {
    ScalarMatrix m(r, c);
    for (auto& x : m.data()) x = Scalar::random_nonzero(rng);
    return m;
}

TEST(MakeSPair, Examples) {
    SeededRng rng("make-spair");
    const auto base = Scalar::random_nonzero(rng) * g1;
    EXPECT_EQ(make_spair(base, Scalar::one()).power, make_spair(base, Scalar::one()).base);
    EXPECT_THROW(make_spair(base, Scalar::zero()), PreconditionError);
    EXPECT_THROW(make_spair(G1Point::identity(), Scalar::one()), PreconditionError);
    const auto s = random_nonzero_matrix(2, 3, rng);
    const G1Matrix b(2, 3, base);
    const auto rp = make_spair(b, s);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(rp.power(i, j), s(i, j) * b(i, j));
}

TEST(Nizk, RoundTripFreshAndContextBound) {
    SeededRng rng("nizk-basic");
    const auto s = Scalar::random_nonzero(rng);
    const auto rp = make_spair(Scalar::random_nonzero(rng) * g1, s);
    const auto ctx1 = to_bytes("h1");
    const auto ctx2 = to_bytes("h2");
    const auto p1 = nizk_prove(rp, ScalarMatrix::single(s), ctx1, rng);
    const auto p2 = nizk_prove(rp, ScalarMatrix::single(s), ctx1, rng);
    EXPECT_TRUE(nizk_verify(rp, p1, ctx1));
    EXPECT_NE(p1.r, p2.r);
    EXPECT_FALSE(nizk_verify(rp, p1, ctx2));
    EXPECT_THROW(nizk_prove(rp, ScalarMatrix::single(s + Scalar::one()), ctx1, rng), PreconditionError);
}

TEST(Nizk, VerificationEquationOracle) {
    SeededRng rng("nizk-oracle");
    const auto s = Scalar::random_nonzero(rng);
    const auto rp = make_spair(g2, s);
    const auto ctx = to_bytes("ctx");
    const auto proof = nizk_prove(rp, ScalarMatrix::single(s), ctx, rng);
    const auto& r = std::get<G2Matrix>(proof.r)(0, 0);
    const auto rb = r.to_bytes();
    Bytes in(rb.begin(), rb.end());
    in.insert(in.end(), ctx.begin(), ctx.end());
    const auto c = commit_hash(in);
    EXPECT_EQ(proof.u(0, 0) * g2, r + c * rp.power(0, 0));
}

TEST(Nizk, Tampering) {
    SeededRng rng("nizk-tamper");
    const auto s = Scalar::random_nonzero(rng);
    const auto rp = make_spair(g1, s);
    const auto other = make_spair(g1, Scalar::random_nonzero(rng));
    const auto ctx = to_bytes("ctx");
    auto proof = nizk_prove(rp, ScalarMatrix::single(s), ctx, rng);
    EXPECT_FALSE(nizk_verify(other, proof, ctx));
    proof.u(0, 0) += Scalar::one();
    EXPECT_FALSE(nizk_verify(rp, proof, ctx));
}

TEST(Nizk, CompletenessProperty) {
    SeededRng rng("nizk-completeness");
    for (int i = 0; i < 200; ++i) {
        const auto s = Scalar::random_nonzero(rng);
        const auto rp = make_spair(Scalar::random_nonzero(rng) * g1, s);
        Bytes ctx(8);
        rng.fill(ctx);
        ASSERT_TRUE(nizk_verify(rp, nizk_prove(rp, ScalarMatrix::single(s), ctx, rng), ctx));
    }
}

TEST(Nizk, RandomTranscriptsNeverVerify) {
    SeededRng rng("nizk-soundness");
    const auto rp = make_spair(g1, Scalar::random_nonzero(rng));
    const auto ctx = to_bytes("ctx");
    int accepted = 0;
    for (int i = 0; i < 10000; ++i) {
        PoKProof forged{G1Matrix::single(Scalar::random(rng) * g1), ScalarMatrix::single(Scalar::random(rng))};
        accepted += nizk_verify(rp, forged, ctx) ? 1 : 0;
    }
    EXPECT_EQ(accepted, 0);
}

TEST(Nizk, MatrixElementwise) {
    SeededRng rng("nizk-matrix");
    const auto s = random_nonzero_matrix(3, 2, rng);
    const auto e = matrix_element("U", s);
    EXPECT_TRUE(check_same_ratio(e));
    const auto ctx = to_bytes("ctx");
    auto proof = prove_element(e, s, ctx, rng);
    EXPECT_TRUE(verify_element(e, proof, ctx));
    proof.u(2, 1) += Scalar::one();
    EXPECT_FALSE(verify_element(e, proof, ctx));
}

TEST(Nizk, TransposeProduct) {
    SeededRng rng("nizk-transpose");
    // base = g1^M for a 3x2 M, secret X 3x3 and tau 3x1.
    ScalarMatrix m = random_nonzero_matrix(3, 2, rng);
    const auto base = algebra::matrix_exp_base(g1, m);
    const auto x = random_nonzero_matrix(3, 3, rng);
    const auto rp = make_transpose_spair(base, x);
    EXPECT_EQ(rp.power, algebra::matrix_exp_base(g1, algebra::mat_mul(x.transposed(), m)));
    const auto ctx = to_bytes("ctx");
    const Element e{"X", Action::TransposeProduct, rp, std::nullopt};
    ASSERT_TRUE(well_formed(e));
    auto proof = prove_element(e, x, ctx, rng);
    EXPECT_TRUE(verify_element(e, proof, ctx));
    EXPECT_FALSE(verify_element(e, proof, to_bytes("other")));
    auto bad = proof;
    bad.u(1, 2) += Scalar::one();
    EXPECT_FALSE(verify_element(e, bad, ctx));

    const auto tau = random_nonzero_matrix(3, 1, rng);
    const Element et{"tau", Action::TransposeProduct, make_transpose_spair(base, tau), std::nullopt};
    EXPECT_EQ(et.rp->power.rows(), 1U);
    EXPECT_TRUE(verify_element(et, prove_element(et, tau, ctx, rng), ctx));
    // A proof for X does not transplant onto tau's pair.
    EXPECT_FALSE(verify_element(et, proof, ctx));
}

TEST(Commit, DigestRules) {
    SeededRng rng("commit");
    const auto a = scalar_element("a", Scalar::random_nonzero(rng));
    const auto b = scalar_element("b", Scalar::random_nonzero(rng));
    const auto single = commit_spairs({a});
    algebra::ByteWriter w;
    w.put(single.per_element[0]);
    EXPECT_EQ(single.overall, commit_hash(w.data()));
    EXPECT_NE(commit_spairs({a, b}).overall, commit_spairs({b, a}).overall);
    EXPECT_EQ(commit_spairs({a, b}), commit_spairs({a, b}));
}

TEST(Commit, AnyBitFlipBreaksBinding) {
    SeededRng rng("commit-binding");
    const auto e = scalar_element("z", Scalar::random_nonzero(rng));
    const auto digest = element_digest(e);
    algebra::ByteWriter w;
    encode(w, e);
    const auto bytes = std::move(w).take();
    int mismatches = 0, decoded = 0;
    // Flip one bit per byte across the serialized pairs; decodes that succeed must change the digest.
    for (std::size_t i = 0; i < bytes.size(); ++i) {
        auto mutated = bytes;
        mutated[i] ^= static_cast<std::uint8_t>(1U << (i % 8));
        try {
            algebra::ByteReader r(mutated);
            const auto m = decode_element(r);
            ++decoded;
            if (element_digest(m) != digest || m.name != e.name) ++mismatches;
        } catch (const DecodeError&) {
        }
    }
    EXPECT_EQ(mismatches, decoded);
}

TEST(Encoding, ProofRoundTrip) {
    SeededRng rng("proof-encoding");
    const auto s = Scalar::random_nonzero(rng);
    const auto rp = make_spair(g2, s);
    const auto proof = nizk_prove(rp, ScalarMatrix::single(s), to_bytes("c"), rng);
    const auto bytes = proof_to_bytes(proof);
    EXPECT_EQ(bytes[0], algebra::kFormatVersion);
    EXPECT_EQ(proof_from_bytes(bytes), proof);
    auto bad = bytes;
    bad[0] = 0x02;
    EXPECT_THROW(proof_from_bytes(bad), DecodeError);
}

}  // namespace
}  // namespace dgov::pok
