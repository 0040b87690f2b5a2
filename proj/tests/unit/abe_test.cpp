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

#include <dgov/abe/abe.hpp>
#include <dgov/algebra/hash.hpp>
#include <dgov/algebra/ops.hpp>

#include "../support/abe_fixture.hpp"

namespace dgov::abe {
namespace {

using algebra::SeededRng;
using testing::CentralSystem;
using testing::make_central_system;

const G1Point g1 = G1Point::generator();
const G2Point g2 = G2Point::generator();

TEST(SlotKeygen, ZeroSecretGivesIdentities) {
    SeededRng rng("slot-zero");
    const auto sys = make_central_system(2, 2, rng);
    SlotSecret zero{ScalarMatrix(3, 3), ScalarVector(3), Scalar::one()};
    const auto pub = slot_public_from_secret(sys.params, zero);
    for (const auto& p : pub.XA_pub.data()) EXPECT_TRUE(p.is_identity());
    for (const auto& t : pub.tauA_pub) EXPECT_TRUE(t.is_one());
    EXPECT_EQ(pub.y, g2);
}

TEST(SlotKeygen, MatchesExponentOracle) {
    SeededRng rng("slot-oracle");
    const auto sys = make_central_system(2, 2, rng);
    const auto& sec = sys.secrets[0];
    const auto xa = algebra::mat_mul(sec.X.transposed(), sys.lin.a);
    EXPECT_EQ(sys.pubs[0].XA_pub, algebra::matrix_exp_base(g1, xa));
    const auto ta = algebra::mat_mul(ScalarMatrix::column(sec.tau).transposed(), sys.lin.a);
    for (std::size_t c = 0; c < 2; ++c) EXPECT_EQ(sys.pubs[0].tauA_pub[c], GtPoint::generator().pow(ta(0, c)));
    EXPECT_EQ(sys.pubs[0].y, sec.sigma * g2);
    EXPECT_NE(sys.pubs[0], sys.pubs[1]);
}

TEST(DeriveH, Binding) {
    SeededRng rng("derive-h");
    const auto c = testing::random_commitment(rng);
    const auto gid = to_bytes("gid-a");
    const auto h = derive_h(gid, c, 2);
    EXPECT_EQ(h.size(), 3U);
    EXPECT_EQ(h, derive_h(gid, c, 2));
    EXPECT_NE(h, derive_h(to_bytes("gid-b"), c, 2));
    EXPECT_NE(h, derive_h(gid, testing::random_commitment(rng), 2));
}

TEST(Masking, Examples) {
    SeededRng rng("masking-examples");
    const auto c = testing::random_commitment(rng);
    const auto gid = to_bytes("gid");
    const auto s0 = Scalar::random_nonzero(rng);
    const auto s1 = Scalar::random_nonzero(rng);
    for (const auto& x : masking(0, s0, {s0 * g2}, gid, c, 2)) EXPECT_TRUE(x.is_zero());
    const std::vector<G2Point> ys{s0 * g2, s1 * g2};
    const auto mu0 = masking(0, s0, ys, gid, c, 2);
    const auto mu1 = masking(1, s1, ys, gid, c, 2);
    const auto h = algebra::mask_oracle((s0 * s1) * g2, gid, c.c, 3);
    for (std::size_t t = 0; t < 3; ++t) {
        EXPECT_EQ(mu0[t], -h[t]);
        EXPECT_EQ(mu1[t], h[t]);
    }
    EXPECT_THROW(masking(0, s1, ys, gid, c, 2), PreconditionError);
}

TEST(Masking, CancellationProperty) {
    SeededRng rng("masking-cancel");
    for (std::size_t L = 2; L <= 8; ++L) {
        std::vector<Scalar> sig;
        std::vector<G2Point> ys;
        for (std::size_t j = 0; j < L; ++j) {
            sig.push_back(Scalar::random_nonzero(rng));
            ys.push_back(sig.back() * g2);
        }
        for (int trial = 0; trial < 3; ++trial) {
            const auto gid = testing::random_gid(rng);
            const auto c = testing::random_commitment(rng);
            ScalarVector sum(3);
            for (std::size_t j = 0; j < L; ++j) {
                const auto mu = masking(j, sig[j], ys, gid, c, 2);
                for (std::size_t t = 0; t < 3; ++t) sum[t] += mu[t];
            }
            for (const auto& x : sum) ASSERT_TRUE(x.is_zero());
        }
    }
}

TEST(IssueKeyPart, Examples) {
    SeededRng rng("issue");
    const auto sec = sample_slot_secret(2, rng);
    const auto h = derive_h(to_bytes("gid"), testing::random_commitment(rng), 2);
    ScalarVector mu{Scalar::random(rng), Scalar::random(rng), Scalar::random(rng)};
    const auto k0 = issue_key_part(sec, Scalar::zero(), h, mu, 0, false);
    for (std::size_t r = 0; r < 3; ++r) EXPECT_EQ(k0.K[r], (sec.tau[r] + mu[r]) * g2);

    SlotSecret no_x{ScalarMatrix(3, 3), sec.tau, sec.sigma};
    EXPECT_EQ(issue_key_part(no_x, Scalar::zero(), h, mu, 0, false).K,
              issue_key_part(no_x, Scalar::one(), h, mu, 0, false).K);

    // Exponent-side oracle with a known h.
    const ScalarVector hs{Scalar::random(rng), Scalar::random(rng), Scalar::random(rng)};
    const auto h_known = algebra::vector_exp_base(g2, hs);
    const auto k1 = issue_key_part(sec, Scalar::one(), h_known, mu, 0, false);
    const auto xh = algebra::mat_vec(sec.X, hs);
    for (std::size_t r = 0; r < 3; ++r) EXPECT_EQ(k1.K[r], (sec.tau[r] - xh[r] + mu[r]) * g2);

    EXPECT_THROW(issue_key_part(sec, Scalar::zero(), h, mu, 2, true), PreconditionError);
    EXPECT_THROW(issue_key_part(sec, Scalar::from_u64(2), h, mu, 0, false), PreconditionError);
    EXPECT_NO_THROW(issue_key_part(sec, Scalar::one(), h, mu, 2, true));
}

TEST(EncodePolicy, NaiveAndRandomized) {
    SeededRng rng("policy");
    const auto naive = encode_policy({0, 1}, 6, rng, PolicyEncoding::InsecureNaive);
    const ScalarVector expected{Scalar::one(), Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::zero(),
                                Scalar::from_i64(-2)};
    EXPECT_EQ(naive.x, expected);
    const auto v = make_attribute_vector({true, true, false, true, false});
    EXPECT_TRUE(algebra::inner(naive.x, v.v).is_zero());
    const auto missing = make_attribute_vector({true, false, false, true, false});
    EXPECT_FALSE(algebra::inner(naive.x, missing.v).is_zero());

    // The corrupt value (2,0,0,0,0,0) satisfies the naive encoding only.
    const ScalarVector corrupt{Scalar::from_u64(2), Scalar::zero(), Scalar::zero(), Scalar::zero(), Scalar::zero(),
                               Scalar::one()};
    EXPECT_TRUE(algebra::inner(naive.x, corrupt).is_zero());
    const auto randomized = encode_policy({0, 1}, 6, rng);
    EXPECT_FALSE(algebra::inner(randomized.x, corrupt).is_zero());
    EXPECT_TRUE(algebra::inner(randomized.x, v.v).is_zero());
    Scalar sum;
    for (const auto& x : randomized.x) sum += x;
    EXPECT_TRUE(sum.is_zero());
    EXPECT_TRUE(randomized.x[2].is_zero());

    const auto empty = encode_policy({}, 4, rng);
    for (const auto& x : empty.x) EXPECT_TRUE(x.is_zero());
    EXPECT_THROW(encode_policy({5}, 6, rng), PreconditionError);
}

TEST(Encrypt, DegenerateAndZeroPolicy) {
    SeededRng rng("encrypt-basic");
    const auto sys = make_central_system(2, 3, rng);
    const PolicyVector zero{ScalarVector(3)};
    EXPECT_THROW(encrypt_with_randomness(sys.params, sys.pubs, zero, GtPoint::one(), ScalarVector(2)),
                 PreconditionError);
    const ScalarVector s{Scalar::random(rng), Scalar::random(rng)};
    const auto ct = encrypt_with_randomness(sys.params, sys.pubs, zero, GtPoint::one(), s);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(ct.cts[i], algebra::multi_exp_matvec(sys.pubs[i].XA_pub, s));
    EXPECT_EQ(ct.ct0, algebra::vector_exp_base(g1, algebra::mat_vec(sys.lin.a, s)));
}

TEST(Decrypt, RoundTripAndIntermediateIdentity) {
    SeededRng rng("decrypt-roundtrip");
    const auto sys = make_central_system(2, 4, rng);
    for (int t = 0; t < 20; ++t) {
        auto bits = testing::random_bits_vector(rng, 3);
        std::set<std::size_t> required;
        for (std::size_t i = 0; i < 3; ++i)
            if (bits[i] && (rng.next_u64() & 1)) required.insert(i);
        const auto v = make_attribute_vector(bits);
        const auto x = encode_policy(required, 4, rng);
        ASSERT_TRUE(algebra::inner(x.x, v.v).is_zero());
        const auto payload = GtPoint::random(rng);
        const ScalarVector s{Scalar::random_nonzero(rng), Scalar::random_nonzero(rng)};
        const auto ct = encrypt_with_randomness(sys.params, sys.pubs, x, payload, s);
        const auto keys = testing::issue_user_keys(sys, testing::random_gid(rng), testing::random_commitment(rng), v);
        ASSERT_EQ(decrypt(keys.parts, v, keys.h, ct), payload);
        // e(g1,g2)^{sum_i tau_i^T A s}
        Scalar e;
        const auto as = algebra::mat_vec(sys.lin.a, s);
        for (const auto& sec : sys.secrets) e += algebra::inner(sec.tau, as);
        ASSERT_EQ(ct.ct_prime / payload, GtPoint::generator().pow(e));
    }
}

TEST(Decrypt, UnsatisfiedPolicyFails) {
    SeededRng rng("decrypt-unsatisfied");
    const auto sys = make_central_system(2, 4, rng);
    for (int t = 0; t < 20; ++t) {
        const auto x = encode_policy({0, 2}, 4, rng);
        const auto v = make_attribute_vector({true, true, false});
        const auto payload = GtPoint::random(rng);
        const auto ct = encrypt(sys.params, sys.pubs, x, payload, rng);
        const auto keys = testing::issue_user_keys(sys, testing::random_gid(rng), testing::random_commitment(rng), v);
        ASSERT_NE(decrypt(keys.parts, v, keys.h, ct), payload);
    }
}

TEST(Decrypt, MixedIdentityKeysFail) {
    SeededRng rng("decrypt-collusion");
    const auto sys = make_central_system(2, 3, rng);
    const auto x = encode_policy({0, 1}, 3, rng);
    const auto payload = GtPoint::random(rng);
    const auto ct = encrypt(sys.params, sys.pubs, x, payload, rng);
    const auto va = make_attribute_vector({true, false});
    const auto vb = make_attribute_vector({false, true});
    const auto union_v = make_attribute_vector({true, true});
    const auto ka = testing::issue_user_keys(sys, to_bytes("alice"), testing::random_commitment(rng), va);
    const auto kb = testing::issue_user_keys(sys, to_bytes("bob"), testing::random_commitment(rng), vb);
    const std::vector<KeyPart> mixed{ka.parts[0], kb.parts[1], ka.parts[2]};
    EXPECT_NE(decrypt(mixed, union_v, ka.h, ct), payload);
    EXPECT_NE(decrypt(mixed, union_v, kb.h, ct), payload);
}

TEST(Decrypt, OperationCounts) {
    SeededRng rng("op-counts");
    for (std::size_t L : {3U, 6U}) {
        const auto sys = make_central_system(2, L, rng);
        const auto x = encode_policy({0}, L, rng);
        algebra::reset_op_counters();
        const auto ct = encrypt(sys.params, sys.pubs, x, GtPoint::random(rng), rng);
        EXPECT_EQ(algebra::op_counters().multi_exps, 2 * L + 1);
        std::vector<bool> bits(L - 1, false);
        bits[0] = true;
        const auto v = make_attribute_vector(bits);
        const auto keys = testing::issue_user_keys(sys, to_bytes("u"), testing::random_commitment(rng), v);
        algebra::reset_op_counters();
        decrypt(keys.parts, v, keys.h, ct);
        EXPECT_EQ(algebra::op_counters().vector_pairings, 2U);
        EXPECT_LE(algebra::op_counters().exp_groups, 2 * L);
    }
}

TEST(Ciphertext, WireRoundTrip) {
    SeededRng rng("ct-wire");
    const auto sys = make_central_system(2, 3, rng);
    const auto ct = encrypt(sys.params, sys.pubs, encode_policy({1}, 3, rng), GtPoint::random(rng), rng);
    const auto bytes = ciphertext_to_bytes(ct);
    EXPECT_EQ(ciphertext_from_bytes(bytes), ct);
    auto bad = bytes;
    bad[4] = 9;  // k field
    EXPECT_THROW(ciphertext_from_bytes(bad), DecodeError);
    auto trunc = bytes;
    trunc.pop_back();
    EXPECT_THROW(ciphertext_from_bytes(trunc), DecodeError);
}

}  // namespace
}  // namespace dgov::abe
