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

#include <array>
#include <cmath>

#include <gtest/gtest.h>

#include <dgov/algebra/hash.hpp>
#include <dgov/vc/vc.hpp>

#include "../support/vc_probes.hpp"

namespace dgov::vc {
namespace {

using algebra::SeededRng;

const G1Point g1 = G1Point::generator();

algebra::ScalarVector random_z(std::size_t n, algebra::Rng& rng) {
    algebra::ScalarVector z;
    for (std::size_t i = 0; i < n; ++i) z.push_back(Scalar::random_nonzero(rng));
    return z;
}

TEST(VcMessage, ConcatenationLayout) {
    SeededRng rng("vc-message");
    const auto r1 = Scalar::random(rng);
    Bytes in = to_bytes("100");
    const auto rb = r1.to_bytes();
    in.insert(in.end(), rb.begin(), rb.end());
    EXPECT_EQ(vc_message("100", r1).m, algebra::commit_hash(in));
    EXPECT_NE(vc_message("100", r1), vc_message("100", Scalar::random(rng)));
    // An absent authority's slice of width three.
    EXPECT_EQ(vc_message("000", r1), vc_message("000", r1));
    EXPECT_NE(vc_message("000", r1), vc_message("100", r1));
}

TEST(VcCommit, ExponentOracle) {
    SeededRng rng("vc-commit");
    const auto z = random_z(3, rng);
    const auto params = vc_params_from_secrets(z);
    std::vector<VCMessage> msgs;
    Scalar exponent;
    for (std::size_t i = 0; i < 3; ++i) {
        msgs.push_back({Scalar::random(rng)});
        exponent += msgs[i].m * z[i];
    }
    EXPECT_EQ(vc_commit(params, msgs).c, exponent * g1);
    const auto p1 = vc_params_from_secrets({z[0]});
    EXPECT_EQ(vc_commit(p1, {msgs[0]}).c, msgs[0].m * p1.o[0]);
    const std::vector<VCMessage> ones(3, VCMessage{Scalar::one()});
    EXPECT_EQ(vc_commit(params, ones).c, params.o[0] + params.o[1] + params.o[2]);
    EXPECT_THROW(vc_commit(params, std::vector<VCMessage>(2, VCMessage{Scalar::one()})), DimensionError);
}

TEST(VcOpen, BothAlgebraicFormsAgree) {
    SeededRng rng("vc-open");
    const auto z = random_z(4, rng);
    const auto params = vc_params_from_secrets(z);
    std::vector<VCMessage> msgs;
    for (int i = 0; i < 4; ++i) msgs.push_back({Scalar::random(rng)});
    for (std::size_t i = 0; i < 4; ++i) {
        G1Point other;
        for (std::size_t j = 0; j < 4; ++j)
            if (j != i) other += msgs[j].m * params.o[j];
        EXPECT_EQ(vc_open(params, msgs, i).op, z[i] * other);
    }
    const auto p2 = vc_params_from_secrets({z[0], z[1]});
    EXPECT_EQ(vc_open(p2, {msgs[0], msgs[1]}, 0).op, msgs[1].m * p2.o_cross(0, 1));
    EXPECT_THROW(vc_open(params, msgs, 4), PreconditionError);
}

TEST(VcVerify, Examples) {
    SeededRng rng("vc-verify");
    const auto params = vc_params_from_secrets(random_z(3, rng));
    std::vector<VCMessage> msgs;
    for (int i = 0; i < 3; ++i) msgs.push_back(vc_message("101", Scalar::random(rng)));
    const auto c = vc_commit(params, msgs);
    const auto op1 = vc_open(params, msgs, 1);
    EXPECT_TRUE(vc_verify(params, c, msgs[1], 1, op1));
    EXPECT_FALSE(vc_verify(params, c, msgs[0], 1, op1));
    auto moved = op1;
    moved.position = 2;
    EXPECT_FALSE(vc_verify(params, c, msgs[1], 2, moved));
    EXPECT_FALSE(vc_verify(params, c, msgs[2], 2, moved));
}

TEST(VcVerify, CorrectnessProperty) {
    SeededRng rng("vc-correctness");
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + rng.next_u64() % 6;
        const auto params = vc_params_from_secrets(random_z(n, rng));
        std::vector<VCMessage> msgs;
        for (std::size_t i = 0; i < n; ++i) msgs.push_back({Scalar::random(rng)});
        const auto c = vc_commit(params, msgs);
        const std::size_t i = rng.next_u64() % n;
        ASSERT_TRUE(vc_verify(params, c, msgs[i], i, vc_open(params, msgs, i)));
    }
}

TEST(VcVerify, PositionBindingProbe) {
    SeededRng rng("vc-binding");
    const auto st = testing::vc_binding_probe(rng, 150);
    EXPECT_EQ(st.honest_accepted, st.trials);
    EXPECT_EQ(st.forgeries, 0U);
    EXPECT_GT(st.attempts, 1000U);
}

TEST(VcParams, AssemblyChecks) {
    SeededRng rng("vc-params");
    const auto good = vc_params_from_secrets(random_z(3, rng));
    EXPECT_TRUE(vc_params_valid(good));
    EXPECT_NO_THROW(assemble_vc_params(good.o, good.o_cross, good.z_pub));
    auto forged = good.o_cross;
    forged(0, 2) = forged(0, 2) + g1;
    EXPECT_THROW(assemble_vc_params(good.o, forged, good.z_pub), PreconditionError);
    forged(2, 0) = forged(0, 2);
    EXPECT_THROW(assemble_vc_params(good.o, forged, good.z_pub), PreconditionError);
}

// Hiding surrogate: per-bit frequencies of serialized commitments to two lists that differ in one
// slice are statistically indistinguishable once nonces are fresh.
TEST(VcCommit, HidingSurrogate) {
    SeededRng rng("vc-hiding");
    const auto params = vc_params_from_secrets(random_z(3, rng));
    constexpr int kSamples = 400;
    std::array<int, 48 * 8> ones_a{}, ones_b{};
    for (int s = 0; s < kSamples; ++s) {
        for (int side = 0; side < 2; ++side) {
            const std::vector<VCMessage> msgs{vc_message(side == 0 ? "100" : "011", Scalar::random(rng)),
                                              vc_message("10", Scalar::random(rng)),
                                              vc_message("1", Scalar::random(rng))};
            const auto bytes = vc_commit(params, msgs).c.to_bytes();
            auto& ones = side == 0 ? ones_a : ones_b;
            for (std::size_t b = 0; b < ones.size(); ++b) ones[b] += (bytes[b / 8] >> (7 - b % 8)) & 1;
        }
    }
    // Skip the three flag bits and the top field bits, which are biased for any point.
    int flagged = 0;
    for (std::size_t b = 8; b < ones_a.size(); ++b) {
        const double diff = std::abs(ones_a[b] - ones_b[b]);
        // Two-sample difference of Binomial(400, 1/2) has sd ~ 14.1; 6 sd bound.
        if (diff > 85.0) ++flagged;
    }
    EXPECT_EQ(flagged, 0);
}

}  // namespace
}  // namespace dgov::vc
