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

#include <dgov/algebra/ops.hpp>
#include <dgov/attacks/attacks.hpp>

#include "../support/abe_fixture.hpp"

namespace dgov::attacks {
namespace {

using algebra::G1Point;
using algebra::Scalar;
using algebra::SeededRng;

const G1Point g1 = G1Point::generator();

G1Matrix random_image(std::size_t k, Rng& rng) {
    algebra::ScalarMatrix s(k + 1, k);
    for (auto& x : s.data()) x = Scalar::random_nonzero(rng);
    return algebra::matrix_exp_base(g1, s);
}

TEST(RogueForge, SingleHonestSlotInverted) {
    SeededRng rng("forge-one");
    const auto xa = random_image(2, rng);
    const auto f = rogue_key_forge({xa}, 2, rng);
    for (std::size_t i = 0; i < xa.size(); ++i) EXPECT_EQ(f.xa_pub.data()[i], -xa.data()[i]);
}

TEST(RogueForge, ProductWithForgeryIsIdentity) {
    SeededRng rng("forge-many");
    std::vector<G1Matrix> honest;
    for (int i = 0; i < 4; ++i) honest.push_back(random_image(2, rng));
    const auto f = rogue_key_forge(honest, 2, rng);
    G1Matrix acc = f.xa_pub;
    for (const auto& h : honest) acc = algebra::hadamard_mul(acc, h);
    for (const auto& p : acc.data()) EXPECT_TRUE(p.is_identity());
    EXPECT_THROW(rogue_key_forge({random_image(1, rng)}, 2, rng), DimensionError);
}

// Central system where the last non-trust slot's XA image is replaced by the forgery.
TEST(RogueDecrypt, RecoversPayloadWithForgedSlotOnly) {
    SeededRng rng("rogue-central");
    const std::size_t k = 2, L = 6;
    auto sys = testing::make_central_system(k, L, rng);
    std::vector<G1Matrix> honest;
    for (std::size_t i = 0; i + 2 < L; ++i) honest.push_back(sys.pubs[i].XA_pub);
    auto forged_sys = sys;
    forged_sys.pubs[L - 2].XA_pub = rogue_key_forge(honest, k, rng).xa_pub;

    const auto v = abe::make_attribute_vector(std::vector<bool>(L - 1, false));
    for (auto enc : {abe::PolicyEncoding::Randomized, abe::PolicyEncoding::InsecureNaive}) {
        const auto x = abe::encode_policy({0, 3}, L, rng, enc);
        const auto payload = algebra::GtPoint::random(rng);
        const auto keys = testing::issue_user_keys(forged_sys, testing::random_gid(rng), testing::random_commitment(rng), v);
        const auto ct = abe::encrypt(forged_sys.params, forged_sys.pubs, x, payload, rng);
        EXPECT_EQ(rogue_key_decrypt(ct, keys.parts, keys.h), payload);
        // Ordinary decryption with the same keys fails.
        EXPECT_NE(abe::decrypt(keys.parts, v, keys.h, ct), payload);

        // Control: honest keys everywhere.
        const auto honest_keys = testing::issue_user_keys(sys, testing::random_gid(rng), testing::random_commitment(rng), v);
        const auto honest_ct = abe::encrypt(sys.params, sys.pubs, x, payload, rng);
        EXPECT_NE(rogue_key_decrypt(honest_ct, honest_keys.parts, honest_keys.h), payload);
    }
}

TEST(RogueScenario, DichotomyIsDeterministic) {
    for (int run = 0; run < 2; ++run) {
        SeededRng weak_rng("rogue-scenario");
        const auto weak = run_rogue_key_attack({2, true, true, abe::PolicyEncoding::Randomized}, weak_rng);
        EXPECT_TRUE(weak.success) << weak.detail;
        EXPECT_EQ(weak.configuration, "insecure-no-pok");

        SeededRng full_rng("rogue-scenario");
        const auto full = run_rogue_key_attack({2, false, true, abe::PolicyEncoding::Randomized}, full_rng);
        EXPECT_FALSE(full.success);
        EXPECT_EQ(full.detail, "forged registration rejected: proof of knowledge rejected");
    }
}

TEST(RogueScenario, HonestAdversaryControlFails) {
    SeededRng rng("rogue-control");
    const auto r = run_rogue_key_attack({2, true, false, abe::PolicyEncoding::Randomized}, rng);
    EXPECT_FALSE(r.success) << r.detail;
}

TEST(Inference, FullWitnessRecoversSecretVector) {
    SeededRng rng("infer");
    const std::size_t k = 2;
    auto sys = testing::make_central_system(k, 3, rng);
    algebra::ScalarVector s = {Scalar::random_nonzero(rng), Scalar::random_nonzero(rng)};
    const auto ct = abe::encrypt_with_randomness(sys.params, sys.pubs, abe::encode_policy({0}, 3, rng, abe::PolicyEncoding::Randomized),
                                                 algebra::GtPoint::random(rng), s);
    algebra::ScalarVector diag = {sys.lin.a(0, 0), sys.lin.a(1, 1)};
    const auto g = infer_secret_vector(ct.ct0, diag);
    EXPECT_EQ(g, algebra::vector_exp_base(g1, s));
    EXPECT_EQ(ct.ct0[k], (s[0] + s[1]) * g1);
    EXPECT_THROW(infer_secret_vector(ct.ct0, {diag[0]}), DimensionError);
}

TEST(InferenceScenario, WithheldContributionGivesNoAdvantage) {
    SeededRng rng("infer-scenario");
    const auto full = run_inference_attack({2, 3, 20, false}, rng);
    EXPECT_EQ(full.matches, 20u);
    EXPECT_TRUE(full.verdict.success);
    const auto withheld = run_inference_attack({2, 3, 20, true}, rng);
    EXPECT_EQ(withheld.matches, 0u);
    EXPECT_FALSE(withheld.verdict.success);
}

TEST(Verdict, JsonLine) {
    const Verdict v{"rogue-key", "default", false, "x", 1.5};
    const auto line = v.to_json();
    EXPECT_EQ(line.find('\n'), std::string::npos);
    EXPECT_NE(line.find("\"success\":false"), std::string::npos);
    EXPECT_NE(line.find("\"attack\":\"rogue-key\""), std::string::npos);
}

}  // namespace
}  // namespace dgov::attacks
