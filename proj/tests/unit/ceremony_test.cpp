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
#include <dgov/ceremony/ceremony.hpp>

#include "../support/ledger_fixture.hpp"
#include "../support/system_fixture.hpp"

namespace dgov::ceremony {
namespace {

using algebra::G1Point;
using algebra::G2Point;
using algebra::SeededRng;

const G1Point g1 = G1Point::generator();

Ledger fresh_ledger(const std::vector<SetupParticipant>& ps, std::size_t k) {
    std::set<Address> aa;
    for (const auto& p : ps) aa.insert(p.contribution.address);
    return Ledger(default_ledger_config(k, aa));
}

std::vector<SetupParticipant> participants(std::size_t n, std::size_t k, Rng& rng) {
    std::vector<SetupParticipant> out;
    for (const auto& a : testing::addresses("p", n)) out.push_back({make_setup_contribution(a, k, rng)});
    return out;
}

TEST(SetupContribution, ShapesAndDigest) {
    SeededRng rng("contrib");
    const auto c = make_setup_contribution(Address::from_label("a"), 1, rng);
    ASSERT_EQ(c.secrets.a_diag.size(), 1u);
    EXPECT_EQ(c.secrets.u.rows(), 2u);
    EXPECT_EQ(c.elements.size(), 6u);
    for (const auto& e : c.elements) EXPECT_TRUE(pok::check_same_ratio(e));
    EXPECT_EQ(pok::commit_spairs(c.elements).overall, c.commitment.overall);
    for (const auto& u : c.secrets.u.data()) EXPECT_FALSE(u.is_zero());

    const auto d = make_setup_contribution(Address::from_label("a"), 1, rng);
    EXPECT_NE(c.secrets.a_diag[0], d.secrets.a_diag[0]);
    EXPECT_NE(c.commitment.overall, d.commitment.overall);
    EXPECT_THROW(make_setup_contribution(Address::from_label("a"), 0, rng), PreconditionError);
}

TEST(TrustedSetup, SingleParticipantIsCentralSetup) {
    SeededRng rng("single");
    const std::size_t k = 2;
    auto ps = participants(1, k, rng);
    auto ledger = fresh_ledger(ps, k);
    const auto out = run_trusted_setup(ledger, ps, rng);
    const auto& s = ps[0].contribution.secrets;
    algebra::ScalarMatrix a(k + 1, k);
    for (std::size_t i = 0; i < k; ++i) {
        a(i, i) = s.a_diag[i];
        a(k, i) = algebra::Scalar::one();
    }
    EXPECT_EQ(out.a_pub, algebra::matrix_exp_base(g1, a));
    EXPECT_EQ(out.ua_pub, algebra::matrix_exp_base(g1, s.u));
    EXPECT_TRUE(out.rejected.empty());
}

TEST(TrustedSetup, ThreeParticipantCompositeMatchesOracle) {
    SeededRng rng("three");
    const std::size_t k = 2;
    auto ps = participants(3, k, rng);
    auto ledger = fresh_ledger(ps, k);
    const auto out = run_trusted_setup(ledger, ps, rng);
    algebra::ScalarMatrix a(k + 1, k);
    algebra::ScalarMatrix u(k + 1, k);
    for (std::size_t i = 0; i < k; ++i) a(k, i) = algebra::Scalar::one();
    for (std::size_t i = 0; i < k; ++i) a(i, i) = algebra::Scalar::one();
    for (auto& x : u.data()) x = algebra::Scalar::one();
    for (const auto& p : ps) {
        for (std::size_t i = 0; i < k; ++i) a(i, i) *= p.contribution.secrets.a_diag[i];
        u = algebra::hadamard(u, p.contribution.secrets.u);
    }
    EXPECT_EQ(out.a_pub, algebra::matrix_exp_base(g1, a));
    EXPECT_EQ(out.ua_pub, algebra::matrix_exp_base(g1, u));
    EXPECT_EQ(ledger.state().sys.v_contributors.size(), 3u);
}

TEST(TrustedSetup, SubstitutedComputeRejectedAndExcluded) {
    SeededRng rng("substitute");
    const std::size_t k = 2;
    auto ps = participants(3, k, rng);
    ps[1].behavior = Behavior::SubstituteA;
    auto ledger = fresh_ledger(ps, k);
    const auto out = run_trusted_setup(ledger, ps, rng);
    ASSERT_EQ(out.rejected.size(), 1u);
    EXPECT_EQ(out.rejected[0].participant, ps[1].contribution.address);
    EXPECT_EQ(out.rejected[0].function, "SC_sys.compute");
    EXPECT_EQ(out.rejected[0].reason, "V is not a proper multiple of the head");
    for (std::size_t i = 0; i < k; ++i) {
        const auto d = ps[0].contribution.secrets.a_diag[i] * ps[2].contribution.secrets.a_diag[i];
        EXPECT_EQ(out.a_pub(i, i), d * g1);
    }
    EXPECT_EQ(ledger.state().sys.v_contributors,
              (std::vector<Address>{ps[0].contribution.address, ps[2].contribution.address}));
}

TEST(TrustedSetup, AbsentParticipantLeavesRemainingChain) {
    SeededRng rng("absent");
    auto ps = participants(2, 1, rng);
    ps[0].behavior = Behavior::SkipChains;
    auto ledger = fresh_ledger(ps, 1);
    const auto out = run_trusted_setup(ledger, ps, rng);
    EXPECT_EQ(out.a_pub(0, 0), ps[1].contribution.secrets.a_diag[0] * g1);
    EXPECT_EQ(out.a_pub(1, 0), g1);
}

TEST(TrustedSetup, StructureAlwaysPreserved) {
    SeededRng rng("structure");
    for (std::size_t k : {1u, 3u}) {
        auto ps = participants(2, k, rng);
        auto ledger = fresh_ledger(ps, k);
        const auto out = run_trusted_setup(ledger, ps, rng);
        for (std::size_t i = 0; i <= k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                if (i == k) {
                    EXPECT_EQ(out.a_pub(i, j), g1);
                } else if (i != j) {
                    EXPECT_TRUE(out.a_pub(i, j).is_identity());
                } else {
                    EXPECT_FALSE(out.a_pub(i, j).is_identity());
                }
            }
    }
}

TEST(AuthoritySetup, DefaultRosterLayout) {
    SeededRng rng("roster");
    auto d = testing::deploy_default(2, rng);
    const auto& t = d.out.table;
    EXPECT_EQ(t.l, 5u);
    EXPECT_EQ(t.L(), 6u);
    ASSERT_EQ(t.records.size(), 3u);
    EXPECT_EQ(t.records[0].name, "AA1");
    EXPECT_EQ(t.records[0].slot_begin, 0u);
    EXPECT_EQ(t.records[0].slot_end, 3u);
    EXPECT_EQ(t.records[1].name, "AA2");
    EXPECT_EQ(t.records[1].slot_begin, 3u);
    EXPECT_EQ(t.records[1].slot_end, 5u);
    EXPECT_TRUE(t.trust().trust);
    EXPECT_EQ(t.trust().slot_begin, 5u);
    EXPECT_EQ(t.trust().authority_index, 3u);
    EXPECT_EQ(t.slot_of("agent"), 3u);
    EXPECT_THROW(t.slot_of("ceo"), NotFoundError);
    EXPECT_EQ(d.ledger.state().auth.attribute_size.at(t.records[0].address), 3u);

    EXPECT_EQ(d.out.vc_params.size(), 3u);
    EXPECT_TRUE(vc::vc_params_valid(d.out.vc_params));
    EXPECT_EQ(d.out.slot_pubs.size(), 6u);
    EXPECT_EQ(d.out.params.L, 6u);
    // Slot publics published on the ledger match the authorities' secrets.
    for (const auto& rec : t.records) {
        const auto& secrets = std::find_if(d.authorities.begin(), d.authorities.end(), [&](const auto& a) {
                                  return a.spec.address == rec.address;
                              })->contribution->slots;
        for (std::size_t s = rec.slot_begin; s < rec.slot_end; ++s)
            EXPECT_EQ(d.out.slot_pubs[s], abe::slot_public_from_secret(d.out.params, secrets[s - rec.slot_begin]));
    }
}

TEST(AuthoritySetup, AttributeVectorAssembly) {
    SeededRng rng("vector");
    auto d = testing::deploy_default(1, rng);
    const auto one = algebra::Scalar::one();
    const auto zero = algebra::Scalar::zero();
    EXPECT_EQ(assemble_user_attribute_vector(d.out.table, {"entry", "agent"}).v,
              (algebra::ScalarVector{one, zero, zero, one, zero, one}));
    EXPECT_EQ(assemble_user_attribute_vector(d.out.table, {}).v,
              (algebra::ScalarVector{zero, zero, zero, zero, zero, one}));
    EXPECT_EQ(assemble_user_attribute_vector(d.out.table, {"entry", "mid", "senior", "agent", "manager"}).v,
              algebra::ScalarVector(6, one));
    EXPECT_THROW(assemble_user_attribute_vector(d.out.table, {"ceo"}), NotFoundError);
}

TEST(AuthoritySetup, TwoPlusTrustCrossTermCount) {
    SeededRng rng("count");
    const std::vector<AuthoritySpec> roster = {{"A", Address::from_label("A"), {"x"}, false},
                                               {"B", Address::from_label("B"), {"y"}, false},
                                               {"T", Address::from_label("T"), {}, true}};
    auto d = testing::deploy(1, roster, 1, rng);
    const auto& p = d.out.vc_params;
    EXPECT_EQ(p.o.size(), 3u);
    std::size_t cross = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (i != j && !p.o_cross(i, j).is_identity()) ++cross;
    EXPECT_EQ(cross, 6u);
}

TEST(AuthoritySetup, TrustMustBeUnique) {
    SeededRng rng("two-trust");
    const std::vector<AuthoritySpec> roster = {{"T1", Address::from_label("T1"), {}, true},
                                               {"T2", Address::from_label("T2"), {}, true}};
    EXPECT_THROW(testing::deploy(1, roster, 1, rng), PreconditionError);
}

TEST(KeyIssuance, IssuedKeysDecryptSatisfiedPolicy) {
    SeededRng rng("issue");
    auto d = testing::deploy_default(2, rng);
    const Bytes gid = ledger::gid_for(Address::from_label("user"));
    const auto keys = obtain_user_keys(d.out, slot_secrets_of(d.authorities), gid, {"entry", "agent"}, rng);
    ASSERT_EQ(keys.parts.size(), 6u);
    const auto payload = algebra::GtPoint::random(rng);
    const auto x = abe::encode_policy(testing::slots_of(d.out.table, {"entry", "agent"}), 6, rng,
                                      abe::PolicyEncoding::Randomized);
    const auto ct = abe::encrypt(d.out.params, d.out.slot_pubs, x, payload, rng);
    EXPECT_EQ(abe::decrypt(keys.parts, keys.v, keys.h, ct), payload);

    const auto partial = obtain_user_keys(d.out, slot_secrets_of(d.authorities), gid, {"entry"}, rng);
    EXPECT_NE(abe::decrypt(partial.parts, partial.v, partial.h, ct), payload);
}

TEST(KeyIssuance, AuthorityRejectsUnacknowledgedOrForgedClaims) {
    SeededRng rng("claims");
    auto d = testing::deploy_default(1, rng);
    const Bytes gid = ledger::gid_for(Address::from_label("user"));
    const auto& rec = d.out.table.records[0];
    const auto& slots = d.authorities[0].contribution->slots;
    std::vector<G2Point> ys;
    for (const auto& p : d.out.slot_pubs) ys.push_back(p.y);

    // The user commits to "senior" but AA1 acknowledged only "entry".
    const auto uc = commit_user_attributes(d.out.table, d.out.vc_params, gid, {"entry", "senior"}, rng);
    const auto req = make_key_request(uc, d.out.vc_params, 1);
    EXPECT_EQ(req.bits, "101");
    EXPECT_THROW(issue_for_authority(rec, slots, d.out.vc_params, ys, 1, req, {"entry"}), PreconditionError);
    EXPECT_NO_THROW(issue_for_authority(rec, slots, d.out.vc_params, ys, 1, req, {"entry", "senior"}));

    // Lying about the committed slice: the opening no longer verifies.
    auto lie = req;
    lie.bits = "100";
    EXPECT_THROW(issue_for_authority(rec, slots, d.out.vc_params, ys, 1, lie, {"entry"}), PreconditionError);
    // An opening for another position is refused.
    const auto other = make_key_request(uc, d.out.vc_params, 2);
    auto swapped = req;
    swapped.opening = other.opening;
    EXPECT_THROW(issue_for_authority(rec, slots, d.out.vc_params, ys, 1, swapped, {"entry", "senior"}),
                 PreconditionError);
}

TEST(Transcript, VerifiesAndDetectsTampering) {
    SeededRng rng("transcript");
    auto d = testing::deploy_default(1, rng);
    const auto bytes = write_transcript(d.ledger);
    const auto ok = verify_transcript(bytes);
    EXPECT_TRUE(ok.ok) << ok.reason;
    EXPECT_EQ(ok.state_hash, d.ledger.state_hash());
    EXPECT_EQ(ok.transactions, d.ledger.history().size());
    EXPECT_EQ(ok.rejected, 0u);

    auto bad_hash = bytes;
    bad_hash.back() ^= 1;
    EXPECT_FALSE(verify_transcript(bad_hash).ok);
    auto truncated = bytes;
    truncated.resize(truncated.size() / 2);
    const auto r = verify_transcript(truncated);
    EXPECT_FALSE(r.ok);
    EXPECT_FALSE(r.reason.empty());
}

TEST(Transcript, LoadRestoresLedgerState) {
    SeededRng rng("transcript-load");
    auto d = testing::deploy_default(1, rng);
    const auto bytes = write_transcript(d.ledger);
    const auto restored = load_transcript(bytes);
    EXPECT_EQ(restored.state_hash(), d.ledger.state_hash());
    EXPECT_EQ(restored.history().size(), d.ledger.history().size());
    EXPECT_EQ(restored.trace_text(), d.ledger.trace_text());
    auto bad = bytes;
    bad.back() ^= 1;
    EXPECT_THROW(load_transcript(bad), DecodeError);
}

TEST(Wire, RoundTrips) {
    SeededRng rng("wire");
    auto d = testing::deploy_default(1, rng);
    const auto keys = obtain_user_keys(d.out, slot_secrets_of(d.authorities), {1, 2, 3}, {"mid"}, rng);
    algebra::ByteWriter w;
    encode(w, keys);
    encode(w, d.out.table);
    encode(w, d.out.vc_params);
    algebra::ByteReader r(w.data());
    const auto k2 = decode_user_keys(r);
    EXPECT_EQ(k2.gid, keys.gid);
    EXPECT_EQ(k2.c, keys.c);
    EXPECT_EQ(k2.h, keys.h);
    EXPECT_EQ(k2.v.v, keys.v.v);
    ASSERT_EQ(k2.parts.size(), keys.parts.size());
    for (std::size_t i = 0; i < keys.parts.size(); ++i) {
        EXPECT_EQ(k2.parts[i].K, keys.parts[i].K);
        EXPECT_EQ(k2.parts[i].slot, keys.parts[i].slot);
    }
    EXPECT_EQ(decode_mapping_table(r), d.out.table);
    EXPECT_EQ(decode_vc_params(r), d.out.vc_params);
    EXPECT_TRUE(r.at_end());
}

}  // namespace
}  // namespace dgov::ceremony
