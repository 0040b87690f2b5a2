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

#include <optional>

#include <gtest/gtest.h>

#include <dgov/algebra/ops.hpp>
#include <dgov/ledger/ledger.hpp>

#include "../support/ledger_fixture.hpp"
#include "../support/ledger_windows.hpp"

namespace dgov::ledger {
namespace {

using algebra::G1Point;
using algebra::Scalar;
using algebra::SeededRng;
using testing::AuthDriver;
using testing::SetupDriver;
using testing::send;
using testing::attempt;
using testing::Entry;
using testing::kWindows;
using testing::Window;

const G1Point g1 = G1Point::generator();

class WindowTest : public ::testing::TestWithParam<Window> {};

TEST_P(WindowTest, AcceptsInsideAndRejectsPastClose) {
    const auto& w = GetParam();
    for (auto ts : {w.close - 1, w.close}) {
        const auto r = attempt(w.entry, ts);
        EXPECT_TRUE(r.receipt.accepted) << w.name << " at " << ts << ": " << r.receipt.reason;
        EXPECT_TRUE(r.receipt.reason.empty());
        EXPECT_NE(r.before, r.after);
    }
    const auto late = attempt(w.entry, w.close + 1);
    EXPECT_FALSE(late.receipt.accepted) << w.name;
    EXPECT_EQ(late.before, late.after);
}

TEST_P(WindowTest, RespectsLowerBound) {
    const auto& w = GetParam();
    if (!w.open) {
        // No lower bound: the earliest timestamp the fixture allows is accepted.
        EXPECT_TRUE(attempt(w.entry, testing::earliest(w.entry)).receipt.accepted) << w.name;
        return;
    }
    const auto early = attempt(w.entry, *w.open - 1);
    EXPECT_FALSE(early.receipt.accepted) << w.name;
    EXPECT_EQ(early.before, early.after);
    EXPECT_TRUE(attempt(w.entry, *w.open).receipt.accepted) << w.name;
}

TEST_P(WindowTest, RejectsUnauthorizedSender) {
    const auto& w = GetParam();
    const auto r = attempt(w.entry, w.close, true);
    EXPECT_FALSE(r.receipt.accepted);
    EXPECT_EQ(r.receipt.reason, "sender not in AAlist");
    EXPECT_EQ(r.before, r.after);
}

INSTANTIATE_TEST_SUITE_P(Ledger, WindowTest, ::testing::ValuesIn(kWindows),
                         [](const auto& info) { return std::string(info.param.name); });

TEST(SysPipeline, HonestProveMovesElements) {
    SeededRng rng("sys-honest");
    const auto aa = testing::addresses("aa", 1);
    SetupDriver d(aa, 2, rng);
    ASSERT_TRUE(d.commit(0, 10).accepted);
    ASSERT_TRUE(d.reveal(0, 20).accepted);
    EXPECT_EQ(d.ledger.state().sys.unverified.size(), 1u);
    ASSERT_TRUE(d.prove(0, 150, rng).accepted);
    EXPECT_TRUE(d.ledger.state().sys.unverified.empty());
    EXPECT_EQ(d.ledger.state().sys.verified.at(aa[0]), d.contribs[0].elements);
}

TEST(SysPipeline, RevealWithoutCommitRejected) {
    SeededRng rng("sys-nocommit");
    const auto aa = testing::addresses("aa", 1);
    SetupDriver d(aa, 1, rng);
    const auto r = d.reveal(0, 0);
    EXPECT_FALSE(r.accepted);
    EXPECT_EQ(r.reason, "no commitment from sender");
}

TEST(SysPipeline, FlippedRevealDigestMismatch) {
    SeededRng rng("sys-flip");
    const auto aa = testing::addresses("aa", 1);
    SetupDriver d(aa, 1, rng);
    d.commit(0, 0);
    auto els = d.contribs[0].elements;
    els[1].rp->power(0, 0) += g1;
    els[1].rp2->power(0, 0) += algebra::G2Point::generator();
    const auto before = d.ledger.serialize_state();
    const auto r = send(d.ledger, aa[0], 1, SysReveal{els});
    EXPECT_FALSE(r.accepted);
    EXPECT_EQ(r.reason, "revealed elements do not match commitment");
    EXPECT_EQ(d.ledger.serialize_state(), before);
}

TEST(SysPipeline, OneBadProofRejectsWholeCallAtomically) {
    SeededRng rng("sys-atomic");
    const auto aa = testing::addresses("aa", 1);
    SetupDriver d(aa, 2, rng);
    d.commit(0, 0);
    d.reveal(0, 0);
    const auto& c = d.contribs[0];
    auto proofs = pok::prove_all(c.elements, c.element_secrets, rng);
    ASSERT_EQ(proofs.size(), 6u);
    proofs[3].u(0, 0) += Scalar::one();
    const auto before = d.ledger.serialize_state();
    const auto r = send(d.ledger, aa[0], 100, SysProve{proofs});
    EXPECT_FALSE(r.accepted);
    EXPECT_EQ(r.reason, "proof of knowledge rejected");
    EXPECT_EQ(d.ledger.serialize_state(), before);
    EXPECT_EQ(d.ledger.state().sys.unverified.size(), 1u);
    EXPECT_TRUE(d.ledger.state().sys.verified.empty());
}

TEST(SysPipeline, ResubmittedCommitIgnored) {
    SeededRng rng("sys-resubmit");
    const auto aa = testing::addresses("aa", 1);
    SetupDriver d(aa, 1, rng);
    d.commit(0, 0);
    const auto before = d.ledger.serialize_state();
    const auto r = send(d.ledger, aa[0], 5, SysCommit{Scalar::from_u64(7)});
    EXPECT_TRUE(r.accepted);
    EXPECT_EQ(r.reason, "commitment already recorded");
    EXPECT_EQ(d.ledger.serialize_state(), before);
    EXPECT_EQ(d.ledger.state().sys.h_collector.at(aa[0]), d.contribs[0].commitment.overall);
}

TEST(SysPipeline, TwoParticipantChainMatchesExponentOracle) {
    SeededRng rng("sys-chain");
    const std::size_t k = 2;
    const auto aa = testing::addresses("aa", 2);
    SetupDriver d(aa, k, rng);
    d.through_prove(0, 100, rng);
    d.through_chains(200);
    const auto& s0 = d.contribs[0].secrets;
    const auto& s1 = d.contribs[1].secrets;
    const auto& v = d.ledger.state().sys.v;
    for (std::size_t i = 0; i <= k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (i == k) {
                EXPECT_EQ(v.m(i, j), g1);
                EXPECT_EQ(v.m_prime(i, j), (s0.alpha_a * s1.alpha_a) * g1);
            } else if (i == j) {
                EXPECT_EQ(v.m(i, j), (s0.a_diag[i] * s1.a_diag[i]) * g1);
                EXPECT_EQ(v.m_prime(i, j), (s0.alpha_a * s1.alpha_a * s0.a_diag[i] * s1.a_diag[i]) * g1);
            } else {
                EXPECT_TRUE(v.m(i, j).is_identity());
            }
        }
    EXPECT_EQ(v.theta, (s0.alpha_a * s1.alpha_a) * g1);
    const auto& w = d.ledger.state().sys.w;
    for (std::size_t i = 0; i < w.m.size(); ++i) {
        EXPECT_EQ(w.m.data()[i], (s0.u.data()[i] * s1.u.data()[i]) * g1);
        EXPECT_EQ(w.m_prime.data()[i],
                  (s0.alpha_u * s1.alpha_u * s0.u.data()[i] * s1.u.data()[i]) * g1);
    }
    EXPECT_EQ(w.theta, (s0.alpha_u * s1.alpha_u) * g1);
    EXPECT_EQ(d.ledger.state().sys.v_contributors, aa);
}

TEST(SysPipeline, TamperedComputeRejected) {
    SeededRng rng("sys-tamper");
    const auto aa = testing::addresses("aa", 1);
    SetupDriver d(aa, 2, rng);
    d.through_prove(0, 100, rng);
    auto call = d.compute_call(0);
    call.v(1, 1) += g1;
    const auto before = d.ledger.serialize_state();
    const auto r = send(d.ledger, aa[0], 200, call);
    EXPECT_FALSE(r.accepted);
    EXPECT_EQ(r.reason, "V is not a proper multiple of the head");
    EXPECT_EQ(d.ledger.serialize_state(), before);

    auto bad_theta = d.compute_call(0);
    bad_theta.theta += g1;
    EXPECT_EQ(send(d.ledger, aa[0], 200, bad_theta).reason, "theta is not a proper multiple of the head");
    auto bad_shape = d.compute_call(0);
    bad_shape.v(0, 1) = g1;
    EXPECT_EQ(send(d.ledger, aa[0], 200, bad_shape).reason, "V off-diagonal must be 1");
    EXPECT_TRUE(d.compute(0, 200).accepted);
}

TEST(SysPipeline, ComputeRequiresVerifiedElements) {
    SeededRng rng("sys-unverified");
    const auto aa = testing::addresses("aa", 2);
    SetupDriver d(aa, 1, rng);
    d.commit(0, 0);
    d.reveal(0, 0);
    d.commit(1, 0);
    d.reveal(1, 0);
    d.prove(0, 100, rng);
    const auto r = d.compute(1, 200);
    EXPECT_FALSE(r.accepted);
    EXPECT_EQ(r.reason, "sender has no verified elements");
}

TEST(SysPipeline, TimestampRegressionRejected) {
    SeededRng rng("sys-clock");
    const auto aa = testing::addresses("aa", 2);
    SetupDriver d(aa, 1, rng);
    d.commit(0, 50);
    const auto r = d.commit(1, 49);
    EXPECT_FALSE(r.accepted);
    EXPECT_EQ(r.reason, "timestamp earlier than the previous block");
}

TEST(AuthPipeline, IndicesFollowArrivalOrder) {
    SeededRng rng("auth-index");
    const auto aa = testing::addresses("aa", 3);
    SetupDriver d(aa, 1, rng);
    d.through_prove(0, 100, rng);
    d.through_chains(200);
    AuthDriver a(d.ledger, aa, {3, 2, 1}, rng);
    for (std::size_t i = 0; i < 3; ++i) {
        a.commit(i, 300);
        a.reveal(i, 300);
    }
    for (std::size_t i : {2u, 0u, 1u}) ASSERT_TRUE(a.prove(i, 450, rng).accepted);
    const auto& st = d.ledger.state().auth;
    EXPECT_EQ(st.counter, 3u);
    EXPECT_EQ(st.index.at(aa[2]), 1u);
    EXPECT_EQ(st.index.at(aa[0]), 2u);
    EXPECT_EQ(st.index.at(aa[1]), 3u);
    EXPECT_EQ(*st.by_index(2), aa[0]);
    EXPECT_FALSE(st.by_index(4).has_value());
}

TEST(AuthPipeline, AttributeSizeRecordedAndCrossTermsChecked) {
    SeededRng rng("auth-cross");
    const auto aa = testing::addresses("aa", 2);
    SetupDriver d(aa, 1, rng);
    d.through_prove(0, 100, rng);
    d.through_chains(200);
    AuthDriver a(d.ledger, aa, {5, 1}, rng);
    a.through_prove(300, 400, rng);

    auto forged = a.generate_call(0);
    const auto partner = d.ledger.state().auth.index.at(aa[1]) - 1;
    forged.o[partner] = Scalar::from_u64(12345) * forged.o[partner];
    const auto before = d.ledger.serialize_state();
    const auto r = send(d.ledger, aa[0], 500, forged);
    EXPECT_FALSE(r.accepted);
    EXPECT_EQ(r.reason, "cross term o_ij rejected");
    EXPECT_EQ(d.ledger.serialize_state(), before);

    auto wrong_size = a.generate_call(0);
    wrong_size.attribute_size = 4;
    EXPECT_FALSE(send(d.ledger, aa[0], 500, wrong_size).accepted);

    ASSERT_TRUE(a.generate(0, 500).accepted);
    ASSERT_TRUE(a.generate(1, 500).accepted);
    EXPECT_EQ(d.ledger.state().auth.attribute_size.at(aa[0]), 5u);
    EXPECT_EQ(d.ledger.state().auth.attribute_size.at(aa[1]), 1u);
}

TEST(AuthPipeline, RevealMustUseCurrentChainHead) {
    SeededRng rng("auth-base");
    const auto aa = testing::addresses("aa", 1);
    SetupDriver d(aa, 1, rng);
    d.through_prove(0, 100, rng);
    d.through_chains(200);
    const auto stale = ledger::genesis_v(1).m;
    auto c = ceremony::make_auth_contribution(aa[0], 1, stale, 1, rng);
    send(d.ledger, aa[0], 300, AuthCommit{c.commitment.overall});
    const auto r = send(d.ledger, aa[0], 300, AuthReveal{c.elements});
    EXPECT_FALSE(r.accepted);
    EXPECT_EQ(r.reason, "malformed X element");
}

TEST(Registration, StrictFeeThreshold) {
    Ledger l(testing::config_for({}, 1));
    const auto user = Address::from_label("user");
    const auto low = send(l, user, 0, Register{}, 1000000);
    EXPECT_FALSE(low.accepted);
    EXPECT_EQ(low.reason, "registration fee too low");
    EXPECT_FALSE(l.gid_of(user).has_value());

    const auto ok = send(l, user, 0, Register{}, 1000001);
    ASSERT_TRUE(ok.accepted);
    const auto expected = algebra::commit_hash(user.view()).to_bytes();
    EXPECT_EQ(ok.output, Bytes(expected.begin(), expected.end()));
    EXPECT_EQ(ok.output.size(), 32u);
    EXPECT_EQ(*l.gid_of(user), ok.output);
    EXPECT_EQ(send(l, user, 1, Register{}, 2000000).output, ok.output);
}

TEST(Log, AppendGetAndSubscribers) {
    Ledger l(testing::config_for({}, 1));
    std::vector<std::size_t> seen;
    l.subscribe([&](const LogEntry&, std::size_t i) { seen.push_back(i); });
    EXPECT_THROW(l.log_get(7), NotFoundError);
    EXPECT_TRUE(l.log_get(-1).empty());

    const Bytes ct0 = {1, 2, 3};
    const auto r0 = send(l, Address::from_label("a"), 0, Log{ct0, std::string("kw")});
    ASSERT_TRUE(r0.accepted);
    EXPECT_EQ(r0.output, (Bytes{0, 0, 0, 0}));
    const auto r1 = send(l, Address::from_label("b"), 0, Log{{9}, std::nullopt});
    EXPECT_EQ(r1.output, (Bytes{0, 0, 0, 1}));

    EXPECT_EQ(l.log_get(0).at(0).ct, ct0);
    EXPECT_EQ(*l.log_get(0).at(0).kw, "kw");
    EXPECT_EQ(l.log_get(-1).size(), 2u);
    EXPECT_THROW(l.log_get(2), NotFoundError);
    EXPECT_THROW(l.log_get(-2), NotFoundError);
    EXPECT_EQ(seen, (std::vector<std::size_t>{0, 1}));
}

TEST(Log, SubscribersCannotReenter) {
    Ledger l(testing::config_for({}, 1));
    l.subscribe([&](const LogEntry&, std::size_t) { send(l, Address::from_label("x"), 0, Log{{1}, std::nullopt}); });
    EXPECT_THROW(send(l, Address::from_label("a"), 0, Log{{1}, std::nullopt}), PreconditionError);
    EXPECT_EQ(l.log_get(-1).size(), 1u);
}

TEST(Replay, TranscriptReproducesStateAndTrace) {
    SeededRng rng("replay");
    const auto aa = testing::addresses("aa", 2);
    SetupDriver d(aa, 1, rng);
    d.through_prove(0, 100, rng);
    d.compute(0, 200);
    d.commit(1, 150);  // rejected: past deadline and clock regression
    d.through_chains(250);
    send(d.ledger, Address::from_label("u"), 260, Register{}, 5000000);
    const auto bytes = export_transcript(d.ledger);
    const auto again = replay_transcript(bytes);
    EXPECT_EQ(again.serialize_state(), d.ledger.serialize_state());
    EXPECT_EQ(again.trace_text(), d.ledger.trace_text());
    EXPECT_EQ(export_transcript(again), bytes);
}

TEST(Trace, LineFormat) {
    Ledger l(testing::config_for({}, 1));
    const auto who = Address::from_label("t");
    send(l, who, 0, Register{}, 1);
    const auto line = l.trace().at(0).to_line();
    EXPECT_EQ(line, who.to_hex() + " SC_reg.register reject " + to_hex(l.state_hash()));
}

TEST(Util, DelegatesToPrimitives) {
    const Bytes data = {1, 2, 3};
    EXPECT_EQ(util_hash(data), algebra::commit_hash(data));
    const auto s = Scalar::from_u64(5);
    const auto g2 = algebra::G2Point::generator();
    EXPECT_TRUE(util_same_ratio({g1, s * g1}, {g2, s * g2}));
    EXPECT_FALSE(util_same_ratio({g1, s * g1}, {g2, (s + Scalar::one()) * g2}));
}

TEST(Config, EncodingRoundTrip) {
    auto c = testing::config_for(testing::addresses("aa", 3), 2, true);
    c.registration_threshold = 42;
    algebra::ByteWriter w;
    encode(w, c);
    algebra::ByteReader r(w.data());
    EXPECT_EQ(decode_ledger_config(r), c);
    EXPECT_TRUE(r.at_end());
}

}  // namespace
}  // namespace dgov::ledger
