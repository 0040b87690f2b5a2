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

#include <dgov/ceremony/ceremony.hpp>

#include <algorithm>

#include <dgov/algebra/ops.hpp>

namespace dgov::ceremony {

using algebra::G1Point;
using ledger::Receipt;
using ledger::Transaction;

CeremonyError::CeremonyError(Address who, std::string fn, std::string why)
    : Error(fn + " rejected for " + who.to_hex() + ": " + why),
      participant(who),
      function(std::move(fn)),
      reason(std::move(why)) {}

Schedule Schedule::from(const ledger::LedgerConfig& c) {
    Schedule s{};
    s.sys_commit = c.sys.ddl1 > 0 ? c.sys.ddl1 - 1 : 0;
    s.sys_prove = c.sys.ddl1 + 1;
    s.sys_chain = c.sys.ddl2 + 1;
    s.auth_commit = std::max(c.auth.ddl1 > 0 ? c.auth.ddl1 - 1 : 0, s.sys_chain);
    s.auth_prove = c.auth.ddl1 + 1;
    s.auth_generate = c.auth.ddl2 + 1;
    s.after_setup = c.auth.ddl3 + 1;
    return s;
}

ledger::LedgerConfig default_ledger_config(std::size_t k, std::set<Address> aa_list) {
    ledger::LedgerConfig c;
    c.k = k;
    c.aa_list = std::move(aa_list);
    c.sys = {100, 200, 300};
    c.auth = {400, 500, 600};
    return c;
}

namespace {

ScalarMatrix row_of(const ScalarVector& v) {
    ScalarMatrix m(1, v.size());
    for (std::size_t i = 0; i < v.size(); ++i) m(0, i) = v[i];
    return m;
}

}  // namespace

SetupContribution make_setup_contribution(const Address& who, std::size_t k, Rng& rng) {
    if (k == 0) throw PreconditionError("setup contribution needs k >= 1");
    SetupSecrets s{ScalarVector(k), ScalarMatrix(k + 1, k), Scalar::random_nonzero(rng), Scalar::random_nonzero(rng)};
    for (auto& a : s.a_diag) a = Scalar::random_nonzero(rng);
    for (auto& u : s.u.data()) u = Scalar::random_nonzero(rng);

    ScalarVector alpha_a_diag;
    for (const auto& a : s.a_diag) alpha_a_diag.push_back(s.alpha_a * a);
    const std::vector<ScalarMatrix> secrets = {row_of(s.a_diag),
                                               s.u,
                                               ScalarMatrix::single(s.alpha_a),
                                               ScalarMatrix::single(s.alpha_u),
                                               row_of(alpha_a_diag),
                                               algebra::scaled(s.u, s.alpha_u)};
    SetupContribution c{who, s, {}, secrets, {}};
    for (std::size_t i = 0; i < secrets.size(); ++i)
        c.elements.push_back(pok::matrix_element(ledger::kSysElementNames[i], secrets[i]));
    c.commitment = pok::commit_spairs(c.elements);
    return c;
}

ChainHead extend_v(const ChainHead& head, const SetupSecrets& s) {
    const std::size_t k = s.a_diag.size();
    ChainHead next = head;
    for (std::size_t i = 0; i < k; ++i) {
        next.m(i, i) = s.a_diag[i] * head.m(i, i);
        next.m_prime(i, i) = (s.alpha_a * s.a_diag[i]) * head.m_prime(i, i);
        next.m_prime(k, i) = s.alpha_a * head.m_prime(k, i);
    }
    next.theta = s.alpha_a * head.theta;
    return next;
}

ChainHead extend_w(const ChainHead& head, const SetupSecrets& s) {
    return {algebra::power_multi(head.m, s.u), s.alpha_u * head.theta,
            algebra::power_multi(head.m_prime, algebra::scaled(s.u, s.alpha_u))};
}

namespace {

// Submits and either throws (expected to pass) or records the rejection.
bool submit(Ledger& ledger, const Address& who, std::uint64_t ts, ledger::Call call, bool honest,
            std::vector<RejectedCall>& rejected) {
    const auto name = ledger::call_name(call);
    const Receipt r = ledger.submit(Transaction{{who, ts, 0}, std::move(call)});
    if (r.accepted) return true;
    if (honest) throw CeremonyError(who, name, r.reason);
    rejected.push_back({who, name, r.reason});
    return false;
}

}  // namespace

SetupOutcome run_trusted_setup(Ledger& ledger, std::vector<SetupParticipant>& participants, Rng& rng) {
    const auto sched = Schedule::from(ledger.config());
    SetupOutcome out;
    for (auto& p : participants) {
        const auto& c = p.contribution;
        submit(ledger, c.address, sched.sys_commit, ledger::SysCommit{c.commitment.overall}, true, out.rejected);
        submit(ledger, c.address, sched.sys_commit, ledger::SysReveal{c.elements}, true, out.rejected);
    }
    for (auto& p : participants) {
        const auto& c = p.contribution;
        submit(ledger, c.address, sched.sys_prove, ledger::SysProve{pok::prove_all(c.elements, c.element_secrets, rng)},
               true, out.rejected);
    }
    for (auto& p : participants) {
        if (p.behavior == Behavior::SkipChains) continue;
        const auto& head = ledger.state().sys.v;
        const bool honest = p.behavior == Behavior::Honest;
        ChainHead next;
        if (honest) {
            next = extend_v(head, p.contribution.secrets);
        } else {
            auto fake = p.contribution.secrets;
            for (auto& a : fake.a_diag) a = Scalar::random_nonzero(rng);
            next = extend_v(head, fake);
        }
        submit(ledger, p.contribution.address, sched.sys_chain, ledger::SysCompute{next.m, next.theta, next.m_prime},
               honest, out.rejected);
    }
    for (auto& p : participants) {
        if (p.behavior == Behavior::SkipChains) continue;
        const auto next = extend_w(ledger.state().sys.w, p.contribution.secrets);
        submit(ledger, p.contribution.address, sched.sys_chain, ledger::SysGenerate{next.m, next.theta, next.m_prime},
               true, out.rejected);
    }
    out.a_pub = ledger.state().sys.v.m;
    out.ua_pub = ledger.state().sys.w.m;
    return out;
}

AuthContribution make_auth_contribution_from(const Address& who, std::size_t k, const G1Matrix& a_pub,
                                             std::vector<abe::SlotSecret> slots, Rng& rng) {
    if (a_pub.rows() != k + 1 || a_pub.cols() != k) throw DimensionError("A_pub must be (k+1) x k");
    AuthContribution c{who, Scalar::random_nonzero(rng), Scalar::random_nonzero(rng), std::move(slots), {}, {}, {}};
    const Scalar prefix[3] = {c.z, c.alpha_z, c.alpha_z * c.z};
    for (std::size_t i = 0; i < 3; ++i) {
        c.elements.push_back(pok::scalar_element(ledger::kAuthPrefixNames[i], prefix[i]));
        c.element_secrets.push_back(ScalarMatrix::single(prefix[i]));
    }
    for (const auto& s : c.slots) {
        c.elements.push_back({ledger::kSlotElementNames[0], pok::Action::TransposeProduct,
                              pok::make_transpose_spair(a_pub, s.X), std::nullopt});
        c.element_secrets.push_back(s.X);
        const auto tau = ScalarMatrix::column(s.tau);
        c.elements.push_back({ledger::kSlotElementNames[1], pok::Action::TransposeProduct,
                              pok::make_transpose_spair(a_pub, tau), std::nullopt});
        c.element_secrets.push_back(tau);
        c.elements.push_back({ledger::kSlotElementNames[2], pok::Action::Elementwise, std::nullopt,
                              pok::make_spair(algebra::G2Point::generator(), s.sigma)});
        c.element_secrets.push_back(ScalarMatrix::single(s.sigma));
    }
    c.commitment = pok::commit_spairs(c.elements);
    return c;
}

AuthContribution make_auth_contribution(const Address& who, std::size_t k, const G1Matrix& a_pub,
                                        std::size_t n_slots, Rng& rng) {
    if (n_slots == 0) throw PreconditionError("authority needs at least one slot");
    std::vector<abe::SlotSecret> slots;
    for (std::size_t i = 0; i < n_slots; ++i) slots.push_back(abe::sample_slot_secret(k, rng));
    return make_auth_contribution_from(who, k, a_pub, std::move(slots), rng);
}

ledger::AuthGenerate make_cross_terms(const AuthContribution& mine, const ledger::AuthState& state,
                                      std::uint32_t attribute_size) {
    const auto self = state.index.at(mine.address);
    const std::size_t n = state.counter;
    ledger::AuthGenerate g{algebra::G1Vector(n), algebra::G1Vector(n), algebra::G1Vector(n), attribute_size};
    for (std::uint32_t j = 1; j <= n; ++j) {
        if (j == self) continue;
        const auto& partner = state.verified.at(*state.by_index(j));
        g.o[j - 1] = mine.z * partner[0].rp->power(0, 0);
        g.theta[j - 1] = mine.alpha_z * partner[1].rp->power(0, 0);
        g.o_prime[j - 1] = (mine.alpha_z * mine.z) * partner[2].rp->power(0, 0);
    }
    return g;
}

}  // namespace dgov::ceremony
