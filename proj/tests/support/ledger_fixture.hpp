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

#include <string>
#include <vector>

#include <dgov/ceremony/ceremony.hpp>
#include <dgov/ledger/ledger.hpp>

namespace dgov::testing {

using ceremony::AuthContribution;
using ceremony::SetupContribution;
using ledger::Address;
using ledger::Ledger;
using ledger::Receipt;
using ledger::Transaction;

inline constexpr ledger::Deadlines kSysDdl{100, 200, 300};
inline constexpr ledger::Deadlines kAuthDdl{400, 500, 600};

inline std::vector<Address> addresses(const std::string& prefix, std::size_t n) {
    std::vector<Address> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(Address::from_label(prefix + std::to_string(i)));
    return out;
}

inline ledger::LedgerConfig config_for(const std::vector<Address>& aa, std::size_t k, bool no_pok = false) {
    auto c = ceremony::default_ledger_config(k, {aa.begin(), aa.end()});
    c.insecure_no_pok = no_pok;
    return c;
}

inline Receipt send(Ledger& l, const Address& who, std::uint64_t ts, ledger::Call call, std::uint64_t value = 0) {
    return l.submit(Transaction{{who, ts, value}, std::move(call)});
}

// Setup pipeline stages driven one participant at a time.
struct SetupDriver {
    Ledger ledger;
    std::vector<SetupContribution> contribs;

    SetupDriver(const std::vector<Address>& aa, std::size_t k, algebra::Rng& rng, bool no_pok = false)
        : ledger(config_for(aa, k, no_pok)) {
        for (const auto& a : aa) contribs.push_back(ceremony::make_setup_contribution(a, k, rng));
    }

    Receipt commit(std::size_t i, std::uint64_t ts) {
        return send(ledger, contribs[i].address, ts, ledger::SysCommit{contribs[i].commitment.overall});
    }
    Receipt reveal(std::size_t i, std::uint64_t ts) {
        return send(ledger, contribs[i].address, ts, ledger::SysReveal{contribs[i].elements});
    }
    Receipt prove(std::size_t i, std::uint64_t ts, algebra::Rng& rng) {
        const auto& c = contribs[i];
        return send(ledger, c.address, ts, ledger::SysProve{pok::prove_all(c.elements, c.element_secrets, rng)});
    }
    ledger::SysCompute compute_call(std::size_t i) const {
        const auto next = ceremony::extend_v(ledger.state().sys.v, contribs[i].secrets);
        return {next.m, next.theta, next.m_prime};
    }
    ledger::SysGenerate generate_call(std::size_t i) const {
        const auto next = ceremony::extend_w(ledger.state().sys.w, contribs[i].secrets);
        return {next.m, next.theta, next.m_prime};
    }
    Receipt compute(std::size_t i, std::uint64_t ts) { return send(ledger, contribs[i].address, ts, compute_call(i)); }
    Receipt generate(std::size_t i, std::uint64_t ts) {
        return send(ledger, contribs[i].address, ts, generate_call(i));
    }

    // Everyone commits and reveals at ts, proves at prove_ts.
    void through_prove(std::uint64_t ts, std::uint64_t prove_ts, algebra::Rng& rng) {
        for (std::size_t i = 0; i < contribs.size(); ++i) {
            commit(i, ts);
            reveal(i, ts);
        }
        for (std::size_t i = 0; i < contribs.size(); ++i) prove(i, prove_ts, rng);
    }
    void through_chains(std::uint64_t ts) {
        for (std::size_t i = 0; i < contribs.size(); ++i) compute(i, ts);
        for (std::size_t i = 0; i < contribs.size(); ++i) generate(i, ts);
    }
};

// Authority pipeline on top of a finished setup.
struct AuthDriver {
    Ledger& ledger;
    std::vector<AuthContribution> contribs;

    AuthDriver(Ledger& l, const std::vector<Address>& aa, const std::vector<std::size_t>& slots, algebra::Rng& rng)
        : ledger(l) {
        for (std::size_t i = 0; i < aa.size(); ++i)
            contribs.push_back(ceremony::make_auth_contribution(aa[i], l.config().k, l.state().sys.v.m, slots[i], rng));
    }

    Receipt commit(std::size_t i, std::uint64_t ts) {
        return send(ledger, contribs[i].address, ts, ledger::AuthCommit{contribs[i].commitment.overall});
    }
    Receipt reveal(std::size_t i, std::uint64_t ts) {
        return send(ledger, contribs[i].address, ts, ledger::AuthReveal{contribs[i].elements});
    }
    Receipt prove(std::size_t i, std::uint64_t ts, algebra::Rng& rng) {
        const auto& c = contribs[i];
        return send(ledger, c.address, ts, ledger::AuthProve{pok::prove_all(c.elements, c.element_secrets, rng)});
    }
    ledger::AuthGenerate generate_call(std::size_t i) const {
        return ceremony::make_cross_terms(contribs[i], ledger.state().auth,
                                          static_cast<std::uint32_t>(contribs[i].slots.size()));
    }
    Receipt generate(std::size_t i, std::uint64_t ts) {
        return send(ledger, contribs[i].address, ts, generate_call(i));
    }

    void through_prove(std::uint64_t ts, std::uint64_t prove_ts, algebra::Rng& rng) {
        for (std::size_t i = 0; i < contribs.size(); ++i) {
            commit(i, ts);
            reveal(i, ts);
        }
        for (std::size_t i = 0; i < contribs.size(); ++i) prove(i, prove_ts, rng);
    }
};

}  // namespace dgov::testing
