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

#include <optional>
#include <ostream>

#include <dgov/ledger/ledger.hpp>

#include "ledger_fixture.hpp"

namespace dgov::testing {

using ledger::Address;
using ledger::AuthCommit;
using ledger::AuthProve;
using ledger::AuthReveal;
using ledger::Call;
using ledger::Receipt;
using ledger::SysCommit;
using ledger::SysProve;
using ledger::SysReveal;

enum class Entry { SysCommit, SysReveal, SysProve, SysCompute, SysGenerate, AuthCommit, AuthReveal, AuthProve, AuthGenerate };

struct Attempt {
    Receipt receipt;
    algebra::Digest32 before;
    algebra::Digest32 after;
};

// Drives every prerequisite at safe timestamps, then fires the entry point at ts.
inline Attempt attempt(Entry e, std::uint64_t ts, bool outsider = false) {
    algebra::SeededRng rng("window-fixture");
    const auto aa = testing::addresses("aa", 2);
    SetupDriver d(aa, 1, rng);
    const Address who = outsider ? Address::from_label("outsider") : aa[0];
    Attempt out{};
    auto fire = [&](Call c) {
        out.before = d.ledger.state_hash();
        out.receipt = send(d.ledger, who, ts, std::move(c));
        out.after = d.ledger.state_hash();
    };
    const auto& c0 = d.contribs[0];
    switch (e) {
        case Entry::SysCommit:
            fire(SysCommit{c0.commitment.overall});
            return out;
        case Entry::SysReveal:
            d.commit(0, 0);
            fire(SysReveal{c0.elements});
            return out;
        case Entry::SysProve:
            d.commit(0, 0);
            d.reveal(0, 0);
            fire(SysProve{pok::prove_all(c0.elements, c0.element_secrets, rng)});
            return out;
        case Entry::SysCompute:
            d.through_prove(0, 100, rng);
            fire(d.compute_call(0));
            return out;
        case Entry::SysGenerate:
            d.through_prove(0, 100, rng);
            fire(d.generate_call(0));
            return out;
        default:
            break;
    }
    d.through_prove(0, 100, rng);
    d.through_chains(200);
    AuthDriver a(d.ledger, aa, {1, 2}, rng);
    const auto& a0 = a.contribs[0];
    switch (e) {
        case Entry::AuthCommit:
            fire(AuthCommit{a0.commitment.overall});
            break;
        case Entry::AuthReveal:
            a.commit(0, 200);
            fire(AuthReveal{a0.elements});
            break;
        case Entry::AuthProve:
            a.commit(0, 200);
            a.reveal(0, 200);
            fire(AuthProve{pok::prove_all(a0.elements, a0.element_secrets, rng)});
            break;
        case Entry::AuthGenerate:
            a.through_prove(200, 400, rng);
            fire(a.generate_call(0));
            break;
        default:
            break;
    }
    return out;
}

struct Window {
    const char* name;
    Entry entry;
    std::optional<std::uint64_t> open;  // earliest accepted timestamp
    std::uint64_t close;                // latest accepted timestamp
};

inline const Window kWindows[] = {
    {"SysCommit", Entry::SysCommit, std::nullopt, 100},   {"SysReveal", Entry::SysReveal, std::nullopt, 100},
    {"SysProve", Entry::SysProve, 100, 200},              {"SysCompute", Entry::SysCompute, 200, 300},
    {"SysGenerate", Entry::SysGenerate, 200, 300},        {"AuthCommit", Entry::AuthCommit, std::nullopt, 400},
    {"AuthReveal", Entry::AuthReveal, std::nullopt, 400}, {"AuthProve", Entry::AuthProve, 400, 500},
    {"AuthGenerate", Entry::AuthGenerate, 500, 600},
};

// Earliest timestamp the fixture allows: auth entries follow a setup run that ends at 200.
inline std::uint64_t earliest(Entry e) { return e >= Entry::AuthCommit ? 200 : 0; }

inline void PrintTo(const Window& w, std::ostream* os) { *os << w.name; }

inline constexpr std::size_t kWindowCount = sizeof(kWindows) / sizeof(kWindows[0]);

}  // namespace dgov::testing
