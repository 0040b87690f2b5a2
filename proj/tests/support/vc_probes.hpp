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

#include <cstddef>
#include <string>

#include <dgov/algebra/ops.hpp>
#include <dgov/vc/vc.hpp>

namespace dgov::testing {

struct VcProbeStats {
    std::size_t trials = 0;
    std::size_t honest_accepted = 0;
    std::size_t attempts = 0;
    std::size_t forgeries = 0;
};

inline std::string random_bits(algebra::Rng& rng, std::size_t len) {
    std::string bits;
    for (std::size_t i = 0; i < len; ++i) bits.push_back((rng.next_u64() & 1) ? '1' : '0');
    return bits;
}

// Position-binding probes against one fresh parameter set per trial. A forgery is any
// accepted (position, message) claim whose message differs from the committed one.
inline VcProbeStats vc_binding_probe(algebra::Rng& rng, std::size_t trials) {
    using algebra::G1Point;
    using algebra::Scalar;
    VcProbeStats st;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t n = 2 + rng.next_u64() % 5;
        algebra::ScalarVector z;
        for (std::size_t i = 0; i < n; ++i) z.push_back(Scalar::random_nonzero(rng));
        const auto params = vc::vc_params_from_secrets(z);
        std::vector<vc::VCMessage> msgs;
        for (std::size_t i = 0; i < n; ++i) msgs.push_back(vc::vc_message(random_bits(rng, 3), Scalar::random(rng)));
        const auto c = vc::vc_commit(params, msgs);
        const std::size_t i = rng.next_u64() % n;
        const std::size_t j = (i + 1 + rng.next_u64() % (n - 1)) % n;
        const auto op_i = vc::vc_open(params, msgs, i);
        const auto op_j = vc::vc_open(params, msgs, j);
        ++st.trials;
        if (vc::vc_verify(params, c, msgs[i], i, op_i)) ++st.honest_accepted;

        auto attempt = [&](const vc::VCCommitment& cc, const vc::VCMessage& m, std::size_t pos, vc::VCOpening op,
                           const vc::VCMessage& committed) {
            ++st.attempts;
            if (m == committed) return;
            if (vc::vc_verify(params, cc, m, pos, op)) ++st.forgeries;
        };
        const vc::VCMessage sub{Scalar::random(rng)};
        const auto delta = Scalar::random_nonzero(rng);
        // Message substitution with the honest opening.
        attempt(c, sub, i, op_i, msgs[i]);
        attempt(c, vc::VCMessage{msgs[i].m + delta}, i, op_i, msgs[i]);
        // Cross-position replay: j's opening and message presented at i.
        auto replay = op_j;
        replay.position = i;
        attempt(c, msgs[j], i, replay, msgs[i]);
        // Opening mauled by public factors.
        auto mauled = op_i;
        mauled.op = op_i.op + delta * params.o[i];
        attempt(c, vc::VCMessage{msgs[i].m + delta}, i, mauled, msgs[i]);
        mauled.op = op_i.op + delta * G1Point::generator();
        attempt(c, vc::VCMessage{msgs[i].m + delta}, i, mauled, msgs[i]);
        mauled.op = op_i.op + delta * params.o_cross(i, j);
        attempt(c, vc::VCMessage{msgs[i].m + delta}, i, mauled, msgs[i]);
        // Commitment mauled by a known factor of o_i: the honest opening would now need m_i + delta,
        // so neither m_i nor a substitute may be accepted against the original commitment.
        const vc::VCCommitment c2{c.c + delta * params.o[i]};
        ++st.attempts;
        if (vc::vc_verify(params, c2, msgs[i], i, op_i)) ++st.forgeries;
        attempt(c, vc::VCMessage{msgs[i].m + delta}, i, op_i, msgs[i]);
    }
    return st;
}

}  // namespace dgov::testing
