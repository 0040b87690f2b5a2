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

#include <dgov/abe/abe.hpp>
#include <dgov/algebra/ops.hpp>

namespace dgov::testing {

// Centrally generated system with every secret retained, for exponent-side oracles.
struct CentralSystem {
    algebra::LinMatrix lin;
    algebra::ScalarMatrix ua;  // exponents of UA_pub
    abe::SystemParams params;
    std::vector<abe::SlotSecret> secrets;
    std::vector<abe::SlotPublic> pubs;
    std::vector<algebra::G2Point> ys;
};

inline CentralSystem make_central_system(std::size_t k, std::size_t L, algebra::Rng& rng) {
    CentralSystem s;
    s.lin = algebra::sample_lin_matrix(k, rng);
    s.ua = algebra::ScalarMatrix(k + 1, k);
    for (auto& x : s.ua.data()) x = algebra::Scalar::random_nonzero(rng);
    s.params = abe::SystemParams{k, L, algebra::matrix_exp_base(algebra::G1Point::generator(), s.lin.a),
                                 algebra::matrix_exp_base(algebra::G1Point::generator(), s.ua)};
    for (std::size_t i = 0; i < L; ++i) {
        auto [pub, sec] = abe::slot_keygen(s.params, rng);
        s.ys.push_back(pub.y);
        s.pubs.push_back(std::move(pub));
        s.secrets.push_back(std::move(sec));
    }
    return s;
}

struct UserKeys {
    Bytes gid;
    vc::VCCommitment c;
    algebra::G2Vector h;
    std::vector<abe::KeyPart> parts;
};

// One key part per slot, each slot computing its own masking term as an authority would.
inline UserKeys issue_user_keys(const CentralSystem& s, const Bytes& gid, const vc::VCCommitment& c,
                                const abe::AttributeVector& v) {
    UserKeys u{gid, c, abe::derive_h(gid, c, s.params.k), {}};
    for (std::size_t j = 0; j < s.params.L; ++j) {
        const auto mu = abe::masking(j, s.secrets[j].sigma, s.ys, gid, c, s.params.k);
        u.parts.push_back(abe::issue_key_part(s.secrets[j], v.v[j], u.h, mu, j, j == s.params.trust_slot()));
    }
    return u;
}

inline Bytes random_gid(algebra::Rng& rng) {
    Bytes gid(32);
    rng.fill(gid);
    return gid;
}

inline vc::VCCommitment random_commitment(algebra::Rng& rng) {
    return {algebra::Scalar::random_nonzero(rng) * algebra::G1Point::generator()};
}

inline std::vector<bool> random_bits_vector(algebra::Rng& rng, std::size_t n) {
    std::vector<bool> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back((rng.next_u64() & 1) != 0);
    return out;
}

}  // namespace dgov::testing
