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
#include <string_view>
#include <vector>

#include <dgov/algebra/matrix.hpp>
#include <dgov/algebra/rng.hpp>

namespace dgov::vc {

using algebra::G1Matrix;
using algebra::G1Point;
using algebra::G1Vector;
using algebra::G2Vector;
using algebra::Scalar;

// o[i] = g1^{z_i}; o_cross(i, j) = g1^{z_i z_j} for i != j (diagonal unused, identity);
// z_pub[i] = g2^{z_i}.
struct VCParams {
    G1Vector o;
    G1Matrix o_cross;
    G2Vector z_pub;

    std::size_t size() const { return o.size(); }
    friend bool operator==(const VCParams&, const VCParams&) = default;
};

struct VCMessage {
    Scalar m;
    friend bool operator==(const VCMessage&, const VCMessage&) = default;
};

struct VCCommitment {
    G1Point c;
    friend bool operator==(const VCCommitment&, const VCCommitment&) = default;
};

struct VCOpening {
    G1Point op;
    std::size_t position = 0;
    Scalar nonce;
    friend bool operator==(const VCOpening&, const VCOpening&) = default;
};

// Central construction from known z (tests and single-party runs).
VCParams vc_params_from_secrets(const algebra::ScalarVector& z);

// Assembles parameters from ceremony outputs: checks cross-term symmetry and
// SameRatio((o_j, o_cross(i,j)), (g2, z_pub[i])) for every ordered pair. Throws on failure.
VCParams assemble_vc_params(G1Vector o, G1Matrix o_cross, G2Vector z_pub);
bool vc_params_valid(const VCParams& p);

// bits: authority-local attribute slice, '1' = possessed, most-significant attribute first.
VCMessage vc_message(std::string_view bits, const Scalar& nonce);

VCCommitment vc_commit(const VCParams& params, const std::vector<VCMessage>& msgs);
VCOpening vc_open(const VCParams& params, const std::vector<VCMessage>& msgs, std::size_t i,
                  const Scalar& nonce = Scalar::zero());
bool vc_verify(const VCParams& params, const VCCommitment& c, const VCMessage& m, std::size_t i,
               const VCOpening& op);

}  // namespace dgov::vc
