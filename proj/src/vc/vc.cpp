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

#include <dgov/vc/vc.hpp>

#include <dgov/algebra/encoding.hpp>
#include <dgov/algebra/hash.hpp>
#include <dgov/algebra/ops.hpp>

namespace dgov::vc {

using algebra::G2Point;

VCParams vc_params_from_secrets(const algebra::ScalarVector& z) {
    const std::size_t n = z.size();
    if (n == 0) throw PreconditionError("vector commitment needs n >= 1");
    VCParams p{G1Vector(n), G1Matrix(n, n), G2Vector(n)};
    for (std::size_t i = 0; i < n; ++i) {
        if (z[i].is_zero()) throw PreconditionError("z_i must be nonzero");
        p.o[i] = z[i] * G1Point::generator();
        p.z_pub[i] = z[i] * G2Point::generator();
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) p.o_cross(i, j) = (z[i] * z[j]) * G1Point::generator();
    }
    return p;
}

bool vc_params_valid(const VCParams& p) {
    const std::size_t n = p.o.size();
    if (n == 0 || p.z_pub.size() != n || p.o_cross.rows() != n || p.o_cross.cols() != n) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (p.o[i].is_identity() || p.z_pub[i].is_identity()) return false;
        // o_i and g2^{z_i} carry the same exponent.
        if (!algebra::same_ratio({G1Point::generator(), p.o[i]}, {G2Point::generator(), p.z_pub[i]})) return false;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (!(p.o_cross(i, j) == p.o_cross(j, i))) return false;
            if (!algebra::same_ratio({p.o[j], p.o_cross(i, j)}, {G2Point::generator(), p.z_pub[i]})) return false;
        }
    }
    return true;
}

VCParams assemble_vc_params(G1Vector o, G1Matrix o_cross, G2Vector z_pub) {
    VCParams p{std::move(o), std::move(o_cross), std::move(z_pub)};
    if (!vc_params_valid(p)) throw PreconditionError("vector commitment parameters failed validation");
    return p;
}

VCMessage vc_message(std::string_view bits, const Scalar& nonce) {
    Bytes in(bits.begin(), bits.end());
    const auto nb = nonce.to_bytes();
    in.insert(in.end(), nb.begin(), nb.end());
    return {algebra::commit_hash(in)};
}

VCCommitment vc_commit(const VCParams& params, const std::vector<VCMessage>& msgs) {
    if (msgs.size() != params.size()) throw DimensionError("vc_commit: one message per position");
    G1Point c;
    for (std::size_t i = 0; i < msgs.size(); ++i) c += msgs[i].m * params.o[i];
    return {c};
}

VCOpening vc_open(const VCParams& params, const std::vector<VCMessage>& msgs, std::size_t i, const Scalar& nonce) {
    if (msgs.size() != params.size()) throw DimensionError("vc_open: one message per position");
    if (i >= params.size()) throw PreconditionError("vc_open: position out of range");
    G1Point op;
    for (std::size_t j = 0; j < msgs.size(); ++j)
        if (j != i) op += msgs[j].m * params.o_cross(i, j);
    return {op, i, nonce};
}

bool vc_verify(const VCParams& params, const VCCommitment& c, const VCMessage& m, std::size_t i,
               const VCOpening& op) {
    if (i >= params.size() || op.position != i) return false;
    // e(C / o_i^{m}, g2^{z_i}) == e(op, g2)
    const auto residual = c.c - m.m * params.o[i];
    return algebra::multi_pairing({residual, -op.op}, {params.z_pub[i], G2Point::generator()}).is_one();
}

}  // namespace dgov::vc
