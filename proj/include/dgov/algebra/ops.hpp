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
#include <utility>

#include <dgov/algebra/group.hpp>
#include <dgov/algebra/matrix.hpp>
#include <dgov/algebra/rng.hpp>
#include <dgov/common/error.hpp>

namespace dgov::algebra {

// Per-thread instrumentation of the expensive primitives.
struct OpCounters {
    std::size_t vector_pairings = 0;
    std::size_t multi_exps = 0;
    std::size_t exp_groups = 0;
};

OpCounters& op_counters();
void reset_op_counters();

// Uniform group-operation vocabulary over G1/G2 (additive) and GT (multiplicative).
inline G1Point group_mul(const G1Point& a, const G1Point& b) { return a + b; }
inline G2Point group_mul(const G2Point& a, const G2Point& b) { return a + b; }
inline GtPoint group_mul(const GtPoint& a, const GtPoint& b) { return a * b; }
inline G1Point group_exp(const G1Point& a, const Scalar& s) { return s * a; }
inline G2Point group_exp(const G2Point& a, const Scalar& s) { return s * a; }
inline GtPoint group_exp(const GtPoint& a, const Scalar& s) { return a.pow(s); }
inline G1Point group_inv(const G1Point& a) { return -a; }
inline G2Point group_inv(const G2Point& a) { return -a; }
inline GtPoint group_inv(const GtPoint& a) { return a.inverse(); }

GtPoint pairing(const G1Point& a, const G2Point& b);

// prod_t e(u_t, w_t) with one shared final exponentiation. Not counted.
GtPoint multi_pairing(const G1Vector& u, const G2Vector& w);

// Counted variant of multi_pairing used by decryption.
GtPoint vector_pairing(const G1Vector& u, const G2Vector& w);

// B[i,j] = A[i,j]^{s[i,j]}.
template <class P>
Matrix<P> power_multi(const Matrix<P>& a, const ScalarMatrix& s) {
    if (a.rows() != s.rows() || a.cols() != s.cols()) throw DimensionError("power_multi: shape mismatch");
    Matrix<P> out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.size(); ++i) out.data()[i] = group_exp(a.data()[i], s.data()[i]);
    return out;
}

// Entry [i,j] = g^{M[i,j]}.
template <class P>
Matrix<P> matrix_exp_base(const P& g, const ScalarMatrix& m) {
    Matrix<P> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.size(); ++i) out.data()[i] = group_exp(g, m.data()[i]);
    return out;
}

template <class P>
std::vector<P> vector_exp_base(const P& g, const ScalarVector& v) {
    std::vector<P> out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(group_exp(g, s));
    return out;
}

// result[i] = prod_j GM[i,j]^{s_j}. Counts as one multi-exponentiation.
template <class P>
std::vector<P> multi_exp_matvec(const Matrix<P>& gm, const ScalarVector& s) {
    if (gm.cols() != s.size()) throw DimensionError("multi_exp_matvec: dimension mismatch");
    ++op_counters().multi_exps;
    std::vector<P> out(gm.rows());
    for (std::size_t i = 0; i < gm.rows(); ++i) {
        P acc{};
        for (std::size_t j = 0; j < gm.cols(); ++j) acc = group_mul(acc, group_exp(gm(i, j), s[j]));
        out[i] = acc;
    }
    return out;
}

// prod_j base_j^{s_j}. Counts as one multi-exponentiation.
template <class P>
P multi_exp(const std::vector<P>& base, const ScalarVector& s) {
    if (base.size() != s.size()) throw DimensionError("multi_exp: length mismatch");
    ++op_counters().multi_exps;
    P acc{};
    for (std::size_t j = 0; j < base.size(); ++j) acc = group_mul(acc, group_exp(base[j], s[j]));
    return acc;
}

// Componentwise v^e. Counts as one exponentiation group.
template <class P>
std::vector<P> vector_pow(const std::vector<P>& v, const Scalar& e) {
    ++op_counters().exp_groups;
    std::vector<P> out;
    out.reserve(v.size());
    for (const auto& p : v) out.push_back(group_exp(p, e));
    return out;
}

template <class P>
std::vector<P> hadamard_mul(const std::vector<P>& a, const std::vector<P>& b) {
    if (a.size() != b.size()) throw DimensionError("hadamard_mul: length mismatch");
    std::vector<P> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = group_mul(a[i], b[i]);
    return out;
}

template <class P>
Matrix<P> hadamard_mul(const Matrix<P>& a, const Matrix<P>& b) {
    if (!a.same_shape(b)) throw DimensionError("hadamard_mul: shape mismatch");
    Matrix<P> out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.size(); ++i) out.data()[i] = group_mul(a.data()[i], b.data()[i]);
    return out;
}

// g^{S^T M} from g^{M}; S has as many rows as `base`.
G1Matrix transpose_product(const G1Matrix& base, const ScalarMatrix& s);

// e(A, D) == e(B, C) for p1 = (A, B), p2 = (C, D). Identity inputs are rejected.
bool same_ratio(const std::pair<G1Point, G1Point>& p1, const std::pair<G2Point, G2Point>& p2);

// Entrywise same_ratio of a G1 matrix s-pair against a G2 matrix s-pair.
bool same_ratio_matrix(const G1Matrix& base1, const G1Matrix& power1, const G2Matrix& base2,
                       const G2Matrix& power2);

struct LinMatrix {
    ScalarMatrix a;        // (k+1) x k
    ScalarVector a_perp;   // length k+1, A^T a_perp = 0
};

LinMatrix sample_lin_matrix(std::size_t k, Rng& rng);

// Builds the structured matrix from a given nonzero diagonal.
LinMatrix lin_matrix_from_diagonal(const ScalarVector& diag);

}  // namespace dgov::algebra
