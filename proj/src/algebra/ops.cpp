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

#include <dgov/algebra/ops.hpp>

#include <vector>

namespace dgov::algebra {

OpCounters& op_counters() {
    thread_local OpCounters counters;
    return counters;
}

void reset_op_counters() { op_counters() = OpCounters{}; }

GtPoint pairing(const G1Point& a, const G2Point& b) {
    if (a.is_identity() || b.is_identity()) return GtPoint::one();
    const auto pa = a.to_affine();
    const auto qa = b.to_affine();
    blst_fp12 ml, out;
    blst_miller_loop(&ml, &qa, &pa);
    blst_final_exp(&out, &ml);
    return GtPoint(out);
}

GtPoint multi_pairing(const G1Vector& u, const G2Vector& w) {
    if (u.size() != w.size()) throw DimensionError("vector_pairing: length mismatch");
    // The Miller loop is undefined on the point at infinity; such pairs contribute 1.
    std::vector<blst_p1_affine> ps;
    std::vector<blst_p2_affine> qs;
    ps.reserve(u.size());
    qs.reserve(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_identity() || w[i].is_identity()) continue;
        ps.push_back(u[i].to_affine());
        qs.push_back(w[i].to_affine());
    }
    if (ps.empty()) return GtPoint::one();
    std::vector<const blst_p1_affine*> pp;
    std::vector<const blst_p2_affine*> qp;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        pp.push_back(&ps[i]);
        qp.push_back(&qs[i]);
    }
    blst_fp12 ml, out;
    blst_miller_loop_n(&ml, qp.data(), pp.data(), ps.size());
    blst_final_exp(&out, &ml);
    return GtPoint(out);
}

GtPoint vector_pairing(const G1Vector& u, const G2Vector& w) {
    ++op_counters().vector_pairings;
    return multi_pairing(u, w);
}

G1Matrix transpose_product(const G1Matrix& base, const ScalarMatrix& s) {
    if (base.rows() != s.rows()) throw DimensionError("transpose_product: row mismatch");
    G1Matrix out(s.cols(), base.cols());
    for (std::size_t r = 0; r < s.cols(); ++r)
        for (std::size_t c = 0; c < base.cols(); ++c) {
            G1Point acc;
            for (std::size_t t = 0; t < base.rows(); ++t) acc += s(t, r) * base(t, c);
            out(r, c) = acc;
        }
    return out;
}

bool same_ratio(const std::pair<G1Point, G1Point>& p1, const std::pair<G2Point, G2Point>& p2) {
    if (p1.first.is_identity() || p1.second.is_identity() || p2.first.is_identity() || p2.second.is_identity())
        return false;
    // e(A, D) * e(-B, C) == 1
    return multi_pairing({p1.first, -p1.second}, {p2.second, p2.first}).is_one();
}

bool same_ratio_matrix(const G1Matrix& base1, const G1Matrix& power1, const G2Matrix& base2,
                       const G2Matrix& power2) {
    if (!base1.same_shape(power1) || base2.rows() != base1.rows() || base2.cols() != base1.cols() ||
        power2.rows() != base1.rows() || power2.cols() != base1.cols())
        return false;
    for (std::size_t i = 0; i < base1.size(); ++i)
        if (!same_ratio({base1.data()[i], power1.data()[i]}, {base2.data()[i], power2.data()[i]})) return false;
    return true;
}

LinMatrix lin_matrix_from_diagonal(const ScalarVector& diag) {
    const std::size_t k = diag.size();
    if (k == 0) throw PreconditionError("k-Lin matrix needs k >= 1");
    LinMatrix out{ScalarMatrix(k + 1, k), ScalarVector(k + 1)};
    for (std::size_t i = 0; i < k; ++i) {
        if (diag[i].is_zero()) throw PreconditionError("k-Lin diagonal must be nonzero");
        out.a(i, i) = diag[i];
        out.a(k, i) = Scalar::one();
        out.a_perp[i] = diag[i].inverse();
    }
    out.a_perp[k] = -Scalar::one();
    return out;
}

LinMatrix sample_lin_matrix(std::size_t k, Rng& rng) {
    if (k == 0) throw PreconditionError("k-Lin matrix needs k >= 1");
    ScalarVector diag;
    for (std::size_t i = 0; i < k; ++i) diag.push_back(Scalar::random_nonzero(rng));
    return lin_matrix_from_diagonal(diag);
}

}  // namespace dgov::algebra
