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

#include <dgov/algebra/matrix.hpp>

namespace dgov::algebra {

ScalarMatrix mat_mul(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("mat_mul: inner dimensions differ");
    ScalarMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) {
            Scalar acc;
            for (std::size_t t = 0; t < a.cols(); ++t) acc += a(r, t) * b(t, c);
            out(r, c) = acc;
        }
    return out;
}

ScalarVector mat_vec(const ScalarMatrix& a, const ScalarVector& v) {
    if (a.cols() != v.size()) throw DimensionError("mat_vec: dimension mismatch");
    ScalarVector out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out[r] += a(r, c) * v[c];
    return out;
}

ScalarMatrix hadamard(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (!a.same_shape(b)) throw DimensionError("hadamard: shape mismatch");
    ScalarMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.size(); ++i) out.data()[i] = a.data()[i] * b.data()[i];
    return out;
}

ScalarMatrix scaled(const ScalarMatrix& a, const Scalar& s) {
    ScalarMatrix out = a;
    for (auto& x : out.data()) x *= s;
    return out;
}

Scalar inner(const ScalarVector& a, const ScalarVector& b) {
    if (a.size() != b.size()) throw DimensionError("inner: length mismatch");
    Scalar acc;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

}  // namespace dgov::algebra
