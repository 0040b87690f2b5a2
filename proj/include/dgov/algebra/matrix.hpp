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
#include <utility>
#include <vector>

#include <dgov/algebra/group.hpp>
#include <dgov/algebra/scalar.hpp>
#include <dgov/common/error.hpp>

namespace dgov::algebra {

// Dense row-major matrix. Dimensions are positive for every non-default instance.
template <class T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{}) : rows_(rows), cols_(cols), data_(rows * cols, fill) {
        if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
    }

    static Matrix from_rows(std::vector<std::vector<T>> rows) {
        if (rows.empty() || rows.front().empty()) throw DimensionError("matrix dimensions must be positive");
        Matrix m(rows.size(), rows.front().size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != m.cols_) throw DimensionError("ragged matrix rows");
            for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = std::move(rows[r][c]);
        }
        return m;
    }

    // Column vector.
    static Matrix column(const std::vector<T>& v) {
        Matrix m(v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
        return m;
    }

    static Matrix single(const T& v) { return Matrix(1, 1, v); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    T& at(std::size_t r, std::size_t c) {
        check(r, c);
        return (*this)(r, c);
    }
    const T& at(std::size_t r, std::size_t c) const {
        check(r, c);
        return (*this)(r, c);
    }

    const std::vector<T>& data() const { return data_; }
    std::vector<T>& data() { return data_; }

    std::vector<T> row(std::size_t r) const { return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_}; }
    std::vector<T> col(std::size_t c) const {
        std::vector<T> out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
        return out;
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    template <class U>
    bool same_shape(const Matrix<U>& o) const {
        return rows_ == o.rows() && cols_ == o.cols();
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

  private:
    void check(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using ScalarMatrix = Matrix<Scalar>;
using G1Matrix = Matrix<G1Point>;
using G2Matrix = Matrix<G2Point>;

using ScalarVector = std::vector<Scalar>;
using G1Vector = std::vector<G1Point>;
using G2Vector = std::vector<G2Point>;
using GtVector = std::vector<GtPoint>;

// Exponent-side helpers (plain Z_p linear algebra).
ScalarMatrix mat_mul(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarVector mat_vec(const ScalarMatrix& a, const ScalarVector& v);
ScalarMatrix hadamard(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarMatrix scaled(const ScalarMatrix& a, const Scalar& s);
Scalar inner(const ScalarVector& a, const ScalarVector& b);

}  // namespace dgov::algebra
