// Copyright 2026 The catkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace catkit {

using cplx = std::complex<double>;

// Dense row-major complex matrix. The universal carrier for states, Kraus
// operators and unitaries; total dimension stays <= 256 throughout the
// toolkit, so everything is kept dense and by value.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zero(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    cplx* data() { return data_.data(); }
    const cplx* data() const { return data_.data(); }
    cplx* row(std::size_t i) { return data_.data() + i * cols_; }
    const cplx* row(std::size_t i) const { return data_.data() + i * cols_; }

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(cplx a);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(cplx a, ComplexMatrix m) { return m *= a; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conj() const;
    cplx trace() const;

    double frobenius_norm() const;
    double max_abs() const;
    // max_ij |a_ij - conj(a_ji)|
    double hermiticity_defect() const;
    bool is_hermitian(double tol) const { return square() && hermiticity_defect() <= tol; }
    bool all_finite() const;

    // Kronecker product, a (x) b
    friend ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

// Column vector helpers (stored as n x 1 matrices are clumsy; plain vectors
// are used for pure states instead).
using CVec = std::vector<cplx>;

ComplexMatrix outer(const CVec& a, const CVec& b); // |a><b|
double vec_norm(const CVec& v);

} // namespace catkit
