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

#include "catkit/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "catkit/errors.hpp"
#include "catkit/kernels.hpp"

namespace catkit {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries))
{
    if (data_.size() != rows_ * cols_)
        throw InvalidMatrix("entry count does not match rows*cols");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n)
{
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::zero(std::size_t rows, std::size_t cols)
{
    return {rows, cols};
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other)
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw InvalidArgument("matrix shape mismatch in addition");
    kern::ops().axpy(data_.size(), 1.0, other.data(), data());
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other)
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw InvalidArgument("matrix shape mismatch in subtraction");
    kern::ops().axpy(data_.size(), -1.0, other.data(), data());
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx a)
{
    kern::ops().scal(data_.size(), a, data());
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b)
{
    if (a.cols() != b.rows())
        throw InvalidArgument("matrix shape mismatch in product");
    ComplexMatrix c(a.rows(), b.cols());
    kern::ops().matmul(a.rows(), a.cols(), b.cols(), a.data(), b.data(), c.data());
    return c;
}

ComplexMatrix ComplexMatrix::adjoint() const
{
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r(j, i) = std::conj((*this)(i, j));
    return r;
}

ComplexMatrix ComplexMatrix::transpose() const
{
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r(j, i) = (*this)(i, j);
    return r;
}

ComplexMatrix ComplexMatrix::conj() const
{
    ComplexMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        r.data_[i] = std::conj(data_[i]);
    return r;
}

cplx ComplexMatrix::trace() const
{
    if (!square())
        throw InvalidMatrix("trace of non-square matrix");
    cplx t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const
{
    return std::sqrt(kern::ops().sumsq(data_.size(), data()));
}

double ComplexMatrix::max_abs() const
{
    double m = 0.0;
    for (const cplx& v : data_)
        m = std::max(m, std::abs(v));
    return m;
}

double ComplexMatrix::hermiticity_defect() const
{
    if (!square())
        return std::numeric_limits<double>::infinity();
    double d = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return d;
}

bool ComplexMatrix::all_finite() const
{
    return std::all_of(data_.begin(), data_.end(), [](const cplx& v) {
        return std::isfinite(v.real()) && std::isfinite(v.imag());
    });
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b)
{
    ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ia = 0; ia < a.rows(); ++ia)
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            const cplx av = a(ia, ja);
            if (av == cplx(0.0))
                continue;
            for (std::size_t ib = 0; ib < b.rows(); ++ib) {
                cplx* dst = r.row(ia * b.rows() + ib) + ja * b.cols();
                const cplx* src = b.row(ib);
                for (std::size_t jb = 0; jb < b.cols(); ++jb)
                    dst[jb] = av * src[jb];
            }
        }
    return r;
}

ComplexMatrix outer(const CVec& a, const CVec& b)
{
    ComplexMatrix r(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r(i, j) = a[i] * std::conj(b[j]);
    return r;
}

double vec_norm(const CVec& v)
{
    return std::sqrt(kern::ops().sumsq(v.size(), v.data()));
}

} // namespace catkit
