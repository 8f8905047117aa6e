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

// Scalar reference kernels. These define the semantics; the SIMD variants
// must agree with them up to summation-order rounding.

#include "catkit/kernels.hpp"

#include <cstring>

namespace catkit::kern {

namespace {

// std::complex arithmetic goes through NaN-correct multiplication; the
// kernels use explicit real/imaginary arithmetic instead, matching what the
// vector variants compute.
inline void cmul_acc(double ar, double ai, double br, double bi, double& cr, double& ci)
{
    cr += ar * br - ai * bi;
    ci += ar * bi + ai * br;
}

void axpy_scalar(std::size_t n, cplx a, const cplx* x, cplx* y)
{
    const double ar = a.real(), ai = a.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        y[i] = cplx(y[i].real() + ar * xr - ai * xi,
                    y[i].imag() + ar * xi + ai * xr);
    }
}

void scal_scalar(std::size_t n, cplx a, cplx* x)
{
    const double ar = a.real(), ai = a.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        x[i] = cplx(ar * xr - ai * xi, ar * xi + ai * xr);
    }
}

cplx dotc_scalar(std::size_t n, const cplx* x, const cplx* y)
{
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    return {re, im};
}

double sumsq_scalar(std::size_t n, const cplx* x)
{
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    return acc;
}

void jrot_scalar(std::size_t n, cplx* x, cplx* y, double c, cplx s)
{
    const double sr = s.real(), si = s.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        x[i] = cplx(c * xr - (sr * yr - si * yi), c * xi - (sr * yi + si * yr));
        y[i] = cplx(sr * xr + si * xi + c * yr, sr * xi - si * xr + c * yi);
    }
}

void matmul_scalar(std::size_t m, std::size_t k, std::size_t n,
                   const cplx* a, const cplx* b, cplx* c)
{
    std::memset(static_cast<void*>(c), 0, m * n * sizeof(cplx));
    for (std::size_t i = 0; i < m; ++i) {
        cplx* crow = c + i * n;
        for (std::size_t l = 0; l < k; ++l) {
            const double ar = a[i * k + l].real(), ai = a[i * k + l].imag();
            if (ar == 0.0 && ai == 0.0)
                continue;
            const cplx* brow = b + l * n;
            for (std::size_t j = 0; j < n; ++j) {
                double cr = crow[j].real(), ci = crow[j].imag();
                cmul_acc(ar, ai, brow[j].real(), brow[j].imag(), cr, ci);
                crow[j] = cplx(cr, ci);
            }
        }
    }
}

} // namespace

const Ops& scalar_ops()
{
    static const Ops table = {
        "scalar", axpy_scalar, scal_scalar, dotc_scalar,
        sumsq_scalar, jrot_scalar, matmul_scalar,
    };
    return table;
}

} // namespace catkit::kern
