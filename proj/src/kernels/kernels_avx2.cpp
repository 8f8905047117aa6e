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

// AVX2+FMA kernel variants. One __m256d holds two complex doubles as
// [re0 im0 re1 im1]; complex products use the permute/fmaddsub idiom.
// This translation unit is compiled with -mavx2 -mfma and must only be
// entered after the dispatcher has checked CPUID.

#include "catkit/kernels.hpp"

#ifdef CATKIT_HAVE_AVX2_TU

#include <immintrin.h>

#include <cstring>

namespace catkit::kern {

namespace {

// [re0 im0 re1 im1] -> [im0 re0 im1 re1]
inline __m256d swap_halves(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

// x * a for complex scalar a broadcast as (ar, ai).
inline __m256d cmul(__m256d x, __m256d ar, __m256d ai)
{
    return _mm256_fmaddsub_pd(x, ar, _mm256_mul_pd(swap_halves(x), ai));
}

void axpy_avx2(std::size_t n, cplx a, const cplx* x, cplx* y)
{
    const __m256d ar = _mm256_set1_pd(a.real());
    const __m256d ai = _mm256_set1_pd(a.imag());
    auto* xp = reinterpret_cast<const double*>(x);
    auto* yp = reinterpret_cast<double*>(y);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yp + 2 * i);
        _mm256_storeu_pd(yp + 2 * i, _mm256_add_pd(yv, cmul(xv, ar, ai)));
    }
    if (i < n)
        y[i] += a * x[i];
}

void scal_avx2(std::size_t n, cplx a, cplx* x)
{
    const __m256d ar = _mm256_set1_pd(a.real());
    const __m256d ai = _mm256_set1_pd(a.imag());
    auto* xp = reinterpret_cast<double*>(x);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        _mm256_storeu_pd(xp + 2 * i, cmul(_mm256_loadu_pd(xp + 2 * i), ar, ai));
    if (i < n) {
        const double xr = x[i].real(), xi = x[i].imag();
        x[i] = cplx(a.real() * xr - a.imag() * xi, a.real() * xi + a.imag() * xr);
    }
}

cplx dotc_avx2(std::size_t n, const cplx* x, const cplx* y)
{
    auto* xp = reinterpret_cast<const double*>(x);
    auto* yp = reinterpret_cast<const double*>(y);
    __m256d vre = _mm256_setzero_pd();
    __m256d vim = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yp + 2 * i);
        vre = _mm256_fmadd_pd(xv, yv, vre);
        // even lanes accumulate -xi*yr, odd lanes +xr*yi
        vim = _mm256_addsub_pd(vim, _mm256_mul_pd(swap_halves(xv), yv));
    }
    alignas(32) double re4[4], im4[4];
    _mm256_store_pd(re4, vre);
    _mm256_store_pd(im4, vim);
    double re = re4[0] + re4[1] + re4[2] + re4[3];
    double im = im4[0] + im4[1] + im4[2] + im4[3];
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    return {re, im};
}

double sumsq_avx2(std::size_t n, const cplx* x)
{
    auto* xp = reinterpret_cast<const double*>(x);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        acc = _mm256_fmadd_pd(xv, xv, acc);
    }
    alignas(32) double a4[4];
    _mm256_store_pd(a4, acc);
    double s = a4[0] + a4[1] + a4[2] + a4[3];
    for (; i < n; ++i)
        s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    return s;
}

void jrot_avx2(std::size_t n, cplx* x, cplx* y, double c, cplx s)
{
    const __m256d cv = _mm256_set1_pd(c);
    const __m256d sr = _mm256_set1_pd(s.real());
    const __m256d si = _mm256_set1_pd(s.imag());
    const __m256d nsi = _mm256_set1_pd(-s.imag());
    auto* xp = reinterpret_cast<double*>(x);
    auto* yp = reinterpret_cast<double*>(y);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yp + 2 * i);
        const __m256d xnew = _mm256_fmsub_pd(xv, cv, cmul(yv, sr, si));
        const __m256d ynew = _mm256_fmadd_pd(yv, cv, cmul(xv, sr, nsi));
        _mm256_storeu_pd(xp + 2 * i, xnew);
        _mm256_storeu_pd(yp + 2 * i, ynew);
    }
    if (i < n) {
        const cplx x0 = x[i], y0 = y[i];
        x[i] = c * x0 - s * y0;
        y[i] = std::conj(s) * x0 + c * y0;
    }
}

void matmul_avx2(std::size_t m, std::size_t k, std::size_t n,
                 const cplx* a, const cplx* b, cplx* c)
{
    std::memset(static_cast<void*>(c), 0, m * n * sizeof(cplx));
    for (std::size_t i = 0; i < m; ++i) {
        auto* crow = reinterpret_cast<double*>(c + i * n);
        for (std::size_t l = 0; l < k; ++l) {
            const cplx av = a[i * k + l];
            if (av.real() == 0.0 && av.imag() == 0.0)
                continue;
            const __m256d ar = _mm256_set1_pd(av.real());
            const __m256d ai = _mm256_set1_pd(av.imag());
            auto* brow = reinterpret_cast<const double*>(b + l * n);
            std::size_t j = 0;
            for (; j + 4 <= n; j += 4) {
                const __m256d b0 = _mm256_loadu_pd(brow + 2 * j);
                const __m256d b1 = _mm256_loadu_pd(brow + 2 * j + 4);
                const __m256d c0 = _mm256_loadu_pd(crow + 2 * j);
                const __m256d c1 = _mm256_loadu_pd(crow + 2 * j + 4);
                _mm256_storeu_pd(crow + 2 * j, _mm256_add_pd(c0, cmul(b0, ar, ai)));
                _mm256_storeu_pd(crow + 2 * j + 4, _mm256_add_pd(c1, cmul(b1, ar, ai)));
            }
            for (; j + 2 <= n; j += 2) {
                const __m256d bv = _mm256_loadu_pd(brow + 2 * j);
                const __m256d cv = _mm256_loadu_pd(crow + 2 * j);
                _mm256_storeu_pd(crow + 2 * j, _mm256_add_pd(cv, cmul(bv, ar, ai)));
            }
            if (j < n) {
                cplx* cj = c + i * n + j;
                const cplx bj = b[l * n + j];
                *cj = cplx(cj->real() + av.real() * bj.real() - av.imag() * bj.imag(),
                           cj->imag() + av.real() * bj.imag() + av.imag() * bj.real());
            }
        }
    }
}

} // namespace

const Ops* avx2_ops()
{
    static const Ops table = {
        "avx2", axpy_avx2, scal_avx2, dotc_avx2,
        sumsq_avx2, jrot_avx2, matmul_avx2,
    };
    return &table;
}

} // namespace catkit::kern

#else

namespace catkit::kern {
const Ops* avx2_ops() { return nullptr; }
} // namespace catkit::kern

#endif // CATKIT_HAVE_AVX2_TU
