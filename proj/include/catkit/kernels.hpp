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
#include <string>

namespace catkit::kern {

using cplx = std::complex<double>;

// Dense complex arithmetic kernels used by the inner loops of the toolkit
// (matrix products, Jacobi rotations, Householder reflections, reductions).
// Every kernel has a scalar reference implementation and, on x86-64, an
// AVX2+FMA variant. The active variant is chosen once at startup from CPUID;
// CATKIT_KERNELS=scalar|avx2 overrides the choice. Vectorized reductions may
// differ from the scalar ones by rounding (different summation order); the
// equivalence test suite pins the allowed deviation.
struct Ops {
    const char* name;

    // y[i] += a * x[i]
    void (*axpy)(std::size_t n, cplx a, const cplx* x, cplx* y);

    // x[i] *= a
    void (*scal)(std::size_t n, cplx a, cplx* x);

    // sum_i conj(x[i]) * y[i]
    cplx (*dotc)(std::size_t n, const cplx* x, const cplx* y);

    // sum_i |x[i]|^2
    double (*sumsq)(std::size_t n, const cplx* x);

    // Two-sided Jacobi/Givens pair update:
    //   x[i] <- c*x[i] - s*y[i]
    //   y[i] <- conj(s)*x_old[i] + c*y[i]
    void (*jrot)(std::size_t n, cplx* x, cplx* y, double c, cplx s);

    // C (m x n) = A (m x k) * B (k x n), all row-major contiguous.
    // C must not alias A or B.
    void (*matmul)(std::size_t m, std::size_t k, std::size_t n,
                   const cplx* a, const cplx* b, cplx* c);
};

// Active kernel set (dispatch resolved on first call).
const Ops& ops();

// Individual variants, for the equivalence tests and benchmarks.
const Ops& scalar_ops();
const Ops* avx2_ops(); // nullptr when unavailable (non-x86 build or no CPU support)

} // namespace catkit::kern
