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

#include <cstdint>
#include <vector>

#include "catkit/complex_matrix.hpp"
#include "catkit/rng.hpp"

namespace catkit {

// Tolerances shared across the toolkit.
namespace tol {
inline constexpr double hermitian = 1e-10;   // max |a_ij - conj(a_ji)| for states
inline constexpr double hermitian_eig = 1e-8; // looser gate for eigensolver input
inline constexpr double trace_one = 1e-10;
inline constexpr double min_eigenvalue = -1e-9;
inline constexpr double prob_sum = 1e-12;
} // namespace tol

// Nonincreasing vector of squared Schmidt coefficients; the carrier for pure
// bipartite states in the majorization/convertibility machinery.
class SchmidtVector {
public:
    // Sorts the entries; rejects negatives and sums away from 1 (1e-12).
    static SchmidtVector from_probs(std::vector<double> probs);
    // Squares and normalizes a (real, nonnegative) amplitude vector.
    static SchmidtVector from_amplitudes(const std::vector<double>& amps);

    const std::vector<double>& probs() const { return p_; }
    std::size_t size() const { return p_.size(); }
    double operator[](std::size_t i) const { return p_[i]; }

    // Shannon entropy in bits; for a pure bipartite state this is the
    // entanglement entropy of the marginal.
    double entropy() const;

    // log2 of the trace norm of the partial transpose of the corresponding
    // pure state: 2*log2(sum_i sqrt(p_i)).
    double log_negativity() const;

    // |<psi|phi>| for two pure states sharing a Schmidt basis.
    double overlap(const SchmidtVector& other) const;
    // ||psi - phi||_1 = 2*sqrt(1 - overlap^2)
    double trace_distance(const SchmidtVector& other) const;

private:
    explicit SchmidtVector(std::vector<double> p) : p_(std::move(p)) {}
    std::vector<double> p_;
};

// Hermitian, unit-trace, PSD matrix with subsystem dimension metadata.
class DensityMatrix {
public:
    // Validated construction; throws naming the violated invariant.
    static DensityMatrix make(ComplexMatrix mat, std::vector<std::size_t> dims);
    // Construction from provably-valid intermediates (partial traces of valid
    // states, convex mixtures, ...); skips the eigenvalue check.
    static DensityMatrix unchecked(ComplexMatrix mat, std::vector<std::size_t> dims);

    static DensityMatrix pure(const CVec& psi, std::vector<std::size_t> dims);
    // |phi_d^+><phi_d^+| on C^d (x) C^d
    static DensityMatrix max_entangled(std::size_t d);
    static DensityMatrix max_mixed(std::size_t dim);

    const ComplexMatrix& mat() const { return mat_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim() const { return mat_.rows(); }
    std::size_t subsystems() const { return dims_.size(); }

private:
    DensityMatrix(ComplexMatrix m, std::vector<std::size_t> d)
        : mat_(std::move(m)), dims_(std::move(d)) {}
    ComplexMatrix mat_;
    std::vector<std::size_t> dims_;
};

struct EigResult {
    std::vector<double> eigenvalues; // sorted nonincreasing
    ComplexMatrix vectors;           // columns are the eigenvectors
};

// Cyclic Jacobi eigendecomposition for Hermitian matrices. Converges when
// the off-diagonal Frobenius mass drops below 1e-14 * ||M||_F (at most 100
// sweeps). Throws InvalidMatrix for non-square or non-Hermitian (1e-8) input.
EigResult hermitian_eig(const ComplexMatrix& m);

// Eigenvalues only (skips accumulating the rotations); same contract.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

// Tr over the complement of `keep` (subsystem indices into rho's dims,
// strictly increasing order expected; the kept dims keep their order).
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& keep);
ComplexMatrix partial_trace_mat(const ComplexMatrix& m, const std::vector<std::size_t>& dims,
                                const std::vector<std::size_t>& keep);

// Transpose of one subsystem; an involution that preserves Hermiticity.
ComplexMatrix partial_transpose(const DensityMatrix& rho, std::size_t subsystem);
ComplexMatrix partial_transpose_mat(const ComplexMatrix& m, const std::vector<std::size_t>& dims,
                                    std::size_t subsystem);

// ||X||_1 = sum of singular values (sum |eigenvalue| on Hermitian input).
// No 1/2 factor: orthogonal pure states are at trace distance 2.
double trace_norm(const ComplexMatrix& m);

// ||a - b||_1
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);
double trace_distance_mat(const ComplexMatrix& a, const ComplexMatrix& b);

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

// Haar-distributed unitary: QR of a matrix of iid standard complex Gaussians
// with the diagonal phases of R divided out.
ComplexMatrix haar_unitary(std::size_t dim, Rng& rng);

// Eigenvalue clamp after channel application: eigenvalues in (-1e-9, 0) are
// set to 0 and the state renormalized; anything more negative throws
// NonPhysicalState.
ComplexMatrix clamp_psd(const ComplexMatrix& m);

namespace detail {
// In-place Jacobi on a Hermitian matrix; `a` is destroyed. If `vt` is
// non-null it accumulates the transposed eigenvector matrix (rows =
// eigenvector transposes). Eigenvalues land unsorted on the diagonal.
void jacobi_sweeps(ComplexMatrix& a, ComplexMatrix* vt);
// Entropy in bits of a Hermitian PSD matrix given directly (used by the
// Monte-Carlo inner loop; skips DensityMatrix validation).
double entropy_of_hermitian(const ComplexMatrix& m);
} // namespace detail

} // namespace catkit
