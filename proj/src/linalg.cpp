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

#include "catkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "catkit/errors.hpp"
#include "catkit/kernels.hpp"

namespace catkit {

// ---------------------------------------------------------------------------
// SchmidtVector

SchmidtVector SchmidtVector::from_probs(std::vector<double> probs)
{
    if (probs.empty())
        throw InvalidArgument("Schmidt vector must be nonempty");
    double sum = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0))
            throw InvalidArgument("Schmidt coefficients must be nonnegative");
        sum += p;
    }
    if (std::abs(sum - 1.0) > tol::prob_sum) {
        std::ostringstream os;
        os << "Schmidt coefficients must sum to 1 within 1e-12, got " << sum;
        throw InvalidArgument(os.str());
    }
    std::sort(probs.begin(), probs.end(), std::greater<>());
    return SchmidtVector(std::move(probs));
}

SchmidtVector SchmidtVector::from_amplitudes(const std::vector<double>& amps)
{
    std::vector<double> p(amps.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        p[i] = amps[i] * amps[i];
        sum += p[i];
    }
    if (sum <= 0.0)
        throw InvalidArgument("amplitude vector must be nonzero");
    for (double& v : p)
        v /= sum;
    std::sort(p.begin(), p.end(), std::greater<>());
    return SchmidtVector(std::move(p));
}

double SchmidtVector::entropy() const
{
    double h = 0.0;
    for (double p : p_)
        if (p > 1e-12)
            h -= p * std::log2(p);
    return h;
}

double SchmidtVector::log_negativity() const
{
    double s = 0.0;
    for (double p : p_)
        s += std::sqrt(p);
    return 2.0 * std::log2(s);
}

double SchmidtVector::overlap(const SchmidtVector& other) const
{
    const std::size_t n = std::max(p_.size(), other.p_.size());
    double ov = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = i < p_.size() ? p_[i] : 0.0;
        const double b = i < other.p_.size() ? other.p_[i] : 0.0;
        ov += std::sqrt(a * b);
    }
    return ov;
}

double SchmidtVector::trace_distance(const SchmidtVector& other) const
{
    const double ov = overlap(other);
    return 2.0 * std::sqrt(std::max(0.0, 1.0 - ov * ov));
}

// ---------------------------------------------------------------------------
// DensityMatrix

namespace {

std::size_t dims_product(const std::vector<std::size_t>& dims)
{
    return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

} // namespace

DensityMatrix DensityMatrix::make(ComplexMatrix mat, std::vector<std::size_t> dims)
{
    if (!mat.square())
        throw InvalidMatrix("density matrix must be square");
    if (dims.empty())
        dims = {mat.rows()};
    if (dims_product(dims) != mat.rows()) {
        std::ostringstream os;
        os << "subsystem dimensions multiply to " << dims_product(dims)
           << " but the matrix dimension is " << mat.rows();
        throw InvalidMatrix(os.str());
    }
    if (!mat.all_finite())
        throw InvalidMatrix("density matrix has non-finite entries");
    const double hd = mat.hermiticity_defect();
    if (hd > tol::hermitian) {
        std::ostringstream os;
        os << "density matrix not Hermitian: max |a_ij - conj(a_ji)| = " << hd;
        throw InvalidMatrix(os.str());
    }
    const double tr = mat.trace().real();
    if (std::abs(tr - 1.0) > tol::trace_one) {
        std::ostringstream os;
        os << "density matrix trace " << tr << " deviates from 1 by " << std::abs(tr - 1.0);
        throw InvalidMatrix(os.str());
    }
    const std::vector<double> ev = hermitian_eigenvalues(mat);
    const double mn = ev.back();
    if (mn < tol::min_eigenvalue) {
        std::ostringstream os;
        os << "density matrix has negative eigenvalue " << mn;
        throw InvalidMatrix(os.str());
    }
    return {std::move(mat), std::move(dims)};
}

DensityMatrix DensityMatrix::unchecked(ComplexMatrix mat, std::vector<std::size_t> dims)
{
    if (dims.empty())
        dims = {mat.rows()};
    return {std::move(mat), std::move(dims)};
}

DensityMatrix DensityMatrix::pure(const CVec& psi, std::vector<std::size_t> dims)
{
    CVec v = psi;
    const double n = vec_norm(v);
    if (n <= 0.0)
        throw InvalidArgument("pure state vector must be nonzero");
    for (cplx& c : v)
        c /= n;
    return unchecked(outer(v, v), std::move(dims));
}

DensityMatrix DensityMatrix::max_entangled(std::size_t d)
{
    CVec v(d * d, 0.0);
    const double a = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t i = 0; i < d; ++i)
        v[i * d + i] = a;
    return pure(v, {d, d});
}

DensityMatrix DensityMatrix::max_mixed(std::size_t dim)
{
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        m(i, i) = 1.0 / static_cast<double>(dim);
    return unchecked(std::move(m), {dim});
}

// ---------------------------------------------------------------------------
// Jacobi eigensolver

namespace detail {

void jacobi_sweeps(ComplexMatrix& a, ComplexMatrix* vt)
{
    const std::size_t n = a.rows();
    const double norm = a.frobenius_norm();
    if (norm == 0.0)
        return;
    const double stop = 1e-14 * norm;
    const double skip = 1e-300;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off2 = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                off2 += 2.0 * std::norm(a(i, j));
        if (std::sqrt(off2) <= stop)
            return;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double r = std::abs(apq);
                if (r <= skip)
                    continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * r);
                double t;
                if (std::abs(tau) > 1e154) {
                    t = 1.0 / (2.0 * tau); // avoids overflow in tau*tau
                } else {
                    t = 1.0 / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                    if (tau < 0.0)
                        t = -t;
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx phase = apq / r;
                const cplx sc = s * phase;

                // rows p,q of J^dag A (final except the 2x2 block)
                kern::ops().jrot(n, a.row(p), a.row(q), c, sc);
                // columns follow from Hermiticity of J^dag A J
                for (std::size_t i = 0; i < n; ++i) {
                    if (i == p || i == q)
                        continue;
                    a(i, p) = std::conj(a(p, i));
                    a(i, q) = std::conj(a(q, i));
                }
                a(p, p) = app - t * r;
                a(q, q) = aqq + t * r;
                a(p, q) = 0.0;
                a(q, p) = 0.0;

                if (vt != nullptr)
                    kern::ops().jrot(n, vt->row(p), vt->row(q), c, std::conj(sc));
            }
        }
    }

    // check final residual before giving up
    double off2 = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            off2 += 2.0 * std::norm(a(i, j));
    if (std::sqrt(off2) > stop)
        throw ConvergenceFailure("Jacobi eigensolver did not converge in 100 sweeps");
}

double entropy_of_hermitian(const ComplexMatrix& m)
{
    ComplexMatrix a = m;
    jacobi_sweeps(a, nullptr);
    double h = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double lam = a(i, i).real();
        if (lam > 1e-12)
            h -= lam * std::log2(lam);
    }
    return h;
}

} // namespace detail

namespace {

void check_eig_input(const ComplexMatrix& m)
{
    if (!m.square())
        throw InvalidMatrix("eigendecomposition requires a square matrix");
    if (!m.all_finite())
        throw InvalidMatrix("eigendecomposition input has non-finite entries");
    const double hd = m.hermiticity_defect();
    if (hd > tol::hermitian_eig) {
        std::ostringstream os;
        os << "matrix not Hermitian within 1e-8: defect " << hd;
        throw InvalidMatrix(os.str());
    }
}

} // namespace

EigResult hermitian_eig(const ComplexMatrix& m)
{
    check_eig_input(m);
    const std::size_t n = m.rows();
    ComplexMatrix a = m;
    ComplexMatrix vt = ComplexMatrix::identity(n);
    detail::jacobi_sweeps(a, &vt);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&a](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    EigResult res;
    res.eigenvalues.resize(n);
    res.vectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        res.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i)
            res.vectors(i, k) = vt(order[k], i); // V = (V^T)^T, column k
    }
    return res;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m)
{
    check_eig_input(m);
    ComplexMatrix a = m;
    detail::jacobi_sweeps(a, nullptr);
    std::vector<double> ev(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        ev[i] = a(i, i).real();
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

// ---------------------------------------------------------------------------
// Tensor structure manipulation

namespace {

// Offsets of every multi-index of `dims` restricted to `subset`, with the
// complement fixed to zero; adding one offset from each of the two
// complementary tables enumerates all full indices.
std::vector<std::size_t> subset_offsets(const std::vector<std::size_t>& dims,
                                        const std::vector<std::size_t>& subset)
{
    std::vector<std::size_t> strides(dims.size(), 1);
    for (std::size_t k = dims.size(); k-- > 1;)
        strides[k - 1] = strides[k] * dims[k];

    std::size_t count = 1;
    for (std::size_t s : subset)
        count *= dims[s];

    std::vector<std::size_t> offsets(count, 0);
    std::size_t repeat = count;
    for (std::size_t s : subset) {
        repeat /= dims[s];
        std::size_t idx = 0;
        for (std::size_t block = 0; block < count / (repeat * dims[s]); ++block)
            for (std::size_t v = 0; v < dims[s]; ++v)
                for (std::size_t rep = 0; rep < repeat; ++rep)
                    offsets[idx++] += v * strides[s];
    }
    return offsets;
}

} // namespace

ComplexMatrix partial_trace_mat(const ComplexMatrix& m, const std::vector<std::size_t>& dims,
                                const std::vector<std::size_t>& keep)
{
    if (keep.empty())
        throw InvalidArgument("partial trace needs a nonempty set of kept subsystems");
    if (!std::is_sorted(keep.begin(), keep.end()) ||
        std::adjacent_find(keep.begin(), keep.end()) != keep.end())
        throw InvalidArgument("kept subsystem indices must be strictly increasing");
    for (std::size_t s : keep)
        if (s >= dims.size())
            throw InvalidArgument("kept subsystem index out of range");

    std::vector<std::size_t> traced;
    for (std::size_t s = 0; s < dims.size(); ++s)
        if (!std::binary_search(keep.begin(), keep.end(), s))
            traced.push_back(s);

    const std::vector<std::size_t> koff = subset_offsets(dims, keep);
    const std::vector<std::size_t> toff = subset_offsets(dims, traced);

    ComplexMatrix out(koff.size(), koff.size());
    for (std::size_t i = 0; i < koff.size(); ++i)
        for (std::size_t j = 0; j < koff.size(); ++j) {
            cplx acc = 0.0;
            for (std::size_t t : toff)
                acc += m(koff[i] + t, koff[j] + t);
            out(i, j) = acc;
        }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& keep)
{
    ComplexMatrix out = partial_trace_mat(rho.mat(), rho.dims(), keep);
    std::vector<std::size_t> kdims;
    kdims.reserve(keep.size());
    for (std::size_t s : keep)
        kdims.push_back(rho.dims()[s]);
    return DensityMatrix::unchecked(std::move(out), std::move(kdims));
}

ComplexMatrix partial_transpose_mat(const ComplexMatrix& m, const std::vector<std::size_t>& dims,
                                    std::size_t subsystem)
{
    if (subsystem >= dims.size())
        throw InvalidArgument("partial transpose subsystem index out of range");

    std::vector<std::size_t> strides(dims.size(), 1);
    for (std::size_t k = dims.size(); k-- > 1;)
        strides[k - 1] = strides[k] * dims[k];
    const std::size_t ds = dims[subsystem];
    const std::size_t stride = strides[subsystem];

    // full index = rest + v*stride, with v the transposed subsystem's value
    std::vector<std::size_t> rest;
    const std::size_t dim = m.rows();
    rest.reserve(dim / ds);
    for (std::size_t idx = 0; idx < dim; ++idx)
        if ((idx / stride) % ds == 0)
            rest.push_back(idx);

    ComplexMatrix out(dim, dim);
    for (std::size_t a : rest)
        for (std::size_t b : rest)
            for (std::size_t v = 0; v < ds; ++v)
                for (std::size_t w = 0; w < ds; ++w)
                    out(a + v * stride, b + w * stride) = m(a + w * stride, b + v * stride);
    return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, std::size_t subsystem)
{
    return partial_transpose_mat(rho.mat(), rho.dims(), subsystem);
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b)
{
    std::vector<std::size_t> dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    return DensityMatrix::unchecked(kron(a.mat(), b.mat()), std::move(dims));
}

// ---------------------------------------------------------------------------
// Norms and distances

double trace_norm(const ComplexMatrix& m)
{
    if (!m.square())
        throw InvalidMatrix("trace norm requires a square matrix");
    if (m.hermiticity_defect() <= tol::hermitian) {
        ComplexMatrix a = m;
        detail::jacobi_sweeps(a, nullptr);
        double s = 0.0;
        for (std::size_t i = 0; i < a.rows(); ++i)
            s += std::abs(a(i, i).real());
        return s;
    }
    // general square matrix: singular values via M^dag M
    ComplexMatrix mtm = m.adjoint() * m;
    ComplexMatrix a = std::move(mtm);
    detail::jacobi_sweeps(a, nullptr);
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        s += std::sqrt(std::max(0.0, a(i, i).real()));
    return s;
}

double trace_distance_mat(const ComplexMatrix& a, const ComplexMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw InvalidArgument("trace distance requires equal dimensions");
    ComplexMatrix d = a;
    d -= b;
    return trace_norm(d);
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b)
{
    return trace_distance_mat(a.mat(), b.mat());
}

// ---------------------------------------------------------------------------
// Haar sampling

ComplexMatrix haar_unitary(std::size_t dim, Rng& rng)
{
    if (dim < 1)
        throw InvalidArgument("haar_unitary requires dim >= 1");
    const std::size_t n = dim;
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = cplx(rng.normal(), rng.normal());

    // Householder QR; reflectors kept for assembling Q
    std::vector<CVec> reflectors;
    reflectors.reserve(n);
    CVec w(n);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        CVec v(n - k);
        double xnorm2 = 0.0;
        for (std::size_t i = k; i < n; ++i) {
            v[i - k] = a(i, k);
            xnorm2 += std::norm(a(i, k));
        }
        const double xnorm = std::sqrt(xnorm2);
        if (xnorm == 0.0) {
            reflectors.emplace_back();
            continue;
        }
        const cplx x0 = v[0];
        const cplx phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : cplx(1.0);
        v[0] += phase * xnorm;
        const double vnorm = std::sqrt(kern::ops().sumsq(v.size(), v.data()));
        for (cplx& c : v)
            c /= vnorm;
        // A[k:, k:] -= 2 v (v^dag A[k:, k:])
        std::fill(w.begin(), w.begin() + (n - k), cplx(0.0));
        for (std::size_t i = k; i < n; ++i)
            kern::ops().axpy(n - k, std::conj(v[i - k]), a.row(i) + k, w.data());
        for (std::size_t i = k; i < n; ++i)
            kern::ops().axpy(n - k, -2.0 * v[i - k], w.data(), a.row(i) + k);
        reflectors.push_back(std::move(v));
    }

    ComplexMatrix q = ComplexMatrix::identity(n);
    for (std::size_t k = reflectors.size(); k-- > 0;) {
        const CVec& v = reflectors[k];
        if (v.empty())
            continue;
        std::fill(w.begin(), w.end(), cplx(0.0));
        for (std::size_t i = k; i < n; ++i)
            kern::ops().axpy(n, std::conj(v[i - k]), q.row(i), w.data());
        for (std::size_t i = k; i < n; ++i)
            kern::ops().axpy(n, -2.0 * v[i - k], w.data(), q.row(i));
    }

    // divide out the diagonal phases of R
    for (std::size_t j = 0; j < n; ++j) {
        const cplx rjj = a(j, j);
        const double r = std::abs(rjj);
        const cplx phase = r > 0.0 ? rjj / r : cplx(1.0);
        for (std::size_t i = 0; i < n; ++i)
            q(i, j) *= phase;
    }
    return q;
}

ComplexMatrix clamp_psd(const ComplexMatrix& m)
{
    EigResult eig = hermitian_eig(m);
    bool clean = true;
    for (double& lam : eig.eigenvalues) {
        if (lam < tol::min_eigenvalue) {
            std::ostringstream os;
            os << "state eigenvalue " << lam << " below the -1e-9 clamp window";
            throw NonPhysicalState(os.str());
        }
        if (lam < 0.0) {
            lam = 0.0;
            clean = false;
        }
    }
    if (clean)
        return m;
    const std::size_t n = m.rows();
    double tr = 0.0;
    for (double lam : eig.eigenvalues)
        tr += lam;
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lam = eig.eigenvalues[k] / tr;
        if (lam == 0.0)
            continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) += lam * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
    }
    return out;
}

} // namespace catkit
