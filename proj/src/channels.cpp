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

#include "catkit/channels.hpp"

#include <cmath>
#include <sstream>

#include "catkit/errors.hpp"
#include "catkit/kernels.hpp"

namespace catkit {

QuantumChannel QuantumChannel::from_kraus(std::vector<ComplexMatrix> kraus)
{
    if (kraus.empty())
        throw InvalidArgument("channel needs at least one Kraus operator");
    const std::size_t dout = kraus.front().rows();
    const std::size_t din = kraus.front().cols();
    for (const ComplexMatrix& k : kraus) {
        if (k.rows() != dout || k.cols() != din)
            throw InvalidArgument("Kraus operators must share one shape");
        if (!k.all_finite())
            throw InvalidMatrix("Kraus operator has non-finite entries");
    }
    ComplexMatrix acc(din, din);
    for (const ComplexMatrix& k : kraus)
        acc += k.adjoint() * k;
    acc -= ComplexMatrix::identity(din);
    const double defect = acc.max_abs();
    if (defect > 1e-10) {
        std::ostringstream os;
        os << "Kraus operators violate sum K^dag K = I by " << defect;
        throw InvalidArgument(os.str());
    }
    return {std::move(kraus), din, dout};
}

double QuantumChannel::cptp_defect() const
{
    ComplexMatrix acc(dim_in_, dim_in_);
    for (const ComplexMatrix& k : kraus_)
        acc += k.adjoint() * k;
    acc -= ComplexMatrix::identity(dim_in_);
    return acc.max_abs();
}

PauliWeights PauliWeights::make(double p0, double p1, double p2, double p3)
{
    const double vals[4] = {p0, p1, p2, p3};
    double sum = 0.0;
    for (double v : vals) {
        if (v < 0.0)
            throw InvalidDistribution("Pauli weights must be nonnegative");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw InvalidDistribution("Pauli weights must sum to 1 within 1e-12");
    return {p0, p1, p2, p3};
}

double PauliWeights::max() const
{
    return std::max(std::max(p0, p1), std::max(p2, p3));
}

namespace channels {

ComplexMatrix pauli_x()
{
    ComplexMatrix m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

ComplexMatrix pauli_y()
{
    ComplexMatrix m(2, 2);
    m(0, 1) = cplx(0.0, -1.0);
    m(1, 0) = cplx(0.0, 1.0);
    return m;
}

ComplexMatrix pauli_z()
{
    ComplexMatrix m(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

DensityMatrix apply(const QuantumChannel& ch, const DensityMatrix& rho)
{
    if (rho.dim() != ch.dim_in())
        throw InvalidArgument("channel input dimension does not match the state");
    ComplexMatrix acc(ch.dim_out(), ch.dim_out());
    for (const ComplexMatrix& k : ch.kraus())
        acc += k * rho.mat() * k.adjoint();
    return DensityMatrix::unchecked(clamp_psd(acc), {ch.dim_out()});
}

DensityMatrix apply_to_half(const QuantumChannel& ch, const DensityMatrix& rho)
{
    if (rho.subsystems() != 2)
        throw InvalidArgument("apply_to_half expects a bipartite state");
    const std::size_t da = rho.dims()[0];
    const std::size_t db = rho.dims()[1];
    if (db != ch.dim_in())
        throw InvalidArgument("second-subsystem dimension does not match the channel input");
    const std::size_t dout = ch.dim_out();

    ComplexMatrix out(da * dout, da * dout);
    ComplexMatrix block(db, db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            for (std::size_t r = 0; r < db; ++r)
                for (std::size_t s = 0; s < db; ++s)
                    block(r, s) = rho.mat()(i * db + r, j * db + s);
            for (const ComplexMatrix& k : ch.kraus()) {
                const ComplexMatrix kbk = k * block * k.adjoint();
                for (std::size_t r = 0; r < dout; ++r)
                    for (std::size_t s = 0; s < dout; ++s)
                        out(i * dout + r, j * dout + s) += kbk(r, s);
            }
        }
    return DensityMatrix::unchecked(clamp_psd(out), {da, dout});
}

DensityMatrix choi_state(const QuantumChannel& ch)
{
    if (!ch.square())
        throw InvalidArgument("Choi state is defined here for square channels only");
    return apply_to_half(ch, DensityMatrix::max_entangled(ch.dim_in()));
}

std::vector<double> kraus_outcome_dist(const QuantumChannel& ch)
{
    if (!ch.square())
        throw InvalidArgument("Kraus outcome distribution needs a square channel");
    const double d = static_cast<double>(ch.dim_in());
    std::vector<double> p;
    p.reserve(ch.kraus().size());
    for (const ComplexMatrix& k : ch.kraus())
        p.push_back(kern::ops().sumsq(k.size(), k.data()) / d);
    return p;
}

QuantumChannel pauli_channel(const PauliWeights& w)
{
    const ComplexMatrix sig[4] = {ComplexMatrix::identity(2), pauli_x(), pauli_y(), pauli_z()};
    const double p[4] = {w.p0, w.p1, w.p2, w.p3};
    std::vector<ComplexMatrix> kraus;
    for (int i = 0; i < 4; ++i) {
        if (p[i] == 0.0)
            continue;
        ComplexMatrix k = sig[i];
        k *= std::sqrt(p[i]);
        kraus.push_back(std::move(k));
    }
    return QuantumChannel::from_kraus(std::move(kraus));
}

QuantumChannel unitary_mixture(const ComplexMatrix& u, double p)
{
    if (!u.square())
        throw InvalidArgument("unitary_mixture needs a square unitary");
    ComplexMatrix defect = u.adjoint() * u;
    defect -= ComplexMatrix::identity(u.rows());
    if (defect.max_abs() > 1e-10)
        throw InvalidArgument("unitary_mixture operator is not unitary within 1e-10");
    if (p < 0.0 || p > 0.5)
        throw InvalidArgument("unitary_mixture requires p in [0, 1/2]");

    std::vector<ComplexMatrix> kraus;
    if (p < 1.0) {
        ComplexMatrix k0 = ComplexMatrix::identity(u.rows());
        k0 *= std::sqrt(1.0 - p);
        kraus.push_back(std::move(k0));
    }
    if (p > 0.0) {
        ComplexMatrix k1 = u;
        k1 *= std::sqrt(p);
        kraus.push_back(std::move(k1));
    }
    return QuantumChannel::from_kraus(std::move(kraus));
}

QuantumChannel gad_channel(std::size_t d, double p)
{
    if (d < 2)
        throw InvalidArgument("gad_channel requires d >= 2");
    if (p < 0.0 || p > 1.0)
        throw InvalidArgument("gad_channel requires p in [0, 1]");
    std::vector<ComplexMatrix> kraus;
    ComplexMatrix k0(d, d);
    k0(0, 0) = 1.0;
    for (std::size_t i = 1; i < d; ++i)
        k0(i, i) = std::sqrt(1.0 - p);
    kraus.push_back(std::move(k0));
    if (p > 0.0) {
        for (std::size_t m = 1; m < d; ++m) {
            ComplexMatrix km(d, d);
            km(0, m) = std::sqrt(p);
            kraus.push_back(std::move(km));
        }
    }
    return QuantumChannel::from_kraus(std::move(kraus));
}

QuantumChannel depolarizing_length(double alpha, double l)
{
    if (alpha < 0.0 || l < 0.0)
        throw InvalidArgument("depolarizing_length requires alpha, l >= 0");
    const double q = -std::expm1(-alpha * l); // 1 - e^{-alpha l}
    return pauli_channel(PauliWeights::make(1.0 - 0.75 * q, 0.25 * q, 0.25 * q, 0.25 * q));
}

QuantumChannel compose(const QuantumChannel& second, const QuantumChannel& first)
{
    if (second.dim_in() != first.dim_out())
        throw InvalidArgument("channel composition dimension mismatch");
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(second.kraus().size() * first.kraus().size());
    for (const ComplexMatrix& k2 : second.kraus())
        for (const ComplexMatrix& k1 : first.kraus())
            kraus.push_back(k2 * k1);
    return QuantumChannel::from_kraus(std::move(kraus));
}

QuantumChannel tensor_product(const QuantumChannel& a, const QuantumChannel& b)
{
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(a.kraus().size() * b.kraus().size());
    for (const ComplexMatrix& ka : a.kraus())
        for (const ComplexMatrix& kb : b.kraus())
            kraus.push_back(kron(ka, kb));
    return QuantumChannel::from_kraus(std::move(kraus));
}

QuantumChannel tensor_power(const QuantumChannel& ch, std::size_t n)
{
    if (n < 1)
        throw InvalidArgument("tensor_power requires n >= 1");
    QuantumChannel acc = ch;
    for (std::size_t i = 1; i < n; ++i)
        acc = tensor_product(acc, ch);
    return acc;
}

QuantumChannel canonical_form(const QuantumChannel& ch)
{
    const std::size_t din = ch.dim_in();
    const std::size_t dout = ch.dim_out();
    const DensityMatrix choi =
        apply_to_half(ch, DensityMatrix::max_entangled(din));
    EigResult eig = hermitian_eig(choi.mat());

    std::vector<ComplexMatrix> kraus;
    const double scale = static_cast<double>(din);
    for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
        const double lam = eig.eigenvalues[k];
        if (lam <= 1e-12)
            continue;
        ComplexMatrix op(dout, din);
        const double w = std::sqrt(lam * scale);
        for (std::size_t i = 0; i < din; ++i)
            for (std::size_t o = 0; o < dout; ++o)
                op(o, i) = w * eig.vectors(i * dout + o, k);
        kraus.push_back(std::move(op));
    }
    return QuantumChannel::from_kraus(std::move(kraus));
}

} // namespace channels

} // namespace catkit
