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

#include "catkit/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>

#include "catkit/errors.hpp"
#include "catkit/kernels.hpp"

namespace catkit {

MeasureValue MeasureValue::make(double value, Measure measure)
{
    const bool nonneg = measure == Measure::Entropy || measure == Measure::EoF ||
                        measure == Measure::SquashedUB || measure == Measure::LogNegativity;
    if (nonneg && value < -1e-12) {
        std::ostringstream os;
        os << "measure value " << value << " below the -1e-12 floor";
        throw NumericError(os.str());
    }
    return {value, measure};
}

namespace measures {

MeasureValue shannon_entropy(const std::vector<double>& p)
{
    double sum = 0.0;
    for (double v : p) {
        if (v < 0.0)
            throw InvalidDistribution("probability entries must be nonnegative");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        std::ostringstream os;
        os << "probabilities sum to " << sum << ", not 1 within 1e-9";
        throw InvalidDistribution(os.str());
    }
    double h = 0.0;
    for (double v : p)
        if (v > 1e-12)
            h -= v * std::log2(v);
    return MeasureValue::make(h, Measure::Entropy);
}

double binary_entropy(double x)
{
    if (!(x >= 0.0 && x <= 1.0))
        throw InvalidArgument("binary_entropy argument must lie in [0, 1]");
    double h = 0.0;
    if (x > 1e-12)
        h -= x * std::log2(x);
    if (1.0 - x > 1e-12)
        h -= (1.0 - x) * std::log2(1.0 - x);
    return h;
}

MeasureValue von_neumann_entropy(const DensityMatrix& rho)
{
    return MeasureValue::make(detail::entropy_of_hermitian(rho.mat()), Measure::Entropy);
}

MeasureValue log_negativity(const DensityMatrix& rho, const std::vector<std::size_t>& side_a)
{
    ComplexMatrix pt = rho.mat();
    for (std::size_t s : side_a)
        pt = partial_transpose_mat(pt, rho.dims(), s);
    return MeasureValue::make(std::log2(trace_norm(pt)), Measure::LogNegativity);
}

MeasureValue log_negativity(const DensityMatrix& rho, std::size_t cut)
{
    return log_negativity(rho, std::vector<std::size_t>{cut});
}

double negativity_continuity_bound(std::size_t d, double eps)
{
    if (d < 2)
        throw InvalidArgument("continuity bound needs total dimension >= 2");
    if (eps < 0.0)
        throw InvalidArgument("continuity bound needs eps >= 0");
    return std::sqrt(static_cast<double>(d)) * eps / std::numbers::ln2;
}

MeasureValue eof_two_qubit(const DensityMatrix& rho)
{
    if (rho.dim() != 4)
        throw InvalidArgument("eof_two_qubit expects a two-qubit (4x4) state");

    const ComplexMatrix yy = kron(channels::pauli_y(), channels::pauli_y());
    const ComplexMatrix rho_tilde = yy * rho.mat().conj() * yy;

    // sqrt(rho) from the eigendecomposition, then the Hermitian similarity
    // sqrt(rho) rho_tilde sqrt(rho) whose eigenvalues are the lambda_i^2
    EigResult eig = hermitian_eig(rho.mat());
    ComplexMatrix sqrt_rho(4, 4);
    for (std::size_t k = 0; k < 4; ++k) {
        const double lam = std::sqrt(std::max(0.0, eig.eigenvalues[k]));
        if (lam == 0.0)
            continue;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                sqrt_rho(i, j) += lam * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
    }
    ComplexMatrix m = sqrt_rho * rho_tilde * sqrt_rho;
    std::vector<double> ev = hermitian_eigenvalues(m);
    double lams[4];
    for (int i = 0; i < 4; ++i)
        lams[i] = std::sqrt(std::max(0.0, ev[i]));
    const double c = std::max(0.0, lams[0] - lams[1] - lams[2] - lams[3]);
    const double ef = binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
    return MeasureValue::make(ef, Measure::EoF);
}

MeasureValue eof_bell_diagonal(double pmax)
{
    if (pmax < 0.0 || pmax > 1.0)
        throw InvalidArgument("eof_bell_diagonal expects pmax in [0, 1]");
    if (pmax <= 0.5)
        return MeasureValue::make(0.0, Measure::EoF);
    const double ef = binary_entropy(0.5 + std::sqrt(pmax * (1.0 - pmax)));
    return MeasureValue::make(ef, Measure::EoF);
}

MeasureValue coherent_information(const DensityMatrix& rho, const QuantumChannel& ch)
{
    if (rho.dim() != ch.dim_in())
        throw InvalidArgument("coherent_information: channel input dim does not match the state");

    const MeasureValue s_out = von_neumann_entropy(channels::apply(ch, rho));

    // purification on reference (x) system from the eigendecomposition
    EigResult eig = hermitian_eig(rho.mat());
    const std::size_t d = rho.dim();
    CVec psi(d * d, 0.0);
    for (std::size_t k = 0; k < d; ++k) {
        const double lam = std::max(0.0, eig.eigenvalues[k]);
        if (lam <= 1e-15)
            continue;
        const double a = std::sqrt(lam);
        for (std::size_t i = 0; i < d; ++i)
            psi[k * d + i] += a * eig.vectors(i, k);
    }
    const DensityMatrix purified = DensityMatrix::pure(psi, {d, d});
    const DensityMatrix joint = channels::apply_to_half(ch, purified);
    const double s_joint = detail::entropy_of_hermitian(joint.mat());
    return MeasureValue::make(static_cast<double>(s_out) - s_joint, Measure::CoherentInfo);
}

namespace {

void check_partition(const DensityMatrix& rho, std::vector<std::size_t> all,
                     const char* what)
{
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw InvalidArgument(std::string(what) + ": partitions overlap");
    if (all.size() != rho.subsystems())
        throw InvalidArgument(std::string(what) + ": partitions must cover all subsystems");
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] != i)
            throw InvalidArgument(std::string(what) + ": partition indices out of range");
}

double marginal_entropy(const DensityMatrix& rho, std::vector<std::size_t> keep)
{
    std::sort(keep.begin(), keep.end());
    if (keep.size() == rho.subsystems())
        return detail::entropy_of_hermitian(rho.mat());
    return detail::entropy_of_hermitian(
        partial_trace_mat(rho.mat(), rho.dims(), keep));
}

} // namespace

MeasureValue mutual_information(const DensityMatrix& rho,
                                const std::vector<std::size_t>& cut_a,
                                const std::vector<std::size_t>& cut_b)
{
    std::vector<std::size_t> all = cut_a;
    all.insert(all.end(), cut_b.begin(), cut_b.end());
    check_partition(rho, all, "mutual_information");

    const double sa = marginal_entropy(rho, cut_a);
    const double sb = marginal_entropy(rho, cut_b);
    const double sab = detail::entropy_of_hermitian(rho.mat());
    const double mi = sa + sb - sab;
    if (mi < -1e-9)
        throw NumericError("mutual information below -1e-9; input state is not physical");
    return MeasureValue::make(mi, Measure::MutualInfo);
}

double conditional_mutual_information(const DensityMatrix& rho,
                                      const std::vector<std::size_t>& part_a,
                                      const std::vector<std::size_t>& part_b,
                                      const std::vector<std::size_t>& part_e)
{
    std::vector<std::size_t> all = part_a;
    all.insert(all.end(), part_b.begin(), part_b.end());
    all.insert(all.end(), part_e.begin(), part_e.end());
    check_partition(rho, all, "conditional_mutual_information");
    if (part_e.empty())
        return mutual_information(rho, part_a, part_b);

    auto join = [](std::vector<std::size_t> x, const std::vector<std::size_t>& y) {
        x.insert(x.end(), y.begin(), y.end());
        return x;
    };
    const double s_ae = marginal_entropy(rho, join(part_a, part_e));
    const double s_be = marginal_entropy(rho, join(part_b, part_e));
    const double s_abe = detail::entropy_of_hermitian(rho.mat());
    const double s_e = marginal_entropy(rho, part_e);
    return s_ae + s_be - s_abe - s_e;
}

// ---------------------------------------------------------------------------
// Monte-Carlo squashed-entanglement upper bound

namespace {

// One evaluation of I(A;B|E1)/2 for the extension produced by a single
// Haar-random U^{E1E2}. `c0` is the 4x4 purification coefficient matrix
// (AB rows, E1E2 columns). All buffers live in the caller's scratch.
struct McScratch {
    ComplexMatrix u{4, 4};
    ComplexMatrix c{4, 4};
    ComplexMatrix rho_abe{8, 8};
    ComplexMatrix rho_ae{4, 4};
    ComplexMatrix rho_be{4, 4};
    ComplexMatrix rho_e{2, 2};
};

double mc_sample(const ComplexMatrix& c0, Rng& rng, McScratch& ws)
{
    ws.u = haar_unitary(4, rng);
    // c = c0 * u^T  (apply id (x) U to the purification)
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            cplx acc = 0.0;
            for (std::size_t k = 0; k < 4; ++k)
                acc += c0(i, k) * ws.u(j, k);
            ws.c(i, j) = acc;
        }

    // indices: row of c = (a b), column = (e1 e2), all bits
    auto cref = [&](int a, int b, int e1, int e2) -> cplx {
        return ws.c(2 * a + b, 2 * e1 + e2);
    };
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int e1 = 0; e1 < 2; ++e1)
                for (int a2 = 0; a2 < 2; ++a2)
                    for (int b2 = 0; b2 < 2; ++b2)
                        for (int f1 = 0; f1 < 2; ++f1) {
                            cplx acc = 0.0;
                            for (int e2 = 0; e2 < 2; ++e2)
                                acc += cref(a, b, e1, e2) * std::conj(cref(a2, b2, f1, e2));
                            ws.rho_abe(4 * a + 2 * b + e1, 4 * a2 + 2 * b2 + f1) = acc;
                        }

    const std::vector<std::size_t> dims3 = {2, 2, 2};
    ws.rho_ae = partial_trace_mat(ws.rho_abe, dims3, {0, 2});
    ws.rho_be = partial_trace_mat(ws.rho_abe, dims3, {1, 2});
    ws.rho_e = partial_trace_mat(ws.rho_abe, dims3, {2});

    const double cmi = detail::entropy_of_hermitian(ws.rho_ae) +
                       detail::entropy_of_hermitian(ws.rho_be) -
                       detail::entropy_of_hermitian(ws.rho_abe) -
                       detail::entropy_of_hermitian(ws.rho_e);
    return 0.5 * cmi;
}

} // namespace

MeasureValue squashed_ub_mc(const DensityMatrix& rho, std::uint64_t samples,
                            std::uint64_t seed, unsigned threads)
{
    if (rho.dim() != 4)
        throw InvalidArgument("squashed_ub_mc expects a two-qubit state");
    if (samples < 1)
        throw InvalidArgument("squashed_ub_mc needs samples >= 1");

    EigResult eig = hermitian_eig(rho.mat());
    for (std::size_t k = 2; k < 4; ++k)
        if (eig.eigenvalues[k] > 1e-9)
            throw UnsupportedRank(
                "squashed_ub_mc handles rank <= 2 states (two environment qubits)");

    // purification |psi> = sum_k sqrt(lam_k) |v_k>^{AB} |0 k>^{E1E2}
    const double l0 = std::max(0.0, eig.eigenvalues[0]);
    const double l1 = std::max(0.0, eig.eigenvalues[1]);
    const double norm = l0 + l1;
    ComplexMatrix c0(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        c0(i, 0) = std::sqrt(l0 / norm) * eig.vectors(i, 0);
        c0(i, 1) = std::sqrt(l1 / norm) * eig.vectors(i, 1);
    }

    const unsigned nw = std::max(1u, threads);
    std::vector<double> mins(nw, std::numeric_limits<double>::infinity());
    auto worker = [&](unsigned w) {
        McScratch ws;
        double best = std::numeric_limits<double>::infinity();
        for (std::uint64_t i = w; i < samples; i += nw) {
            Rng rng = Rng::substream(seed, i);
            best = std::min(best, mc_sample(c0, rng, ws));
        }
        mins[w] = best;
    };
    if (nw == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nw);
        for (unsigned w = 0; w < nw; ++w)
            pool.emplace_back(worker, w);
        for (std::thread& t : pool)
            t.join();
    }
    const double best = *std::min_element(mins.begin(), mins.end());
    return MeasureValue::make(std::max(0.0, best), Measure::SquashedUB);
}

} // namespace measures

} // namespace catkit
