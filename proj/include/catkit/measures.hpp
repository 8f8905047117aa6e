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

#include "catkit/channels.hpp"
#include "catkit/linalg.hpp"

namespace catkit {

enum class Measure {
    Entropy,
    LogNegativity,
    EoF,
    CoherentInfo,
    MutualInfo,
    SquashedUB,
};

// Value in bits (log base 2 throughout). Nonnegativity is enforced at
// construction for the measures that cannot be negative.
struct MeasureValue {
    double value;
    Measure measure;

    static MeasureValue make(double value, Measure measure);
    operator double() const { return value; }
};

namespace measures {

// -sum p_i log2 p_i; entries below 1e-12 contribute nothing.
MeasureValue shannon_entropy(const std::vector<double>& p);

// h(x) = -x log2 x - (1-x) log2(1-x) on [0, 1]
double binary_entropy(double x);

MeasureValue von_neumann_entropy(const DensityMatrix& rho);

// E_N = log2 ||rho^{T_A}||_1 with side A given as a subsystem index set.
MeasureValue log_negativity(const DensityMatrix& rho, const std::vector<std::size_t>& side_a);
MeasureValue log_negativity(const DensityMatrix& rho, std::size_t cut = 0);

// Fannes-type continuity of E_N: |E_N(rho) - E_N(sigma)| <= sqrt(d) eps / ln 2
// whenever ||rho - sigma||_1 <= eps on total dimension d.
double negativity_continuity_bound(std::size_t d, double eps);

// Wootters concurrence construction; exact for two qubits.
MeasureValue eof_two_qubit(const DensityMatrix& rho);

// E_f of a Bell-diagonal state with largest weight pmax:
// h(1/2 + sqrt(pmax(1-pmax))) for pmax > 1/2, else 0.
MeasureValue eof_bell_diagonal(double pmax);

// I(rho, ch) = S(ch[rho]) - S(id (x) ch [purification of rho])
MeasureValue coherent_information(const DensityMatrix& rho, const QuantumChannel& ch);

MeasureValue mutual_information(const DensityMatrix& rho,
                                const std::vector<std::size_t>& cut_a,
                                const std::vector<std::size_t>& cut_b);

// I(A;B|E) = S(AE) + S(BE) - S(ABE) - S(E); E may be empty.
double conditional_mutual_information(const DensityMatrix& rho,
                                      const std::vector<std::size_t>& part_a,
                                      const std::vector<std::size_t>& part_b,
                                      const std::vector<std::size_t>& part_e);

// Monte-Carlo upper bound on the squashed entanglement of a rank<=2
// two-qubit state: min over `samples` Haar-random two-qubit unitaries
// U^{E1E2} of I(A;B|E1)/2 on the purification extension, with E2 traced
// out. Deterministic for fixed (rho, samples, seed) regardless of the
// worker count.
MeasureValue squashed_ub_mc(const DensityMatrix& rho, std::uint64_t samples,
                            std::uint64_t seed, unsigned threads = 1);

} // namespace measures

} // namespace catkit
