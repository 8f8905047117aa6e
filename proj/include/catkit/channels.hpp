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

#include <vector>

#include "catkit/linalg.hpp"

namespace catkit {

// Completely positive trace-preserving map given by a finite Kraus list.
// The list is not required to be minimal; canonical_form() derives a minimal
// representation from the Choi eigendecomposition when the tightest
// Kraus-count bounds are wanted.
class QuantumChannel {
public:
    // Validates sum K_i^dag K_i = I within 1e-10.
    static QuantumChannel from_kraus(std::vector<ComplexMatrix> kraus);

    const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
    std::size_t dim_in() const { return dim_in_; }
    std::size_t dim_out() const { return dim_out_; }
    bool square() const { return dim_in_ == dim_out_; }

    double cptp_defect() const; // max-abs of (sum K^dag K - I)

private:
    QuantumChannel(std::vector<ComplexMatrix> k, std::size_t din, std::size_t dout)
        : kraus_(std::move(k)), dim_in_(din), dim_out_(dout) {}
    std::vector<ComplexMatrix> kraus_;
    std::size_t dim_in_;
    std::size_t dim_out_;
};

// Probability weights (p0, p1, p2, p3) of the Pauli channel
// rho -> sum_i p_i sigma_i rho sigma_i, ordered (I, X, Y, Z).
struct PauliWeights {
    double p0, p1, p2, p3;

    static PauliWeights make(double p0, double p1, double p2, double p3);
    double max() const;
    std::vector<double> as_vector() const { return {p0, p1, p2, p3}; }
};

namespace channels {

DensityMatrix apply(const QuantumChannel& ch, const DensityMatrix& rho);

// id (x) ch acting on the second subsystem of a bipartite state.
DensityMatrix apply_to_half(const QuantumChannel& ch, const DensityMatrix& rho);

// id (x) ch on |phi_d^+><phi_d^+|; marginal on the untouched side is I/d.
DensityMatrix choi_state(const QuantumChannel& ch);

// p_i = Tr[K_i^dag K_i]/d, the Kraus outcome distribution on the maximally
// entangled input.
std::vector<double> kraus_outcome_dist(const QuantumChannel& ch);

QuantumChannel pauli_channel(const PauliWeights& w);

// rho -> (1-p) rho + p U rho U^dag, p in [0, 1/2]
QuantumChannel unitary_mixture(const ComplexMatrix& u, double p);

// Generalized amplitude damping on C^d:
//   K_0 = |0><0| + sqrt(1-p) sum_{i>=1} |i><i|,  K_m = sqrt(p) |0><m|
QuantumChannel gad_channel(std::size_t d, double p);

// Length-l depolarizing qubit link: rho -> e^{-al} rho + (1-e^{-al}) I/2.
QuantumChannel depolarizing_length(double alpha, double l);

// Serial composition: second \circ first.
QuantumChannel compose(const QuantumChannel& second, const QuantumChannel& first);

// a (x) b acting on the tensor product space.
QuantumChannel tensor_product(const QuantumChannel& a, const QuantumChannel& b);

// n-fold tensor power.
QuantumChannel tensor_power(const QuantumChannel& ch, std::size_t n);

// Minimal Kraus representation from the eigendecomposition of the Choi state.
QuantumChannel canonical_form(const QuantumChannel& ch);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

} // namespace channels

} // namespace catkit
