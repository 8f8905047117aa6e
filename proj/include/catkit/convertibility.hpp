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
#include <unordered_map>
#include <utility>
#include <vector>

#include "catkit/linalg.hpp"

namespace catkit::convert {

// q majorizes p: every k-prefix sum of q dominates the one of p (1e-12 slack;
// the shorter vector is padded with zeros).
bool majorizes(const SchmidtVector& q, const SchmidtVector& p);

// Proper prefixes k = 1..d-1 all strictly dominated.
bool strictly_majorizes(const SchmidtVector& q, const SchmidtVector& p);

// Pure-state LOCC convertibility psi -> phi (Nielsen): phi^A majorizes psi^A.
bool nielsen_convertible(const SchmidtVector& psi, const SchmidtVector& phi);

// Approximate catalytic convertibility: S(psi^A) >= S(phi^A) - 1e-12.
bool catalytic_convertible(const SchmidtVector& psi, const SchmidtVector& phi);

// The two-qutrit pair with S(psi) > S(phi) but E_N(psi) < E_N(phi)
// (amplitudes sin(a)cos(b), cos(a)cos(b), sin(b) at (1.3, 0.75) and (0.7, 1)).
std::pair<SchmidtVector, SchmidtVector> ordering_example();

// Finite cover of the ordered Schmidt simplex. Points are stored flat; the
// lattice key of a point maps to its index so that target selection is O(d).
class EpsNet {
public:
    double eps() const { return eps_; }
    std::size_t local_dim() const { return d_; }
    std::size_t size() const { return count_; }
    double pairwise_gap() const { return gap_; }   // L, bits
    double delta() const { return delta_; }        // initial-net budget, metadata
    double lattice_step() const { return h_; }
    double tail_deflation() const { return u_; }

    SchmidtVector point(std::size_t i) const;
    const std::vector<double>& flat() const { return flat_; }

    // Index of the lattice cell covering `phi`, or SIZE_MAX when phi's floor
    // cell is not an admissible net point (does not happen for sorted
    // normalized inputs).
    std::size_t cell_index(const SchmidtVector& phi) const;

private:
    friend EpsNet build_eps_net(std::size_t d, double eps);
    std::size_t d_ = 0;
    double eps_ = 0.0;
    double h_ = 0.0;
    double u_ = 0.0;
    double gap_ = 0.0;
    double delta_ = 0.0;
    std::size_t count_ = 0;
    std::vector<double> flat_;                    // count_ * d_ probabilities
    std::vector<double> extra_deflation_;         // per-point entropy degeneracy fix
    std::unordered_map<std::uint64_t, std::size_t> index_;
    std::vector<std::uint64_t> keys_;
};

// Covering net for local dimension d in {2,3,4} and eps in (0,1): every
// Schmidt vector has a net point within pure-state trace distance eps/10 that
// majorizes it (strictly, under full rank); positive point entropies are
// pairwise separated by the reported gap L.
EpsNet build_eps_net(std::size_t d, double eps);

struct TargetSelection {
    SchmidtVector point;
    std::size_t index;
    double distance; // pure-state trace distance to the target
    bool strict;     // strictly majorizes the target
    bool is_corner;
};

// Net point for a conversion target: within eps/10 in trace distance and
// majorizing phi (strictly whenever phi has full rank). Majorization makes
// the point's entropy at most S(phi) (Schur concavity), which is the
// tie-down the universal-catalyst argument needs. Verified before returning.
TargetSelection select_target(const SchmidtVector& phi, const EpsNet& net);

// Index pairs (r, s) with S(psi_r) >= S(phi_s): the composition rule of the
// universal catalyst over (initial net, target net).
std::vector<std::pair<std::size_t, std::size_t>>
universal_catalyst_pairs(const EpsNet& initial, const EpsNet& target,
                         std::size_t max_pairs = 50'000'000);

} // namespace catkit::convert
