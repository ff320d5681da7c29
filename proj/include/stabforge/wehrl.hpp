// Copyright 2026 The Stabforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <vector>

#include "stabforge/concave.hpp"
#include "stabforge/stabilizer.hpp"
#include "stabforge/weyl.hpp"

namespace stabforge {

// Husimi function u(z) = <phi_z| rho |phi_z> with coherent states
// phi_z = W(z) phi. Real table over the phase space, 0 <= u <= 1 and
// (1/N) sum_z u(z) = 1.
class HusimiField {
  public:
    HusimiField(Group group, Eigen::MatrixXd values);

    const Group& group() const { return group_; }
    const Eigen::MatrixXd& values() const { return values_; }
    double at(const PhasePoint& z) const {
        return values_(group_.index_of(z.x), group_.index_of(z.xi));
    }

  private:
    Group group_;
    Eigen::MatrixXd values_;
};

// Requires |phi| = 1 (tolerance 1e-9); enforces the Husimi range and
// average invariants on the result.
HusimiField husimi(const WaveFunction& phi, const DensityOperator& rho);

// E_G(phi, rho) = (1/N) sum_z G(u(z)); u is clamped into [0,1] before G.
double entropy(const ConcaveFn& fn, const HusimiField& u);

struct MinWitness {
    SStateDescriptor window;  // recognized S-state structure of phi
    double theta;
    PhasePoint z;             // rho = |e^{i theta} W(z) phi><...|
};

struct MinReport {
    double entropy = 0;
    double bound = 0;  // G(1)
    bool equality = false;
    std::optional<MinWitness> witness;
};

// E_G >= G(1), with the full equality diagnosis when G is not linear:
// at equality, phi is an S-state, rho is pure on a phase-space shift of
// phi, and the witness records the (theta, z) found by match_shift.
// Violation of the bound raises theory_violation.
MinReport verify_min_bound(const ConcaveFn& fn, const WaveFunction& phi,
                           const DensityOperator& rho, double tol = 1e-9);

struct BerezinReport {
    double entropy = 0;
    double tr_g = 0;  // Tr G(rho) = sum_j G(p_j)
    double gap = 0;
    bool equality = false;
    // Present when G is strictly concave, the eigenvalues are pairwise
    // distinct and equality holds: shifts z_j with psi_j = e^{i theta_j}
    // W(z_j) phi, one per eigenvector, lying in distinct cosets of K.
    std::optional<std::vector<PhasePoint>> shifts;
};

BerezinReport berezin_lieb(const ConcaveFn& fn, const WaveFunction& phi,
                           const DensityOperator& rho, double tol = 1e-9);

struct MaxReport {
    double entropy = 0;
    double bound = 0;  // N G(1/N)
    bool equality = false;
    std::vector<std::int64_t> support_overlap;  // supp(phi~) /\ supp(rho~)
};

// E_G <= N G(1/N); for strictly concave G and pure rho, equality holds
// exactly when the thresholded characteristic supports meet only at 0
// (checked both ways, mismatch raises theory_violation).
MaxReport verify_max_bound(const ConcaveFn& fn, const WaveFunction& phi,
                           const DensityOperator& rho, double tol = 1e-9);

struct FourierHusimiReport {
    Eigen::MatrixXcd fourier;  // F u, indexed (xi', x')
    Eigen::MatrixXcd product;  // phi~(x,xi) conj(rho~(x,xi)), indexed (x, xi)
    double residual = 0;       // max |F u(xi,-x) - product(x,xi)|
};

// F u_{phi,rho}(xi, -x) = phi~(x,xi) conj(rho~(x,xi)); residual beyond
// 1e-8 raises theory_violation.
FourierHusimiReport fourier_husimi(const WaveFunction& phi, const DensityOperator& rho);

}  // namespace stabforge
