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

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <utility>

#include "stabforge/phase_space.hpp"
#include "stabforge/quadratic.hpp"

namespace stabforge {

// Wave function on A: a dense complex vector indexed in canonical element
// order. States of the form scale * h0(x - y) additionally carry their
// exact description (support coset, exact phases, positive scale), which
// shift operators propagate so that norms are preserved exactly.
struct ExactForm {
    GroupElement y;               // base point of the support coset y + H
    Subgroup h;                   // support subgroup H
    std::vector<PhaseExp> phases; // value at y + u, aligned with H's element list
    double scale = 1.0;
};

class WaveFunction {
  public:
    WaveFunction(Group group, Eigen::VectorXcd amplitudes);
    WaveFunction(Group group, ExactForm exact);

    const Group& group() const { return group_; }
    const Eigen::VectorXcd& amplitudes() const { return amp_; }
    const std::optional<ExactForm>& exact() const { return exact_; }

    std::complex<double> at(const GroupElement& x) const { return amp_[group_.index_of(x)]; }
    double norm() const { return amp_.norm(); }

  private:
    Group group_;
    Eigen::VectorXcd amp_;
    std::optional<ExactForm> exact_;
};

WaveFunction delta_state(const Group& group, const GroupElement& at);
WaveFunction uniform_state(const Group& group);

std::complex<double> inner(const WaveFunction& phi, const WaveFunction& psi);

// (pi(x,xi) psi)(y) = <y,xi> psi(y - x). Unitary; exact forms propagate.
WaveFunction shift_apply(const PhasePoint& z, const WaveFunction& psi);

// pi(z) pi(w) = phase * pi(z + w) with phase = conj(<x_z, eta_w>).
std::pair<PhaseExp, PhasePoint> shift_compose_phase(const Group& group, const PhasePoint& z,
                                                    const PhasePoint& w);

// Dense table over the phase space, indexed (x, xi).
class CSTField {
  public:
    CSTField(Group group, Eigen::MatrixXcd table);

    const Group& group() const { return group_; }
    const Eigen::MatrixXcd& table() const { return table_; }
    std::complex<double> at(const PhasePoint& z) const {
        return table_(group_.index_of(z.x), group_.index_of(z.xi));
    }

    // Phase indices where |value| exceeds the threshold.
    std::vector<std::int64_t> support(double threshold) const;

  private:
    Group group_;
    Eigen::MatrixXcd table_;
};

// Coherent state transform V_phi psi(z) = <pi(z) phi, psi>. Satisfies the
// Parseval identity (1/N) sum_z |V|^2 = |phi|^2 |psi|^2.
CSTField cst(const WaveFunction& window, const WaveFunction& psi);

// Hermitian, positive semidefinite, unit-trace matrix (tolerance 1e-9).
class DensityOperator {
  public:
    DensityOperator(Group group, Eigen::MatrixXcd matrix, double tol = 1e-9);

    static DensityOperator pure(const WaveFunction& psi);  // normalizes psi
    static DensityOperator maximally_mixed(const Group& group);

    const Group& group() const { return group_; }
    const Eigen::MatrixXcd& matrix() const { return m_; }

    // Eigenvalues (descending, clamped at 0) with matching eigenvector columns.
    std::pair<Eigen::VectorXd, Eigen::MatrixXcd> eigensystem() const;

  private:
    Group group_;
    Eigen::MatrixXcd m_;
};

// Characteristic function rho~(z) = Tr(rho W(z)), computed from the trace
// sum directly (for a pure state it coincides with conj(V_psi psi)).
CSTField characteristic_fn(const DensityOperator& rho);
CSTField characteristic_fn(const WaveFunction& psi);

// Conjugation by the multiplication operator C_h psi = h psi for a
// character h of second degree of the whole group:
//   C_h pi(z) C_h^dagger = conj(h(-x)) pi(Sz),  S = (I 0; beta I).
std::pair<PhaseExp, PhasePoint> clifford_conjugate(const Char2& h, const PhasePoint& z);

// Searches all N^2 shifts for psi = e^{i theta} pi(z) phi; returns the
// first match in canonical order or nullopt.
std::optional<std::pair<double, PhasePoint>> match_shift(const WaveFunction& phi,
                                                         const WaveFunction& psi,
                                                         double tol = 1e-9);

}  // namespace stabforge
