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

#include "stabforge/weyl.hpp"

#include <cmath>

namespace stabforge {

namespace {

// Pairing phase table Omega(y, xi) = <y, xi>, shared by the transforms.
Eigen::MatrixXcd pairing_table(const Group& group) {
    const std::int64_t n = group.order();
    Eigen::MatrixXcd omega(n, n);
    for (std::int64_t y = 0; y < n; ++y) {
        const GroupElement ey = group.element(y);
        for (std::int64_t x = 0; x < n; ++x)
            omega(y, x) = group.pairing(ey, group.dual_element(x)).value();
    }
    return omega;
}

}  // namespace

WaveFunction::WaveFunction(Group group, Eigen::VectorXcd amplitudes)
    : group_(std::move(group)), amp_(std::move(amplitudes)) {
    if (amp_.size() != group_.order())
        throw invalid_input_error("amplitude vector length must equal the group order");
}

WaveFunction::WaveFunction(Group group, ExactForm exact)
    : group_(std::move(group)), amp_(Eigen::VectorXcd::Zero(group_.order())) {
    if (exact.scale <= 0) throw invalid_input_error("exact form scale must be positive");
    const auto& idx = exact.h.element_indices();
    if (exact.phases.size() != idx.size())
        throw invalid_input_error("exact form phase table size mismatch");
    for (std::size_t p = 0; p < idx.size(); ++p) {
        const GroupElement u = group_.element(idx[p]);
        amp_[group_.index_of(group_.add(exact.y, u))] = exact.scale * exact.phases[p].value();
    }
    exact_ = std::move(exact);
}

WaveFunction delta_state(const Group& group, const GroupElement& at) {
    return WaveFunction(group,
                        ExactForm{at, Subgroup::trivial(group),
                                  {PhaseExp::one(group.phase_modulus())}, 1.0});
}

WaveFunction uniform_state(const Group& group) {
    const Subgroup full = Subgroup::full(group);
    std::vector<PhaseExp> ones(static_cast<std::size_t>(group.order()),
                               PhaseExp::one(group.phase_modulus()));
    return WaveFunction(group, ExactForm{group.zero(), full, std::move(ones),
                                         1.0 / std::sqrt(static_cast<double>(group.order()))});
}

std::complex<double> inner(const WaveFunction& phi, const WaveFunction& psi) {
    if (phi.group() != psi.group()) throw invalid_input_error("shape mismatch");
    return phi.amplitudes().dot(psi.amplitudes());  // conjugate-linear in phi
}

WaveFunction shift_apply(const PhasePoint& z, const WaveFunction& psi) {
    const Group& group = psi.group();
    const std::int64_t n = group.order();
    Eigen::VectorXcd out(n);
    for (std::int64_t yi = 0; yi < n; ++yi) {
        const GroupElement y = group.element(yi);
        out[yi] = group.pairing(y, z.xi).value() *
                  psi.amplitudes()[group.index_of(group.sub(y, z.x))];
    }
    if (!psi.exact()) return WaveFunction(group, std::move(out));

    // Exact propagation: support coset translates by x, the phase at
    // w = y0 + x + u picks up <w, xi>.
    const ExactForm& ef = *psi.exact();
    ExactForm shifted{group.add(ef.y, z.x), ef.h, ef.phases, ef.scale};
    const auto& idx = ef.h.element_indices();
    for (std::size_t p = 0; p < idx.size(); ++p) {
        const GroupElement w = group.add(shifted.y, group.element(idx[p]));
        shifted.phases[p] = group.pairing(w, z.xi) * ef.phases[p];
    }
    return WaveFunction(group, std::move(shifted));
}

std::pair<PhaseExp, PhasePoint> shift_compose_phase(const Group& group, const PhasePoint& z,
                                                    const PhasePoint& w) {
    return {group.pairing(z.x, w.xi).conj(), phase_add(group, z, w)};
}

CSTField::CSTField(Group group, Eigen::MatrixXcd table)
    : group_(std::move(group)), table_(std::move(table)) {
    if (table_.rows() != group_.order() || table_.cols() != group_.order())
        throw invalid_input_error("phase-space table must be N x N");
}

std::vector<std::int64_t> CSTField::support(double threshold) const {
    std::vector<std::int64_t> out;
    const std::int64_t n = group_.order();
    for (std::int64_t x = 0; x < n; ++x)
        for (std::int64_t xi = 0; xi < n; ++xi)
            if (std::abs(table_(x, xi)) > threshold) out.push_back(x * n + xi);
    return out;
}

CSTField cst(const WaveFunction& window, const WaveFunction& psi) {
    if (window.group() != psi.group()) throw invalid_input_error("shape mismatch");
    const Group& group = window.group();
    const std::int64_t n = group.order();
    const Eigen::MatrixXcd omega = pairing_table(group);

    // V(x, xi) = sum_y conj(<y,xi>) conj(phi(y-x)) psi(y)
    Eigen::MatrixXcd table(n, n);
    std::vector<std::int64_t> shifted_index(static_cast<std::size_t>(n));
    for (std::int64_t x = 0; x < n; ++x) {
        const GroupElement ex = group.element(x);
        for (std::int64_t y = 0; y < n; ++y)
            shifted_index[static_cast<std::size_t>(y)] =
                group.index_of(group.sub(group.element(y), ex));
        for (std::int64_t xi = 0; xi < n; ++xi) {
            std::complex<double> acc = 0;
            for (std::int64_t y = 0; y < n; ++y)
                acc += std::conj(omega(y, xi) *
                                 window.amplitudes()[shifted_index[static_cast<std::size_t>(y)]]) *
                       psi.amplitudes()[y];
            table(x, xi) = acc;
        }
    }
    return CSTField(group, std::move(table));
}

DensityOperator::DensityOperator(Group group, Eigen::MatrixXcd matrix, double tol)
    : group_(std::move(group)), m_(std::move(matrix)) {
    const std::int64_t n = group_.order();
    if (m_.rows() != n || m_.cols() != n)
        throw invalid_input_error("density matrix must be N x N");
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > tol)
        throw invalid_input_error("density matrix is not Hermitian");
    if (std::abs(m_.trace() - std::complex<double>(1.0)) > tol)
        throw invalid_input_error("density matrix trace must be 1");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es((m_ + m_.adjoint()) / 2.0);
    if (es.eigenvalues().minCoeff() < -tol)
        throw invalid_input_error("density matrix is not positive semidefinite");
}

DensityOperator DensityOperator::pure(const WaveFunction& psi) {
    const double nrm = psi.norm();
    if (nrm == 0) throw invalid_input_error("cannot build a pure state from the zero vector");
    Eigen::VectorXcd v = psi.amplitudes() / nrm;
    return DensityOperator(psi.group(), v * v.adjoint());
}

DensityOperator DensityOperator::maximally_mixed(const Group& group) {
    const std::int64_t n = group.order();
    return DensityOperator(group, Eigen::MatrixXcd::Identity(n, n) / static_cast<double>(n));
}

std::pair<Eigen::VectorXd, Eigen::MatrixXcd> DensityOperator::eigensystem() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es((m_ + m_.adjoint()) / 2.0);
    const std::int64_t n = group_.order();
    Eigen::VectorXd vals(n);
    Eigen::MatrixXcd vecs(n, n);
    for (std::int64_t j = 0; j < n; ++j) {
        vals[j] = std::max(0.0, es.eigenvalues()[n - 1 - j]);  // descending, clamped
        vecs.col(j) = es.eigenvectors().col(n - 1 - j);
    }
    return {std::move(vals), std::move(vecs)};
}

CSTField characteristic_fn(const DensityOperator& rho) {
    const Group& group = rho.group();
    const std::int64_t n = group.order();
    const Eigen::MatrixXcd omega = pairing_table(group);

    // Tr(rho W(x,xi)) = sum_b rho(b - x, b) <b, xi>
    Eigen::MatrixXcd table(n, n);
    for (std::int64_t x = 0; x < n; ++x) {
        const GroupElement ex = group.element(x);
        for (std::int64_t xi = 0; xi < n; ++xi) {
            std::complex<double> acc = 0;
            for (std::int64_t b = 0; b < n; ++b)
                acc += rho.matrix()(group.index_of(group.sub(group.element(b), ex)), b) *
                       omega(b, xi);
            table(x, xi) = acc;
        }
    }
    return CSTField(group, std::move(table));
}

CSTField characteristic_fn(const WaveFunction& psi) {
    return characteristic_fn(DensityOperator::pure(psi));
}

std::pair<PhaseExp, PhasePoint> clifford_conjugate(const Char2& h, const PhasePoint& z) {
    const Subgroup& domain = h.support();
    const Group& group = domain.group();
    if (domain.size() != group.order())
        throw invalid_input_error(
            "Clifford conjugation needs a character of second degree of the whole group");
    const PhaseExp phase = h.at(group.neg(z.x)).conj();
    const DualElement beta_x = extend_character(domain, h.beta().character_of(z.x));
    return {phase, PhasePoint{z.x, group.add(z.xi, beta_x)}};
}

std::optional<std::pair<double, PhasePoint>> match_shift(const WaveFunction& phi,
                                                         const WaveFunction& psi, double tol) {
    if (phi.group() != psi.group()) throw invalid_input_error("shape mismatch");
    const double nphi = phi.norm();
    const double npsi = psi.norm();
    if (nphi == 0 || npsi == 0) throw invalid_input_error("match_shift requires nonzero states");
    const double scale = nphi * npsi;
    if (std::abs(nphi - npsi) > tol * std::max(1.0, scale)) return std::nullopt;

    const Group& group = phi.group();
    const std::int64_t n = group.order();
    for (std::int64_t i = 0; i < n * n; ++i) {
        const PhasePoint z = phase_point(group, i);
        const std::complex<double> c = inner(shift_apply(z, phi), psi);
        if (std::abs(std::abs(c) - scale) <= tol * std::max(1.0, scale))
            return std::make_pair(std::arg(c), z);
    }
    return std::nullopt;
}

}  // namespace stabforge
