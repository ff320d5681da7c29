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

#include "stabforge/wehrl.hpp"

#include <algorithm>
#include <cmath>

namespace stabforge {

namespace {

double equality_tol(double tol, double bound) { return tol * std::max(1.0, std::abs(bound)); }

bool pure_eigenvector(const DensityOperator& rho, Eigen::VectorXcd* out) {
    auto [vals, vecs] = rho.eigensystem();
    if (std::abs(vals[0] - 1.0) > 1e-7) return false;
    if (out) *out = vecs.col(0);
    return true;
}

}  // namespace

HusimiField::HusimiField(Group group, Eigen::MatrixXd values)
    : group_(std::move(group)), values_(std::move(values)) {
    if (values_.rows() != group_.order() || values_.cols() != group_.order())
        throw invalid_input_error("Husimi table must be N x N");
}

HusimiField husimi(const WaveFunction& phi, const DensityOperator& rho) {
    if (phi.group() != rho.group()) throw invalid_input_error("shape mismatch");
    if (std::abs(phi.norm() - 1.0) > 1e-9)
        throw invalid_input_error("window must be normalized");

    const Group& group = phi.group();
    const std::int64_t n = group.order();
    Eigen::MatrixXd table(n, n);
    for (std::int64_t x = 0; x < n; ++x) {
        for (std::int64_t xi = 0; xi < n; ++xi) {
            const PhasePoint z{group.element(x), group.dual_element(xi)};
            const Eigen::VectorXcd phi_z = shift_apply(z, phi).amplitudes();
            table(x, xi) = std::real(phi_z.dot(rho.matrix() * phi_z));
        }
    }

    if (table.minCoeff() < -1e-12 || table.maxCoeff() > 1.0 + 1e-12)
        throw theory_violation("Husimi values escape [0, 1]");
    if (std::abs(table.sum() / static_cast<double>(n) - 1.0) > 1e-9)
        throw theory_violation("Husimi average is not 1");
    return HusimiField(group, std::move(table));
}

double entropy(const ConcaveFn& fn, const HusimiField& u) {
    const std::int64_t n = u.group().order();
    double acc = 0;
    for (std::int64_t x = 0; x < n; ++x)
        for (std::int64_t xi = 0; xi < n; ++xi)
            acc += fn.g(std::clamp(u.values()(x, xi), 0.0, 1.0));
    return acc / static_cast<double>(n);
}

MinReport verify_min_bound(const ConcaveFn& fn, const WaveFunction& phi,
                           const DensityOperator& rho, double tol) {
    MinReport report;
    report.bound = fn.g(1.0) + 0.0;  // +0.0 normalizes a negative zero
    report.entropy = entropy(fn, husimi(phi, rho));
    if (report.entropy < report.bound - tol)
        throw theory_violation("Wehrl entropy fell below G(1)");
    report.equality = std::abs(report.entropy - report.bound) <= equality_tol(tol, report.bound);

    if (report.equality && !fn.linear) {
        // Equality forces: phi an S-state, rho pure on a shift of phi.
        auto window = is_sstate(phi, tol);
        if (!window) throw theory_violation("minimal entropy with a non-stabilizer window");
        Eigen::VectorXcd psi;
        if (!pure_eigenvector(rho, &psi))
            throw theory_violation("minimal entropy with a mixed state");
        auto matched = match_shift(phi, WaveFunction(phi.group(), std::move(psi)), 1e-7);
        if (!matched)
            throw theory_violation("minimal entropy but the state is not a shift of the window");
        report.witness = MinWitness{*window, matched->first, matched->second};
    }
    return report;
}

BerezinReport berezin_lieb(const ConcaveFn& fn, const WaveFunction& phi,
                           const DensityOperator& rho, double tol) {
    BerezinReport report;
    report.entropy = entropy(fn, husimi(phi, rho));
    auto [vals, vecs] = rho.eigensystem();
    report.tr_g = 0;
    for (Eigen::Index j = 0; j < vals.size(); ++j)
        report.tr_g += fn.g(std::clamp(vals[j], 0.0, 1.0));
    report.gap = report.entropy - report.tr_g;
    if (report.gap < -tol) throw theory_violation("Berezin-Lieb inequality violated");
    report.equality = std::abs(report.gap) <= equality_tol(tol, report.tr_g);

    bool distinct = true;
    for (Eigen::Index j = 0; j + 1 < vals.size(); ++j)
        if (std::abs(vals[j] - vals[j + 1]) <= 1e-7) distinct = false;

    if (report.equality && fn.strictly_concave && distinct) {
        // Every eigenvector must be a phase-space shift of the window, the
        // shifts lying in pairwise distinct cosets of K = supp V_phi phi.
        const auto k_support = cst(phi, phi).support(1e-9);
        std::vector<PhasePoint> shifts;
        const Group& group = phi.group();
        for (Eigen::Index j = 0; j < vals.size(); ++j) {
            auto matched = match_shift(phi, WaveFunction(group, vecs.col(j)), 1e-7);
            if (!matched)
                throw theory_violation("Berezin-Lieb equality with a non-shift eigenbasis");
            shifts.push_back(matched->second);
        }
        for (std::size_t a = 0; a < shifts.size(); ++a)
            for (std::size_t b = a + 1; b < shifts.size(); ++b) {
                const std::int64_t diff =
                    phase_index(group, phase_sub(group, shifts[a], shifts[b]));
                if (std::binary_search(k_support.begin(), k_support.end(), diff))
                    throw theory_violation("Berezin-Lieb equality with shifts in a common coset");
            }
        report.shifts = std::move(shifts);
    }
    return report;
}

MaxReport verify_max_bound(const ConcaveFn& fn, const WaveFunction& phi,
                           const DensityOperator& rho, double tol) {
    MaxReport report;
    const Group& group = phi.group();
    const double n = static_cast<double>(group.order());
    report.bound = n * fn.g(1.0 / n) + 0.0;
    report.entropy = entropy(fn, husimi(phi, rho));
    if (report.entropy > report.bound + tol)
        throw theory_violation("Wehrl entropy exceeded N G(1/N)");
    report.equality = std::abs(report.entropy - report.bound) <= equality_tol(tol, report.bound);

    const auto phi_supp = characteristic_fn(DensityOperator::pure(phi)).support(1e-9);
    const auto rho_supp = characteristic_fn(rho).support(1e-9);
    std::set_intersection(phi_supp.begin(), phi_supp.end(), rho_supp.begin(), rho_supp.end(),
                          std::back_inserter(report.support_overlap));

    const bool overlap_trivial =
        report.support_overlap.size() == 1 && report.support_overlap[0] == 0;
    if (fn.strictly_concave && pure_eigenvector(rho, nullptr) &&
        report.equality != overlap_trivial)
        throw theory_violation("maximal entropy equality disagrees with the support criterion");
    return report;
}

FourierHusimiReport fourier_husimi(const WaveFunction& phi, const DensityOperator& rho) {
    const Group& group = phi.group();
    const std::int64_t n = group.order();
    const HusimiField u = husimi(phi, rho);

    // F f(xi', x') = (1/N) sum_{x,xi} conj(<x,xi'> <x',xi>) f(x,xi)
    Eigen::MatrixXcd omega(n, n);
    for (std::int64_t y = 0; y < n; ++y)
        for (std::int64_t x = 0; x < n; ++x)
            omega(y, x) = group.pairing(group.element(y), group.dual_element(x)).value();

    FourierHusimiReport report;
    report.fourier = (omega.adjoint() * u.values().cast<std::complex<double>>() *
                      omega.adjoint()) /
                     static_cast<double>(n);

    const CSTField phi_char = characteristic_fn(DensityOperator::pure(phi));
    const CSTField rho_char = characteristic_fn(rho);
    report.product = phi_char.table().cwiseProduct(rho_char.table().conjugate());

    report.residual = 0;
    for (std::int64_t x = 0; x < n; ++x) {
        const std::int64_t neg_x = group.index_of(group.neg(group.element(x)));
        for (std::int64_t xi = 0; xi < n; ++xi)
            report.residual = std::max(
                report.residual, std::abs(report.fourier(xi, neg_x) - report.product(x, xi)));
    }
    if (report.residual > 1e-8)
        throw theory_violation("Fourier-Husimi identity residual too large");
    return report;
}

}  // namespace stabforge
