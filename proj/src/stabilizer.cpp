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

#include "stabforge/stabilizer.hpp"

#include <algorithm>
#include <cmath>

#include "stabforge/parallel.hpp"

namespace stabforge {

StabilizerGroup::StabilizerGroup(IsotropicSubgroup k, std::vector<PhaseExp> alpha)
    : k_(std::move(k)), alpha_(std::move(alpha)) {
    if (alpha_.size() != k_.element_indices().size())
        throw invalid_input_error("cocycle table size mismatch");
    const Group& group = k_.group();
    const auto& idx = k_.element_indices();
    for (std::size_t a = 0; a < idx.size(); ++a) {
        const PhasePoint za = phase_point(group, idx[a]);
        for (std::size_t b = 0; b < idx.size(); ++b) {
            const PhasePoint zb = phase_point(group, idx[b]);
            const std::size_t ab = k_.position_of(phase_add(group, za, zb));
            if (alpha_[ab] != alpha_[a] * alpha_[b] * group.pairing(za.x, zb.xi).conj())
                throw invalid_input_error("invalid cocycle: composition law fails");
        }
    }
}

double SStateDescriptor::normalization() const {
    return 1.0 / std::sqrt(static_cast<double>(h0.support().size()));
}

std::string ModuliClass::key() const {
    std::string out = "H=";
    for (std::int64_t i : h_subgroup.element_indices()) out += std::to_string(i) + ",";
    out += ";y=" + std::to_string(h_subgroup.group().index_of(y)) + ";h=";
    for (const auto& v : h.values()) out += std::to_string(v.exponent()) + ",";
    return out;
}

ModuliClass canonical_class(const SStateDescriptor& desc) {
    const Subgroup& h_sub = desc.h0.support();
    const Group& group = h_sub.group();

    // Smallest element of the coset y + H in canonical order.
    std::int64_t best = group.index_of(group.add(desc.y, group.element(h_sub.element_indices()[0])));
    for (std::int64_t hi : h_sub.element_indices())
        best = std::min(best, group.index_of(group.add(desc.y, group.element(hi))));
    const GroupElement ystar = group.element(best);
    const GroupElement u = group.sub(ystar, desc.y);

    // Re-base: h*(x) = h(x) beta(u)(x), a twist by a first-degree character.
    const SymHom& beta = desc.h0.beta();
    std::vector<PhaseExp> twisted;
    twisted.reserve(desc.h0.values().size());
    const auto& idx = h_sub.element_indices();
    for (std::size_t p = 0; p < idx.size(); ++p)
        twisted.push_back(desc.h0.values()[p] * beta.bicharacter(u, group.element(idx[p])));
    return ModuliClass{h_sub, ystar, Char2(h_sub, std::move(twisted), beta)};
}

SStateDescriptor descriptor_of(const ModuliClass& cls) { return SStateDescriptor{cls.y, cls.h}; }

bool moduli_equivalent(const SStateDescriptor& a, const SStateDescriptor& b) {
    if (a.h0.support() != b.h0.support()) return false;
    return canonical_class(a) == canonical_class(b);
}

WaveFunction sstate_synthesize(const SStateDescriptor& desc) {
    const Subgroup& h_sub = desc.h0.support();
    return WaveFunction(h_sub.group(), ExactForm{desc.y, h_sub, desc.h0.values(),
                                                 desc.normalization()});
}

StabilizerGroup group_from_sstate(const SStateDescriptor& desc) {
    const Subgroup& h_sub = desc.h0.support();
    const Group& group = h_sub.group();
    const SymHom beta = beta_of(desc.h0);
    IsotropicSubgroup k = isotropic_from_pair(h_sub, beta);

    std::vector<PhaseExp> alpha;
    alpha.reserve(k.element_indices().size());
    for (std::int64_t i : k.element_indices()) {
        const PhasePoint z = phase_point(group, i);
        alpha.push_back((desc.h0.at(group.neg(z.x)) * group.pairing(desc.y, z.xi)).conj());
    }
    return StabilizerGroup(std::move(k), std::move(alpha));
}

SStateDescriptor sstate_from_group(const StabilizerGroup& g) {
    const IsotropicSubgroup& k = g.k();
    const Group& group = k.group();
    const Subgroup& h_sub = k.base();
    const Subgroup& hperp = k.base_annihilator();

    // (i) xi -> conj(alpha(0, xi)) is a character of H^perp; pick the first
    // y in canonical order with <y, xi> = conj(alpha(0, xi)) on H^perp.
    std::optional<GroupElement> y;
    for (std::int64_t yi = 0; yi < group.order() && !y; ++yi) {
        const GroupElement cand = group.element(yi);
        bool ok = true;
        for (std::int64_t a : hperp.element_indices()) {
            const DualElement xi = group.dual_element(a);
            if (group.pairing(cand, xi) != g.alpha_at(PhasePoint{group.zero(), xi}).conj()) {
                ok = false;
                break;
            }
        }
        if (ok) y = cand;
    }
    if (!y) throw theory_violation("no translation solves the annihilator character");

    // (ii) h(-x) = conj(alpha(x, xi) <y, xi>) for any lift xi of x; the
    // value must not depend on the lift.
    const auto& idx = h_sub.element_indices();
    std::vector<PhaseExp> values;
    values.reserve(idx.size());
    const bool second_lift = hperp.size() > 1;
    const DualElement hperp_offset =
        second_lift ? group.dual_element(hperp.element_indices()[1]) : group.dual_zero();
    for (std::int64_t i : idx) {
        const GroupElement x = group.element(i);
        const GroupElement mx = group.neg(x);
        const DualElement lift = k.section_at(mx);
        const PhaseExp value =
            (g.alpha_at(PhasePoint{mx, lift}) * group.pairing(*y, lift)).conj();
        if (second_lift) {
            const DualElement lift2 = group.add(lift, hperp_offset);
            const PhaseExp value2 =
                (g.alpha_at(PhasePoint{mx, lift2}) * group.pairing(*y, lift2)).conj();
            if (value != value2)
                throw theory_violation("h is not well defined across fiber lifts");
        }
        values.push_back(value);
    }

    // (iii) extend by zero; h is a character of second degree for K's beta.
    Char2 h0 = [&] {
        try {
            return Char2(h_sub, std::move(values), k.beta());
        } catch (const invalid_input_error&) {
            throw theory_violation("reconstructed table is not a character of second degree");
        }
    }();

    SStateDescriptor desc{*y, std::move(h0)};
    if (!verify_stabilized(g, sstate_synthesize(desc)))
        throw theory_violation("reconstructed state is not stabilized by the group");
    return desc;
}

bool verify_stabilized(const StabilizerGroup& g, const WaveFunction& phi, double tol) {
    if (g.group() != phi.group()) throw invalid_input_error("shape mismatch");
    if (std::abs(phi.norm() - 1.0) > 1e-9)
        throw invalid_input_error("state must be normalized");
    const Group& group = g.group();
    for (std::size_t p = 0; p < g.alpha().size(); ++p) {
        const PhasePoint z = phase_point(group, g.k().element_indices()[p]);
        const WaveFunction shifted = shift_apply(z, phi);
        const double dist =
            (g.alpha()[p].value() * shifted.amplitudes() - phi.amplitudes()).norm();
        if (dist > tol) return false;
    }
    return true;
}

std::optional<SStateDescriptor> is_sstate(const WaveFunction& phi, double tol) {
    const Group& group = phi.group();
    const std::int64_t n = group.order();
    const double peak = phi.amplitudes().cwiseAbs().maxCoeff();
    if (peak == 0) throw invalid_input_error("zero state");
    const double cutoff = std::max(tol, 1e-9) * peak;

    std::vector<std::int64_t> support;
    for (std::int64_t i = 0; i < n; ++i)
        if (std::abs(phi.amplitudes()[i]) > cutoff) support.push_back(i);

    // Constant modulus on the support.
    for (std::int64_t i : support)
        if (std::abs(std::abs(phi.amplitudes()[i]) - peak) > std::max(tol, 1e-9) * peak)
            return std::nullopt;

    // The support must be a coset y + H with H a subgroup.
    const GroupElement y = group.element(support[0]);
    std::vector<std::int64_t> h_idx;
    h_idx.reserve(support.size());
    for (std::int64_t i : support) h_idx.push_back(group.index_of(group.sub(group.element(i), y)));
    std::sort(h_idx.begin(), h_idx.end());
    if (h_idx[0] != 0) return std::nullopt;
    for (std::int64_t a : h_idx)
        for (std::int64_t b : h_idx) {
            const std::int64_t ab =
                group.index_of(group.add(group.element(a), group.element(b)));
            if (!std::binary_search(h_idx.begin(), h_idx.end(), ab)) return std::nullopt;
        }
    Subgroup h_sub(group, h_idx, minimal_generators(group, h_idx));

    // Normalized phases must snap onto exact roots of unity zeta^k.
    const std::complex<double> base = phi.amplitudes()[support[0]];
    const std::int64_t mod2n = group.phase_modulus();
    std::vector<PhaseExp> table;
    table.reserve(h_idx.size());
    for (std::int64_t u : h_sub.element_indices()) {
        const std::complex<double> t =
            phi.amplitudes()[group.index_of(group.add(y, group.element(u)))] / base;
        const double angle = std::arg(t);
        const double steps = angle * static_cast<double>(mod2n) / (2.0 * M_PI);
        const std::int64_t k = static_cast<std::int64_t>(std::llround(steps));
        const PhaseExp snapped(k, mod2n);
        if (std::abs(t - snapped.value()) > std::max(tol, 1e-9) * 10) return std::nullopt;
        table.push_back(snapped);
    }

    try {
        SymHom beta = beta_of(h_sub, cyclic_decompose(h_sub), table);
        SStateDescriptor desc{y, Char2(h_sub, std::move(table), std::move(beta))};
        return descriptor_of(canonical_class(desc));
    } catch (const invalid_input_error&) {
        return std::nullopt;
    }
}

namespace {

// Canonical coset representatives: y is kept iff it is the smallest
// element of y + H.
std::vector<GroupElement> coset_minima(const Group& group, const Subgroup& h_sub) {
    std::vector<GroupElement> reps;
    for (std::int64_t yi = 0; yi < group.order(); ++yi) {
        const GroupElement y = group.element(yi);
        bool minimal = true;
        for (std::int64_t hi : h_sub.element_indices())
            if (group.index_of(group.add(y, group.element(hi))) < yi) {
                minimal = false;
                break;
            }
        if (minimal) reps.push_back(y);
    }
    return reps;
}

void states_over_subgroup(const Group& group, const Subgroup& h_sub,
                          const std::function<void(EnumeratedState&&)>& sink) {
    const auto ch2 = enumerate_ch2(h_sub);
    for (const auto& y : coset_minima(group, h_sub)) {
        for (const auto& h : ch2) {
            SStateDescriptor desc{y, h};
            sink(EnumeratedState{ModuliClass{h_sub, y, h}, desc, group_from_sstate(desc)});
        }
    }
}

}  // namespace

std::vector<EnumeratedState> enumerate_states(const Group& group, std::int64_t bound) {
    const auto subgroups = enumerate_subgroups(group, bound);
    std::vector<std::vector<EnumeratedState>> parts(subgroups.size());
    parallel_for(subgroups.size(), [&](std::size_t si) {
        states_over_subgroup(group, subgroups[si],
                             [&](EnumeratedState&& e) { parts[si].push_back(std::move(e)); });
    });

    std::vector<EnumeratedState> out;
    for (auto& part : parts)
        for (auto& entry : part) out.push_back(std::move(entry));
    return out;
}

void for_each_state(const Group& group, std::int64_t bound,
                    const std::function<void(const EnumeratedState&)>& fn) {
    for (const auto& h_sub : enumerate_subgroups(group, bound))
        states_over_subgroup(group, h_sub, [&](EnumeratedState&& e) { fn(e); });
}

std::int64_t count_states(const Group& group, std::int64_t bound) {
    std::int64_t total = 0;
    for (const auto& h_sub : enumerate_subgroups(group, bound)) total += sym_count(h_sub);
    return group.order() * total;
}

ModuliClass fiber_product(const ModuliClass& a, const ModuliClass& b) {
    if (a.h_subgroup != b.h_subgroup) throw invalid_input_error("not in the same fiber");
    const Group& group = a.h_subgroup.group();
    const GroupElement diff = group.sub(a.y, b.y);
    if (!a.h_subgroup.contains(diff)) throw invalid_input_error("not in the same fiber");

    // h''(x) = h(x) h'(x) beta'(y - y')(x)
    const SymHom& beta_b = b.h.beta();
    const auto& idx = a.h_subgroup.element_indices();
    std::vector<PhaseExp> values;
    values.reserve(idx.size());
    for (std::size_t p = 0; p < idx.size(); ++p) {
        const GroupElement x = group.element(idx[p]);
        values.push_back(a.h.values()[p] * b.h.values()[p] * beta_b.bicharacter(diff, x));
    }
    Char2 prod(a.h_subgroup, std::move(values), a.h.beta().add(beta_b));
    return canonical_class(SStateDescriptor{a.y, std::move(prod)});
}

}  // namespace stabforge
