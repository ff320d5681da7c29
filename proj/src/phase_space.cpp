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

#include "stabforge/phase_space.hpp"

#include <algorithm>
#include <set>

namespace stabforge {

std::int64_t phase_index(const Group& group, const PhasePoint& z) {
    return group.index_of(z.x) * group.order() + group.index_of(z.xi);
}

PhasePoint phase_point(const Group& group, std::int64_t index) {
    const std::int64_t n = group.order();
    if (index < 0 || index >= n * n) throw invalid_input_error("phase point index out of range");
    return PhasePoint{group.element(index / n), group.dual_element(index % n)};
}

PhasePoint phase_add(const Group& group, const PhasePoint& z, const PhasePoint& w) {
    return PhasePoint{group.add(z.x, w.x), group.add(z.xi, w.xi)};
}

PhasePoint phase_neg(const Group& group, const PhasePoint& z) {
    return PhasePoint{group.neg(z.x), group.neg(z.xi)};
}

PhasePoint phase_sub(const Group& group, const PhasePoint& z, const PhasePoint& w) {
    return phase_add(group, z, phase_neg(group, w));
}

std::string phase_point_string(const PhasePoint& z) {
    return element_string(z.x) + element_string(z.xi);
}

PhaseExp symplectic_form(const Group& group, const PhasePoint& z, const PhasePoint& w) {
    return group.pairing(w.x, z.xi) * group.pairing(z.x, w.xi).conj();
}

IsotropicSubgroup::IsotropicSubgroup(Subgroup base, SymHom beta, Subgroup ann,
                                     std::vector<std::int64_t> element_indices,
                                     std::vector<std::int64_t> section)
    : base_(std::move(base)),
      beta_(std::move(beta)),
      ann_(std::move(ann)),
      elem_idx_(std::move(element_indices)),
      section_(std::move(section)) {
    if (size() != base_.group().order())
        throw invalid_input_error("maximal isotropic subgroup must have cardinality N");
}

std::vector<PhasePoint> IsotropicSubgroup::elements() const {
    std::vector<PhasePoint> out;
    out.reserve(elem_idx_.size());
    for (std::int64_t i : elem_idx_) out.push_back(phase_point(group(), i));
    return out;
}

bool IsotropicSubgroup::contains_index(std::int64_t index) const {
    return std::binary_search(elem_idx_.begin(), elem_idx_.end(), index);
}

bool IsotropicSubgroup::contains(const PhasePoint& z) const {
    const Group& g = group();
    if (!base_.contains(z.x)) return false;
    const DualElement rep = section_at(z.x);
    return ann_.contains_index(g.index_of(as_element(g.sub(z.xi, rep))));
}

std::size_t IsotropicSubgroup::position_of(const PhasePoint& z) const {
    const std::int64_t idx = phase_index(group(), z);
    auto it = std::lower_bound(elem_idx_.begin(), elem_idx_.end(), idx);
    if (it == elem_idx_.end() || *it != idx)
        throw invalid_input_error("phase point not in the isotropic subgroup");
    return static_cast<std::size_t>(it - elem_idx_.begin());
}

DualElement IsotropicSubgroup::section_at(const GroupElement& x) const {
    return group().dual_element(section_[base_.position_of(x)]);
}

IsotropicSubgroup isotropic_from_pair(const Subgroup& h, const SymHom& beta) {
    if (beta.domain() != h)
        throw invalid_input_error("symmetric homomorphism is not defined on the subgroup");
    const Group& group = h.group();
    const Subgroup ann = annihilator(h);

    std::vector<std::int64_t> elems;
    elems.reserve(static_cast<std::size_t>(group.order()));
    std::vector<std::int64_t> section(h.element_indices().size());
    for (std::size_t p = 0; p < h.element_indices().size(); ++p) {
        const GroupElement x = group.element(h.element_indices()[p]);
        const DualElement rep = extend_character(h, beta.character_of(x));
        section[p] = group.index_of(rep);
        for (std::int64_t a : ann.element_indices()) {
            const DualElement xi = group.add(rep, group.dual_element(a));
            elems.push_back(group.index_of(x) * group.order() + group.index_of(xi));
        }
    }
    std::sort(elems.begin(), elems.end());
    return IsotropicSubgroup(h, beta, ann, std::move(elems), std::move(section));
}

IsotropicSubgroup pair_from_isotropic(const Group& group, const std::vector<PhasePoint>& points) {
    const std::int64_t n = group.order();

    std::set<std::int64_t> index_set;
    for (const auto& z : points) index_set.insert(phase_index(group, z));
    if (static_cast<std::int64_t>(index_set.size()) != n)
        throw invalid_input_error("wrong cardinality: a maximal isotropic subgroup has N points");

    // Subgroup and isotropy checks over all pairs.
    if (index_set.find(0) == index_set.end())
        throw invalid_input_error("not a subgroup of phase space");
    for (std::int64_t i : index_set) {
        const PhasePoint zi = phase_point(group, i);
        for (std::int64_t j : index_set) {
            const PhasePoint zj = phase_point(group, j);
            if (index_set.find(phase_index(group, phase_add(group, zi, zj))) == index_set.end())
                throw invalid_input_error("not a subgroup of phase space");
            if (!symplectic_form(group, zi, zj).is_one())
                throw invalid_input_error("not isotropic");
        }
    }

    // H = projection to A; beta recovered fiber-wise: for (x, xi) in K and
    // y in H, beta(x)(y) = <y, xi> independently of the lift xi.
    std::set<std::int64_t> h_idx_set;
    for (std::int64_t i : index_set) h_idx_set.insert(i / n);
    std::vector<std::int64_t> h_idx(h_idx_set.begin(), h_idx_set.end());
    Subgroup h(group, h_idx, minimal_generators(group, h_idx));
    const auto dec = cyclic_decompose(h);

    std::vector<std::int64_t> lift_of(h_idx.size(), -1);
    for (std::int64_t i : index_set) {
        const std::size_t p = h.position_of_index(i / n);
        if (lift_of[p] < 0) lift_of[p] = i % n;
    }

    const std::size_t m = dec.orders.size();
    std::vector<std::vector<std::int64_t>> c(m, std::vector<std::int64_t>(m, 0));
    for (std::size_t j = 0; j < m; ++j) {
        const std::int64_t step = 2 * (n / dec.orders[j]);
        for (std::size_t k = 0; k < m; ++k) {
            const DualElement xi = group.dual_element(lift_of[h.position_of(dec.basis[k])]);
            const std::int64_t q = group.pairing(dec.basis[j], xi).exponent();
            if (q % step != 0) throw invalid_input_error("not isotropic");
            c[j][k] = ((q / step) % dec.orders[j] + dec.orders[j]) % dec.orders[j];
        }
    }
    const SymHom beta(h, dec, std::move(c));

    IsotropicSubgroup k = isotropic_from_pair(h, beta);
    if (!std::equal(k.element_indices().begin(), k.element_indices().end(), index_set.begin()))
        throw theory_violation("isotropic subgroup does not round-trip through (H, beta)");
    return k;
}

std::vector<IsotropicSubgroup> enumerate_maximal_isotropic(const Group& group,
                                                           std::int64_t bound) {
    std::vector<IsotropicSubgroup> out;
    for (const auto& h : enumerate_subgroups(group, bound)) {
        const auto dec = cyclic_decompose(h);
        for (const auto& beta : enumerate_sym(h, dec)) out.push_back(isotropic_from_pair(h, beta));
    }
    return out;
}

}  // namespace stabforge
