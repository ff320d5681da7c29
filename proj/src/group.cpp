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

#include "stabforge/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace stabforge {

Group::Group(std::vector<std::int64_t> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) throw invalid_input_error("empty group spec");
    n_ = 1;
    for (std::int64_t d : orders_) {
        if (d <= 0) throw invalid_input_error("cyclic factor orders must be positive");
        n_ *= d;
    }
}

Group make_group(const std::vector<std::int64_t>& orders) { return Group(orders); }

std::int64_t Group::index_of(const std::vector<std::int64_t>& residues) const {
    check_shape(residues);
    std::int64_t idx = 0;
    for (std::size_t j = 0; j < orders_.size(); ++j) idx = idx * orders_[j] + residues[j];
    return idx;
}

std::vector<std::int64_t> Group::residues_at(std::int64_t index) const {
    if (index < 0 || index >= n_) throw invalid_input_error("element index out of range");
    std::vector<std::int64_t> r(orders_.size());
    for (std::size_t j = orders_.size(); j-- > 0;) {
        r[j] = index % orders_[j];
        index /= orders_[j];
    }
    return r;
}

std::vector<std::int64_t> Group::add_residues(const std::vector<std::int64_t>& a,
                                              const std::vector<std::int64_t>& b) const {
    check_shape(a);
    check_shape(b);
    std::vector<std::int64_t> r(orders_.size());
    for (std::size_t j = 0; j < orders_.size(); ++j) r[j] = (a[j] + b[j]) % orders_[j];
    return r;
}

std::vector<std::int64_t> Group::neg_residues(const std::vector<std::int64_t>& a) const {
    check_shape(a);
    std::vector<std::int64_t> r(orders_.size());
    for (std::size_t j = 0; j < orders_.size(); ++j) r[j] = (orders_[j] - a[j]) % orders_[j];
    return r;
}

GroupElement Group::scale(std::int64_t m, const GroupElement& a) const {
    check_shape(a.residues);
    std::vector<std::int64_t> r(orders_.size());
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        r[j] = ((a.residues[j] * (m % orders_[j])) % orders_[j] + orders_[j]) % orders_[j];
    }
    return GroupElement{r};
}

GroupElement Group::reduce(const std::vector<std::int64_t>& raw) const {
    if (raw.size() != orders_.size()) throw invalid_input_error("shape mismatch");
    std::vector<std::int64_t> r(orders_.size());
    for (std::size_t j = 0; j < orders_.size(); ++j)
        r[j] = ((raw[j] % orders_[j]) + orders_[j]) % orders_[j];
    return GroupElement{r};
}

std::int64_t Group::element_order(const GroupElement& x) const {
    check_shape(x.residues);
    std::int64_t ord = 1;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        const std::int64_t d = orders_[j];
        const std::int64_t oj = d / std::gcd(d, x.residues[j]);
        ord = std::lcm(ord, oj);
    }
    return ord;
}

PhaseExp Group::pairing(const GroupElement& x, const DualElement& xi) const {
    check_shape(x.residues);
    check_shape(xi.residues);
    std::int64_t k = 0;
    const std::int64_t mod = phase_modulus();
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        // exp(2 pi i x_j xi_j / d_j) = zeta^(2 (N/d_j) x_j xi_j)
        k = (k + 2 * (n_ / orders_[j]) * ((x.residues[j] * xi.residues[j]) % orders_[j])) % mod;
    }
    return PhaseExp(k, mod);
}

void Group::check_shape(const std::vector<std::int64_t>& residues) const {
    if (residues.size() != orders_.size()) throw invalid_input_error("shape mismatch");
    for (std::size_t j = 0; j < orders_.size(); ++j)
        if (residues[j] < 0 || residues[j] >= orders_[j])
            throw invalid_input_error("residue out of range");
}

Group parse_group_spec(std::string_view spec) {
    std::string s;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (s.empty()) throw spec_parse_error("empty group spec");

    std::vector<std::int64_t> orders;
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != 'z') throw spec_parse_error("expected 'Z<order>' in group spec");
        ++pos;
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw spec_parse_error("missing cyclic order after 'Z'");
        orders.push_back(std::stoll(std::string(s.substr(start, pos - start))));
        if (pos < s.size()) {
            if (s[pos] != 'x') throw spec_parse_error("expected 'x' between factors");
            ++pos;
            if (pos == s.size()) throw spec_parse_error("trailing 'x' in group spec");
        }
    }
    if (std::any_of(orders.begin(), orders.end(), [](std::int64_t d) { return d <= 0; }))
        throw spec_parse_error("cyclic factor orders must be positive");
    return Group(orders);
}

std::string group_spec_string(const Group& group) {
    std::string out;
    for (std::size_t j = 0; j < group.orders().size(); ++j) {
        if (j) out += 'x';
        out += 'Z';
        out += std::to_string(group.orders()[j]);
    }
    return out;
}

GroupElement parse_element(const Group& group, std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    if (s.empty()) throw spec_parse_error("empty element");

    std::vector<std::int64_t> raw;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            raw.push_back(std::stoll(tok));
        } catch (const std::exception&) {
            throw spec_parse_error("malformed residue '" + tok + "'");
        }
    }
    if (raw.size() != group.rank()) throw spec_parse_error("element has wrong number of residues");
    return group.reduce(raw);
}

namespace {

std::string residues_string(const std::vector<std::int64_t>& residues) {
    std::string out = "(";
    for (std::size_t j = 0; j < residues.size(); ++j) {
        if (j) out += ',';
        out += std::to_string(residues[j]);
    }
    out += ')';
    return out;
}

}  // namespace

std::string element_string(const GroupElement& x) { return residues_string(x.residues); }
std::string element_string(const DualElement& xi) { return residues_string(xi.residues); }

Subgroup::Subgroup(Group group, std::vector<std::int64_t> element_indices,
                   std::vector<GroupElement> generators)
    : group_(std::move(group)), elem_idx_(std::move(element_indices)), gens_(std::move(generators)) {
    if (elem_idx_.empty() || elem_idx_.front() != 0 ||
        !std::is_sorted(elem_idx_.begin(), elem_idx_.end()))
        throw invalid_input_error("subgroup element list must be sorted and contain 0");
    if (group_.order() % size() != 0)
        throw invalid_input_error("subgroup order must divide the group order");
}

Subgroup Subgroup::from_generators(const Group& group, const std::vector<GroupElement>& gens) {
    std::vector<std::int64_t> gidx;
    gidx.reserve(gens.size());
    for (const auto& g : gens) gidx.push_back(group.index_of(g));
    auto elems = closure_indices(group, gidx);
    auto mingens = minimal_generators(group, elems);
    return Subgroup(group, std::move(elems), std::move(mingens));
}

Subgroup Subgroup::trivial(const Group& group) { return Subgroup(group, {0}, {}); }

Subgroup Subgroup::full(const Group& group) {
    std::vector<std::int64_t> all(group.order());
    std::iota(all.begin(), all.end(), 0);
    auto gens = minimal_generators(group, all);
    return Subgroup(group, std::move(all), std::move(gens));
}

std::vector<GroupElement> Subgroup::elements() const {
    std::vector<GroupElement> out;
    out.reserve(elem_idx_.size());
    for (std::int64_t i : elem_idx_) out.push_back(group_.element(i));
    return out;
}

bool Subgroup::contains_index(std::int64_t index) const {
    return std::binary_search(elem_idx_.begin(), elem_idx_.end(), index);
}

std::size_t Subgroup::position_of_index(std::int64_t index) const {
    auto it = std::lower_bound(elem_idx_.begin(), elem_idx_.end(), index);
    if (it == elem_idx_.end() || *it != index)
        throw invalid_input_error("element not in subgroup");
    return static_cast<std::size_t>(it - elem_idx_.begin());
}

std::vector<std::int64_t> closure_indices(const Group& group,
                                          const std::vector<std::int64_t>& generator_indices) {
    std::set<std::int64_t> seen{0};
    std::vector<std::int64_t> frontier{0};
    while (!frontier.empty()) {
        std::vector<std::int64_t> next;
        for (std::int64_t s : frontier) {
            const GroupElement es = group.element(s);
            for (std::int64_t g : generator_indices) {
                const std::int64_t t = group.index_of(group.add(es, group.element(g)));
                if (seen.insert(t).second) next.push_back(t);
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

std::vector<GroupElement> minimal_generators(const Group& group,
                                             const std::vector<std::int64_t>& element_indices) {
    std::vector<std::int64_t> gens;
    std::vector<std::int64_t> span{0};
    for (std::int64_t idx : element_indices) {
        if (std::binary_search(span.begin(), span.end(), idx)) continue;
        gens.push_back(idx);
        span = closure_indices(group, gens);
        if (span.size() == element_indices.size()) break;
    }
    std::vector<GroupElement> out;
    out.reserve(gens.size());
    for (std::int64_t g : gens) out.push_back(group.element(g));
    return out;
}

std::vector<std::vector<std::int64_t>> subgroups_within(
    const Group& group, const std::vector<std::int64_t>& universe_indices) {
    // Seed with all cyclic subgroups of the universe, then close under
    // pairwise joins. Joins cannot leave the universe since it is closed.
    std::set<std::vector<std::int64_t>> all;
    std::vector<std::vector<std::int64_t>> cyclic;
    all.insert({0});
    for (std::int64_t idx : universe_indices) {
        auto c = closure_indices(group, {idx});
        if (all.insert(c).second) cyclic.push_back(std::move(c));
    }

    std::vector<std::vector<std::int64_t>> frontier(all.begin(), all.end());
    while (!frontier.empty()) {
        std::vector<std::vector<std::int64_t>> next;
        for (const auto& sub : frontier) {
            for (const auto& cyc : cyclic) {
                std::vector<std::int64_t> merged;
                std::set_union(sub.begin(), sub.end(), cyc.begin(), cyc.end(),
                               std::back_inserter(merged));
                if (merged.size() == sub.size()) continue;  // cyc already inside
                auto join = closure_indices(group, merged);
                if (all.insert(join).second) next.push_back(std::move(join));
            }
        }
        frontier = std::move(next);
    }

    std::vector<std::vector<std::int64_t>> out(all.begin(), all.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::vector<Subgroup> enumerate_subgroups(const Group& group, std::int64_t bound) {
    if (group.order() > bound) throw bound_error("enumeration bound exceeded");
    std::vector<std::int64_t> all(group.order());
    std::iota(all.begin(), all.end(), 0);
    std::vector<Subgroup> out;
    for (auto& elems : subgroups_within(group, all)) {
        auto gens = minimal_generators(group, elems);
        out.emplace_back(group, std::move(elems), std::move(gens));
    }
    return out;
}

Subgroup annihilator(const Subgroup& h) {
    const Group& group = h.group();
    std::vector<std::int64_t> ann;
    for (std::int64_t i = 0; i < group.order(); ++i) {
        const DualElement xi = group.dual_element(i);
        bool trivial_on_h = true;
        for (const auto& g : h.generators()) {
            if (!group.pairing(g, xi).is_one()) {
                trivial_on_h = false;
                break;
            }
        }
        if (trivial_on_h) ann.push_back(i);
    }
    return Subgroup(group, ann, minimal_generators(group, ann));
}

namespace {

// Finds, in canonical order, a complement of <g> inside H: a subgroup C with
// C /\ <g> = {0} and #C * ord(g) = #H. One exists whenever g has maximal
// order in H.
std::vector<std::int64_t> find_complement(const Group& group,
                                          const std::vector<std::int64_t>& h_elems,
                                          const std::vector<std::int64_t>& gspan) {
    const std::int64_t target = static_cast<std::int64_t>(h_elems.size() / gspan.size());
    for (const auto& cand : subgroups_within(group, h_elems)) {
        if (static_cast<std::int64_t>(cand.size()) != target) continue;
        std::vector<std::int64_t> meet;
        std::set_intersection(cand.begin(), cand.end(), gspan.begin(), gspan.end(),
                              std::back_inserter(meet));
        if (meet.size() == 1) return cand;
    }
    throw theory_violation("no complement found for a maximal-order element");
}

}  // namespace

CyclicDecomposition cyclic_decompose(const Subgroup& h) {
    const Group& group = h.group();
    CyclicDecomposition dec;

    std::vector<std::int64_t> remaining = h.element_indices();
    while (remaining.size() > 1) {
        std::int64_t best = -1, best_ord = 0;
        for (std::int64_t idx : remaining) {
            const std::int64_t ord = group.element_order(group.element(idx));
            if (ord > best_ord) {
                best_ord = ord;
                best = idx;
            }
        }
        const GroupElement g = group.element(best);
        dec.basis.push_back(g);
        dec.orders.push_back(best_ord);
        const auto gspan = closure_indices(group, {best});
        if (gspan.size() == remaining.size()) break;
        remaining = find_complement(group, remaining, gspan);
    }

    // Coordinates: enumerate all tuples and map them onto H.
    const std::size_t m = dec.orders.size();
    dec.coords.assign(h.element_indices().size(), {});
    std::vector<char> seen(dec.coords.size(), 0);
    std::vector<std::int64_t> tuple(m, 0);
    std::size_t filled = 0;
    bool more = true;
    while (more) {
        GroupElement x = group.zero();
        for (std::size_t i = 0; i < m; ++i)
            x = group.add(x, group.scale(tuple[i], dec.basis[i]));
        const std::size_t pos = h.position_of(x);
        if (seen[pos]) throw theory_violation("cyclic decomposition is not a direct product");
        seen[pos] = 1;
        dec.coords[pos] = tuple;
        ++filled;
        more = false;
        for (std::size_t j = m; j-- > 0;) {
            if (++tuple[j] < dec.orders[j]) {
                more = true;
                break;
            }
            tuple[j] = 0;
        }
    }
    if (filled != dec.coords.size())
        throw theory_violation("cyclic decomposition does not cover the subgroup");
    return dec;
}

DualElement extend_character(const Subgroup& h, const std::vector<PhaseExp>& chi) {
    const Group& group = h.group();
    const auto& idx = h.element_indices();
    if (chi.size() != idx.size()) throw invalid_input_error("character table size mismatch");

    // Multiplicativity over all pairs; this also forces chi(0) = 1.
    for (std::size_t a = 0; a < idx.size(); ++a) {
        const GroupElement xa = group.element(idx[a]);
        for (std::size_t b = 0; b < idx.size(); ++b) {
            const GroupElement xb = group.element(idx[b]);
            const std::size_t ab = h.position_of(group.add(xa, xb));
            if (chi[ab] != chi[a] * chi[b]) throw invalid_input_error("not a character");
        }
    }

    for (std::int64_t i = 0; i < group.order(); ++i) {
        const DualElement xi = group.dual_element(i);
        bool match = true;
        for (std::size_t a = 0; a < idx.size(); ++a) {
            if (group.pairing(group.element(idx[a]), xi) != chi[a]) {
                match = false;
                break;
            }
        }
        if (match) return xi;
    }
    throw theory_violation("character of a subgroup admits no extension");
}

}  // namespace stabforge
