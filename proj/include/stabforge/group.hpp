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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "stabforge/errors.hpp"
#include "stabforge/phase.hpp"

namespace stabforge {

inline constexpr std::int64_t kDefaultEnumerationBound = 64;

// Element of a finite Abelian group given as a product of cyclic factors;
// one reduced residue per factor. DualElement is the same data under the
// canonical identification of the dual group with the group itself via the
// factor-wise pairing (x, y) -> exp(2*pi*i*x*y/d).
struct GroupElement {
    std::vector<std::int64_t> residues;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

struct DualElement {
    std::vector<std::int64_t> residues;

    friend bool operator==(const DualElement&, const DualElement&) = default;
    friend auto operator<=>(const DualElement&, const DualElement&) = default;
};

inline DualElement as_dual(const GroupElement& x) { return DualElement{x.residues}; }
inline GroupElement as_element(const DualElement& xi) { return GroupElement{xi.residues}; }

// A finite Abelian group Z_{d_1} x ... x Z_{d_n}. Elements are indexed
// 0..N-1 in lexicographic order of their residue tuples; this index order
// is the canonical order used for every deterministic tie-break in the
// library.
class Group {
  public:
    explicit Group(std::vector<std::int64_t> orders);

    const std::vector<std::int64_t>& orders() const { return orders_; }
    std::size_t rank() const { return orders_.size(); }
    std::int64_t order() const { return n_; }          // N = #A
    std::int64_t phase_modulus() const { return 2 * n_; }

    GroupElement zero() const { return GroupElement{std::vector<std::int64_t>(rank(), 0)}; }
    DualElement dual_zero() const { return DualElement{std::vector<std::int64_t>(rank(), 0)}; }

    std::int64_t index_of(const GroupElement& x) const { return index_of(x.residues); }
    std::int64_t index_of(const DualElement& xi) const { return index_of(xi.residues); }
    GroupElement element(std::int64_t index) const { return GroupElement{residues_at(index)}; }
    DualElement dual_element(std::int64_t index) const { return DualElement{residues_at(index)}; }

    GroupElement add(const GroupElement& a, const GroupElement& b) const {
        return GroupElement{add_residues(a.residues, b.residues)};
    }
    GroupElement sub(const GroupElement& a, const GroupElement& b) const {
        return add(a, neg(b));
    }
    GroupElement neg(const GroupElement& a) const { return GroupElement{neg_residues(a.residues)}; }
    GroupElement scale(std::int64_t m, const GroupElement& a) const;

    DualElement add(const DualElement& a, const DualElement& b) const {
        return DualElement{add_residues(a.residues, b.residues)};
    }
    DualElement sub(const DualElement& a, const DualElement& b) const { return add(a, neg(b)); }
    DualElement neg(const DualElement& a) const { return DualElement{neg_residues(a.residues)}; }

    GroupElement reduce(const std::vector<std::int64_t>& raw) const;
    std::int64_t element_order(const GroupElement& x) const;

    // The canonical pairing <x, xi> = exp(2*pi*i * sum_j x_j xi_j / d_j),
    // an N-th root of unity (always an even exponent of zeta).
    PhaseExp pairing(const GroupElement& x, const DualElement& xi) const;

    friend bool operator==(const Group& a, const Group& b) { return a.orders_ == b.orders_; }
    friend bool operator!=(const Group& a, const Group& b) { return !(a == b); }

  private:
    std::int64_t index_of(const std::vector<std::int64_t>& residues) const;
    std::vector<std::int64_t> residues_at(std::int64_t index) const;
    std::vector<std::int64_t> add_residues(const std::vector<std::int64_t>& a,
                                           const std::vector<std::int64_t>& b) const;
    std::vector<std::int64_t> neg_residues(const std::vector<std::int64_t>& a) const;
    void check_shape(const std::vector<std::int64_t>& residues) const;

    std::vector<std::int64_t> orders_;
    std::int64_t n_ = 1;
};

Group make_group(const std::vector<std::int64_t>& orders);

// "Z4xZ2x Z3" -> Z_4 x Z_2 x Z_3 (case-insensitive, whitespace ignored).
Group parse_group_spec(std::string_view spec);
std::string group_spec_string(const Group& group);

// "(1,0,2)" -> element; a bare "3" is accepted for rank-1 groups.
GroupElement parse_element(const Group& group, std::string_view text);
std::string element_string(const GroupElement& x);
std::string element_string(const DualElement& xi);

// Subgroup of A, stored as the sorted list of canonical element indices
// together with a small generating set.
class Subgroup {
  public:
    Subgroup(Group group, std::vector<std::int64_t> element_indices,
             std::vector<GroupElement> generators);

    static Subgroup from_generators(const Group& group, const std::vector<GroupElement>& gens);
    static Subgroup trivial(const Group& group);
    static Subgroup full(const Group& group);

    const Group& group() const { return group_; }
    const std::vector<std::int64_t>& element_indices() const { return elem_idx_; }
    const std::vector<GroupElement>& generators() const { return gens_; }
    std::int64_t size() const { return static_cast<std::int64_t>(elem_idx_.size()); }

    std::vector<GroupElement> elements() const;
    bool contains_index(std::int64_t index) const;
    bool contains(const GroupElement& x) const { return contains_index(group_.index_of(x)); }
    // Position of an element inside the sorted element list; tables over the
    // subgroup (characters, quadratic characters) are aligned with it.
    std::size_t position_of_index(std::int64_t index) const;
    std::size_t position_of(const GroupElement& x) const {
        return position_of_index(group_.index_of(x));
    }

    friend bool operator==(const Subgroup& a, const Subgroup& b) {
        return a.group_ == b.group_ && a.elem_idx_ == b.elem_idx_;
    }
    friend bool operator!=(const Subgroup& a, const Subgroup& b) { return !(a == b); }

  private:
    Group group_;
    std::vector<std::int64_t> elem_idx_;  // sorted
    std::vector<GroupElement> gens_;
};

// Closure of a set of generators inside the parent group, as sorted indices.
std::vector<std::int64_t> closure_indices(const Group& group,
                                          const std::vector<std::int64_t>& generator_indices);

// Greedy minimal generating set for a subgroup given by its element indices.
std::vector<GroupElement> minimal_generators(const Group& group,
                                             const std::vector<std::int64_t>& element_indices);

// All subgroups of A, exactly once, sorted by cardinality then by
// lexicographic element list. Cyclic subgroups are closed under pairwise
// joins until a fixpoint; every subgroup is a join of cyclic ones.
std::vector<Subgroup> enumerate_subgroups(const Group& group,
                                          std::int64_t bound = kDefaultEnumerationBound);

// All subgroups of the subgroup spanned by `universe_indices` (which must be
// closed). Same order conventions as enumerate_subgroups; no bound check.
std::vector<std::vector<std::int64_t>> subgroups_within(
    const Group& group, const std::vector<std::int64_t>& universe_indices);

// H^perp = { xi : <x, xi> = 1 for all x in H }, a subgroup of the dual
// (returned over the same Group under the canonical identification).
// Satisfies #H * #H^perp = N.
Subgroup annihilator(const Subgroup& h);

// Basis g_1..g_m with orders e_1..e_m such that H = <g_1> x ... x <g_m>,
// plus coordinates for every element of H (aligned with H's element list).
struct CyclicDecomposition {
    std::vector<std::int64_t> orders;
    std::vector<GroupElement> basis;
    std::vector<std::vector<std::int64_t>> coords;  // coords[i] for H.element_indices()[i]

    const std::vector<std::int64_t>& coords_at(std::size_t position) const {
        return coords[position];
    }
};

CyclicDecomposition cyclic_decompose(const Subgroup& h);

// First xi in canonical dual order with <x, xi> = chi(x) for all x in H.
// chi is a table aligned with H's element list; non-multiplicative tables
// are rejected with "not a character".
DualElement extend_character(const Subgroup& h, const std::vector<PhaseExp>& chi);

}  // namespace stabforge
