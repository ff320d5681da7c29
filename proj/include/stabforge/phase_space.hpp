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
#include <utility>
#include <vector>

#include "stabforge/group.hpp"
#include "stabforge/quadratic.hpp"

namespace stabforge {

// Point (x, xi) of the phase space A x dual(A). Phase points are indexed
// x_index * N + xi_index, the lexicographic order with x major.
struct PhasePoint {
    GroupElement x;
    DualElement xi;

    friend bool operator==(const PhasePoint&, const PhasePoint&) = default;
};

std::int64_t phase_index(const Group& group, const PhasePoint& z);
PhasePoint phase_point(const Group& group, std::int64_t index);
PhasePoint phase_add(const Group& group, const PhasePoint& z, const PhasePoint& w);
PhasePoint phase_neg(const Group& group, const PhasePoint& z);
PhasePoint phase_sub(const Group& group, const PhasePoint& z, const PhasePoint& w);
std::string phase_point_string(const PhasePoint& z);

// Symplectic bicharacter sigma((x,xi),(y,eta)) = <y,xi> * conj(<x,eta>).
PhaseExp symplectic_form(const Group& group, const PhasePoint& z, const PhasePoint& w);

// Maximal isotropic subgroup of the phase space, canonically identified
// with a pair (H, beta): K = { (x, xi) : x in H, xi|_H = beta(x) }.
// #K = N always. For each x in H the fiber is a coset of H^perp whose
// canonical representative (first in dual order) is stored as a section.
class IsotropicSubgroup {
  public:
    IsotropicSubgroup(Subgroup base, SymHom beta, Subgroup ann,
                      std::vector<std::int64_t> element_indices,
                      std::vector<std::int64_t> section);

    const Group& group() const { return base_.group(); }
    const Subgroup& base() const { return base_; }          // H
    const SymHom& beta() const { return beta_; }
    const Subgroup& base_annihilator() const { return ann_; }  // H^perp

    const std::vector<std::int64_t>& element_indices() const { return elem_idx_; }
    std::int64_t size() const { return static_cast<std::int64_t>(elem_idx_.size()); }
    std::vector<PhasePoint> elements() const;

    bool contains_index(std::int64_t index) const;
    bool contains(const PhasePoint& z) const;
    std::size_t position_of(const PhasePoint& z) const;

    // Canonical lift xi with (x, xi) in K, first in dual order.
    DualElement section_at(const GroupElement& x) const;

    friend bool operator==(const IsotropicSubgroup& a, const IsotropicSubgroup& b) {
        return a.base_ == b.base_ && a.elem_idx_ == b.elem_idx_;
    }
    friend bool operator!=(const IsotropicSubgroup& a, const IsotropicSubgroup& b) {
        return !(a == b);
    }

  private:
    Subgroup base_;
    SymHom beta_;
    Subgroup ann_;
    std::vector<std::int64_t> elem_idx_;  // sorted phase indices, size N
    std::vector<std::int64_t> section_;   // xi index per H element position
};

IsotropicSubgroup isotropic_from_pair(const Subgroup& h, const SymHom& beta);

// Inverse direction: validates that the points form an isotropic subgroup
// of cardinality N and recovers (H, beta). Throws invalid_input_error with
// a specific message when the set is not a subgroup, not isotropic, or has
// the wrong cardinality.
IsotropicSubgroup pair_from_isotropic(const Group& group, const std::vector<PhasePoint>& points);

// All maximal isotropic subgroups, one per (H, beta), count = sum_H #Sym(H).
std::vector<IsotropicSubgroup> enumerate_maximal_isotropic(
    const Group& group, std::int64_t bound = kDefaultEnumerationBound);

}  // namespace stabforge
