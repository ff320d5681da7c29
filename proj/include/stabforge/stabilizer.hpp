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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stabforge/phase_space.hpp"
#include "stabforge/weyl.hpp"

namespace stabforge {

// Stabilizer group { alpha(z) W(z) : z in K } for a maximal isotropic K and
// a cocycle alpha satisfying
//   alpha(z + w) = alpha(z) alpha(w) conj(<x_z, eta_w>)
// for all z = (x, xi), w = (y, eta) in K. Fixes exactly one state.
class StabilizerGroup {
  public:
    StabilizerGroup(IsotropicSubgroup k, std::vector<PhaseExp> alpha);

    const Group& group() const { return k_.group(); }
    const IsotropicSubgroup& k() const { return k_; }
    const std::vector<PhaseExp>& alpha() const { return alpha_; }
    PhaseExp alpha_at(const PhasePoint& z) const { return alpha_[k_.position_of(z)]; }

    friend bool operator==(const StabilizerGroup& a, const StabilizerGroup& b) {
        return a.k_ == b.k_ && a.alpha_ == b.alpha_;
    }
    friend bool operator!=(const StabilizerGroup& a, const StabilizerGroup& b) {
        return !(a == b);
    }

  private:
    IsotropicSubgroup k_;
    std::vector<PhaseExp> alpha_;
};

// Data of the wave function phi(x) = (1/sqrt(#H)) h0(x - y): a translation
// and a subcharacter of second degree.
struct SStateDescriptor {
    GroupElement y;
    SubChar2 h0;

    double normalization() const;
};

// Class of (y, h) under (y, h) ~ (y + u, h * beta(u)) for u in H, with the
// canonical representative: minimal y in canonical order, h re-based.
struct ModuliClass {
    Subgroup h_subgroup;
    GroupElement y;
    Char2 h;

    std::string key() const;

    friend bool operator==(const ModuliClass& a, const ModuliClass& b) {
        return a.h_subgroup == b.h_subgroup && a.y == b.y && a.h == b.h;
    }
    friend bool operator!=(const ModuliClass& a, const ModuliClass& b) { return !(a == b); }
};

ModuliClass canonical_class(const SStateDescriptor& desc);
SStateDescriptor descriptor_of(const ModuliClass& cls);
bool moduli_equivalent(const SStateDescriptor& a, const SStateDescriptor& b);

WaveFunction sstate_synthesize(const SStateDescriptor& desc);

// Forward direction: K from (H, beta), alpha(x, xi) = conj(h0(-x) <y, xi>).
StabilizerGroup group_from_sstate(const SStateDescriptor& desc);

// Backward direction: (i) solve <y, xi> = conj(alpha(0, xi)) on H^perp,
// (ii) h(-x) = conj(alpha(x, xi) <y, xi>) for any lift xi (lift
// independence is checked), (iii) extend by zero.
SStateDescriptor sstate_from_group(const StabilizerGroup& g);

// True iff phi is a common eigenvector with eigenvalue 1 of all
// alpha(z) W(z), z in K. Requires |phi| = 1.
bool verify_stabilized(const StabilizerGroup& g, const WaveFunction& phi, double tol = 1e-9);

// Recognition: support must be a coset of a subgroup with constant modulus
// and the translated phase table must be a character of second degree.
// Returns the canonical descriptor, or nullopt.
std::optional<SStateDescriptor> is_sstate(const WaveFunction& phi, double tol = 1e-9);

struct EnumeratedState {
    ModuliClass cls;
    SStateDescriptor desc;
    StabilizerGroup grp;
};

// One entry per moduli class, over all subgroups H in canonical order,
// coset representatives in canonical order, Ch2(H) in enumeration order.
std::vector<EnumeratedState> enumerate_states(const Group& group,
                                              std::int64_t bound = kDefaultEnumerationBound);

// Streaming variant in the same canonical order; nothing is retained, so
// large enumerations run with flat memory.
void for_each_state(const Group& group, std::int64_t bound,
                    const std::function<void(const EnumeratedState&)>& fn);

// #A * sum_H #Sym(H), the cardinality of the set of stabilizer states.
std::int64_t count_states(const Group& group, std::int64_t bound = kDefaultEnumerationBound);

// Fiber group law: [(y,h)] * [(y',h')] = [(y, h h' beta'(y-y'))] for classes
// over the same H with y - y' in H.
ModuliClass fiber_product(const ModuliClass& a, const ModuliClass& b);

}  // namespace stabforge
