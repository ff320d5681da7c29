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
#include <memory>
#include <optional>
#include <vector>

#include "stabforge/group.hpp"

namespace stabforge {

// Symmetric homomorphism beta: H -> dual(H), stored as an integer matrix c
// in the coordinates of a cyclic decomposition H = Z_{e_1} x ... x Z_{e_m}:
//   beta(x)_j = sum_k c[j][k] x_k  (mod e_j).
// Well-definedness requires c[j][k] to be a multiple of e_j/gcd(e_j,e_k),
// symmetry requires c[j][k]*e_k = c[k][j]*e_j (mod e_j*e_k); together these
// make the bicharacter beta(x)(y) symmetric.
class SymHom {
  public:
    SymHom(Subgroup domain, CyclicDecomposition dec,
           std::vector<std::vector<std::int64_t>> coeffs);
    // Shared-structure variant used by the enumerators: one subgroup and one
    // decomposition back arbitrarily many homomorphisms.
    SymHom(std::shared_ptr<const Subgroup> domain,
           std::shared_ptr<const CyclicDecomposition> dec,
           std::vector<std::vector<std::int64_t>> coeffs);

    static SymHom zero(const Subgroup& domain);
    static SymHom zero(const Subgroup& domain, const CyclicDecomposition& dec);

    const Subgroup& domain() const { return *domain_; }
    const CyclicDecomposition& decomposition() const { return *dec_; }
    const std::vector<std::vector<std::int64_t>>& coeffs() const { return c_; }

    // beta(x)(y) as an exact phase of the ambient group.
    PhaseExp bicharacter(const GroupElement& x, const GroupElement& y) const;

    // beta(x) as a character table over H (aligned with H's element list),
    // ready for extend_character.
    std::vector<PhaseExp> character_of(const GroupElement& x) const;

    SymHom add(const SymHom& other) const;
    SymHom negate() const;
    bool is_zero() const;

    friend bool operator==(const SymHom& a, const SymHom& b);
    friend bool operator!=(const SymHom& a, const SymHom& b) { return !(a == b); }

  private:
    std::shared_ptr<const Subgroup> domain_;
    std::shared_ptr<const CyclicDecomposition> dec_;
    std::vector<std::vector<std::int64_t>> c_;
};

// All of Sym(H), of cardinality prod_j e_j * prod_{j<k} gcd(e_j, e_k),
// in a deterministic order.
std::vector<SymHom> enumerate_sym(const Subgroup& h);
std::vector<SymHom> enumerate_sym(const Subgroup& h, const CyclicDecomposition& dec);
std::int64_t sym_count(const Subgroup& h);

// Character of second degree of H: a table h: H -> U(1) with
//   h(x+y) = h(x) h(y) beta(x)(y),
// stored over H's element list. Extended by zero outside H it doubles as a
// subcharacter of second degree of the ambient group (see eval()).
class Char2 {
  public:
    Char2(const Subgroup& support, std::vector<PhaseExp> values, SymHom beta);
    Char2(std::vector<PhaseExp> values, SymHom beta);  // support taken from beta

    const Subgroup& support() const { return beta_.domain(); }
    const std::vector<PhaseExp>& values() const { return values_; }
    const SymHom& beta() const { return beta_; }

    // Value at x in H; throws if x is outside the support.
    PhaseExp at(const GroupElement& x) const;
    // Extension by zero: nullopt encodes the exact value 0 outside H.
    std::optional<PhaseExp> eval(const GroupElement& x) const;

    Char2 mul(const Char2& other) const;   // pointwise product; betas add
    Char2 conjugate() const;               // pointwise inverse; beta negates

    friend bool operator==(const Char2& a, const Char2& b) {
        return a.support() == b.support() && a.values_ == b.values_;
    }
    friend bool operator!=(const Char2& a, const Char2& b) { return !(a == b); }

  private:
    std::vector<PhaseExp> values_;
    SymHom beta_;
};

// A subcharacter of second degree is a Char2 read through eval(): zero off
// its support subgroup, a character of second degree on it.
using SubChar2 = Char2;

std::optional<PhaseExp> subchar_eval(const SubChar2& h0, const GroupElement& x);

// h(x) = exp(pi i p x^2 (d+1) / d) on the full cyclic group Z_d, the
// character of second degree associated with multiplication by p.
Char2 char2_cyclic(std::int64_t d, std::int64_t p);

// Product construction: h(x) = prod_j h_j(x_j) * prod_{j<k} beta(x_j, x_k)
// in the coordinates of beta's cyclic decomposition of H.
Char2 char2_product(const SymHom& beta);

Char2 trivial_char2(const Subgroup& h);

// All of Ch2(H) as {chi * h_beta : chi in dual(H), beta in Sym(H)};
// cardinality #H * #Sym(H), verified duplicate-free.
std::vector<Char2> enumerate_ch2(const Subgroup& h);
std::int64_t ch2_count(const Subgroup& h);

// Recovers beta from a raw value table via
//   beta(x)(y) = h(x+y) h(x)^-1 h(y)^-1,
// validating the defining relation over all pairs. Throws
// "not a character of second degree" if the table fails.
SymHom beta_of(const Subgroup& h, const CyclicDecomposition& dec,
               const std::vector<PhaseExp>& values);
SymHom beta_of(const Char2& h);  // recomputes and cross-checks the stored beta

}  // namespace stabforge
