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

#include "stabforge/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <set>

#include "stabforge/oracle.hpp"

namespace stabforge {

WaveFunction random_state(const Group& group, Rng& rng) {
    Eigen::VectorXcd amp(group.order());
    for (Eigen::Index i = 0; i < amp.size(); ++i)
        amp[i] = std::complex<double>(rng.normal(), rng.normal());
    amp /= amp.norm();
    return WaveFunction(group, std::move(amp));
}

WaveFunction random_nonstabilizer_state(const Group& group, Rng& rng, double tol) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        WaveFunction psi = random_state(group, rng);
        if (!is_sstate(psi, tol)) return psi;
    }
    throw std::runtime_error("rejection sampling failed to avoid stabilizer states");
}

DensityOperator random_density(const Group& group, Rng& rng) {
    const std::int64_t n = group.order();
    Eigen::MatrixXcd b(n, n);
    for (std::int64_t r = 0; r < n; ++r)
        for (std::int64_t c = 0; c < n; ++c) b(r, c) = std::complex<double>(rng.normal(), rng.normal());
    Eigen::MatrixXcd m = b * b.adjoint();
    m /= m.trace().real();
    return DensityOperator(group, std::move(m));
}

namespace {

struct SkipSuite {
    std::string reason;
};

struct CheckContext {
    std::int64_t checks = 0;
    std::string notes;

    void require(bool cond, const std::string& msg) {
        ++checks;
        if (!cond) throw std::runtime_error(msg);
    }
    void note(const std::string& msg) {
        if (!notes.empty()) notes += "; ";
        notes += msg;
    }
};

constexpr std::int64_t kExhaustiveBound = 16;   // pairwise/bilinear sweeps
constexpr std::int64_t kOracleBound = 12;       // brute-force projector oracle
constexpr std::int64_t kStateSweepCap = 20000;  // full state enumerations

double phase_distance(std::complex<double> a, std::complex<double> b) { return std::abs(a - b); }

void suite_group_core(const Group& group, const Config& config, CheckContext& ctx) {
    const std::int64_t n = group.order();
    if (n > config.enumeration_bound) throw SkipSuite{"enumeration bound exceeded"};

    if (n <= kExhaustiveBound) {
        for (std::int64_t xi = 0; xi < n; ++xi) {
            const DualElement dxi = group.dual_element(xi);
            for (std::int64_t a = 0; a < n; ++a) {
                const GroupElement xa = group.element(a);
                for (std::int64_t b = 0; b < n; ++b) {
                    const GroupElement xb = group.element(b);
                    ctx.require(group.pairing(group.add(xa, xb), dxi) ==
                                    group.pairing(xa, dxi) * group.pairing(xb, dxi),
                                "pairing is not additive in the element");
                    ctx.require(group.pairing(xa, group.add(dxi, group.dual_element(b))) ==
                                    group.pairing(xa, dxi) *
                                        group.pairing(xa, group.dual_element(b)),
                                "pairing is not additive in the character");
                }
            }
        }
    } else {
        ctx.note("bilinearity sweep skipped (N > 16)");
    }

    const auto subgroups = enumerate_subgroups(group, config.enumeration_bound);
    if (n <= kExhaustiveBound) {
        const auto brute = oracle::bruteforce_subgroups(group);
        ctx.require(brute.size() == subgroups.size(),
                    "subgroup enumeration disagrees with the subset-closure oracle");
        for (std::size_t i = 0; i < brute.size(); ++i)
            ctx.require(brute[i] == subgroups[i].element_indices(),
                        "subgroup lists disagree with the subset-closure oracle");
    } else {
        ctx.note("subset-closure subgroup oracle skipped (N > 16)");
    }

    for (const auto& h : subgroups) {
        const Subgroup ann = annihilator(h);
        ctx.require(h.size() * ann.size() == n, "#H * #H_perp != N");
        const Subgroup back = annihilator(ann);
        ctx.require(back == h, "double annihilator is not H");

        const auto dec = cyclic_decompose(h);
        std::int64_t prod = 1;
        for (std::int64_t e : dec.orders) prod *= e;
        ctx.require(prod == h.size(), "cyclic decomposition has the wrong cardinality");
        // Coordinates form a group isomorphism.
        const auto& idx = h.element_indices();
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < idx.size(); ++b) {
                const GroupElement xa = group.element(idx[a]);
                const GroupElement xb = group.element(idx[b]);
                const auto& ca = dec.coords_at(a);
                const auto& cb = dec.coords_at(b);
                const auto& cab = dec.coords_at(h.position_of(group.add(xa, xb)));
                for (std::size_t i = 0; i < dec.orders.size(); ++i)
                    ctx.require((ca[i] + cb[i]) % dec.orders[i] == cab[i],
                                "cyclic coordinates are not additive");
            }
    }

    // Every restriction of a global character extends back to it.
    for (const auto& h : subgroups) {
        for (std::int64_t xi = 0; xi < std::min<std::int64_t>(n, 8); ++xi) {
            const DualElement dxi = group.dual_element(xi);
            std::vector<PhaseExp> chi;
            for (std::int64_t i : h.element_indices())
                chi.push_back(group.pairing(group.element(i), dxi));
            const DualElement ext = extend_character(h, chi);
            for (std::size_t p = 0; p < chi.size(); ++p)
                ctx.require(group.pairing(group.element(h.element_indices()[p]), ext) == chi[p],
                            "extended character does not restrict back");
        }
    }
}

void suite_quadratic(const Group& group, const Config& config, CheckContext& ctx) {
    if (group.order() > config.enumeration_bound) throw SkipSuite{"enumeration bound exceeded"};
    // Validating every member of Ch2(H) costs #Ch2(H) * #H^2 phase checks.
    std::int64_t sweep_cost = 0;
    for (const auto& h : enumerate_subgroups(group, config.enumeration_bound))
        sweep_cost += ch2_count(h) * h.size() * h.size();
    if (sweep_cost > 30'000'000) throw SkipSuite{"exhaustive Ch2 sweep too large"};
    for (const auto& h : enumerate_subgroups(group, config.enumeration_bound)) {
        const auto dec = cyclic_decompose(h);
        const auto syms = enumerate_sym(h, dec);
        ctx.require(static_cast<std::int64_t>(syms.size()) == sym_count(h),
                    "enumerate_sym cardinality disagrees with the product formula");

        if (h.size() <= 8) {
            // Independent count: filter every candidate matrix by the
            // symmetry of its bicharacter.
            const std::size_t m = dec.orders.size();
            std::int64_t symmetric = 0;
            std::vector<std::int64_t> radix;
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t k = 0; k < m; ++k)
                    radix.push_back(std::gcd(dec.orders[j], dec.orders[k]));
            std::vector<std::int64_t> digits(radix.size(), 0);
            bool more = true;
            while (more && !radix.empty()) {
                std::vector<std::vector<std::int64_t>> c(m, std::vector<std::int64_t>(m, 0));
                bool ok = true;
                for (std::size_t j = 0; j < m && ok; ++j)
                    for (std::size_t k = 0; k < m && ok; ++k) {
                        const std::int64_t ej = dec.orders[j];
                        const std::int64_t g = std::gcd(ej, dec.orders[k]);
                        c[j][k] = (ej / g) * digits[j * m + k];
                    }
                for (std::size_t j = 0; j < m && ok; ++j)
                    for (std::size_t k = 0; k < m && ok; ++k)
                        ok = ((c[j][k] * dec.orders[k] - c[k][j] * dec.orders[j]) %
                                  (dec.orders[j] * dec.orders[k]) ==
                              0);
                if (ok) ++symmetric;
                more = false;
                for (std::size_t i = radix.size(); i-- > 0;) {
                    if (++digits[i] < radix[i]) {
                        more = true;
                        break;
                    }
                    digits[i] = 0;
                }
            }
            if (radix.empty()) symmetric = 1;
            ctx.require(symmetric == sym_count(h),
                        "symmetric filter disagrees with enumerate_sym");
        }

        const auto ch2 = enumerate_ch2(h);
        ctx.require(static_cast<std::int64_t>(ch2.size()) == h.size() * sym_count(h),
                    "#Ch2(H) != #H * #Sym(H)");
        ++ctx.checks;  // constructor-validated defining relation for each member

        for (const auto& hh : ch2) {
            const SymHom recovered = beta_of(hh);
            ctx.require(recovered == hh.beta(), "beta_of does not match the stored beta");
        }

        // Group structure: products stay inside, betas add; conjugate inverts.
        const std::size_t step = std::max<std::size_t>(1, ch2.size() / 6);
        for (std::size_t a = 0; a < ch2.size(); a += step)
            for (std::size_t b = 0; b < ch2.size(); b += step) {
                const Char2 prod = ch2[a].mul(ch2[b]);
                ctx.require(prod.beta() == ch2[a].beta().add(ch2[b].beta()),
                            "beta of a product is not the sum of betas");
                const Char2 unit = prod.mul(prod.conjugate());
                for (const auto& v : unit.values())
                    ctx.require(v.is_one(), "h * conj(h) is not the constant 1");
            }

        // Same beta <=> tables differ by a first-degree character.
        for (std::size_t a = 0; a + 1 < std::min<std::size_t>(ch2.size(), 12); ++a)
            for (std::size_t b = a + 1; b < std::min<std::size_t>(ch2.size(), 12); ++b) {
                if (!(ch2[a].beta() == ch2[b].beta())) continue;
                std::vector<PhaseExp> ratio;
                for (std::size_t i = 0; i < ch2[a].values().size(); ++i)
                    ratio.push_back(ch2[a].values()[i] * ch2[b].values()[i].conj());
                extend_character(h, ratio);  // throws unless multiplicative
                ++ctx.checks;
            }
    }
}

void suite_phase_space(const Group& group, const Config& config, CheckContext& ctx) {
    const std::int64_t n = group.order();
    if (n > config.enumeration_bound) throw SkipSuite{"enumeration bound exceeded"};

    std::int64_t expected = 0;
    for (const auto& h : enumerate_subgroups(group, config.enumeration_bound))
        expected += sym_count(h);
    if (expected > kStateSweepCap) throw SkipSuite{"too many maximal isotropic subgroups"};

    const auto isotropics = enumerate_maximal_isotropic(group, config.enumeration_bound);
    ctx.require(static_cast<std::int64_t>(isotropics.size()) == expected,
                "maximal isotropic count != sum of #Sym(H)");

    std::set<std::vector<std::int64_t>> distinct;
    for (const auto& k : isotropics) {
        ctx.require(k.size() == n, "maximal isotropic subgroup must have N points");
        distinct.insert(k.element_indices());
        const auto pts = k.elements();
        for (std::size_t a = 0; a < pts.size(); ++a)
            for (std::size_t b = a; b < pts.size(); ++b)
                ctx.require(symplectic_form(group, pts[a], pts[b]).is_one(),
                            "emitted subgroup is not isotropic");

        const IsotropicSubgroup back = pair_from_isotropic(group, pts);
        ctx.require(back.base() == k.base() && back.beta() == k.beta(),
                    "pair_from_isotropic does not invert isotropic_from_pair");

        if (n <= kExhaustiveBound) {
            for (std::int64_t i = 0; i < n * n; ++i) {
                if (k.contains_index(i)) continue;
                const PhasePoint outside = phase_point(group, i);
                bool breaks = false;
                for (const auto& w : pts)
                    if (!symplectic_form(group, outside, w).is_one()) {
                        breaks = true;
                        break;
                    }
                ctx.require(breaks, "an outside point keeps the subgroup isotropic");
            }
        }
    }
    ctx.require(distinct.size() == isotropics.size(), "distinct (H,beta) gave equal subgroups");
    if (n > kExhaustiveBound) ctx.note("maximality scan skipped (N > 16)");
}

void suite_weyl(const Group& group, const Config& config, CheckContext& ctx) {
    const std::int64_t n = group.order();
    Rng rng(config.seed ^ 0x5eedULL);

    // Composition law, checked on the action (dense-matrix form lives in
    // the unit tests).
    const WaveFunction probe = random_state(group, rng);
    const std::int64_t pair_cap = (n <= 8) ? n * n : 16;
    for (std::int64_t i = 0; i < pair_cap; ++i) {
        const PhasePoint z =
            (n <= 8) ? phase_point(group, i) : phase_point(group, rng.below(n * n));
        for (std::int64_t j = 0; j < pair_cap; ++j) {
            const PhasePoint w =
                (n <= 8) ? phase_point(group, j) : phase_point(group, rng.below(n * n));
            const auto [phase, zw] = shift_compose_phase(group, z, w);
            const Eigen::VectorXcd lhs =
                shift_apply(z, shift_apply(w, probe)).amplitudes();
            const Eigen::VectorXcd rhs =
                phase.value() * shift_apply(zw, probe).amplitudes();
            ctx.require((lhs - rhs).norm() <= 1e-12, "composition law fails on the action");
        }
    }

    for (int trial = 0; trial < 6; ++trial) {
        const WaveFunction phi = random_state(group, rng);
        const WaveFunction psi = random_state(group, rng);
        const PhasePoint z = phase_point(group, rng.below(n * n));
        ctx.require(std::abs(shift_apply(z, phi).norm() - phi.norm()) <= 1e-12,
                    "shift is not unitary");

        const CSTField v = cst(phi, psi);
        ctx.require(std::abs(v.table().squaredNorm() / static_cast<double>(n) - 1.0) <= 1e-9,
                    "Parseval identity fails");
        ctx.require(phase_distance(v.at(PhasePoint{group.zero(), group.dual_zero()}),
                                   inner(phi, psi)) <= 1e-12,
                    "V(0) != <phi, psi>");

        // Covariance in the second argument.
        const CSTField shifted = cst(phi, shift_apply(z, psi));
        const std::int64_t cov_cap = (n <= 4) ? n * n : 8;
        for (std::int64_t c = 0; c < cov_cap; ++c) {
            const PhasePoint w =
                (n <= 4) ? phase_point(group, c) : phase_point(group, rng.below(n * n));
            const std::complex<double> expect =
                (group.pairing(z.x, z.xi) * group.pairing(z.x, w.xi).conj()).value() *
                v.at(phase_sub(group, w, z));
            ctx.require(phase_distance(shifted.at(w), expect) <= 1e-9,
                        "covariance identity fails");
        }

        // Self-transform: bounded support from below, maximum set isotropic.
        const CSTField self = cst(phi, phi);
        ctx.require(static_cast<std::int64_t>(self.support(1e-9).size()) >= n,
                    "support of V_phi phi is smaller than N");
        std::vector<std::int64_t> max_set;
        for (std::int64_t i = 0; i < n * n; ++i)
            if (std::abs(std::abs(self.at(phase_point(group, i))) - 1.0) <= 1e-9)
                max_set.push_back(i);
        for (std::int64_t a : max_set)
            for (std::int64_t b : max_set) {
                const PhasePoint za = phase_point(group, a);
                const PhasePoint zb = phase_point(group, b);
                ctx.require(std::binary_search(
                                max_set.begin(), max_set.end(),
                                phase_index(group, phase_add(group, za, zb))),
                            "maximum-modulus set is not closed");
                ctx.require(symplectic_form(group, za, zb).is_one(),
                            "maximum-modulus set is not isotropic");
            }

        // Phase retrieval: V determines the state up to a global phase.
        const double theta = 2.0 * M_PI * rng.uniform();
        const WaveFunction rotated(group, (std::polar(1.0, theta) * phi.amplitudes()).eval());
        ctx.require((cst(rotated, rotated).table() - self.table()).cwiseAbs().maxCoeff() <=
                        1e-12,
                    "V_phi phi is not phase invariant");
        const auto matched = match_shift(phi, rotated, config.tolerance);
        ctx.require(matched && phase_index(group, matched->second) == 0,
                    "match_shift misses a pure phase rotation");
    }
}

void suite_stabilizer(const Group& group, const Config& config, CheckContext& ctx) {
    if (group.order() > config.enumeration_bound) throw SkipSuite{"enumeration bound exceeded"};
    if (count_states(group, config.enumeration_bound) > kStateSweepCap)
        throw SkipSuite{"state count too large for the exhaustive suite"};

    const Group& g = group;
    const std::int64_t n = g.order();
    const auto states = enumerate_states(g, config.enumeration_bound);
    ctx.require(static_cast<std::int64_t>(states.size()) ==
                    count_states(g, config.enumeration_bound),
                "enumerate_states disagrees with the counting formula");

    std::set<std::string> keys;
    for (const auto& entry : states) keys.insert(entry.cls.key());
    ctx.require(keys.size() == states.size(), "moduli keys are not pairwise distinct");

    std::vector<WaveFunction> waves;
    waves.reserve(states.size());
    for (const auto& entry : states) waves.push_back(sstate_synthesize(entry.desc));

    for (std::size_t i = 0; i < states.size(); ++i) {
        const auto& entry = states[i];
        // Round trip A: descriptor -> group -> descriptor.
        const SStateDescriptor back = sstate_from_group(entry.grp);
        ctx.require(canonical_class(back) == entry.cls,
                    "descriptor round trip leaves the moduli class");
        const WaveFunction wave_back = sstate_synthesize(back);
        ctx.require(std::abs(std::abs(inner(waves[i], wave_back)) - 1.0) <= 1e-12,
                    "round-tripped states are not phase-equal");
        // Round trip B: group -> descriptor -> group, exact.
        ctx.require(group_from_sstate(back) == entry.grp,
                    "group round trip is not exact");
        // Eq (3g): V_phi phi = alpha on K, 0 off K.
        const CSTField self = cst(waves[i], waves[i]);
        for (std::int64_t p = 0; p < n * n; ++p) {
            const PhasePoint z = phase_point(g, p);
            if (entry.grp.k().contains_index(p))
                ctx.require(phase_distance(self.at(z), entry.grp.alpha_at(z).value()) <= 1e-9,
                            "V_phi phi != alpha on K");
            else
                ctx.require(std::abs(self.at(z)) <= 1e-9, "V_phi phi != 0 off K");
        }
        // Recognition returns the same class.
        const auto recognized = is_sstate(waves[i], config.tolerance);
        ctx.require(recognized && canonical_class(*recognized) == entry.cls,
                    "is_sstate does not recognize a synthesized state");
    }

    // Uniqueness: the stabilization matrix is the identity.
    if (states.size() <= 400 || n <= 8) {
        for (std::size_t i = 0; i < states.size(); ++i)
            for (std::size_t j = 0; j < states.size(); ++j)
                ctx.require(verify_stabilized(states[j].grp, waves[i], config.tolerance) ==
                                (i == j),
                            "stabilization is not unique");
    } else {
        ctx.note("uniqueness matrix capped");
    }

    // Linear independence across classes; dependence inside a class.
    Rng rng(config.seed ^ 0x57a7eULL);
    if (n <= 8) {
        for (std::size_t i = 0; i < states.size(); ++i)
            for (std::size_t j = i + 1; j < states.size(); ++j)
                ctx.require(std::abs(inner(waves[i], waves[j])) <= 1.0 - 1e-6,
                            "distinct classes gave linearly dependent states");
    }
    for (std::size_t i = 0; i < std::min<std::size_t>(states.size(), 24); ++i) {
        const auto& entry = states[i];
        const Subgroup& h = entry.cls.h_subgroup;
        const GroupElement u =
            g.element(h.element_indices()[rng.below(h.element_indices().size())]);
        // Twisted representative of the same class.
        std::vector<PhaseExp> twisted;
        for (std::size_t p = 0; p < entry.cls.h.values().size(); ++p)
            twisted.push_back(entry.cls.h.values()[p] *
                              entry.cls.h.beta().bicharacter(
                                  u, g.element(h.element_indices()[p])));
        const SStateDescriptor other{g.add(entry.cls.y, u),
                                     Char2(h, std::move(twisted), entry.cls.h.beta())};
        ctx.require(moduli_equivalent(entry.desc, other),
                    "twisted representative left the class");
        ctx.require(std::abs(std::abs(inner(waves[i], sstate_synthesize(other))) - 1.0) <= 1e-12,
                    "equivalent descriptors gave independent states");
        ctx.require(other.h0.beta() == entry.desc.h0.beta(),
                    "equivalent descriptors disagree on beta");
    }

    // Fiber group axioms over each subgroup and coset.
    if (n <= 8) {
        for (const auto& h : enumerate_subgroups(g, config.enumeration_bound)) {
            const auto ch2 = enumerate_ch2(h);
            const GroupElement y = g.zero();
            std::vector<ModuliClass> fiber;
            for (const auto& hv : ch2)
                fiber.push_back(canonical_class(SStateDescriptor{y, hv}));
            const ModuliClass id = canonical_class(SStateDescriptor{y, trivial_char2(h)});
            for (const auto& a : fiber) {
                ctx.require(fiber_product(a, id) == a, "identity law fails in the fiber");
                const ModuliClass inv = canonical_class(
                    SStateDescriptor{a.y, a.h.conjugate()});
                ctx.require(fiber_product(a, inv) == id, "inverse law fails in the fiber");
            }
            const std::size_t cap = std::min<std::size_t>(fiber.size(), 8);
            for (std::size_t a = 0; a < cap; ++a)
                for (std::size_t b = 0; b < cap; ++b) {
                    ctx.require(fiber_product(fiber[a], fiber[b]) ==
                                    fiber_product(fiber[b], fiber[a]),
                                "fiber product is not commutative");
                    for (std::size_t c = 0; c < cap; ++c)
                        ctx.require(fiber_product(fiber_product(fiber[a], fiber[b]), fiber[c]) ==
                                        fiber_product(fiber[a],
                                                      fiber_product(fiber[b], fiber[c])),
                                    "fiber product is not associative");
                }
        }
    }
}

void suite_counting_oracle(const Group& group, const Config& config, CheckContext& ctx) {
    if (group.order() > kOracleBound) throw SkipSuite{"oracle bound exceeded (N > 12)"};
    const auto oracle_states = oracle::bruteforce_states(group);
    ctx.require(static_cast<std::int64_t>(oracle_states.size()) ==
                    count_states(group, config.enumeration_bound),
                "counting formula disagrees with the projector oracle");

    const auto states = enumerate_states(group, config.enumeration_bound);
    ctx.require(states.size() == oracle_states.size(),
                "enumerate_states disagrees with the projector oracle");

    // Each oracle eigenvector matches exactly one synthesized state.
    for (const auto& ostate : oracle_states) {
        std::size_t hits = 0;
        for (const auto& entry : states) {
            const WaveFunction wave = sstate_synthesize(entry.desc);
            const std::complex<double> ov = wave.amplitudes().dot(ostate.state);
            if (std::abs(std::abs(ov) - 1.0) <= 1e-9) ++hits;
        }
        ctx.require(hits == 1, "oracle state does not match exactly one enumerated state");
    }
}

void suite_wehrl(const Group& group, const Config& config, CheckContext& ctx) {
    const Group& g = group;
    const std::int64_t n = g.order();
    if (n > kDefaultEnumerationBound) throw SkipSuite{"beyond desk scale (N > 64)"};
    Rng rng(config.seed ^ 0x3e44bULL);
    const auto family = builtin_concave_family();

    // The Husimi sweep costs O(N^4) per evaluation; thin out the random
    // section on larger groups.
    const int random_trials = n <= 16 ? 8 : 3;
    const std::size_t family_cap = n <= 16 ? family.size() : 1;
    for (int trial = 0; trial < random_trials; ++trial) {
        const WaveFunction phi = random_state(g, rng);
        const DensityOperator rho = random_density(g, rng);
        husimi(phi, rho);  // throws when range/average invariants fail
        ++ctx.checks;
        fourier_husimi(phi, rho);  // throws when the identity fails
        ++ctx.checks;
        for (std::size_t fi = 0; fi < family_cap; ++fi) {
            const ConcaveFn& fn = family[fi];
            const MinReport min_report = verify_min_bound(fn, phi, rho, config.tolerance);
            ctx.require(min_report.entropy >= min_report.bound - config.tolerance,
                        "minimum bound violated");
            const BerezinReport bl = berezin_lieb(fn, phi, rho, config.tolerance);
            ctx.require(bl.gap >= -config.tolerance, "Berezin-Lieb gap negative");
            const MaxReport mx = verify_max_bound(fn, phi, rho, config.tolerance);
            ctx.require(mx.entropy <= mx.bound + config.tolerance, "maximum bound violated");
        }
    }

    // Stabilizer windows: exact minimizers, with witnesses.
    if (n <= config.enumeration_bound &&
        count_states(g, config.enumeration_bound) <= kStateSweepCap) {
        const auto states = enumerate_states(g, config.enumeration_bound);
        const std::size_t cap = std::min<std::size_t>(states.size(), 12);
        for (std::size_t i = 0; i < cap; ++i) {
            const WaveFunction phi = sstate_synthesize(states[i].desc);
            const PhasePoint z = phase_point(g, rng.below(n * n));
            const DensityOperator rho = DensityOperator::pure(shift_apply(z, phi));
            for (const auto& fn : family) {
                const MinReport report = verify_min_bound(fn, phi, rho, config.tolerance);
                ctx.require(report.equality, "stabilizer pair is not a minimizer");
                ctx.require(report.witness.has_value(), "minimizer witness missing");
            }
        }
    }

    // Random non-stabilizer windows: strictly positive gap. (For N = 1
    // every state is a stabilizer state, so there is nothing to sample.)
    for (int trial = 0; n >= 2 && trial < 4; ++trial) {
        const WaveFunction phi = random_nonstabilizer_state(g, rng, config.tolerance);
        const DensityOperator rho = DensityOperator::pure(phi);
        for (const auto& fn : family) {
            const MinReport report = verify_min_bound(fn, phi, rho, config.tolerance);
            ctx.require(report.entropy - report.bound > 1e-6,
                        "non-stabilizer window has no entropy gap");
        }
    }

    // Berezin-Lieb equality cases.
    for (const auto& fn : family) {
        const WaveFunction phi = random_state(g, rng);
        const BerezinReport chaotic =
            berezin_lieb(fn, phi, DensityOperator::maximally_mixed(g), config.tolerance);
        ctx.require(chaotic.equality, "maximally mixed state is not an equality case");
    }
    if (n >= 2 && n <= config.enumeration_bound &&
        count_states(g, config.enumeration_bound) <= kStateSweepCap) {
        const auto states = enumerate_states(g, config.enumeration_bound);
        const WaveFunction phi = sstate_synthesize(states[0].desc);
        const auto k_support = cst(phi, phi).support(1e-9);
        std::vector<PhasePoint> reps;
        for (std::int64_t i = 0; i < n * n && static_cast<std::int64_t>(reps.size()) < n; ++i) {
            const PhasePoint z = phase_point(g, i);
            bool fresh = true;
            for (const auto& r : reps)
                if (std::binary_search(k_support.begin(), k_support.end(),
                                       phase_index(g, phase_sub(g, z, r)))) {
                    fresh = false;
                    break;
                }
            if (fresh) reps.push_back(z);
        }
        ctx.require(static_cast<std::int64_t>(reps.size()) == n,
                    "coset representatives of K are incomplete");
        Eigen::MatrixXcd mix = Eigen::MatrixXcd::Zero(n, n);
        double total = 0;
        for (std::int64_t j = 0; j < n; ++j) total += static_cast<double>(j + 1);
        for (std::int64_t j = 0; j < n; ++j) {
            const Eigen::VectorXcd psi_j = shift_apply(reps[j], phi).amplitudes();
            mix += (static_cast<double>(j + 1) / total) * (psi_j * psi_j.adjoint());
        }
        const DensityOperator rho(g, std::move(mix));
        const BerezinReport bl =
            berezin_lieb(builtin_concave("shannon"), phi, rho, config.tolerance);
        ctx.require(bl.equality, "shift-basis mixture is not an equality case");
        if (n > 1)
            ctx.require(bl.shifts.has_value(), "equality diagnosis did not recover the shifts");
    }

    // Maximal entropy: delta window against the uniform state, both ways.
    if (n >= 2) {
        const WaveFunction delta = delta_state(g, g.zero());
        const WaveFunction flat = uniform_state(g);
        for (const auto& fn : family) {
            const MaxReport eq = verify_max_bound(fn, delta, DensityOperator::pure(flat),
                                                  config.tolerance);
            ctx.require(eq.equality, "delta/uniform pair does not reach N G(1/N)");
            const MaxReport ne = verify_max_bound(fn, delta, DensityOperator::pure(delta),
                                                  config.tolerance);
            ctx.require(!ne.equality, "delta/delta pair must not reach N G(1/N)");
        }
    }

    // Finite maximization: the constant vector maximizes the grid functional.
    if (n >= 2) {
        const auto& fn = builtin_concave("shannon");
        const double base = static_cast<double>(n) * fn.g(1.0 / static_cast<double>(n));
        for (int trial = 0; trial < 16; ++trial) {
            std::vector<double> t(static_cast<std::size_t>(n * n),
                                  1.0 / static_cast<double>(n));
            const std::size_t i = rng.below(t.size());
            std::size_t j = rng.below(t.size());
            while (j == i) j = rng.below(t.size());
            const double delta = 0.5 * rng.uniform() / static_cast<double>(n);
            t[i] += delta;
            t[j] -= delta;
            double val = 0;
            for (double v : t) val += fn.g(std::clamp(v, 0.0, 1.0));
            val /= static_cast<double>(n);
            ctx.require(val <= base + 1e-12, "perturbation increased the grid functional");
            if (delta > 0.01)
                ctx.require(val < base - 1e-9, "strict concavity margin missing");
        }
    }
}

}  // namespace

std::vector<SuiteResult> run_selftest(const Group& group, const Config& config) {
    using SuiteFn = void (*)(const Group&, const Config&, CheckContext&);
    const std::pair<const char*, SuiteFn> suites[] = {
        {"group_core", suite_group_core},   {"quadratic", suite_quadratic},
        {"phase_space", suite_phase_space}, {"weyl", suite_weyl},
        {"stabilizer", suite_stabilizer},   {"counting_oracle", suite_counting_oracle},
        {"wehrl", suite_wehrl},
    };

    std::vector<SuiteResult> results;
    for (const auto& [name, fn] : suites) {
        SuiteResult r;
        r.name = name;
        CheckContext ctx;
        const auto start = std::chrono::steady_clock::now();
        try {
            fn(group, config, ctx);
            r.pass = true;
        } catch (const SkipSuite& skip) {
            r.pass = true;
            r.skipped = true;
            r.message = skip.reason;
        } catch (const std::exception& e) {
            r.pass = false;
            r.message = e.what();
        }
        const auto stop = std::chrono::steady_clock::now();
        r.seconds = std::chrono::duration<double>(stop - start).count();
        r.checks = ctx.checks;
        if (r.message.empty()) r.message = ctx.notes;
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace stabforge
