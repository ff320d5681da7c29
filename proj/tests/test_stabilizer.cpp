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

#include <doctest.h>

#include <cmath>
#include <set>

#include "stabforge/oracle.hpp"
#include "stabforge/selftest.hpp"
#include "stabforge/stabilizer.hpp"

using namespace stabforge;

namespace {

PhasePoint pp(const Group& g, std::initializer_list<std::int64_t> x,
              std::initializer_list<std::int64_t> xi) {
    return PhasePoint{g.reduce(std::vector<std::int64_t>(x)),
                      as_dual(g.reduce(std::vector<std::int64_t>(xi)))};
}

StabilizerGroup make_z2_group(const std::vector<PhasePoint>& pts,
                              const std::vector<std::int64_t>& alpha_exps) {
    const Group z2 = make_group({2});
    IsotropicSubgroup k = pair_from_isotropic(z2, pts);
    std::vector<PhaseExp> alpha;
    for (std::size_t i = 0; i < pts.size(); ++i)
        alpha.push_back(PhaseExp(alpha_exps[i], 4));
    // alpha entries follow the point order used here.
    std::vector<PhaseExp> aligned(alpha.size(), PhaseExp::one(4));
    for (std::size_t i = 0; i < pts.size(); ++i) aligned[k.position_of(pts[i])] = alpha[i];
    return StabilizerGroup(std::move(k), std::move(aligned));
}

}  // namespace

TEST_CASE("sstate_synthesize on one qubit") {
    const Group z2 = make_group({2});

    const SStateDescriptor point{z2.zero(), trivial_char2(Subgroup::trivial(z2))};
    CHECK((sstate_synthesize(point).amplitudes() - delta_state(z2, z2.zero()).amplitudes())
              .norm() == 0.0);

    const SStateDescriptor plus{z2.zero(), trivial_char2(Subgroup::full(z2))};
    const WaveFunction plus_wf = sstate_synthesize(plus);
    CHECK(plus_wf.amplitudes()[0].real() == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(plus_wf.amplitudes()[1].real() == doctest::Approx(1 / std::sqrt(2.0)));

    const SStateDescriptor quad{z2.zero(), char2_cyclic(2, 1)};
    const WaveFunction quad_wf = sstate_synthesize(quad);
    CHECK(quad_wf.amplitudes()[1].imag() == doctest::Approx(-1 / std::sqrt(2.0)));
    CHECK(std::abs(quad_wf.norm() - 1.0) < 1e-15);
}

TEST_CASE("group_from_sstate reproduces the Pauli stabilizers") {
    const Group z2 = make_group({2});

    // delta_0 -> G = {I, Z}: K = {0} x dual, alpha = 1.
    const StabilizerGroup gz =
        group_from_sstate({z2.zero(), trivial_char2(Subgroup::trivial(z2))});
    CHECK(gz.k().element_indices() == std::vector<std::int64_t>{0, 1});
    CHECK(gz.alpha()[0].is_one());
    CHECK(gz.alpha()[1].is_one());

    // |+> -> G = {I, X}.
    const StabilizerGroup gx =
        group_from_sstate({z2.zero(), trivial_char2(Subgroup::full(z2))});
    CHECK(gx.k().element_indices() == std::vector<std::int64_t>{0, 2});
    CHECK(gx.alpha()[1].is_one());

    // (1, -i)/sqrt2 -> G = {I, i W(1,1)}.
    const StabilizerGroup gy = group_from_sstate({z2.zero(), char2_cyclic(2, 1)});
    CHECK(gy.k().element_indices() == std::vector<std::int64_t>{0, 3});
    CHECK(gy.alpha_at(pp(z2, {1}, {1})) == PhaseExp(1, 4));  // i

    // Eigenvalue-1 check by dense matrices.
    const WaveFunction psi = sstate_synthesize({z2.zero(), char2_cyclic(2, 1)});
    const Eigen::MatrixXcd op =
        PhaseExp(1, 4).value() * oracle::dense_shift(z2, pp(z2, {1}, {1}));
    CHECK((op * psi.amplitudes() - psi.amplitudes()).norm() < 1e-15);
}

TEST_CASE("sstate_from_group walks the constructive steps") {
    const Group z2 = make_group({2});
    const std::vector<PhasePoint> zdual{pp(z2, {0}, {0}), pp(z2, {0}, {1})};
    const std::vector<PhasePoint> xline{pp(z2, {0}, {0}), pp(z2, {1}, {0})};

    // G = {I, X} -> |+>.
    const SStateDescriptor plus = sstate_from_group(make_z2_group(xline, {0, 0}));
    CHECK(plus.y == z2.zero());
    CHECK(plus.h0.support().size() == 2);
    CHECK(plus.h0.values()[1].is_one());

    // G = {I, Z} -> delta_0.
    const SStateDescriptor d0 = sstate_from_group(make_z2_group(zdual, {0, 0}));
    CHECK(d0.y == z2.zero());
    CHECK(d0.h0.support().size() == 1);

    // G = {I, -Z} -> delta_1.
    const SStateDescriptor d1 = sstate_from_group(make_z2_group(zdual, {0, 2}));
    CHECK(d1.y == z2.reduce({1}));
    CHECK((sstate_synthesize(d1).amplitudes() -
           delta_state(z2, z2.reduce({1})).amplitudes())
              .norm() < 1e-15);
}

TEST_CASE("invalid cocycles are rejected") {
    const Group z2 = make_group({2});
    // alpha(0,1) = zeta breaks alpha(0,0) = alpha(0,1)^2.
    CHECK_THROWS_AS(make_z2_group({pp(z2, {0}, {0}), pp(z2, {0}, {1})}, {0, 1}),
                    invalid_input_error);
}

TEST_CASE("verify_stabilized") {
    const Group z2 = make_group({2});
    const WaveFunction d0 = delta_state(z2, z2.zero());
    const WaveFunction plus = uniform_state(z2);
    const StabilizerGroup gz =
        make_z2_group({pp(z2, {0}, {0}), pp(z2, {0}, {1})}, {0, 0});
    const StabilizerGroup gx =
        make_z2_group({pp(z2, {0}, {0}), pp(z2, {1}, {0})}, {0, 0});

    CHECK(verify_stabilized(gz, d0));
    CHECK(!verify_stabilized(gx, d0));
    CHECK(verify_stabilized(gx, plus));

    const WaveFunction unnormalized(z2, (2.0 * d0.amplitudes()).eval());
    CHECK_THROWS_AS(verify_stabilized(gz, unnormalized), invalid_input_error);
}

TEST_CASE("is_sstate recognition") {
    const Group z2 = make_group({2});

    const auto plus = is_sstate(uniform_state(z2));
    REQUIRE(plus.has_value());
    CHECK(plus->h0.support().size() == 2);
    CHECK(plus->h0.values()[1].is_one());

    Eigen::VectorXcd v(2);
    v << 1.0 / std::sqrt(2.0), std::polar(1.0 / std::sqrt(2.0), M_PI / 5);
    CHECK(!is_sstate(WaveFunction(z2, v)).has_value());

    Eigen::VectorXcd w(2);
    w << 2.0 / std::sqrt(5.0), 1.0 / std::sqrt(5.0);
    CHECK(!is_sstate(WaveFunction(z2, w)).has_value());

    CHECK_THROWS_AS(is_sstate(WaveFunction(z2, Eigen::VectorXcd::Zero(2))),
                    invalid_input_error);

    // Support {0, 2} in Z4 with a -1 phase: a genuine subcharacter state.
    const Group z4 = make_group({4});
    Eigen::VectorXcd u = Eigen::VectorXcd::Zero(4);
    u[1] = 1.0 / std::sqrt(2.0);
    u[3] = -1.0 / std::sqrt(2.0);
    const auto rec = is_sstate(WaveFunction(z4, u));
    REQUIRE(rec.has_value());
    CHECK(rec->h0.support().element_indices() == std::vector<std::int64_t>{0, 2});
    CHECK(rec->y == z4.reduce({1}));

    // Support {0, 1} is not a subgroup of Z4.
    Eigen::VectorXcd nc = Eigen::VectorXcd::Zero(4);
    nc[0] = nc[1] = 1.0 / std::sqrt(2.0);
    CHECK(!is_sstate(WaveFunction(z4, nc)).has_value());
}

TEST_CASE("counting formula") {
    CHECK(count_states(make_group({2})) == 6);
    CHECK(count_states(make_group({3})) == 12);
    CHECK(count_states(make_group({4})) == 28);
    CHECK(count_states(make_group({2, 2})) == 60);
    CHECK(count_states(make_group({2, 2, 2})) == 1080);
    CHECK(count_states(make_group({1})) == 1);
    // Known qudit counts: p(p+1) for one qupit, p^2(p+1)(p^2+1) for two qutrits.
    CHECK(count_states(make_group({5})) == 30);
    CHECK(count_states(make_group({3, 3})) == 360);
    // Isomorphic presentations agree, and coprime factors multiply.
    CHECK(count_states(make_group({6})) == count_states(make_group({2, 3})));
    CHECK(count_states(make_group({12})) == count_states(make_group({4, 3})));
    CHECK(count_states(make_group({6})) ==
          count_states(make_group({2})) * count_states(make_group({3})));
}

TEST_CASE("enumeration matches the counting formula and the projector oracle") {
    for (const char* spec : {"Z2", "Z3", "Z2xZ2", "Z6"}) {
        const Group g = parse_group_spec(spec);
        const auto states = enumerate_states(g);
        CHECK(static_cast<std::int64_t>(states.size()) == count_states(g));

        std::set<std::string> keys;
        for (const auto& s : states) keys.insert(s.cls.key());
        CHECK(keys.size() == states.size());

        const auto ostates = oracle::bruteforce_states(g);
        REQUIRE(ostates.size() == states.size());
        for (const auto& o : ostates) {
            std::size_t hits = 0;
            for (const auto& s : states) {
                const std::complex<double> ov =
                    sstate_synthesize(s.desc).amplitudes().dot(o.state);
                if (std::abs(std::abs(ov) - 1.0) <= 1e-9) ++hits;
            }
            CHECK(hits == 1);
        }
    }
}

TEST_CASE("round trips and uniqueness, exhaustively on small groups") {
    for (const char* spec : {"Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6"}) {
        const Group g = parse_group_spec(spec);
        const auto states = enumerate_states(g);
        std::vector<WaveFunction> waves;
        for (const auto& s : states) waves.push_back(sstate_synthesize(s.desc));

        for (std::size_t i = 0; i < states.size(); ++i) {
            const SStateDescriptor back = sstate_from_group(states[i].grp);
            CHECK(canonical_class(back) == states[i].cls);
            CHECK(std::abs(std::abs(inner(waves[i], sstate_synthesize(back))) - 1.0) <= 1e-12);
            CHECK(group_from_sstate(back) == states[i].grp);
        }

        for (std::size_t i = 0; i < states.size(); ++i)
            for (std::size_t j = 0; j < states.size(); ++j)
                CHECK(verify_stabilized(states[j].grp, waves[i]) == (i == j));
    }
}

TEST_CASE("equivalent descriptors synthesize dependent states with equal beta") {
    const Group g = make_group({2, 2});
    const auto states = enumerate_states(g);
    Rng rng(23);
    for (std::size_t i = 0; i < states.size(); i += 7) {
        const auto& cls = states[i].cls;
        const Subgroup& h = cls.h_subgroup;
        const GroupElement u =
            g.element(h.element_indices()[rng.below(h.element_indices().size())]);
        std::vector<PhaseExp> twisted;
        for (std::size_t p = 0; p < cls.h.values().size(); ++p)
            twisted.push_back(cls.h.values()[p] *
                              cls.h.beta().bicharacter(u, g.element(h.element_indices()[p])));
        const SStateDescriptor other{g.add(cls.y, u), Char2(h, twisted, cls.h.beta())};

        CHECK(moduli_equivalent(states[i].desc, other));
        CHECK(std::abs(std::abs(inner(sstate_synthesize(states[i].desc),
                                      sstate_synthesize(other))) -
                       1.0) <= 1e-12);
        CHECK(other.h0.beta() == states[i].desc.h0.beta());
        // The induced stabilizer group is the class invariant.
        CHECK(group_from_sstate(other) == states[i].grp);
    }

    // Distinct classes give linearly independent states.
    for (std::size_t i = 0; i < states.size(); i += 11)
        for (std::size_t j = i + 1; j < states.size(); j += 5)
            CHECK(std::abs(inner(sstate_synthesize(states[i].desc),
                                 sstate_synthesize(states[j].desc))) <= 1.0 - 1e-6);
}

TEST_CASE("fiber product on one qubit") {
    const Group z2 = make_group({2});
    const Subgroup full = Subgroup::full(z2);

    const ModuliClass a = canonical_class({z2.zero(), char2_cyclic(2, 1)});
    const ModuliClass id = canonical_class({z2.zero(), trivial_char2(full)});

    CHECK(fiber_product(a, id) == a);

    // [(0, h_{p=1})]^2 = [(0, h^2)] with h^2 = (1, -1), a character.
    const ModuliClass sq = fiber_product(a, a);
    CHECK(sq.h.values()[1] == PhaseExp::minus_one(4));
    CHECK(sq.h.beta().is_zero());

    const ModuliClass inv = canonical_class({a.y, a.h.conjugate()});
    CHECK(fiber_product(a, inv) == id);

    const ModuliClass other_fiber = canonical_class({z2.zero(), trivial_char2(Subgroup::trivial(z2))});
    CHECK_THROWS_WITH_AS(fiber_product(a, other_fiber), "not in the same fiber",
                         invalid_input_error);
}

TEST_CASE("cocycle law holds on every enumerated stabilizer group") {
    for (const char* spec : {"Z4", "Z2xZ2"}) {
        const Group g = parse_group_spec(spec);
        for (const auto& s : enumerate_states(g)) {
            const auto& idx = s.grp.k().element_indices();
            for (std::int64_t a : idx)
                for (std::int64_t b : idx) {
                    const PhasePoint za = phase_point(g, a), zb = phase_point(g, b);
                    CHECK(s.grp.alpha_at(phase_add(g, za, zb)) ==
                          s.grp.alpha_at(za) * s.grp.alpha_at(zb) *
                              g.pairing(za.x, zb.xi).conj());
                }
        }
    }
}

TEST_CASE("Z2xZ2xZ2 state count matches the projector oracle") {
    const Group g = make_group({2, 2, 2});
    CHECK(count_states(g) == 1080);
    CHECK(oracle::bruteforce_states(g).size() == 1080);
}

TEST_CASE("self-transform of a subcharacter: #H conj(h0(-x)) on K, zero off") {
    for (const char* spec : {"Z4", "Z6", "Z2xZ2"}) {
        const Group g = parse_group_spec(spec);
        const std::int64_t n = g.order();
        for (const auto& h_sub : enumerate_subgroups(g)) {
            for (const auto& h : enumerate_ch2(h_sub)) {
                // Unnormalized subcharacter as a wave function.
                Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(n);
                for (std::int64_t i : h_sub.element_indices())
                    amp[i] = h.at(g.element(i)).value();
                const WaveFunction h0(g, amp);
                const CSTField v = cst(h0, h0);
                const IsotropicSubgroup k = isotropic_from_pair(h_sub, h.beta());
                const double scale = static_cast<double>(h_sub.size());

                for (std::int64_t i = 0; i < n * n; ++i) {
                    const PhasePoint z = phase_point(g, i);
                    if (k.contains_index(i))
                        CHECK(std::abs(v.at(z) -
                                       scale * std::conj(h.at(g.neg(z.x)).value())) <= 1e-9);
                    else
                        CHECK(std::abs(v.at(z)) <= 1e-9);
                }
                // Restricted to K and divided by #H, the table is a character
                // of second degree for beta'((x,xi))((y,eta)) = conj(<x,eta>).
                for (std::int64_t a : k.element_indices())
                    for (std::int64_t b : k.element_indices()) {
                        const PhasePoint za = phase_point(g, a), zb = phase_point(g, b);
                        const std::complex<double> lhs = v.at(phase_add(g, za, zb));
                        const std::complex<double> rhs =
                            v.at(za) * v.at(zb) * g.pairing(za.x, zb.xi).conj().value() /
                            scale;
                        CHECK(std::abs(lhs - rhs) <= 1e-9);
                    }
            }
        }
    }
}

TEST_CASE("cross transform of a shifted pair is supported on a coset of K") {
    for (const char* spec : {"Z3", "Z2xZ2"}) {
        const Group g = parse_group_spec(spec);
        const std::int64_t n = g.order();
        Rng rng(53);
        const auto states = enumerate_states(g);
        for (int pick = 0; pick < 6; ++pick) {
            const auto& entry = states[rng.below(states.size())];
            const WaveFunction phi = sstate_synthesize(entry.desc);
            const PhasePoint z = phase_point(g, rng.below(n * n));
            const WaveFunction psi(
                g, (std::polar(1.0, 2 * M_PI * rng.uniform()) *
                    shift_apply(z, phi).amplitudes())
                       .eval());
            const auto support = cst(phi, psi).support(1e-9);
            REQUIRE(static_cast<std::int64_t>(support.size()) == n);
            for (std::int64_t i : support)
                CHECK(entry.grp.k().contains_index(
                    phase_index(g, phase_sub(g, phase_point(g, i), z))));
        }
    }
}

TEST_CASE("recognition tolerates float dust and rejects real deviations") {
    const Group g = parse_group_spec("Z2xZ4");
    const auto states = enumerate_states(g);
    Rng rng(59);
    for (int pick = 0; pick < 8; ++pick) {
        const auto& entry = states[rng.below(states.size())];
        Eigen::VectorXcd amp = sstate_synthesize(entry.desc).amplitudes();
        Eigen::VectorXcd noise(amp.size());
        for (Eigen::Index i = 0; i < noise.size(); ++i)
            noise[i] = std::complex<double>(rng.normal(), rng.normal());
        noise /= noise.norm();

        Eigen::VectorXcd dusty = amp + 1e-13 * noise;
        dusty /= dusty.norm();
        const auto recognized = is_sstate(WaveFunction(g, dusty));
        REQUIRE(recognized.has_value());
        CHECK(canonical_class(*recognized) == entry.cls);

        Eigen::VectorXcd bent = amp + 1e-2 * noise;
        bent /= bent.norm();
        CHECK(!is_sstate(WaveFunction(g, bent)).has_value());
    }
}
