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

#include "stabforge/selftest.hpp"
#include "stabforge/wehrl.hpp"

using namespace stabforge;

namespace {

PhasePoint pp(const Group& g, std::initializer_list<std::int64_t> x,
              std::initializer_list<std::int64_t> xi) {
    return PhasePoint{g.reduce(std::vector<std::int64_t>(x)),
                      as_dual(g.reduce(std::vector<std::int64_t>(xi)))};
}

}  // namespace

TEST_CASE("husimi tables") {
    const Group z2 = make_group({2});
    const WaveFunction d0 = delta_state(z2, z2.zero());
    const WaveFunction flat = uniform_state(z2);

    const HusimiField chaotic = husimi(d0, DensityOperator::maximally_mixed(z2));
    for (std::int64_t i = 0; i < 4; ++i)
        CHECK(chaotic.at(phase_point(z2, i)) == doctest::Approx(0.5));

    const HusimiField self = husimi(d0, DensityOperator::pure(d0));
    CHECK(self.at(pp(z2, {0}, {0})) == doctest::Approx(1.0));
    CHECK(self.at(pp(z2, {0}, {1})) == doctest::Approx(1.0));
    CHECK(self.at(pp(z2, {1}, {0})) == doctest::Approx(0.0));

    const HusimiField cross = husimi(d0, DensityOperator::pure(flat));
    for (std::int64_t i = 0; i < 4; ++i)
        CHECK(cross.at(phase_point(z2, i)) == doctest::Approx(0.5));

    const WaveFunction unnormalized(z2, (0.5 * d0.amplitudes()).eval());
    CHECK_THROWS_AS(husimi(unnormalized, DensityOperator::pure(d0)), invalid_input_error);
}

TEST_CASE("entropy values") {
    const Group z2 = make_group({2});
    const ConcaveFn shannon = builtin_concave("shannon");
    const ConcaveFn quadratic = builtin_concave("quadratic");

    const HusimiField indicator =
        husimi(delta_state(z2, z2.zero()), DensityOperator::pure(delta_state(z2, z2.zero())));
    CHECK(entropy(shannon, indicator) == doctest::Approx(0.0));
    CHECK(entropy(quadratic, indicator) == doctest::Approx(0.0));

    const HusimiField half =
        husimi(delta_state(z2, z2.zero()), DensityOperator::maximally_mixed(z2));
    CHECK(entropy(shannon, half) == doctest::Approx(std::log(2.0)));
}

TEST_CASE("minimum bound: equality exactly on shifted stabilizer pairs") {
    const Group z2 = make_group({2});
    const ConcaveFn shannon = builtin_concave("shannon");
    const WaveFunction d0 = delta_state(z2, z2.zero());
    const WaveFunction d1 = delta_state(z2, z2.reduce({1}));

    const MinReport eq = verify_min_bound(shannon, d0, DensityOperator::pure(d1));
    CHECK(eq.equality);
    REQUIRE(eq.witness.has_value());
    CHECK(eq.witness->z == pp(z2, {1}, {0}));

    const MinReport mixed = verify_min_bound(shannon, d0, DensityOperator::maximally_mixed(z2));
    CHECK(!mixed.equality);
    CHECK(mixed.entropy == doctest::Approx(std::log(2.0)));

    // A window that is not a stabilizer state keeps a strict gap.
    Eigen::VectorXcd v(2);
    v << 1.0 / std::sqrt(2.0), std::polar(1.0 / std::sqrt(2.0), M_PI / 5);
    const WaveFunction odd(z2, v);
    const WaveFunction plus = uniform_state(z2);
    const MinReport strict = verify_min_bound(shannon, plus, DensityOperator::pure(odd));
    CHECK(!strict.equality);
    CHECK(strict.entropy - strict.bound > 1e-6);

    // Linear G: equality holds trivially and no witness is attempted.
    const MinReport lin = verify_min_bound(builtin_concave("linear"), plus,
                                           DensityOperator::pure(odd));
    CHECK(lin.equality);
    CHECK(!lin.witness.has_value());
}

TEST_CASE("Berezin-Lieb inequality and equality structure") {
    const Group z2 = make_group({2});
    const ConcaveFn shannon = builtin_concave("shannon");
    Rng rng(31);

    const BerezinReport chaotic = berezin_lieb(
        shannon, random_state(z2, rng), DensityOperator::maximally_mixed(z2));
    CHECK(chaotic.equality);
    CHECK(chaotic.gap == doctest::Approx(0.0).epsilon(1e-9));

    // rho = 0.3 |d0><d0| + 0.7 |d1><d1| with window d0: the shift basis
    // (0,0), (1,0) lies in distinct cosets of K = {0} x dual.
    const WaveFunction d0 = delta_state(z2, z2.zero());
    const WaveFunction d1 = delta_state(z2, z2.reduce({1}));
    Eigen::MatrixXcd mix = 0.3 * d0.amplitudes() * d0.amplitudes().adjoint() +
                           0.7 * d1.amplitudes() * d1.amplitudes().adjoint();
    const BerezinReport split = berezin_lieb(shannon, d0, DensityOperator(z2, mix));
    CHECK(split.equality);
    CHECK(split.tr_g == doctest::Approx(-(0.3 * std::log(0.3) + 0.7 * std::log(0.7))));
    REQUIRE(split.shifts.has_value());
    REQUIRE(split.shifts->size() == 2);
    CHECK((*split.shifts)[0] == pp(z2, {1}, {0}));  // eigenvalue 0.7 first
    CHECK((*split.shifts)[1] == pp(z2, {0}, {0}));

    // Random full-rank rho against a random window: strict gap.
    const Group z3 = make_group({3});
    const BerezinReport strict =
        berezin_lieb(shannon, random_state(z3, rng), random_density(z3, rng));
    CHECK(strict.gap > 1e-6);

    // Linear G collapses both sides to the same linear functional.
    const BerezinReport lin = berezin_lieb(builtin_concave("linear"),
                                           random_state(z3, rng), random_density(z3, rng));
    CHECK(lin.equality);
    CHECK(!lin.shifts.has_value());
}

TEST_CASE("maximum bound and the disjoint-support criterion") {
    const Group z2 = make_group({2});
    const ConcaveFn shannon = builtin_concave("shannon");
    const WaveFunction d0 = delta_state(z2, z2.zero());
    const WaveFunction flat = uniform_state(z2);

    const MaxReport eq = verify_max_bound(shannon, d0, DensityOperator::pure(flat));
    CHECK(eq.equality);
    CHECK(eq.entropy == doctest::Approx(std::log(2.0)));
    CHECK(eq.bound == doctest::Approx(2.0 * shannon.g(0.5)));
    CHECK(eq.support_overlap == std::vector<std::int64_t>{0});

    const MaxReport ne = verify_max_bound(shannon, d0, DensityOperator::pure(d0));
    CHECK(!ne.equality);
    CHECK(ne.support_overlap.size() == 2);  // {0} x dual
}

TEST_CASE("Fourier transform of the Husimi function") {
    const Group z2 = make_group({2});
    const WaveFunction d0 = delta_state(z2, z2.zero());

    const FourierHusimiReport chaotic = fourier_husimi(d0, DensityOperator::maximally_mixed(z2));
    CHECK(chaotic.residual <= 1e-12);
    CHECK(std::abs(chaotic.fourier(0, 0) - 1.0) < 1e-12);
    for (std::int64_t i = 1; i < 4; ++i)
        CHECK(std::abs(chaotic.fourier(i % 2, i / 2)) < (i == 0 ? 1.0 : 1e-12));

    const FourierHusimiReport self = fourier_husimi(d0, DensityOperator::pure(d0));
    CHECK(self.residual <= 1e-12);
    CHECK(std::abs(self.product(0, 0) - 1.0) < 1e-12);  // rho~(0) phi~(0) = 1

    Rng rng(37);
    for (const char* spec : {"Z3", "Z2xZ2", "Z5"}) {
        const Group g = parse_group_spec(spec);
        for (int t = 0; t < 5; ++t) {
            const FourierHusimiReport r =
                fourier_husimi(random_state(g, rng), random_density(g, rng));
            CHECK(r.residual <= 1e-8);
        }
    }
}

TEST_CASE("built-in G family and the expression parser") {
    for (const auto& fn : builtin_concave_family()) {
        CHECK_NOTHROW(validate_concave(fn));
        CHECK(fn.strictly_concave);
        CHECK(!fn.linear);
        CHECK(fn.g(0.0) == doctest::Approx(0.0));
    }

    const ConcaveFn parsed = parse_concave("-t*log(t)");
    const ConcaveFn shannon = builtin_concave("shannon");
    for (double t : {0.0, 0.1, 0.35, 0.5, 0.99, 1.0})
        CHECK(parsed.g(t) == doctest::Approx(shannon.g(t)).epsilon(1e-12));
    CHECK(parsed.strictly_concave);

    const ConcaveFn quad = parse_concave("t - t^2");
    CHECK(quad.g(0.25) == doctest::Approx(0.1875));
    CHECK(quad.strictly_concave);

    const ConcaveFn lin = parse_concave("0.5*t");
    CHECK(lin.linear);
    CHECK(!lin.strictly_concave);

    CHECK_THROWS_AS(parse_concave("t^2"), invalid_input_error);      // convex
    CHECK_THROWS_AS(parse_concave("1 - t"), invalid_input_error);    // G(0) != 0
    CHECK_THROWS_AS(parse_concave("t +"), invalid_input_error);      // malformed
    CHECK_THROWS_AS(parse_concave("q"), invalid_input_error);        // unknown symbol
}

TEST_CASE("grid functional is maximized by the constant vector") {
    const ConcaveFn shannon = builtin_concave("shannon");
    const std::int64_t n = 3;
    const double base = static_cast<double>(n) * shannon.g(1.0 / n);
    Rng rng(41);
    for (int t = 0; t < 50; ++t) {
        std::vector<double> vec(static_cast<std::size_t>(n * n), 1.0 / n);
        const std::size_t i = rng.below(vec.size());
        std::size_t j = rng.below(vec.size());
        while (j == i) j = rng.below(vec.size());
        const double delta = 0.3 * rng.uniform() / n;
        vec[i] += delta;
        vec[j] -= delta;
        double val = 0;
        for (double v : vec) val += shannon.g(std::clamp(v, 0.0, 1.0));
        val /= static_cast<double>(n);
        CHECK(val <= base + 1e-12);
    }
}

TEST_CASE("husimi range and average invariants on random pairs") {
    // husimi() itself enforces 0 <= u <= 1 and mean 1 and throws otherwise.
    for (const char* spec : {"Z2", "Z3", "Z2xZ2", "Z2xZ4"}) {
        const Group g = parse_group_spec(spec);
        Rng rng(47);
        for (int t = 0; t < 500; ++t)
            CHECK_NOTHROW(husimi(random_state(g, rng), random_density(g, rng)));
    }
}

TEST_CASE("stabilizer windows minimize for every G in the family") {
    // Full shift orbits on the small groups, sampled orbits on the larger
    // ones; every window must reach G(1) exactly.
    for (const char* spec : {"Z2", "Z3", "Z4", "Z2xZ2"}) {
        const Group g = parse_group_spec(spec);
        const std::int64_t n = g.order();
        for (const auto& entry : enumerate_states(g)) {
            const WaveFunction phi = sstate_synthesize(entry.desc);
            for (std::int64_t zi = 0; zi < n * n; ++zi) {
                const DensityOperator rho =
                    DensityOperator::pure(shift_apply(phase_point(g, zi), phi));
                const HusimiField u = husimi(phi, rho);
                for (const auto& fn : builtin_concave_family())
                    CHECK(std::abs(entropy(fn, u) - fn.g(1.0)) <= 1e-9);
            }
        }
    }
    for (const char* spec : {"Z5", "Z6", "Z7", "Z8", "Z2xZ4", "Z2xZ2xZ2"}) {
        const Group g = parse_group_spec(spec);
        const std::int64_t n = g.order();
        Rng rng(43);
        const auto states = enumerate_states(g);
        for (int pick = 0; pick < 12; ++pick) {
            const auto& entry = states[rng.below(states.size())];
            const WaveFunction phi = sstate_synthesize(entry.desc);
            for (int s = 0; s < 6; ++s) {
                const PhasePoint z = phase_point(g, rng.below(n * n));
                const DensityOperator rho = DensityOperator::pure(shift_apply(z, phi));
                for (const auto& fn : builtin_concave_family()) {
                    const MinReport r = verify_min_bound(fn, phi, rho);
                    CHECK(r.equality);
                    REQUIRE(r.witness.has_value());
                    // The witness shift reproduces rho's eigenvector up to phase.
                    CHECK(std::abs(std::abs(inner(shift_apply(r.witness->z, phi),
                                                  shift_apply(z, phi))) -
                                   1.0) <= 1e-9);
                }
            }
        }
    }
}
