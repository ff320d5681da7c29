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

#include <set>

#include "stabforge/oracle.hpp"
#include "stabforge/phase_space.hpp"

using namespace stabforge;

namespace {

PhasePoint pp(const Group& g, std::initializer_list<std::int64_t> x,
              std::initializer_list<std::int64_t> xi) {
    return PhasePoint{g.reduce(std::vector<std::int64_t>(x)),
                      as_dual(g.reduce(std::vector<std::int64_t>(xi)))};
}

}  // namespace

TEST_CASE("symplectic form values") {
    const Group z2 = make_group({2});
    CHECK(symplectic_form(z2, pp(z2, {1}, {1}), pp(z2, {1}, {1})).is_one());
    CHECK(symplectic_form(z2, pp(z2, {1}, {0}), pp(z2, {0}, {1})) == PhaseExp::minus_one(4));
    CHECK(symplectic_form(z2, pp(z2, {1}, {0}), pp(z2, {1}, {0})).is_one());

    const Group z4 = make_group({4});
    for (std::int64_t a = 0; a < 4; ++a)
        for (std::int64_t b = 0; b < 4; ++b)
            CHECK(symplectic_form(z4, pp(z4, {a}, {0}), pp(z4, {b}, {0})).is_one());
}

TEST_CASE("isotropic subgroups from pairs on Z2") {
    const Group z2 = make_group({2});
    const Subgroup trivial = Subgroup::trivial(z2);
    const Subgroup full = Subgroup::full(z2);

    const IsotropicSubgroup delta = isotropic_from_pair(trivial, SymHom::zero(trivial));
    CHECK(delta.element_indices() == std::vector<std::int64_t>{0, 1});  // {0} x dual

    const IsotropicSubgroup flat = isotropic_from_pair(full, SymHom::zero(full));
    CHECK(flat.element_indices() == std::vector<std::int64_t>{0, 2});  // Z2 x {0}

    const SymHom mult1(full, cyclic_decompose(full), {{1}});
    const IsotropicSubgroup graph = isotropic_from_pair(full, mult1);
    CHECK(graph.element_indices() == std::vector<std::int64_t>{0, 3});  // {(0,0),(1,1)}

    CHECK(graph.contains(pp(z2, {1}, {1})));
    CHECK(!graph.contains(pp(z2, {1}, {0})));
}

TEST_CASE("pair_from_isotropic inverts and validates") {
    const Group z2 = make_group({2});
    const Group z4 = make_group({4});

    const IsotropicSubgroup k =
        pair_from_isotropic(z2, {pp(z2, {0}, {0}), pp(z2, {1}, {1})});
    CHECK(k.base() == Subgroup::full(z2));
    CHECK(k.beta().coeffs() == std::vector<std::vector<std::int64_t>>{{1}});

    const IsotropicSubgroup k2 = pair_from_isotropic(z2, {pp(z2, {0}, {0}), pp(z2, {0}, {1})});
    CHECK(k2.base() == Subgroup::trivial(z2));

    // The diagonal of Z4 is the graph of multiplication by one.
    const IsotropicSubgroup diag = pair_from_isotropic(
        z4, {pp(z4, {0}, {0}), pp(z4, {1}, {1}), pp(z4, {2}, {2}), pp(z4, {3}, {3})});
    CHECK(diag.base() == Subgroup::full(z4));
    CHECK(diag.beta().bicharacter(z4.reduce({1}), z4.reduce({1})) == PhaseExp(2, 8));

    CHECK_THROWS_WITH_AS(pair_from_isotropic(z2, {pp(z2, {0}, {0})}),
                         "wrong cardinality: a maximal isotropic subgroup has N points",
                         invalid_input_error);
    CHECK_THROWS_WITH_AS(
        pair_from_isotropic(z2, {pp(z2, {1}, {1}), pp(z2, {0}, {1})}),
        "not a subgroup of phase space", invalid_input_error);
    const Group z22 = make_group({2, 2});
    CHECK_THROWS_WITH_AS(
        pair_from_isotropic(z22, {pp(z22, {0, 0}, {0, 0}), pp(z22, {1, 0}, {0, 0}),
                                  pp(z22, {0, 0}, {1, 0}), pp(z22, {1, 0}, {1, 0})}),
        "not isotropic", invalid_input_error);
    CHECK_THROWS_WITH_AS(
        pair_from_isotropic(
            z4, {pp(z4, {0}, {0}), pp(z4, {1}, {1}), pp(z4, {2}, {2}), pp(z4, {3}, {0})}),
        "not a subgroup of phase space", invalid_input_error);
}

TEST_CASE("maximal isotropic enumeration counts") {
    CHECK(enumerate_maximal_isotropic(make_group({2})).size() == 3);
    CHECK(enumerate_maximal_isotropic(make_group({3})).size() == 4);
    CHECK(enumerate_maximal_isotropic(make_group({2, 2})).size() == 15);
}

TEST_CASE("enumeration agrees with the doubled-group brute force") {
    for (const char* spec : {"Z2", "Z3", "Z4", "Z2xZ2", "Z6"}) {
        const Group g = parse_group_spec(spec);
        const auto fast = enumerate_maximal_isotropic(g);
        const auto brute = oracle::bruteforce_maximal_isotropic(g);
        REQUIRE(fast.size() == brute.size());
        std::set<std::vector<std::int64_t>> fast_sets;
        for (const auto& k : fast) fast_sets.insert(k.element_indices());
        for (const auto& k : brute) CHECK(fast_sets.count(k) == 1);
    }
}

TEST_CASE("every emitted subgroup is isotropic, maximal, and round-trips") {
    for (const char* spec : {"Z4", "Z2xZ4", "Z3xZ3"}) {
        const Group g = parse_group_spec(spec);
        const std::int64_t n = g.order();
        std::set<std::vector<std::int64_t>> seen;
        for (const auto& k : enumerate_maximal_isotropic(g)) {
            CHECK(k.size() == n);
            CHECK(seen.insert(k.element_indices()).second);
            const auto pts = k.elements();
            for (std::size_t a = 0; a < pts.size(); ++a)
                for (std::size_t b = a; b < pts.size(); ++b)
                    CHECK(symplectic_form(g, pts[a], pts[b]).is_one());

            const IsotropicSubgroup back = pair_from_isotropic(g, pts);
            CHECK(back.base() == k.base());
            CHECK(back.beta() == k.beta());

            for (std::int64_t i = 0; i < n * n; ++i) {
                if (k.contains_index(i)) continue;
                bool breaks = false;
                for (const auto& w : pts)
                    if (!symplectic_form(g, phase_point(g, i), w).is_one()) {
                        breaks = true;
                        break;
                    }
                CHECK(breaks);
            }
        }
    }
}
