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

#include "stabforge/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace stabforge::oracle {

Eigen::MatrixXcd dense_shift(const Group& group, const PhasePoint& z) {
    const std::int64_t n = group.order();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (std::int64_t a = 0; a < n; ++a) {
        const GroupElement ea = group.element(a);
        m(a, group.index_of(group.sub(ea, z.x))) = group.pairing(ea, z.xi).value();
    }
    return m;
}

Group doubled_group(const Group& group) {
    std::vector<std::int64_t> orders = group.orders();
    orders.insert(orders.end(), group.orders().begin(), group.orders().end());
    return Group(orders);
}

std::vector<std::vector<std::int64_t>> bruteforce_subgroups(const Group& group) {
    const std::int64_t n = group.order();
    // Any subgroup of a group of order n is generated by at most log2(n)
    // elements, so closing all generator subsets of that size finds all.
    int max_rank = 0;
    while ((std::int64_t{1} << (max_rank + 1)) <= n) ++max_rank;

    std::set<std::vector<std::int64_t>> found;
    found.insert({0});
    std::vector<std::int64_t> combo;
    auto recurse = [&](auto&& self, std::int64_t start) -> void {
        if (static_cast<int>(combo.size()) == max_rank) return;
        for (std::int64_t g = start; g < n; ++g) {
            combo.push_back(g);
            found.insert(closure_indices(group, combo));
            self(self, g + 1);
            combo.pop_back();
        }
    };
    recurse(recurse, 1);

    std::vector<std::vector<std::int64_t>> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::vector<std::vector<std::int64_t>> bruteforce_maximal_isotropic(const Group& group) {
    const Group dbl = doubled_group(group);
    const std::int64_t n = group.order();
    std::vector<std::int64_t> all(dbl.order());
    for (std::int64_t i = 0; i < dbl.order(); ++i) all[i] = i;

    std::vector<std::vector<std::int64_t>> out;
    for (const auto& sub : subgroups_within(dbl, all)) {
        if (static_cast<std::int64_t>(sub.size()) != n) continue;
        bool isotropic = true;
        for (std::size_t a = 0; a < sub.size() && isotropic; ++a)
            for (std::size_t b = a; b < sub.size(); ++b) {
                if (!symplectic_form(group, phase_point(group, sub[a]),
                                     phase_point(group, sub[b]))
                         .is_one()) {
                    isotropic = false;
                    break;
                }
            }
        if (isotropic) out.push_back(sub);
    }
    return out;
}

namespace {

// Multiplier of the composition law restricted to K:
// alpha(z + w) = alpha(z) alpha(w) * mul(z, w), mul(z, w) = conj(<x_z, eta_w>).
PhaseExp multiplier(const Group& group, const PhasePoint& z, const PhasePoint& w) {
    return group.pairing(z.x, w.xi).conj();
}

}  // namespace

std::vector<std::vector<PhaseExp>> bruteforce_cocycles(
    const Group& group, const std::vector<std::int64_t>& k_indices) {
    const Group dbl = doubled_group(group);
    const std::int64_t mod2n = group.phase_modulus();
    Subgroup k_sub(dbl, k_indices, minimal_generators(dbl, k_indices));
    const CyclicDecomposition dec = cyclic_decompose(k_sub);
    const std::size_t m = dec.orders.size();

    // Order constraint per generator w: alpha(w)^ord = conj(prod of
    // multipliers along the cyclic chain); ord divides 2N, so there are
    // exactly ord admissible values.
    std::vector<std::vector<std::int64_t>> choices(m);
    std::vector<PhasePoint> gens(m);
    for (std::size_t i = 0; i < m; ++i) {
        gens[i] = phase_point(group, dbl.index_of(dec.basis[i]));
        const std::int64_t ord = dec.orders[i];
        PhaseExp chain = PhaseExp::one(mod2n);
        PhasePoint acc = gens[i];
        for (std::int64_t j = 1; j < ord; ++j) {
            chain *= multiplier(group, acc, gens[i]);
            acc = phase_add(group, acc, gens[i]);
        }
        const std::int64_t target = chain.conj().exponent();
        if (target % ord != 0)
            throw theory_violation("cocycle order constraint is unsolvable");
        for (std::int64_t l = 0; l < ord; ++l)
            choices[i].push_back(target / ord + l * (mod2n / ord));
    }

    // Compose the table for one assignment by appending generators in a
    // fixed order, then verify the law over all pairs.
    auto build_table = [&](const std::vector<std::int64_t>& assign) {
        std::vector<PhaseExp> alpha(k_indices.size(), PhaseExp::one(mod2n));
        for (std::size_t p = 0; p < k_indices.size(); ++p) {
            const auto& coords = dec.coords_at(p);
            PhaseExp acc_phase = PhaseExp::one(mod2n);
            PhasePoint acc = phase_point(group, 0);
            for (std::size_t i = 0; i < m; ++i) {
                const PhaseExp gen_value(assign[i], mod2n);
                for (std::int64_t step = 0; step < coords[i]; ++step) {
                    acc_phase = acc_phase * gen_value * multiplier(group, acc, gens[i]);
                    acc = phase_add(group, acc, gens[i]);
                }
            }
            alpha[k_sub.position_of_index(phase_index(group, acc))] = acc_phase;
        }
        return alpha;
    };

    auto valid = [&](const std::vector<PhaseExp>& alpha) {
        for (std::size_t a = 0; a < k_indices.size(); ++a) {
            const PhasePoint za = phase_point(group, k_indices[a]);
            for (std::size_t b = 0; b < k_indices.size(); ++b) {
                const PhasePoint zb = phase_point(group, k_indices[b]);
                const std::size_t ab =
                    k_sub.position_of_index(phase_index(group, phase_add(group, za, zb)));
                if (alpha[ab] != alpha[a] * alpha[b] * multiplier(group, za, zb)) return false;
            }
        }
        return true;
    };

    std::vector<std::vector<PhaseExp>> out;
    std::vector<std::size_t> pick(m, 0);
    bool more = true;
    while (more) {
        std::vector<std::int64_t> assign(m);
        for (std::size_t i = 0; i < m; ++i) assign[i] = choices[i][pick[i]];
        auto alpha = build_table(assign);
        if (!valid(alpha)) throw theory_violation("generator assignment gave an invalid cocycle");
        out.push_back(std::move(alpha));
        more = false;
        for (std::size_t i = m; i-- > 0;) {
            if (++pick[i] < choices[i].size()) {
                more = true;
                break;
            }
            pick[i] = 0;
        }
        if (m == 0) break;
    }
    if (static_cast<std::int64_t>(out.size()) != group.order())
        throw theory_violation("unexpected number of cocycles on a maximal isotropic subgroup");
    return out;
}

std::vector<OracleState> bruteforce_states(const Group& group) {
    const std::int64_t n = group.order();
    std::vector<OracleState> out;
    for (const auto& k_indices : bruteforce_maximal_isotropic(group)) {
        std::vector<Eigen::MatrixXcd> shifts;
        shifts.reserve(k_indices.size());
        for (std::int64_t i : k_indices) shifts.push_back(dense_shift(group, phase_point(group, i)));

        for (auto& alpha : bruteforce_cocycles(group, k_indices)) {
            Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(n, n);
            for (std::size_t p = 0; p < alpha.size(); ++p)
                proj += alpha[p].value() * shifts[p];
            proj /= static_cast<double>(n);

            if ((proj * proj - proj).cwiseAbs().maxCoeff() > 1e-9)
                throw theory_violation("group average is not a projector");
            if (std::abs(proj.trace() - std::complex<double>(1.0)) > 1e-9)
                throw theory_violation("stabilizer projector does not have rank one");

            Eigen::Index best = 0;
            for (Eigen::Index c = 1; c < n; ++c)
                if (proj.col(c).norm() > proj.col(best).norm()) best = c;
            Eigen::VectorXcd state = proj.col(best);
            state /= state.norm();
            for (Eigen::Index r = 0; r < n; ++r) {
                if (std::abs(state[r]) > 1e-6) {
                    state *= std::abs(state[r]) / state[r];
                    break;
                }
            }
            if ((proj * state - state).norm() > 1e-9)
                throw theory_violation("extracted vector is not fixed by the projector");
            out.push_back(OracleState{k_indices, std::move(alpha), std::move(state)});
        }
    }
    return out;
}

}  // namespace stabforge::oracle
