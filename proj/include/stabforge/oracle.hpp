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

// Brute-force reference implementations used by the self-test command and
// the test suites. Everything here works on dense matrices and exhaustive
// searches and deliberately avoids the constructive machinery it is used
// to check (wave-function synthesis, the stabilizer correspondence, the
// subgroup join enumeration).

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "stabforge/group.hpp"
#include "stabforge/phase_space.hpp"

namespace stabforge::oracle {

// Dense matrix of the shift pi(x, xi): M[a, b] = <a, xi> when b = a - x.
Eigen::MatrixXcd dense_shift(const Group& group, const PhasePoint& z);

// The doubled group A x dual(A) as a plain group; its canonical element
// indices coincide with phase_index.
Group doubled_group(const Group& group);

// Every subgroup, by closing all generator subsets of size up to log2(N).
std::vector<std::vector<std::int64_t>> bruteforce_subgroups(const Group& group);

// Every maximal isotropic subgroup as a sorted phase-index list: subgroups
// of the doubled group of cardinality N on which the symplectic form is 1.
std::vector<std::vector<std::int64_t>> bruteforce_maximal_isotropic(const Group& group);

// Every cocycle alpha on K (phase-index list) satisfying
// alpha(z+w) = alpha(z) alpha(w) conj(<x_z, eta_w>): generator assignments
// solving the order constraints, each table verified over all pairs.
// Exactly N survive.
std::vector<std::vector<PhaseExp>> bruteforce_cocycles(const Group& group,
                                                       const std::vector<std::int64_t>& k_indices);

struct OracleState {
    std::vector<std::int64_t> k_indices;
    std::vector<PhaseExp> alpha;
    Eigen::VectorXcd state;  // unit vector, first significant entry real positive
};

// For each (K, alpha): averages the N operators alpha(z) W(z) into a
// projector and extracts its 1-eigenvector. The complete list of states
// fixed by some stabilizer group, found by linear algebra alone.
std::vector<OracleState> bruteforce_states(const Group& group);

}  // namespace stabforge::oracle
