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

#include <string>
#include <vector>

#include "stabforge/config.hpp"
#include "stabforge/rng.hpp"
#include "stabforge/stabilizer.hpp"
#include "stabforge/wehrl.hpp"

namespace stabforge {

// Seeded random states and density operators shared by the self-test
// suites, the randomized unit tests and the sweep command.
WaveFunction random_state(const Group& group, Rng& rng);
WaveFunction random_nonstabilizer_state(const Group& group, Rng& rng, double tol = 1e-9);
DensityOperator random_density(const Group& group, Rng& rng);  // full-rank PSD, trace 1

struct SuiteResult {
    std::string name;
    bool pass = true;
    bool skipped = false;
    double seconds = 0;
    std::int64_t checks = 0;
    std::string message;
};

// Runs every module invariant suite on one group. Exhaustive sweeps whose
// scale limit is exceeded are reported as skipped, not failed.
std::vector<SuiteResult> run_selftest(const Group& group, const Config& config);

}  // namespace stabforge
