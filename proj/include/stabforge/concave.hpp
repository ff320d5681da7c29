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
#include <string>
#include <vector>

namespace stabforge {

// Concave function G: [0,1] -> R with G(0) = 0, the weight of the
// generalized entropy. Flags drive the equality diagnostics: the
// equality characterizations require G non-linear (resp. strictly
// concave).
struct ConcaveFn {
    std::string id;
    std::function<double(double)> g;
    bool strictly_concave = false;
    bool linear = false;
};

// Built-in family: "shannon" (-t log t), "quadratic" (t - t^2),
// "sine" (sin(pi t)/pi), "linear" (t).
ConcaveFn builtin_concave(const std::string& name);
std::vector<ConcaveFn> builtin_concave_family();  // the strictly concave trio

// Accepts a built-in name or an expression in t with +,-,*,/,^, numeric
// literals and log(...), e.g. "-t*log(t)" or "t - t^2". The result is
// validated: G(0) = 0 and midpoint concavity on a sampling grid; linearity
// and strict concavity are detected on the same grid.
ConcaveFn parse_concave(const std::string& spec);

// Throws invalid_input_error when G(0) != 0 or the sampled midpoint
// concavity test fails.
void validate_concave(const ConcaveFn& fn);

}  // namespace stabforge
