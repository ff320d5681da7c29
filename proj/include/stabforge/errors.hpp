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

#include <stdexcept>
#include <string>

namespace stabforge {

// Error hierarchy mirrored by the CLI exit codes:
//   2 parse, 3 enumeration bound, 4 not a stabilizer state,
//   5 invalid input data, 6 violated theory check.

struct spec_parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct bound_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct not_stabilizer_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invalid_input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A mathematically guaranteed identity failed at runtime. This always
// indicates an implementation bug, never bad user input.
struct theory_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace stabforge
