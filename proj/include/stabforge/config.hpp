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

#include "stabforge/errors.hpp"

namespace stabforge {

enum class OutputFormat { human, json, csv };

struct Config {
    double tolerance = 1e-9;
    std::int64_t enumeration_bound = 64;
    OutputFormat format = OutputFormat::human;
    std::uint64_t seed = 20260810;

    void validate() const {
        if (tolerance <= 0) throw invalid_input_error("tolerance must be positive");
        if (enumeration_bound < 1) throw invalid_input_error("enumeration bound must be >= 1");
    }
};

}  // namespace stabforge
