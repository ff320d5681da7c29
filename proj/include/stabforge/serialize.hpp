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

#include <json.hpp>

#include "stabforge/stabilizer.hpp"
#include "stabforge/wehrl.hpp"

namespace stabforge {

using json = nlohmann::json;

json element_json(const GroupElement& x);
json element_json(const DualElement& xi);
GroupElement element_from_json(const Group& group, const json& j);
json phase_point_json(const PhasePoint& z);
PhasePoint phase_point_from_json(const Group& group, const json& j);

// {"group":"Z2","amplitudes":[[re,im],...]} for dense states; exact-form
// states additionally carry {"coset":{"base":[..],"subgroup":[[..],..]},
// "phases":[exponents mod 2N], "scale": r}. The reader prefers the exact
// form when present.
json wavefunction_to_json(const WaveFunction& psi);
WaveFunction wavefunction_from_json(const json& j);

// {"group":"Z2","matrix":[[re,im] x N^2]} row-major.
json density_to_json(const DensityOperator& rho);
DensityOperator density_from_json(const json& j);

json subgroup_generators_json(const Subgroup& h);
Subgroup subgroup_from_generators_json(const Group& group, const json& j);

// {"support":[[residues],...],"values":[exponents mod 2N]} in canonical order.
json char2_to_json(const Char2& h);
Char2 char2_from_json(const Group& group, const json& j);

// {"H":[generators],"beta":[[c]],"basis":[[..],..]} in H-coordinates.
json isotropic_to_json(const IsotropicSubgroup& k);

// Emits {"group":...,"K":{...},"elements":[[[x],[xi]],...],"alpha":[..]};
// the reader requires the explicit (elements, alpha) table.
json stabilizer_group_to_json(const StabilizerGroup& g);
StabilizerGroup stabilizer_group_from_json(const json& j);

json moduli_to_json(const ModuliClass& cls);
json enumerated_state_to_json(const EnumeratedState& entry);

json min_report_to_json(const MinReport& r);
json berezin_report_to_json(const BerezinReport& r);
json max_report_to_json(const Group& group, const MaxReport& r);
json fourier_report_to_json(const FourierHusimiReport& r);

json load_json_file(const std::string& path);  // spec_parse_error on failure

}  // namespace stabforge
