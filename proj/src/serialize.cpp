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

#include "stabforge/serialize.hpp"

#include <fstream>

namespace stabforge {

namespace {

json residues_json(const std::vector<std::int64_t>& residues) { return json(residues); }

std::vector<std::int64_t> residues_from_json(const json& j) {
    if (!j.is_array()) throw spec_parse_error("expected an array of residues");
    std::vector<std::int64_t> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw spec_parse_error("residues must be integers");
        out.push_back(v.get<std::int64_t>());
    }
    return out;
}

Group group_from_json(const json& j) {
    if (!j.contains("group") || !j["group"].is_string())
        throw spec_parse_error("missing \"group\" field");
    return parse_group_spec(j["group"].get<std::string>());
}

json complex_json(const std::complex<double>& c) { return json::array({c.real(), c.imag()}); }

std::complex<double> complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw spec_parse_error("expected [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

json element_json(const GroupElement& x) { return residues_json(x.residues); }
json element_json(const DualElement& xi) { return residues_json(xi.residues); }

GroupElement element_from_json(const Group& group, const json& j) {
    return group.reduce(residues_from_json(j));
}

json phase_point_json(const PhasePoint& z) {
    return json::array({element_json(z.x), element_json(z.xi)});
}

PhasePoint phase_point_from_json(const Group& group, const json& j) {
    if (!j.is_array() || j.size() != 2) throw spec_parse_error("expected [[x...],[xi...]]");
    return PhasePoint{group.reduce(residues_from_json(j[0])),
                      as_dual(group.reduce(residues_from_json(j[1])))};
}

json wavefunction_to_json(const WaveFunction& psi) {
    json j;
    j["group"] = group_spec_string(psi.group());
    json amps = json::array();
    for (Eigen::Index i = 0; i < psi.amplitudes().size(); ++i)
        amps.push_back(complex_json(psi.amplitudes()[i]));
    j["amplitudes"] = std::move(amps);
    if (psi.exact()) {
        const ExactForm& ef = *psi.exact();
        j["coset"] = {{"base", element_json(ef.y)},
                      {"subgroup", subgroup_generators_json(ef.h)}};
        json phases = json::array();
        for (const auto& p : ef.phases) phases.push_back(p.exponent());
        j["phases"] = std::move(phases);
        j["scale"] = ef.scale;
    }
    return j;
}

WaveFunction wavefunction_from_json(const json& j) {
    const Group group = group_from_json(j);
    if (j.contains("coset")) {
        const json& coset = j["coset"];
        if (!coset.contains("base") || !coset.contains("subgroup"))
            throw spec_parse_error("exact form needs coset.base and coset.subgroup");
        const GroupElement y = group.reduce(residues_from_json(coset["base"]));
        Subgroup h = subgroup_from_generators_json(group, coset["subgroup"]);
        if (!j.contains("phases") || !j["phases"].is_array())
            throw spec_parse_error("exact form needs a phases array");
        std::vector<PhaseExp> phases;
        for (const auto& v : j["phases"])
            phases.emplace_back(v.get<std::int64_t>(), group.phase_modulus());
        const double scale = j.value("scale", 1.0);
        return WaveFunction(group, ExactForm{y, std::move(h), std::move(phases), scale});
    }
    if (!j.contains("amplitudes") || !j["amplitudes"].is_array())
        throw spec_parse_error("wave function needs amplitudes or an exact form");
    Eigen::VectorXcd amp(group.order());
    if (static_cast<std::int64_t>(j["amplitudes"].size()) != group.order())
        throw spec_parse_error("amplitude count does not match the group order");
    for (std::int64_t i = 0; i < group.order(); ++i)
        amp[i] = complex_from_json(j["amplitudes"][static_cast<std::size_t>(i)]);
    return WaveFunction(group, std::move(amp));
}

json density_to_json(const DensityOperator& rho) {
    json j;
    j["group"] = group_spec_string(rho.group());
    json m = json::array();
    for (Eigen::Index r = 0; r < rho.matrix().rows(); ++r)
        for (Eigen::Index c = 0; c < rho.matrix().cols(); ++c)
            m.push_back(complex_json(rho.matrix()(r, c)));
    j["matrix"] = std::move(m);
    return j;
}

DensityOperator density_from_json(const json& j) {
    const Group group = group_from_json(j);
    const std::int64_t n = group.order();
    if (!j.contains("matrix") || static_cast<std::int64_t>(j["matrix"].size()) != n * n)
        throw spec_parse_error("density matrix must have N^2 row-major entries");
    Eigen::MatrixXcd m(n, n);
    for (std::int64_t r = 0; r < n; ++r)
        for (std::int64_t c = 0; c < n; ++c)
            m(r, c) = complex_from_json(j["matrix"][static_cast<std::size_t>(r * n + c)]);
    return DensityOperator(group, std::move(m));
}

json subgroup_generators_json(const Subgroup& h) {
    json gens = json::array();
    for (const auto& g : h.generators()) gens.push_back(element_json(g));
    return gens;
}

Subgroup subgroup_from_generators_json(const Group& group, const json& j) {
    if (!j.is_array()) throw spec_parse_error("expected an array of generators");
    std::vector<GroupElement> gens;
    for (const auto& g : j) gens.push_back(group.reduce(residues_from_json(g)));
    return Subgroup::from_generators(group, gens);
}

json char2_to_json(const Char2& h) {
    json support = json::array();
    for (const auto& x : h.support().elements()) support.push_back(element_json(x));
    json values = json::array();
    for (const auto& v : h.values()) values.push_back(v.exponent());
    return json{{"support", std::move(support)}, {"values", std::move(values)}};
}

Char2 char2_from_json(const Group& group, const json& j) {
    if (!j.contains("support") || !j.contains("values"))
        throw spec_parse_error("character of second degree needs support and values");
    std::vector<GroupElement> elems;
    for (const auto& e : j["support"]) elems.push_back(group.reduce(residues_from_json(e)));
    Subgroup h = Subgroup::from_generators(group, elems);
    if (static_cast<std::size_t>(h.size()) != elems.size())
        throw invalid_input_error("support is not closed under addition");
    if (j["values"].size() != elems.size())
        throw spec_parse_error("value table does not match the support");
    // Values are listed against the given support order; re-align them with
    // the canonical element order.
    std::vector<PhaseExp> values(elems.size(), PhaseExp::one(group.phase_modulus()));
    for (std::size_t i = 0; i < elems.size(); ++i)
        values[h.position_of(elems[i])] =
            PhaseExp(j["values"][i].get<std::int64_t>(), group.phase_modulus());
    SymHom beta = beta_of(h, cyclic_decompose(h), values);
    return Char2(std::move(h), std::move(values), std::move(beta));
}

json isotropic_to_json(const IsotropicSubgroup& k) {
    const auto& dec = k.beta().decomposition();
    json basis = json::array();
    for (const auto& b : dec.basis) basis.push_back(element_json(b));
    json beta = json::array();
    for (const auto& row : k.beta().coeffs()) beta.push_back(json(row));
    return json{{"H", subgroup_generators_json(k.base())},
                {"beta", std::move(beta)},
                {"basis", std::move(basis)}};
}

json stabilizer_group_to_json(const StabilizerGroup& g) {
    json j;
    j["group"] = group_spec_string(g.group());
    j["K"] = isotropic_to_json(g.k());
    json elements = json::array();
    for (const auto& z : g.k().elements()) elements.push_back(phase_point_json(z));
    j["elements"] = std::move(elements);
    json alpha = json::array();
    for (const auto& a : g.alpha()) alpha.push_back(a.exponent());
    j["alpha"] = std::move(alpha);
    return j;
}

StabilizerGroup stabilizer_group_from_json(const json& j) {
    const Group group = group_from_json(j);
    if (!j.contains("elements") || !j.contains("alpha"))
        throw spec_parse_error("stabilizer group needs the (elements, alpha) table");
    std::vector<PhasePoint> points;
    for (const auto& e : j["elements"]) points.push_back(phase_point_from_json(group, e));
    if (j["alpha"].size() != points.size())
        throw invalid_input_error("alpha table does not match the element list");
    IsotropicSubgroup k = pair_from_isotropic(group, points);
    // alpha entries are listed against the given element order.
    std::vector<PhaseExp> alpha(points.size(), PhaseExp::one(group.phase_modulus()));
    for (std::size_t i = 0; i < points.size(); ++i)
        alpha[k.position_of(points[i])] =
            PhaseExp(j["alpha"][i].get<std::int64_t>(), group.phase_modulus());
    return StabilizerGroup(std::move(k), std::move(alpha));
}

json moduli_to_json(const ModuliClass& cls) {
    return json{{"H", subgroup_generators_json(cls.h_subgroup)},
                {"y", element_json(cls.y)},
                {"h", char2_to_json(cls.h)}};
}

json enumerated_state_to_json(const EnumeratedState& entry) {
    return json{{"moduli", moduli_to_json(entry.cls)},
                {"group", stabilizer_group_to_json(entry.grp)},
                {"wavefunction", wavefunction_to_json(sstate_synthesize(entry.desc))}};
}

json min_report_to_json(const MinReport& r) {
    json j{{"entropy", r.entropy}, {"bound", r.bound}, {"equality", r.equality}};
    if (r.witness) {
        j["witness"] = json{{"theta", r.witness->theta},
                            {"z", phase_point_json(r.witness->z)},
                            {"window_y", element_json(r.witness->window.y)},
                            {"window_h0", char2_to_json(r.witness->window.h0)}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

json berezin_report_to_json(const BerezinReport& r) {
    json j{{"entropy", r.entropy}, {"tr_g", r.tr_g}, {"gap", r.gap}, {"equality", r.equality}};
    if (r.shifts) {
        json shifts = json::array();
        for (const auto& z : *r.shifts) shifts.push_back(phase_point_json(z));
        j["shifts"] = std::move(shifts);
    } else {
        j["shifts"] = nullptr;
    }
    return j;
}

json max_report_to_json(const Group& group, const MaxReport& r) {
    json overlap = json::array();
    for (std::int64_t i : r.support_overlap)
        overlap.push_back(phase_point_json(phase_point(group, i)));
    return json{{"entropy", r.entropy},
                {"bound", r.bound},
                {"equality", r.equality},
                {"support_overlap", std::move(overlap)}};
}

json fourier_report_to_json(const FourierHusimiReport& r) {
    return json{{"residual", r.residual}, {"ok", r.residual <= 1e-8}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw spec_parse_error("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw spec_parse_error("malformed JSON in '" + path + "': " + e.what());
    }
}

}  // namespace stabforge
