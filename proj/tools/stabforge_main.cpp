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

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>

#include "stabforge/oracle.hpp"
#include "stabforge/selftest.hpp"
#include "stabforge/serialize.hpp"

namespace {

using namespace stabforge;

// Exit codes: 0 ok, 1 selftest/internal failure, 2 parse, 3 bound,
// 4 not a stabilizer state, 5 invalid input, 6 theory-check violation.
constexpr int kExitSelftest = 1;
constexpr int kExitParse = 2;
constexpr int kExitBound = 3;
constexpr int kExitNotStabilizer = 4;
constexpr int kExitInvalidInput = 5;
constexpr int kExitTheory = 6;

struct CliOptions {
    Config config;
    std::string format = "human";
    std::string output;

    std::string group_spec;
    std::string mode;
    std::string input_path;
    std::string window_path;
    std::string rho_path;
    std::string rho_state_path;
    std::string g_spec = "shannon";
    std::vector<std::string> selftest_groups;
};

OutputFormat parse_format(const std::string& name) {
    if (name == "human") return OutputFormat::human;
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    throw spec_parse_error("unknown format '" + name + "'");
}

std::ostream& open_output(const CliOptions& opt, std::ofstream& file) {
    if (opt.output.empty()) return std::cout;
    file.open(opt.output);
    if (!file) throw invalid_input_error("cannot open output file '" + opt.output + "'");
    return file;
}

DensityOperator load_rho(const CliOptions& opt, const Group& group) {
    if (!opt.rho_path.empty()) {
        DensityOperator rho = density_from_json(load_json_file(opt.rho_path));
        if (rho.group() != group) throw invalid_input_error("density operator group mismatch");
        return rho;
    }
    if (!opt.rho_state_path.empty()) {
        WaveFunction psi = wavefunction_from_json(load_json_file(opt.rho_state_path));
        if (psi.group() != group) throw invalid_input_error("state group mismatch");
        return DensityOperator::pure(psi);
    }
    throw spec_parse_error("provide --rho or --rho-state");
}

int cmd_subgroups(const CliOptions& opt) {
    const Group group = parse_group_spec(opt.group_spec);
    const auto subgroups = enumerate_subgroups(group, opt.config.enumeration_bound);
    std::ofstream file;
    std::ostream& out = open_output(opt, file);

    const OutputFormat fmt = parse_format(opt.format);
    if (fmt == OutputFormat::csv)
        out << "index,order,generators,annihilator,sym,ch2\n";
    for (std::size_t i = 0; i < subgroups.size(); ++i) {
        const Subgroup& h = subgroups[i];
        const Subgroup ann = annihilator(h);
        std::string gens, ann_gens;
        for (const auto& g : h.generators()) gens += element_string(g);
        if (gens.empty()) gens = "-";
        for (const auto& g : ann.generators()) ann_gens += element_string(g);
        if (ann_gens.empty()) ann_gens = "-";
        const std::int64_t sym = sym_count(h);
        switch (fmt) {
            case OutputFormat::human:
                out << i << "  order " << h.size() << "  gens " << gens << "  annihilator "
                    << ann_gens << "  #Sym " << sym << "  #Ch2 " << h.size() * sym << "\n";
                break;
            case OutputFormat::json:
                out << json{{"index", i},
                            {"order", h.size()},
                            {"generators", subgroup_generators_json(h)},
                            {"annihilator", subgroup_generators_json(ann)},
                            {"sym", sym},
                            {"ch2", h.size() * sym}}
                           .dump()
                    << "\n";
                break;
            case OutputFormat::csv:
                out << i << ',' << h.size() << ',' << gens << ',' << ann_gens << ',' << sym
                    << ',' << h.size() * sym << "\n";
                break;
        }
    }
    return 0;
}

int cmd_states(const CliOptions& opt) {
    const Group group = parse_group_spec(opt.group_spec);
    std::ofstream file;
    std::ostream& out = open_output(opt, file);

    if (opt.mode == "count") {
        const std::int64_t count = count_states(group, opt.config.enumeration_bound);
        if (parse_format(opt.format) == OutputFormat::json)
            out << json{{"group", group_spec_string(group)}, {"count", count}}.dump() << "\n";
        else
            out << count << "\n";
        return 0;
    }
    if (opt.mode != "enumerate") throw spec_parse_error("states mode must be count or enumerate");

    // One JSON line per state keeps memory flat on large enumerations.
    for_each_state(group, opt.config.enumeration_bound, [&](const EnumeratedState& entry) {
        out << enumerated_state_to_json(entry).dump() << "\n";
    });
    return 0;
}

int cmd_stab(const CliOptions& opt) {
    std::ofstream file;
    std::ostream& out = open_output(opt, file);

    if (opt.mode == "to-group") {
        const WaveFunction phi = wavefunction_from_json(load_json_file(opt.input_path));
        const auto desc = is_sstate(phi, opt.config.tolerance);
        if (!desc) throw not_stabilizer_error("not a stabilizer state");
        const StabilizerGroup grp = group_from_sstate(*desc);
        const WaveFunction synth = sstate_synthesize(*desc);
        if (!verify_stabilized(grp, synth, opt.config.tolerance))
            throw theory_violation("derived group does not stabilize the state");
        out << json{{"moduli", moduli_to_json(canonical_class(*desc))},
                    {"group", stabilizer_group_to_json(grp)},
                    {"wavefunction", wavefunction_to_json(synth)}}
                   .dump(2)
            << "\n";
        return 0;
    }
    if (opt.mode != "to-state") throw spec_parse_error("stab mode must be to-group or to-state");

    const StabilizerGroup grp = stabilizer_group_from_json(load_json_file(opt.input_path));
    const SStateDescriptor desc = sstate_from_group(grp);
    const WaveFunction synth = sstate_synthesize(desc);
    if (!verify_stabilized(grp, synth, opt.config.tolerance))
        throw theory_violation("reconstructed state is not stabilized");
    out << json{{"moduli", moduli_to_json(canonical_class(desc))},
                {"group", stabilizer_group_to_json(grp)},
                {"wavefunction", wavefunction_to_json(synth)}}
               .dump(2)
        << "\n";
    return 0;
}

void print_human_report(std::ostream& out, const json& j) {
    for (const auto& [key, value] : j.items())
        out << std::left << std::setw(16) << key << " " << value.dump() << "\n";
}

int cmd_wehrl(const CliOptions& opt) {
    std::ofstream file;
    std::ostream& out = open_output(opt, file);
    const ConcaveFn fn = parse_concave(opt.g_spec);
    const OutputFormat fmt = parse_format(opt.format);

    if (opt.mode == "sweep") {
        if (opt.group_spec.empty()) throw spec_parse_error("sweep requires --group");
        const Group group = parse_group_spec(opt.group_spec);
        Rng rng(opt.config.seed);
        const std::int64_t n = group.order();
        const auto emit = [&](const std::string& state_id, const std::string& g_id,
                              double entropy_value, double gap) {
            if (fmt == OutputFormat::json)
                out << json{{"state-id", state_id},
                            {"G-id", g_id},
                            {"entropy", entropy_value},
                            {"gap", gap}}
                           .dump()
                    << "\n";
            else
                out << state_id << ',' << g_id << ',' << entropy_value << ',' << gap << "\n";
        };
        if (fmt != OutputFormat::json) out << "state-id,G-id,entropy,gap\n";
        std::size_t i = 0;
        for_each_state(group, opt.config.enumeration_bound, [&](const EnumeratedState& entry) {
            const WaveFunction phi = sstate_synthesize(entry.desc);
            const PhasePoint z = phase_point(group, rng.below(n * n));
            const MinReport shifted = verify_min_bound(
                fn, phi, DensityOperator::pure(shift_apply(z, phi)), opt.config.tolerance);
            emit("s" + std::to_string(i) + ":shift" + phase_point_string(z), fn.id,
                 shifted.entropy, shifted.entropy - shifted.bound);
            const MinReport random_case = verify_min_bound(
                fn, phi, DensityOperator::pure(random_state(group, rng)), opt.config.tolerance);
            emit("s" + std::to_string(i) + ":random", fn.id, random_case.entropy,
                 random_case.entropy - random_case.bound);
            ++i;
        });
        return 0;
    }

    if (opt.window_path.empty()) throw spec_parse_error("provide --window");
    const WaveFunction phi = wavefunction_from_json(load_json_file(opt.window_path));
    const Group& group = phi.group();
    if (!opt.group_spec.empty() && parse_group_spec(opt.group_spec) != group)
        throw invalid_input_error("--group disagrees with the window file");

    json report;
    if (opt.mode == "min")
        report = min_report_to_json(
            verify_min_bound(fn, phi, load_rho(opt, group), opt.config.tolerance));
    else if (opt.mode == "max")
        report = max_report_to_json(
            group, verify_max_bound(fn, phi, load_rho(opt, group), opt.config.tolerance));
    else if (opt.mode == "berezin")
        report = berezin_report_to_json(
            berezin_lieb(fn, phi, load_rho(opt, group), opt.config.tolerance));
    else if (opt.mode == "fourier")
        report = fourier_report_to_json(fourier_husimi(phi, load_rho(opt, group)));
    else
        throw spec_parse_error("wehrl mode must be min, max, berezin, fourier or sweep");

    if (fmt == OutputFormat::human)
        print_human_report(out, report);
    else
        out << report.dump(2) << "\n";
    return 0;
}

int cmd_selftest(const CliOptions& opt) {
    std::ofstream file;
    std::ostream& out = open_output(opt, file);
    const OutputFormat fmt = parse_format(opt.format);
    bool all_pass = true;
    for (const auto& spec : opt.selftest_groups) {
        const Group group = parse_group_spec(spec);
        if (fmt != OutputFormat::json) out << "== " << group_spec_string(group) << "\n";
        for (const auto& r : run_selftest(group, opt.config)) {
            all_pass = all_pass && r.pass;
            if (fmt == OutputFormat::json) {
                out << json{{"group", group_spec_string(group)}, {"suite", r.name},
                            {"pass", r.pass},  {"skipped", r.skipped},
                            {"seconds", r.seconds}, {"checks", r.checks},
                            {"message", r.message}}
                           .dump()
                    << "\n";
            } else {
                out << "  [" << (r.pass ? (r.skipped ? "SKIP" : "PASS") : "FAIL") << "] "
                    << std::left << std::setw(16) << r.name << std::right << std::fixed
                    << std::setprecision(3) << std::setw(8) << r.seconds << " s  "
                    << std::setw(8) << r.checks << " checks";
                if (!r.message.empty()) out << "  (" << r.message << ")";
                out << "\n";
                out.unsetf(std::ios::fixed);
            }
        }
    }
    out << (all_pass ? "PASS" : "FAIL") << "\n";
    return all_pass ? 0 : kExitSelftest;
}

}  // namespace

int main(int argc, char** argv) {
    CliOptions opt;
    CLI::App app{"Exact stabilizer-state and Wehrl-entropy toolkit for finite Abelian groups"};
    app.require_subcommand(1);
    app.add_option("--format", opt.format, "Output format: human, json, csv")
        ->capture_default_str();
    app.add_option("--tolerance", opt.config.tolerance, "Floating-point tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--bound", opt.config.enumeration_bound, "Enumeration bound on #A")
        ->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 30))
        ->capture_default_str();
    app.add_option("--seed", opt.config.seed, "Seed for randomized suites")
        ->capture_default_str();
    app.add_option("--output", opt.output, "Write output to a file instead of stdout");

    auto* sub_subgroups = app.add_subcommand(
        "subgroups", "List subgroups with annihilators and #Sym/#Ch2 columns");
    sub_subgroups->fallthrough();
    sub_subgroups->add_option("--group", opt.group_spec, "Group spec, e.g. Z4xZ2")->required();

    auto* sub_states =
        app.add_subcommand("states", "Count or enumerate all stabilizer states");
    sub_states->fallthrough();
    sub_states->add_option("mode", opt.mode, "count | enumerate")->required();
    sub_states->add_option("--group", opt.group_spec, "Group spec")->required();

    auto* sub_stab = app.add_subcommand(
        "stab", "Convert between stabilizer states and stabilizer groups");
    sub_stab->fallthrough();
    sub_stab->add_option("mode", opt.mode, "to-group | to-state")->required();
    sub_stab->add_option("--input", opt.input_path, "Input JSON file")->required();

    auto* sub_wehrl =
        app.add_subcommand("wehrl", "Wehrl entropy bounds, witnesses and sweeps");
    sub_wehrl->fallthrough();
    sub_wehrl->add_option("mode", opt.mode, "min | max | berezin | fourier | sweep")
        ->required();
    sub_wehrl->add_option("--group", opt.group_spec, "Group spec (sweep only)");
    sub_wehrl->add_option("--window", opt.window_path, "Window state JSON file");
    sub_wehrl->add_option("--rho", opt.rho_path, "Density matrix JSON file");
    sub_wehrl->add_option("--rho-state", opt.rho_state_path,
                          "Pure-state JSON file defining rho");
    sub_wehrl->add_option("--g", opt.g_spec, "Concave G: built-in name or expression")
        ->capture_default_str();

    auto* sub_selftest =
        app.add_subcommand("selftest", "Run every module invariant suite per group");
    sub_selftest->fallthrough();
    sub_selftest->add_option("groups", opt.selftest_groups, "Group specs")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (sub_subgroups->parsed()) return cmd_subgroups(opt);
        if (sub_states->parsed()) return cmd_states(opt);
        if (sub_stab->parsed()) return cmd_stab(opt);
        if (sub_wehrl->parsed()) return cmd_wehrl(opt);
        if (sub_selftest->parsed()) return cmd_selftest(opt);
        return kExitParse;
    } catch (const spec_parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const bound_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBound;
    } catch (const not_stabilizer_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotStabilizer;
    } catch (const invalid_input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const theory_violation& e) {
        std::cerr << "theory check violated: " << e.what() << "\n";
        return kExitTheory;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSelftest;
    }
}
