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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <chrono>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string temp_path(const std::string& name) {
    return std::string("/tmp/stabforge_cli_") + name;
}

RunResult run(const std::string& args) {
    const std::string out_path = temp_path("out.txt");
    const std::string cmd =
        std::string(STABFORGE_BIN) + " " + args + " > " + out_path + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WEXITSTATUS(status);
    std::ifstream in(out_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    result.out = buffer.str();
    return result;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("states count") {
    CHECK(run("states count --group Z2").out == "6\n");
    CHECK(run("states count --group Z2xZ2").out == "60\n");
    CHECK(run("states count --group Z4").out == "28\n");
    CHECK(run("states count --group Z1").out == "1\n");
    CHECK(lines_of(run("states enumerate --group Z1").out).size() == 1);
    const RunResult json_mode = run("--format json states count --group Z3");
    CHECK(json_mode.exit_code == 0);
    CHECK(nlohmann::json::parse(json_mode.out)["count"] == 12);
}

TEST_CASE("states enumerate emits distinct moduli keys, deterministically") {
    const RunResult first = run("states enumerate --group Z2");
    CHECK(first.exit_code == 0);
    const auto lines = lines_of(first.out);
    REQUIRE(lines.size() == 6);
    std::set<std::string> moduli;
    for (const auto& line : lines) {
        const auto j = nlohmann::json::parse(line);
        moduli.insert(j["moduli"].dump());
        CHECK(j.contains("group"));
        CHECK(j.contains("wavefunction"));
    }
    CHECK(moduli.size() == 6);

    const RunResult second = run("states enumerate --group Z2");
    CHECK(second.out == first.out);  // byte-identical reruns
}

TEST_CASE("subgroups listing") {
    const RunResult r = run("subgroups --group Z2");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0].find("#Sym 1") != std::string::npos);
    CHECK(lines[1].find("#Sym 2") != std::string::npos);

    CHECK(lines_of(run("subgroups --group Z4").out).size() == 3);
}

TEST_CASE("exit codes: parse, bound") {
    CHECK(run("subgroups --group Zx").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
    CHECK(run("states count --group Z128").exit_code == 3);
    CHECK(run("states count --group Z128 --bound 128").exit_code == 0);
}

TEST_CASE("stab round trip through files") {
    const std::string plus = temp_path("plus.json");
    write_file(plus,
               R"({"group":"Z2","amplitudes":[[0.7071067811865476,0],[0.7071067811865476,0]]})");
    const RunResult to_group = run("stab to-group --input " + plus);
    CHECK(to_group.exit_code == 0);
    const auto j = nlohmann::json::parse(to_group.out);
    CHECK(j["group"]["alpha"] == nlohmann::json::array({0, 0}));
    CHECK(j["group"]["elements"].size() == 2);

    // Feed the emitted group back: to-state must return |+>.
    const std::string grp = temp_path("grp.json");
    write_file(grp, j["group"].dump());
    const RunResult to_state = run("stab to-state --input " + grp);
    CHECK(to_state.exit_code == 0);
    const auto js = nlohmann::json::parse(to_state.out);
    CHECK(js["wavefunction"]["phases"] == nlohmann::json::array({0, 0}));

    // {I, -Z}: alpha(0,1) = -1 = zeta^2 -> delta_1.
    const std::string minus_z = temp_path("minusz.json");
    write_file(minus_z, R"({"group":"Z2","elements":[[[0],[0]],[[0],[1]]],"alpha":[0,2]})");
    const RunResult d1 = run("stab to-state --input " + minus_z);
    CHECK(d1.exit_code == 0);
    const auto jd1 = nlohmann::json::parse(d1.out);
    CHECK(jd1["moduli"]["y"] == nlohmann::json::array({1}));

    // The emitted exact-form wave function feeds straight back to to-group.
    const std::string wf = temp_path("wf.json");
    write_file(wf, jd1["wavefunction"].dump());
    const RunResult back = run("stab to-group --input " + wf);
    CHECK(back.exit_code == 0);
    CHECK(nlohmann::json::parse(back.out)["group"]["alpha"] ==
          nlohmann::json::array({0, 2}));
}

TEST_CASE("stab rejects non-stabilizer states and bad cocycles") {
    const std::string odd = temp_path("odd.json");
    write_file(odd,
               R"({"group":"Z2","amplitudes":[[0.7071067811865476,0],)"
               R"([0.5720614028176843,0.4156269377774534]]})");
    CHECK(run("stab to-group --input " + odd).exit_code == 4);

    const std::string lopsided = temp_path("lopsided.json");
    write_file(lopsided, R"({"group":"Z2","amplitudes":[[0.894427191,0],[0.4472135955,0]]})");
    CHECK(run("stab to-group --input " + lopsided).exit_code == 4);

    const std::string bad_cocycle = temp_path("badcocycle.json");
    write_file(bad_cocycle, R"({"group":"Z2","elements":[[[0],[0]],[[0],[1]]],"alpha":[0,1]})");
    CHECK(run("stab to-state --input " + bad_cocycle).exit_code == 5);

    const std::string not_isotropic = temp_path("notiso.json");
    write_file(not_isotropic,
               R"({"group":"Z2","elements":[[[0],[0]],[[1],[1]],[[1],[0]],[[0],[1]]],)"
               R"("alpha":[0,0,0,0]})");
    CHECK(run("stab to-state --input " + not_isotropic).exit_code == 5);

    const std::string garbled = temp_path("garbled.json");
    write_file(garbled, "{not json");
    CHECK(run("stab to-group --input " + garbled).exit_code == 2);
    CHECK(run("stab to-group --input /nonexistent.json").exit_code == 2);
}

TEST_CASE("wehrl reports through the CLI") {
    const std::string d0 = temp_path("d0.json");
    const std::string d1 = temp_path("d1.json");
    const std::string flat = temp_path("flat.json");
    const std::string half = temp_path("half.json");
    write_file(d0, R"({"group":"Z2","amplitudes":[[1,0],[0,0]]})");
    write_file(d1, R"({"group":"Z2","amplitudes":[[0,0],[1,0]]})");
    write_file(flat,
               R"({"group":"Z2","amplitudes":[[0.7071067811865476,0],[0.7071067811865476,0]]})");
    write_file(half,
               R"({"group":"Z2","matrix":[[0.5,0],[0,0],[0,0],[0.5,0]]})");

    const RunResult min_eq = run("--format json wehrl min --window " + d0 +
                                 " --rho-state " + d1 + " --g \"-t*log(t)\"");
    CHECK(min_eq.exit_code == 0);
    auto j = nlohmann::json::parse(min_eq.out);
    CHECK(j["equality"] == true);
    CHECK(j["witness"]["z"] == nlohmann::json::parse("[[1],[0]]"));

    const RunResult berezin = run("--format json wehrl berezin --window " + d0 +
                                  " --rho " + half);
    CHECK(berezin.exit_code == 0);
    j = nlohmann::json::parse(berezin.out);
    CHECK(j["equality"] == true);

    const RunResult max_eq = run("--format json wehrl max --window " + d0 +
                                 " --rho-state " + flat);
    CHECK(max_eq.exit_code == 0);
    j = nlohmann::json::parse(max_eq.out);
    CHECK(j["equality"] == true);
    CHECK(j["support_overlap"].size() == 1);

    const RunResult fourier = run("--format json wehrl fourier --window " + flat +
                                  " --rho " + half);
    CHECK(fourier.exit_code == 0);
    CHECK(nlohmann::json::parse(fourier.out)["ok"] == true);

    const RunResult sweep = run("wehrl sweep --group Z2 --g quadratic --seed 7");
    CHECK(sweep.exit_code == 0);
    const auto rows = lines_of(sweep.out);
    CHECK(rows.size() == 1 + 2 * 6);  // header + two rows per state
    CHECK(rows[0] == "state-id,G-id,entropy,gap");

    CHECK(run("wehrl min --window " + d0 + " --rho-state " + d1 + " --g \"t^3\"").exit_code ==
          5);
    CHECK(run("wehrl min --window " + d0 + " --rho-state " + d1 + " --group Z3").exit_code ==
          5);
    CHECK(run("wehrl min --window " + d0).exit_code == 2);  // no rho given
}

TEST_CASE("selftest command") {
    const auto start = std::chrono::steady_clock::now();
    const RunResult ok = run("selftest Z2 Z3 Z4 Z2xZ2");
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("PASS") != std::string::npos);
    CHECK(ok.out.find("FAIL") == std::string::npos);
    CHECK(seconds < 10.0);
    CHECK(run("selftest Zbogus").exit_code == 2);
}
