// Copyright 2026 The loqsim Authors
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

/// Golden end-to-end tests of the command-line tool.  Every canned example
/// from the user documentation is pinned here.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

#ifndef LOQSIM_CLI_PATH
#error "LOQSIM_CLI_PATH must point at the loqsim binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string &args) {
    static int counter = 0;
    const std::string base = "loqsim_cli_test_" + std::to_string(counter++);
    const std::string out_path = "/tmp/" + base + ".out";
    const std::string err_path = "/tmp/" + base + ".err";
    const std::string cmd = std::string("\"") + LOQSIM_CLI_PATH + "\" " + args + " > " +
                            out_path + " 2> " + err_path;
    const int status = std::system(cmd.c_str());
    RunResult res;
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    res.out = slurp(out_path);
    res.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return res;
}

bool contains(const std::string &haystack, const std::string &needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("golden: cascade --n 3") {
    const auto res = run_cli("cascade --n 3");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "counts: 64 → 28 → 16 → 6 → 4 → 1"));
    CHECK(contains(res.out, "final: (psi+, psi+, psi-)"));
}

TEST_CASE("golden: cascade --n 1") {
    const auto res = run_cli("cascade --n 1");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "counts: 4 → 1"));
}

TEST_CASE("golden: oversized cascade fails cleanly") {
    const auto res = run_cli("cascade --n 9");
    CHECK(res.exit_code == 1);
    CHECK(contains(res.err, "cascade too large"));
}

TEST_CASE("golden: teleport --state E --ideal") {
    const auto res = run_cli("teleport --state E --ideal");
    CHECK(res.exit_code == 0);
    CHECK(res.out ==
          "teleport report\n"
          "noise: ideal\n"
          "input  outcome      success_probability  fidelity  xx  yy  zz\n"
          "E      phi-:omega+  0.03125              1         1   -1  1\n");
}

TEST_CASE("golden: teleport --state A --background 0.15") {
    const auto res = run_cli("teleport --state A --background 0.15");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "0.8875"));
    CHECK(contains(res.out, "background=0.15"));
}

TEST_CASE("golden: teleport --all --ideal lists five perfect records") {
    const auto res = run_cli("teleport --all --ideal");
    CHECK(res.exit_code == 0);
    int records = 0;
    std::istringstream lines(res.out);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.find("phi-:omega+") != std::string::npos) {
            ++records;
            CHECK(contains(line, "0.03125"));
        }
    }
    CHECK(records == 5);
}

TEST_CASE("golden: hom --interferometer bs1 --tau 448") {
    const auto res = run_cli("hom --interferometer bs1 --tau 448");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "visibility: 1\n"));
    CHECK(contains(res.out, "interferometer: bs1"));
}

TEST_CASE("json reports carry the schema version and a noise echo") {
    const auto res = run_cli("teleport --state E --ideal --format json");
    CHECK(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.out);
    CHECK(j.at("schema_version").get<std::string>() == "1");
    CHECK(j.at("command").get<std::string>() == "teleport");
    CHECK(j.at("noise").at("background_weight").get<double>() == 0.0);
    const auto &rec = j.at("records").at(0);
    CHECK(rec.at("input").get<std::string>() == "E");
    CHECK(rec.at("fidelity").get<double>() == doctest::Approx(1.0));
    CHECK(rec.at("success_probability").get<double>() == doctest::Approx(1.0 / 32.0));
    CHECK(rec.at("pauli").at("yy").get<double>() == doctest::Approx(-1.0));
}

TEST_CASE("fixed seeds give byte-identical reports") {
    const std::string args = "teleport --all --ideal --format json --seed 5 --shots 1000";
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(!first.out.empty());

    const auto t1 = run_cli("bsm-table --format csv");
    const auto t2 = run_cli("bsm-table --format csv");
    CHECK(t1.out == t2.out);
    CHECK(contains(t1.out, "MATCH"));
    CHECK(!contains(t1.out, "MISMATCH"));
}

TEST_CASE("config files drive scenarios and flags override them") {
    const std::string cfg_path = "/tmp/loqsim_cli_test_cfg.txt";
    {
        std::ofstream cfg(cfg_path);
        cfg << "# golden scenario\n"
            << "state = A\n"
            << "noise.background = 0.15\n"
            << "format = csv\n";
    }
    const auto res = run_cli("teleport --config " + cfg_path);
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "A,phi-:omega+,0.03125,0.8875"));

    const auto overridden = run_cli("teleport --config " + cfg_path + " --background 0");
    CHECK(overridden.exit_code == 0);
    CHECK(contains(overridden.out, "A,phi-:omega+,0.03125,1"));
    std::remove(cfg_path.c_str());
}

TEST_CASE("config parse errors carry line and field diagnostics") {
    const std::string cfg_path = "/tmp/loqsim_cli_test_bad.txt";
    {
        std::ofstream cfg(cfg_path);
        cfg << "state = A\n"
            << "noise.background = oops\n";
    }
    const auto res = run_cli("teleport --config " + cfg_path);
    CHECK(res.exit_code == 1);
    CHECK(contains(res.err, "line 2"));
    CHECK(contains(res.err, "noise.background"));

    {
        std::ofstream cfg(cfg_path);
        cfg << "mystery = 1\n";
    }
    const auto unknown = run_cli("teleport --config " + cfg_path);
    CHECK(unknown.exit_code == 1);
    CHECK(contains(unknown.err, "unknown field 'mystery'"));
    std::remove(cfg_path.c_str());
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run_cli("teleport --state F").exit_code == 1);
    CHECK(run_cli("frobnicate").exit_code == 1);
    CHECK(run_cli("teleport --background 1.5").exit_code == 1);
    CHECK(run_cli("hom --interferometer nope").exit_code == 1);
}

TEST_CASE("reports can be written to a file") {
    const std::string out_path = "/tmp/loqsim_cli_test_report.csv";
    const auto res = run_cli("cascade --n 2 --format csv --out " + out_path);
    CHECK(res.exit_code == 0);
    CHECK(res.out.empty());
    const std::string written = slurp(out_path);
    CHECK(contains(written, "16 6 4 1"));
    std::remove(out_path.c_str());
}
