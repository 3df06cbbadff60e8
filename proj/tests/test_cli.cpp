// Copyright 2026 The digitbf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "digitbf/cli.hpp"

using namespace digitbf;

namespace {

namespace fs = std::filesystem;

int run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"digitbf"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return cli::run(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / "digitbf_cli_test";
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("prior spec grammar") {
    const auto priors = cli::parse_priors("a1,a50,mix:5:0.2:0.5");
    REQUIRE(priors.size() == 3);
    CHECK(priors[0].label == "a1");
    CHECK(std::get<DirichletPrior>(priors[0].prior).a[0] == 1.0);
    CHECK(std::get<DirichletPrior>(priors[1].prior).a[0] == 50.0);
    const auto& mix = std::get<MixturePrior>(priors[2].prior);
    CHECK(mix.first.a[0] == 5.0);
    CHECK(mix.second.a[0] == 0.2);
    CHECK(mix.weight == 0.5);

    CHECK_THROWS_AS(cli::parse_priors("b2"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_priors("a0"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_priors("mix:5:0.2"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_priors("mix:5:0.2:1.5"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_priors(""), std::invalid_argument);
}

TEST_CASE("bias spec grammar") {
    const auto bias = cli::parse_bias("0:0.11");
    CHECK(bias[0] == doctest::Approx(0.11));
    for (int d = 1; d < 10; ++d) CHECK(bias[d] == doctest::Approx(0.89 / 9));

    const auto uniform = cli::parse_bias("");
    for (int d = 0; d < 10; ++d) CHECK(uniform[d] == doctest::Approx(0.1));

    CHECK_THROWS_AS(cli::parse_bias("x:0.5"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_bias("0:1.5"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_bias("0:0.6,1:0.6"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_bias("0:0.1,0:0.1"), std::invalid_argument);
}

TEST_CASE("analyze writes a trajectory and reports finals") {
    TempDir dir;
    const auto out = dir.path / "pi.csv";
    CHECK(run_cli({"analyze", "--constant", "pi", "--max-digits", "5000", "--out",
                   out.string()}) == cli::kExitOk);
    const std::string csv = slurp(out);
    CHECK(csv.find("n,log_bf_a1,log_bf_a50,log_bf_mix,log_bf_max,log_bf_threshold,log_bf_gap,"
                   "partial") != std::string::npos);
    // five data rows
    int rows = 0;
    std::stringstream lines(csv);
    std::string line;
    while (std::getline(lines, line))
        if (!line.empty() && line[0] != '#' && line[0] != 'n') ++rows;
    CHECK(rows == 5);
}

TEST_CASE("analyze argument validation") {
    CHECK(run_cli({"analyze", "--constant", "e", "--max-digits", "0"}) == cli::kExitUsage);
    CHECK(run_cli({"analyze"}) == cli::kExitUsage);
    CHECK(run_cli({"analyze", "--constant", "pi", "--digits", "x.txt"}) == cli::kExitUsage);
    CHECK(run_cli({"analyze", "--constant", "tau", "--max-digits", "100"}) == cli::kExitUsage);
    CHECK(run_cli({"analyze", "--constant", "pi", "--max-digits", "100", "--priors", "zzz"}) ==
          cli::kExitUsage);
    CHECK(run_cli({"analyze", "--counts", "1,2,3"}) == cli::kExitUsage);
    CHECK(run_cli({"nonsense"}) == cli::kExitUsage);
}

TEST_CASE("analyze maps digit-file parse failures to exit 3") {
    TempDir dir;
    const auto bad = dir.path / "bad.txt";
    std::ofstream(bad) << "123x";
    CHECK(run_cli({"analyze", "--digits", bad.string()}) == cli::kExitParse);
    CHECK(run_cli({"analyze", "--digits", (dir.path / "absent.txt").string()}) ==
          cli::kExitParse);
}

TEST_CASE("analyze maps ceiling refusals to exit 4") {
    CHECK(run_cli({"analyze", "--constant", "pi", "--max-digits", "2000",
                   "--generation-ceiling", "1000"}) == cli::kExitGeneration);
}

TEST_CASE("analyze accepts a counts vector") {
    TempDir dir;
    const auto out = dir.path / "counts.json";
    CHECK(run_cli({"analyze", "--counts", "10,10,10,10,10,10,10,10,10,10", "--format", "json",
                   "--out", out.string()}) == cli::kExitOk);
    const auto doc = nlohmann::json::parse(slurp(out));
    CHECK(doc["points"].size() == 1);
    CHECK(doc["points"][0]["n"] == 100);
}

TEST_CASE("csv and json emissions carry identical numbers") {
    TempDir dir;
    const auto csv_path = dir.path / "t.csv";
    const auto json_path = dir.path / "t.json";
    const std::vector<std::string> base{"analyze",  "--constant", "e",
                                        "--max-digits", "4000",   "--priors",
                                        "a1,a50,mix:5:0.2:0.5"};
    auto csv_args = base;
    csv_args.insert(csv_args.end(), {"--out", csv_path.string()});
    auto json_args = base;
    json_args.insert(json_args.end(),
                     {"--format", "json", "--out", json_path.string()});
    REQUIRE(run_cli(csv_args) == cli::kExitOk);
    REQUIRE(run_cli(json_args) == cli::kExitOk);

    const auto doc = nlohmann::json::parse(slurp(json_path));
    // parse csv rows
    std::stringstream lines(slurp(csv_path));
    std::string line;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'n') continue;
        std::vector<std::string> cells;
        std::stringstream cell_stream(line);
        std::string cell;
        while (std::getline(cell_stream, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    REQUIRE(rows.size() == doc["points"].size());
    const char* keys[] = {"log_bf_a1", "log_bf_a50", "log_bf_mix",
                          "log_bf_max", "log_bf_threshold", "log_bf_gap"};
    for (std::size_t r = 0; r < rows.size(); ++r) {
        CHECK(std::stoull(rows[r][0]) == doc["points"][r]["n"].get<std::uint64_t>());
        for (int k = 0; k < 6; ++k) {
            const auto& cell = rows[r][k + 1];
            const auto& jval = doc["points"][r][keys[k]];
            if (cell.empty()) {
                CHECK(jval.is_null());
            } else {
                CHECK(std::stod(cell) == jval.get<double>());
            }
        }
    }
}

TEST_CASE("generate writes the documented cache format") {
    TempDir dir;
    const auto out = dir.path / "e.txt";
    CHECK(run_cli({"generate", "--constant", "e", "--length", "100", "--out", out.string()}) ==
          cli::kExitOk);
    const std::string contents = slurp(out);
    CHECK(contents.substr(0, 10) == "7182818284");
    CHECK(contents.size() == 101);  // 100 digits + newline
    CHECK(run_cli({"generate", "--constant", "e", "--length", "50", "--generation-ceiling",
                   "10"}) == cli::kExitGeneration);
    CHECK(run_cli({"generate", "--constant", "phi", "--length", "10"}) == cli::kExitUsage);
}

TEST_CASE("threshold prints the boundary set and rejects off-grid N") {
    CHECK(run_cli({"threshold", "--n", "1000", "--alpha", "0.05", "--prior", "a1"}) ==
          cli::kExitOk);
    CHECK(run_cli({"threshold", "--n", "15", "--alpha", "0.05"}) == cli::kExitUsage);
}

TEST_CASE("simulate is deterministic for identical argument vectors") {
    TempDir dir;
    const auto first = dir.path / "sim1.csv";
    const auto second = dir.path / "sim2.csv";
    const std::vector<std::string> args{"simulate",        "--reps", "10", "--digits-per-rep",
                                        "1000",            "--bias", "0:0.1", "--seed",
                                        "1"};
    auto args1 = args;
    args1.insert(args1.end(), {"--out", first.string()});
    auto args2 = args;
    args2.insert(args2.end(), {"--out", second.string()});
    REQUIRE(run_cli(args1) == cli::kExitOk);
    REQUIRE(run_cli(args2) == cli::kExitOk);
    std::string a = slurp(first), b = slurp(second);
    // the emitted command line differs only in the output path
    const auto strip = [](std::string text, const std::string& needle) {
        std::string::size_type pos;
        while ((pos = text.find(needle)) != std::string::npos) text.erase(pos, needle.size());
        return text;
    };
    CHECK(strip(a, first.string()) == strip(b, second.string()));
    CHECK(run_cli({"simulate", "--reps", "2", "--digits-per-rep", "100", "--bias", "0:2.0"}) ==
          cli::kExitUsage);
    CHECK(run_cli({"simulate", "--reps", "2", "--digits-per-rep", "100", "--bias", "junk"}) ==
          cli::kExitUsage);
}

TEST_CASE("simulate reports summaries per prior in json") {
    TempDir dir;
    const auto out = dir.path / "sim.json";
    CHECK(run_cli({"simulate", "--reps", "5", "--digits-per-rep", "2000", "--seed", "7",
                   "--format", "json", "--trajectories", "1", "--out", out.string()}) ==
          cli::kExitOk);
    const auto doc = nlohmann::json::parse(slurp(out));
    CHECK(doc["replications"].size() == 5);
    CHECK(doc["summaries"].size() == 2);
    CHECK(doc["summaries"][0]["prior"] == "a1");
    CHECK(doc["sampled_trajectories"].size() == 1);
}

}  // TEST_SUITE
