// SPDX-License-Identifier: Apache-2.0
//
// uavris: joint UAV trajectory and RIS passive beamforming optimization
// Copyright (C) 2026 The uavris authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "uavris/experiment.hpp"
#include "uavris/scenario_io.hpp"

#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using namespace uavris;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("uavris_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

int run_cli(const std::string& args) {
    const std::string command = std::string(UAVRIS_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path write_config(const fs::path& dir, const nlohmann::json& config) {
    const fs::path p = dir / "config.json";
    std::ofstream(p) << config.dump();
    return p;
}

nlohmann::json reference_config() {
    std::ifstream in(UAVRIS_REFERENCE_CONFIG);
    return nlohmann::json::parse(in);
}

int count_lines(const std::string& text) { return static_cast<int>(std::count(text.begin(), text.end(), '\n')); }

}  // namespace

TEST_CASE("shipped config is the reference scenario") {
    const Scenario s = load_scenario(UAVRIS_REFERENCE_CONFIG);
    CHECK(scenario_hash(s) == scenario_hash(reference_scenario()));
}

TEST_CASE("algorithm names") {
    for (Algorithm a : kAllAlgorithms) CHECK(parse_algorithm(algorithm_name(a)) == a);
    CHECK_FALSE(parse_algorithm("jt&pb").has_value());
}

TEST_CASE("optimize writes its outputs deterministically") {
    const Scenario s = reference_scenario(100.0);
    ExperimentOptions o;
    o.seed = 3;
    const fs::path a = scratch("optimize_a");
    const fs::path b = scratch("optimize_b");
    const ExperimentResult r = cmd_optimize(s, o, a);
    cmd_optimize(s, o, b);

    CHECK(r.avg_rate > 0.0);
    CHECK(check_mobility(r.trajectory, s).empty());
    for (const char* f : {"trajectory.csv", "phases.csv", "iterations.csv", "summary.json", "realization.json"}) {
        INFO(f);
        REQUIRE(fs::exists(a / f));
        CHECK(slurp(a / f) == slurp(b / f));
    }
    CHECK(fs::exists(a / "timing.json"));

    const std::string traj = slurp(a / "trajectory.csv");
    CHECK(traj.rfind("slot,x_m,y_m\n1,-500,20\n", 0) == 0);
    CHECK(count_lines(traj) == s.N + 1);
    const std::string phases = slurp(a / "phases.csv");
    CHECK(phases.rfind("slot,element,theta_rad\n1,1,", 0) == 0);
    CHECK(count_lines(phases) == s.N * s.M + 1);
    const std::string iters = slurp(a / "iterations.csv");
    CHECK(iters.rfind("iter,avg_rate_bps_hz,surrogate_obj,max_step_m,subproblem_sweeps\n0,", 0) == 0);
    CHECK(count_lines(iters) == r.iterations + 2);

    const nlohmann::json summary = nlohmann::json::parse(slurp(a / "summary.json"));
    CHECK(summary["algorithm"] == "jtpb");
    CHECK(summary["seed"] == 3);
    CHECK(summary["scenario_hash"] == scenario_hash(s));
    CHECK(summary["avg_rate_bps_hz"].get<double>() == r.avg_rate);
    CHECK_FALSE(summary.contains("wall_seconds"));

    const ChannelRealization replay = realization_from_json(nlohmann::json::parse(slurp(a / "realization.json")));
    CHECK(replay.h_rg == sample_realization(s, 3).h_rg);
}

TEST_CASE("a different seed changes the result") {
    const Scenario s = reference_scenario(100.0);
    ExperimentOptions o;
    o.seed = 4;
    const ExperimentResult a = cmd_optimize(s, o, scratch("seed_a"));
    o.seed = 5;
    const ExperimentResult b = cmd_optimize(s, o, scratch("seed_b"));
    CHECK(a.avg_rate != b.avg_rate);
}

TEST_CASE("benchmark subsets") {
    const Scenario s = reference_scenario(120.0);
    ExperimentOptions o;
    const fs::path dir = scratch("benchmark");
    const auto results = cmd_benchmark(s, {Algorithm::HtPb, Algorithm::HtNpb}, o, dir);
    REQUIRE(results.size() == 2);
    CHECK(slurp(dir / "ht_pb" / "trajectory.csv") == slurp(dir / "ht_npb" / "trajectory.csv"));
    CHECK(fs::exists(dir / "ht_pb" / "phases.csv"));
    CHECK_FALSE(fs::exists(dir / "ht_npb" / "phases.csv"));
    CHECK(results[0].avg_rate > results[1].avg_rate);
    CHECK(results[1].stderr_rate > 0.0);

    const std::string table = slurp(dir / "comparison.csv");
    CHECK(table.rfind("algorithm,avg_rate_bps_hz,stderr,iterations,converged\nht_pb,", 0) == 0);
    CHECK(count_lines(table) == 3);

    const fs::path one = scratch("benchmark_one");
    CHECK(cmd_benchmark(s, {Algorithm::TNpb}, o, one).size() == 1);
    CHECK(count_lines(slurp(one / "comparison.csv")) == 2);
}

TEST_CASE("sweep with one duration gives one row per algorithm") {
    const Scenario s = reference_scenario();
    ExperimentOptions o;
    o.npb_mode = NpbMode::Zero;
    const fs::path dir = scratch("sweep");
    const auto rows = cmd_sweep_T(s, {100.0}, o, dir);
    CHECK(rows.size() == 4);
    const std::string csv = slurp(dir / "sweep.csv");
    CHECK(csv.rfind("T_s,algorithm,avg_rate_bps_hz,stderr\n100,jtpb,", 0) == 0);
    CHECK(count_lines(csv) == 5);
    CHECK(fs::exists(dir / "T_100" / "t_npb" / "trajectory.csv"));
}

TEST_CASE("infeasible trajectories are never written") {
    const Scenario s = reference_scenario(50.0);
    Trajectory bad = straight_line(s);
    bad.q.col(4) += Point2(500, 0);
    const fs::path dir = scratch("infeasible");
    CHECK_THROWS_AS(write_trajectory_csv(dir / "trajectory.csv", bad, s), InfeasibleError);
    CHECK_FALSE(fs::exists(dir / "trajectory.csv"));
}

TEST_CASE("cli exit codes") {
    const fs::path dir = scratch("cli");
    nlohmann::json config = reference_config();
    config["T"] = 60;
    const fs::path good = write_config(dir, config);
    CHECK(run_cli("optimize --config " + good.string() + " --out " + (dir / "opt").string() + " --max-iter 3") == 0);
    CHECK(fs::exists(dir / "opt" / "trajectory.csv"));

    config.erase("kappa");
    const fs::path missing = write_config(dir, config);
    CHECK(run_cli("optimize --config " + missing.string() + " --out " + (dir / "x").string()) == 2);

    config = reference_config();
    config["T"] = 30;
    const fs::path tight = write_config(dir, config);
    CHECK(run_cli("optimize --config " + tight.string() + " --out " + (dir / "y").string()) == 3);

    config = reference_config();
    config["T"] = 40;
    const fs::path no_hover = write_config(dir, config);
    CHECK(run_cli("benchmark --algorithms ht_pb --config " + no_hover.string() + " --out " + (dir / "z").string()) == 3);

    CHECK(run_cli("verify-lemma --points 200 --out " + dir.string()) == 0);
    const nlohmann::json report = nlohmann::json::parse(slurp(dir / "lemma_report.json"));
    for (const char* key : {"points_tested", "min_leading_minor", "min_det_surplus", "max_fd_rel_error"})
        CHECK(report.contains(key));
    CHECK(report["points_tested"] == 200);
    CHECK(run_cli("verify-lemma --points 200 --fd-tolerance 1e-30") == 4);

    CHECK(run_cli("optimize --config " + good.string() + " --npb-mode sometimes") != 0);
}
