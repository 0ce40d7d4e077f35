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

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

namespace {

enum ExitCode : int { kOk = 0, kFailure = 1, kConfigError = 2, kInfeasible = 3, kVerificationFailed = 4 };

uavris::ExperimentOptions experiment_options(std::uint64_t seed, const std::string& npb_mode, double epsilon,
                                             int max_iter, bool per_slot, const std::string& realization_path) {
    uavris::ExperimentOptions o;
    o.seed = seed;
    o.npb_mode = *uavris::parse_npb_mode(npb_mode);
    o.epsilon = epsilon;
    o.max_iter = max_iter;
    o.per_slot_fading = per_slot;
    if (!realization_path.empty()) {
        std::ifstream in(realization_path);
        if (!in) throw uavris::ConfigError("realization", "cannot open " + realization_path);
        try {
            o.realization = uavris::realization_from_json(nlohmann::json::parse(in));
        } catch (const nlohmann::json::exception& e) {
            throw uavris::ConfigError("realization", e.what());
        }
    }
    return o;
}

void print_rate(const uavris::ExperimentResult& r) {
    std::printf("%-7s avg_rate=%.6f bps/Hz", std::string(uavris::algorithm_name(r.algorithm)).c_str(), r.avg_rate);
    if (r.stderr_rate > 0.0) std::printf(" (stderr %.2e)", r.stderr_rate);
    if (!r.log.empty()) std::printf(" iterations=%d%s", r.iterations, r.converged ? "" : " (not converged)");
    std::printf("\n");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Joint UAV trajectory and RIS passive beamforming optimization"};
    app.require_subcommand(1);

    std::string config;
    std::uint64_t seed = 1;
    std::string out = "out";
    std::string npb_mode = "random";
    double epsilon = 1e-4;
    int max_iter = 200;
    bool per_slot = false;
    std::string realization;

    auto common = [&](CLI::App* cmd, bool needs_config) {
        auto* c = cmd->add_option("--config", config, "Scenario JSON")->check(CLI::ExistingFile);
        if (needs_config) c->required();
        cmd->add_option("--seed", seed, "Experiment seed");
        cmd->add_option("--out", out, "Output directory");
        cmd->add_option("--npb-mode", npb_mode, "Phases without beamforming")
            ->check(CLI::IsMember({"zero", "random", "no-ris"}));
        cmd->add_option("--epsilon", epsilon, "Relative improvement threshold")->check(CLI::PositiveNumber);
        cmd->add_option("--max-iter", max_iter, "Outer iteration cap")->check(CLI::PositiveNumber);
        cmd->add_option("--realization", realization, "Replay a realization JSON")->check(CLI::ExistingFile);
        cmd->add_flag("--per-slot-fading", per_slot, "Independent fading per slot");
    };

    auto* optimize = app.add_subcommand("optimize", "Joint trajectory and beamforming design");
    common(optimize, true);

    std::vector<std::string> algorithms{"jtpb", "t_npb", "ht_pb", "ht_npb"};
    auto* benchmark = app.add_subcommand("benchmark", "Compare the design against the benchmarks");
    common(benchmark, true);
    benchmark->add_option("--algorithms", algorithms, "Subset of jtpb,t_npb,ht_pb,ht_npb")
        ->delimiter(',')
        ->check(CLI::IsMember({"jtpb", "t_npb", "ht_pb", "ht_npb"}));

    std::vector<double> t_values{200, 300, 500, 740};
    auto* sweep = app.add_subcommand("sweep-t", "Average rate versus flight duration");
    common(sweep, true);
    sweep->add_option("--t-values", t_values, "Durations [s]")->delimiter(',');

    uavris::LemmaSweepOptions lemma;
    auto* verify = app.add_subcommand("verify-lemma", "Numerical convexity certificate");
    common(verify, false);
    verify->add_option("--points", lemma.points, "Sample points");
    verify->add_option("--fd-tolerance", lemma.hessian_fd_tolerance, "Hessian finite-difference tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            lemma.seed = seed;
            const uavris::LemmaSweepReport report =
                uavris::cmd_verify_lemma(lemma, verify->count("--out") ? std::optional<std::filesystem::path>(out)
                                                                       : std::nullopt);
            std::cout << uavris::to_json(report, lemma).dump(2) << '\n';
            return report.passed(lemma) ? kOk : kVerificationFailed;
        }

        const uavris::Scenario s = uavris::load_scenario(config);
        const uavris::ExperimentOptions options =
            experiment_options(seed, npb_mode, epsilon, max_iter, per_slot, realization);

        if (*optimize) {
            print_rate(uavris::cmd_optimize(s, options, out));
        } else if (*benchmark) {
            std::vector<uavris::Algorithm> selected;
            for (const auto& name : algorithms) selected.push_back(*uavris::parse_algorithm(name));
            for (const auto& r : uavris::cmd_benchmark(s, selected, options, out)) print_rate(r);
        } else if (*sweep) {
            for (const auto& row : uavris::cmd_sweep_T(s, t_values, options, out))
                std::printf("T=%-6g %-7s avg_rate=%.6f\n", row.T_s,
                            std::string(uavris::algorithm_name(row.algorithm)).c_str(), row.avg_rate);
        }
        return kOk;
    } catch (const uavris::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const uavris::InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
}
