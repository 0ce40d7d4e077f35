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

#include <chrono>
#include <cstdio>
#include <fstream>
#include <future>
#include <stdexcept>

namespace uavris {

namespace fs = std::filesystem;

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string duration_label(double T) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "T_%g", T);
    return buf;
}

std::ofstream open_output(const fs::path& path) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    return out;
}

bool uses_sca(Algorithm a) { return a == Algorithm::Jtpb || a == Algorithm::TNpb; }

ScaOptions sca_options(const ExperimentOptions& options) {
    ScaOptions o;
    o.epsilon = options.epsilon;
    o.max_iter = options.max_iter;
    return o;
}

nlohmann::json fading_json(const std::vector<ChannelRealization>& fading, double rho) {
    if (fading.size() == 1) return realization_to_json(fading.front(), rho);
    nlohmann::json slots = nlohmann::json::array();
    for (const auto& r : fading) slots.push_back(realization_to_json(r, rho));
    return {{"per_slot", slots}};
}

}  // namespace

std::string_view algorithm_name(Algorithm a) noexcept {
    switch (a) {
    case Algorithm::Jtpb: return "jtpb";
    case Algorithm::TNpb: return "t_npb";
    case Algorithm::HtPb: return "ht_pb";
    case Algorithm::HtNpb: return "ht_npb";
    }
    return "jtpb";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
    for (Algorithm a : kAllAlgorithms)
        if (algorithm_name(a) == name) return a;
    return std::nullopt;
}

std::vector<ChannelRealization> experiment_fading(const Scenario& s, const ExperimentOptions& options) {
    if (options.realization) {
        if (options.realization->elements() != s.M)
            throw ConfigError("realization", "element count does not match M");
        return {*options.realization};
    }
    if (options.per_slot_fading) return sample_per_slot_realizations(s, options.seed);
    return {sample_realization(s, options.seed)};
}

ExperimentResult run_algorithm(Algorithm a, const Scenario& s, FadingView fading, const ExperimentOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    ExperimentResult r;
    r.algorithm = a;
    r.seed = options.seed;
    r.scenario_hash = scenario_hash(s);
    r.T_s = s.T;

    switch (a) {
    case Algorithm::Jtpb:
    case Algorithm::TNpb: {
        ScaOutcome out = a == Algorithm::Jtpb ? run_sca(s, fading, sca_options(options))
                                              : t_npb_optimize(s, fading, sca_options(options));
        r.trajectory = std::move(out.trajectory);
        r.objective_log = std::move(out.objective_log);
        r.log = std::move(out.log);
        r.iterations = out.iterations;
        r.converged = out.converged;
        if (a == Algorithm::Jtpb) {
            r.avg_rate = average_rate(r.trajectory, out.schedule, fading, s);
            r.schedule = std::move(out.schedule);
        } else {
            const RateEstimate e = npb_rate(r.trajectory, fading, s, options.npb_mode, options.seed, options.npb_draws);
            r.avg_rate = e.mean;
            r.stderr_rate = e.stderr_mean;
        }
        break;
    }
    case Algorithm::HtPb:
        r.trajectory = heuristic_trajectory(s);
        r.schedule = optimal_phases(r.trajectory, fading, s);
        r.avg_rate = average_rate(r.trajectory, *r.schedule, fading, s);
        break;
    case Algorithm::HtNpb: {
        r.trajectory = heuristic_trajectory(s);
        const RateEstimate e = npb_rate(r.trajectory, fading, s, options.npb_mode, options.seed, options.npb_draws);
        r.avg_rate = e.mean;
        r.stderr_rate = e.stderr_mean;
        break;
    }
    }
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

void write_trajectory_csv(const fs::path& path, const Trajectory& traj, const Scenario& s) {
    if (const auto violations = check_mobility(traj, s); !violations.empty())
        throw InfeasibleError("refusing to write infeasible trajectory to " + path.string());
    std::ofstream out = open_output(path);
    out << "slot,x_m,y_m\n";
    for (std::size_t n = 0; n < traj.size(); ++n) out << n + 1 << ',' << fmt(traj[n].x()) << ',' << fmt(traj[n].y()) << '\n';
}

void write_phases_csv(const fs::path& path, const PhaseSchedule& schedule) {
    std::ofstream out = open_output(path);
    out << "slot,element,theta_rad\n";
    for (Eigen::Index n = 0; n < schedule.theta.rows(); ++n)
        for (Eigen::Index i = 0; i < schedule.theta.cols(); ++i)
            out << n + 1 << ',' << i + 1 << ',' << fmt(schedule.theta(n, i)) << '\n';
}

void write_iterations_csv(const fs::path& path, const ExperimentResult& result) {
    std::ofstream out = open_output(path);
    out << "iter,avg_rate_bps_hz,surrogate_obj,max_step_m,subproblem_sweeps\n";
    if (!result.objective_log.empty())
        out << "0," << fmt(result.objective_log.front()) << ',' << fmt(result.objective_log.front()) << ",0,0\n";
    for (const ScaIteration& it : result.log)
        out << it.iter << ',' << fmt(it.avg_rate) << ',' << fmt(it.surrogate) << ',' << fmt(it.max_step_m) << ','
            << it.sweeps << '\n';
}

void write_json(const fs::path& path, const nlohmann::json& j) {
    std::ofstream out = open_output(path);
    out << j.dump(2) << '\n';
}

nlohmann::json summary_json(const ExperimentResult& r, const ExperimentOptions& options) {
    nlohmann::json j;
    j["algorithm"] = algorithm_name(r.algorithm);
    j["seed"] = r.seed;
    j["scenario_hash"] = r.scenario_hash;
    j["T_s"] = r.T_s;
    j["slots"] = r.trajectory.size();
    j["avg_rate_bps_hz"] = r.avg_rate;
    j["stderr"] = r.stderr_rate;
    if (r.algorithm == Algorithm::TNpb || r.algorithm == Algorithm::HtNpb) {
        j["npb_mode"] = npb_mode_name(options.npb_mode);
        if (options.npb_mode == NpbMode::Random) j["npb_draws"] = options.npb_draws;
    }
    if (uses_sca(r.algorithm)) {
        j["epsilon"] = options.epsilon;
        j["max_iter"] = options.max_iter;
        j["iterations"] = r.iterations;
        j["converged"] = r.converged;
    }
    nlohmann::json files = {{"trajectory", "trajectory.csv"}};
    if (r.schedule) files["phases"] = "phases.csv";
    if (uses_sca(r.algorithm)) files["iterations"] = "iterations.csv";
    j["files"] = files;
    return j;
}

void write_result_files(const fs::path& dir, const ExperimentResult& r, const Scenario& s) {
    write_trajectory_csv(dir / "trajectory.csv", r.trajectory, s);
    if (r.schedule) write_phases_csv(dir / "phases.csv", *r.schedule);
    if (uses_sca(r.algorithm)) write_iterations_csv(dir / "iterations.csv", r);
}

ExperimentResult cmd_optimize(const Scenario& s, const ExperimentOptions& options, const fs::path& out_dir) {
    validate(s);
    const std::vector<ChannelRealization> fading = experiment_fading(s, options);
    ExperimentResult r = run_algorithm(Algorithm::Jtpb, s, fading, options);
    write_result_files(out_dir, r, s);
    write_json(out_dir / "summary.json", summary_json(r, options));
    write_json(out_dir / "realization.json", fading_json(fading, s.rho));
    write_json(out_dir / "timing.json", {{"wall_seconds", r.wall_seconds}});
    return r;
}

std::vector<ExperimentResult> cmd_benchmark(const Scenario& s, const std::vector<Algorithm>& algorithms,
                                            const ExperimentOptions& options, const fs::path& out_dir) {
    validate(s);
    const std::vector<ChannelRealization> fading = experiment_fading(s, options);

    std::vector<std::future<ExperimentResult>> tasks;
    for (Algorithm a : algorithms)
        tasks.push_back(std::async(std::launch::async, [&, a] {
            ExperimentResult r = run_algorithm(a, s, fading, options);
            write_result_files(out_dir / algorithm_name(a), r, s);
            return r;
        }));
    std::vector<ExperimentResult> results;
    for (auto& t : tasks) results.push_back(t.get());

    std::ofstream table = open_output(out_dir / "comparison.csv");
    table << "algorithm,avg_rate_bps_hz,stderr,iterations,converged\n";
    nlohmann::json summary = {{"seed", options.seed}, {"scenario_hash", scenario_hash(s)}, {"T_s", s.T}};
    nlohmann::json timing;
    for (const ExperimentResult& r : results) {
        table << algorithm_name(r.algorithm) << ',' << fmt(r.avg_rate) << ',' << fmt(r.stderr_rate) << ','
              << r.iterations << ',' << (r.converged ? "true" : "false") << '\n';
        summary["results"].push_back(summary_json(r, options));
        timing[std::string(algorithm_name(r.algorithm))] = r.wall_seconds;
    }
    write_json(out_dir / "summary.json", summary);
    write_json(out_dir / "realization.json", fading_json(fading, s.rho));
    write_json(out_dir / "timing.json", timing);
    return results;
}

std::vector<SweepRow> cmd_sweep_T(const Scenario& s, const std::vector<double>& T_values,
                                  const ExperimentOptions& options, const fs::path& out_dir) {
    std::vector<Scenario> scenarios;
    for (double T : T_values) {
        scenarios.push_back(with_duration(s, T));
        validate(scenarios.back());
    }

    std::vector<std::future<std::vector<ExperimentResult>>> tasks;
    for (const Scenario& point : scenarios)
        tasks.push_back(std::async(std::launch::async, [&point, &options, &out_dir] {
            const std::vector<ChannelRealization> fading = experiment_fading(point, options);
            std::vector<ExperimentResult> results;
            for (Algorithm a : kAllAlgorithms) {
                results.push_back(run_algorithm(a, point, fading, options));
                write_result_files(out_dir / duration_label(point.T) / algorithm_name(a), results.back(), point);
            }
            return results;
        }));

    std::vector<SweepRow> rows;
    std::ofstream table = open_output(out_dir / "sweep.csv");
    table << "T_s,algorithm,avg_rate_bps_hz,stderr\n";
    nlohmann::json summary = {{"seed", options.seed}, {"points", nlohmann::json::array()}};
    nlohmann::json timing;
    for (auto& t : tasks) {
        for (const ExperimentResult& r : t.get()) {
            rows.push_back({r.T_s, r.algorithm, r.avg_rate, r.stderr_rate});
            table << fmt(r.T_s) << ',' << algorithm_name(r.algorithm) << ',' << fmt(r.avg_rate) << ','
                  << fmt(r.stderr_rate) << '\n';
            nlohmann::json entry = summary_json(r, options);
            entry["directory"] = duration_label(r.T_s) + "/" + std::string(algorithm_name(r.algorithm));
            summary["points"].push_back(entry);
            timing[duration_label(r.T_s)][std::string(algorithm_name(r.algorithm))] = r.wall_seconds;
        }
    }
    write_json(out_dir / "summary.json", summary);
    write_json(out_dir / "timing.json", timing);
    return rows;
}

LemmaSweepReport cmd_verify_lemma(const LemmaSweepOptions& options, const std::optional<fs::path>& out_dir) {
    LemmaSweepReport report = run_lemma_sweep(options);
    if (out_dir) write_json(*out_dir / "lemma_report.json", to_json(report, options));
    return report;
}

}  // namespace uavris
