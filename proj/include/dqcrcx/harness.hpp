// Copyright 2026 The dqcrcx Authors
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

#ifndef DQCRCX_HARNESS_HPP
#define DQCRCX_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dqcrcx/library.hpp"
#include "dqcrcx/scheduler.hpp"
#include "dqcrcx/simulator.hpp"

namespace dqc {

enum class Schedule { Monolithic, Naive, GP };

std::string schedule_name(Schedule s);
Schedule schedule_from_name(const std::string &name);

struct ExperimentConfig {
    std::string id;
    CircuitSpec circuit;
    NetworkConfig network;
    std::vector<Schedule> schedules{Schedule::Naive, Schedule::GP};
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
    std::size_t n_traj = 20000;
    NoiseParams noise;
    /// Declared register size; when present it must equal network.total_qubits().
    std::optional<std::size_t> total_qubits;

    void validate() const;
};

struct SuiteConfig {
    std::size_t width_cap = 24;
    std::vector<ExperimentConfig> experiments;
};

/// Parses the JSON experiment file. Top-level keys: "width_cap",
/// "defaults" (seeds, trajectories, noise, schedules) and "experiments";
/// a single experiment object is also accepted. See configs/README.md.
SuiteConfig parse_suite(const std::string &json_text);
SuiteConfig load_suite(const std::string &path);

struct ResultRecord {
    std::string config_id;
    Schedule schedule = Schedule::Naive;
    std::uint64_t seed = 0;
    double fidelity = 0.0;
    double std_err = 0.0;
    std::size_t remote_cx = 0;
    std::size_t depth = 0;
    std::size_t total_qubits = 0;
    double wall_time_s = 0.0;

    bool operator==(const ResultRecord &) const = default;
};

struct RunOptions {
    SimulationOptions simulation;
    /// Wall times are written as 0 unless enabled, keeping result files
    /// byte-identical between runs.
    bool record_timing = false;
};

/// Pieces of one (config, schedule, seed) cell without simulation.
struct CompiledCell {
    Circuit logical;
    Assignment assignment;
    DistributedCircuit distributed;
};

/// Transpiled monolithic circuit of a config.
Circuit compile_logical(const ExperimentConfig &cfg);
CompiledCell compile_cell(const ExperimentConfig &cfg, const Circuit &logical, Schedule schedule, std::uint64_t seed);

/// One monolithic baseline record per seed plus one record per (schedule,
/// seed): generate, transpile, assign, distribute, estimate fidelity. The
/// trajectory stream of every record in a seed is keyed by that seed.
std::vector<ResultRecord> run_experiment(const ExperimentConfig &cfg, const RunOptions &options = {});

struct AggregateRow {
    std::string config_id;
    Schedule schedule = Schedule::Naive;
    std::size_t n_seeds = 0;
    double fidelity_mean = 0.0;
    /// Sample standard deviation of the per-seed means.
    double fidelity_std = 0.0;
    double remote_cx_mean = 0.0;
    double depth_mean = 0.0;
    std::size_t total_qubits = 0;
};

std::vector<AggregateRow> aggregate(const std::vector<ResultRecord> &records);

struct DepthRow {
    std::string config_id;
    std::string family;
    std::size_t logical_qubits = 0;
    std::size_t num_qpus = 0;
    std::size_t comm_qubits = 0;
    Schedule schedule = Schedule::Naive;
    double depth_mean = 0.0;
    double remote_cx_mean = 0.0;
};

/// Distributed depth per (config, schedule), averaged over seeds.
std::vector<DepthRow> depth_table(const SuiteConfig &suite);

struct SuiteOverrides {
    std::optional<std::size_t> seed_count;
    std::optional<std::size_t> n_traj;
    std::optional<std::size_t> width_cap;
    std::optional<NoiseParams> noise;
};

struct SuiteResult {
    std::vector<ResultRecord> records;
    std::vector<AggregateRow> aggregates;
    std::vector<DepthRow> depths;
    std::vector<std::string> skipped;
};

/// Applies `overrides` to every experiment, skips experiments wider than the
/// width cap, runs the rest and, when `out_dir` is non-empty, writes
/// records.csv, aggregate.csv and depth.csv there. Monolithic baselines are
/// shared between experiments with identical circuit, noise and trajectory
/// count.
SuiteResult run_suite(SuiteConfig suite, const SuiteOverrides &overrides, const std::string &out_dir,
                      const RunOptions &options = {}, std::ostream *log = nullptr);

/// Rows sorted by (config id, schedule, seed) under the header
/// config_id,schedule,seed,fidelity,std_err,remote_cx,depth,total_qubits,wall_time_s.
void write_csv(std::ostream &out, std::vector<ResultRecord> records);
void write_csv(const std::vector<ResultRecord> &records, const std::string &path);
std::vector<ResultRecord> read_csv(std::istream &in);

void write_aggregate_csv(std::ostream &out, const std::vector<AggregateRow> &rows);
void write_depth_csv(std::ostream &out, const std::vector<DepthRow> &rows);

}  // namespace dqc

#endif
