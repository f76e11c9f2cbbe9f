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

#include "dqcrcx/harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "dqcrcx/circuit_io.hpp"
#include "dqcrcx/distributor.hpp"
#include "dqcrcx/transpiler.hpp"

namespace dqc {

using json = nlohmann::json;

std::string schedule_name(Schedule s) {
    switch (s) {
        case Schedule::Monolithic:
            return "monolithic";
        case Schedule::Naive:
            return "naive";
        case Schedule::GP:
            return "gp";
    }
    return "?";
}

Schedule schedule_from_name(const std::string &name) {
    for (Schedule s : {Schedule::Monolithic, Schedule::Naive, Schedule::GP}) {
        if (schedule_name(s) == name) {
            return s;
        }
    }
    throw std::invalid_argument("unknown schedule '" + name + "'");
}

void ExperimentConfig::validate() const {
    if (id.empty()) {
        throw std::invalid_argument("experiment without id");
    }
    if (total_qubits && *total_qubits != network.total_qubits()) {
        throw std::invalid_argument("experiment " + id + ": declared total_qubits " + std::to_string(*total_qubits) +
                                    " but the network has " + std::to_string(network.total_qubits()));
    }
    if (network.comp_capacity() < circuit.num_qubits) {
        throw std::invalid_argument("experiment " + id + ": " + std::to_string(circuit.num_qubits) +
                                    " logical qubits exceed the computational capacity " +
                                    std::to_string(network.comp_capacity()));
    }
    if (seeds.empty()) {
        throw std::invalid_argument("experiment " + id + ": no seeds");
    }
    if (n_traj == 0) {
        throw std::invalid_argument("experiment " + id + ": trajectories must be positive");
    }
    noise.validate();
}

namespace {

NoiseParams parse_noise(const json &j, NoiseParams base) {
    if (j.is_string()) {
        return NoiseParams::parse(j.get<std::string>());
    }
    base.p1 = j.value("p1", base.p1);
    base.p2 = j.value("p2", base.p2);
    base.p_ro = j.value("p_ro", base.p_ro);
    base.validate();
    return base;
}

NetworkConfig parse_network(const json &j) {
    if (j.is_string()) {
        return NetworkConfig::parse(j.get<std::string>());
    }
    if (j.is_array()) {
        NetworkConfig net;
        for (const auto &q : j) {
            net.qpus.push_back({q.at("comp").get<std::size_t>(), q.at("comm").get<std::size_t>()});
        }
        return net;
    }
    return NetworkConfig::uniform(j.at("qpus").get<std::size_t>(), j.at("comp").get<std::size_t>(),
                                  j.at("comm").get<std::size_t>());
}

CircuitSpec parse_circuit_spec(const json &j) {
    CircuitSpec spec;
    spec.family = family_from_name(j.at("family").get<std::string>());
    spec.num_qubits = j.at("qubits").get<std::size_t>();
    spec.seed = j.value("seed", std::uint64_t{0});
    if (j.contains("marked")) {
        spec.marked = j["marked"].get<std::string>();
    }
    if (j.contains("iterations")) {
        spec.iterations = j["iterations"].get<std::size_t>();
    }
    if (j.contains("layers")) {
        spec.layers = j["layers"].get<std::size_t>();
    }
    if (j.contains("two_qubit_gates")) {
        spec.two_qubit_gates = j["two_qubit_gates"].get<std::size_t>();
    }
    if (j.contains("one_qubit_gates")) {
        spec.one_qubit_gates = j["one_qubit_gates"].get<std::size_t>();
    }
    return spec;
}

// Fills the run settings shared by "defaults" and individual experiments.
void apply_settings(const json &j, ExperimentConfig &cfg) {
    if (j.contains("seeds")) {
        cfg.seeds = j["seeds"].get<std::vector<std::uint64_t>>();
    }
    if (j.contains("trajectories")) {
        cfg.n_traj = j["trajectories"].get<std::size_t>();
    }
    if (j.contains("noise")) {
        cfg.noise = parse_noise(j["noise"], cfg.noise);
    }
    if (j.contains("schedules")) {
        cfg.schedules.clear();
        for (const auto &s : j["schedules"]) {
            const Schedule sched = schedule_from_name(s.get<std::string>());
            if (sched == Schedule::Monolithic) {
                throw std::invalid_argument("the monolithic baseline is always run; list only naive/gp");
            }
            cfg.schedules.push_back(sched);
        }
    }
}

ExperimentConfig parse_experiment(const json &j, const ExperimentConfig &defaults) {
    ExperimentConfig cfg = defaults;
    const auto &id = j.at("id");
    cfg.id = id.is_string() ? id.get<std::string>() : std::to_string(id.get<long long>());
    cfg.circuit = parse_circuit_spec(j.at("circuit"));
    cfg.network = parse_network(j.at("network"));
    if (j.contains("total_qubits")) {
        cfg.total_qubits = j["total_qubits"].get<std::size_t>();
    }
    apply_settings(j, cfg);
    cfg.validate();
    return cfg;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_fixed(double v, int digits) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Monolithic estimates keyed by (circuit text, noise, trajectories, seed).
using BaselineCache = std::map<std::string, std::pair<FidelityEstimate, double>>;

std::string baseline_key(const Circuit &logical, const ExperimentConfig &cfg, std::uint64_t seed) {
    std::ostringstream key;
    key << format_double(cfg.noise.p1) << ',' << format_double(cfg.noise.p2) << ',' << format_double(cfg.noise.p_ro)
        << ';' << cfg.n_traj << ';' << seed << '\n'
        << to_text(logical);
    return key.str();
}

std::vector<ResultRecord> run_experiment_cached(const ExperimentConfig &cfg, const RunOptions &options,
                                                BaselineCache *cache) {
    cfg.validate();
    const Circuit logical = compile_logical(cfg);
    const Eigen::VectorXcd ideal = simulate_ideal(logical);
    const std::size_t mono_depth = depth(logical);

    std::vector<ResultRecord> records;
    for (std::uint64_t seed : cfg.seeds) {
        ResultRecord mono;
        mono.config_id = cfg.id;
        mono.schedule = Schedule::Monolithic;
        mono.seed = seed;
        mono.depth = mono_depth;
        mono.total_qubits = logical.num_qubits();
        std::pair<FidelityEstimate, double> est;
        const std::string key = cache ? baseline_key(logical, cfg, seed) : std::string();
        if (cache && cache->count(key)) {
            est = cache->at(key);
        } else {
            const auto start = std::chrono::steady_clock::now();
            est.first = estimate_fidelity(logical, ideal, cfg.noise, cfg.n_traj, seed, options.simulation);
            est.second = seconds_since(start);
            if (cache) {
                (*cache)[key] = est;
            }
        }
        mono.fidelity = est.first.mean;
        mono.std_err = est.first.std_err;
        mono.wall_time_s = options.record_timing ? est.second : 0.0;
        records.push_back(mono);

        for (Schedule sched : cfg.schedules) {
            const auto start = std::chrono::steady_clock::now();
            const CompiledCell cell = compile_cell(cfg, logical, sched, seed);
            const FidelityEstimate f =
                estimate_fidelity(cell.distributed, ideal, cfg.noise, cfg.n_traj, seed, options.simulation);
            ResultRecord rec;
            rec.config_id = cfg.id;
            rec.schedule = sched;
            rec.seed = seed;
            rec.fidelity = f.mean;
            rec.std_err = f.std_err;
            rec.remote_cx = cell.distributed.remote_cx_count;
            rec.depth = depth(cell.distributed.circuit);
            rec.total_qubits = cell.distributed.circuit.num_qubits();
            rec.wall_time_s = options.record_timing ? seconds_since(start) : 0.0;
            records.push_back(rec);
        }
    }
    return records;
}

double mean_of(const std::vector<double> &v) {
    double s = 0.0;
    for (double x : v) {
        s += x;
    }
    return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

double sample_std(const std::vector<double> &v) {
    if (v.size() < 2) {
        return 0.0;
    }
    const double m = mean_of(v);
    double sq = 0.0;
    for (double x : v) {
        sq += (x - m) * (x - m);
    }
    return std::sqrt(sq / static_cast<double>(v.size() - 1));
}

std::vector<std::string> split_csv_line(const std::string &line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) {
        out.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

void write_file(const std::filesystem::path &path, const std::string &body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << body;
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

}  // namespace

SuiteConfig parse_suite(const std::string &json_text) {
    json j;
    try {
        j = json::parse(json_text, nullptr, true, true);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
    }
    SuiteConfig suite;
    try {
        ExperimentConfig defaults;
        if (j.contains("defaults")) {
            apply_settings(j["defaults"], defaults);
        }
        suite.width_cap = j.value("width_cap", suite.width_cap);
        if (j.contains("experiments")) {
            for (const auto &e : j["experiments"]) {
                suite.experiments.push_back(parse_experiment(e, defaults));
            }
        } else {
            suite.experiments.push_back(parse_experiment(j, defaults));
        }
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("bad config: ") + e.what());
    }
    std::map<std::string, int> seen;
    for (const auto &e : suite.experiments) {
        if (seen[e.id]++) {
            throw std::invalid_argument("duplicate experiment id " + e.id);
        }
    }
    return suite;
}

SuiteConfig load_suite(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_suite(text.str());
}

Circuit compile_logical(const ExperimentConfig &cfg) { return transpile(build_circuit(cfg.circuit)); }

CompiledCell compile_cell(const ExperimentConfig &cfg, const Circuit &logical, Schedule schedule, std::uint64_t seed) {
    Assignment a;
    switch (schedule) {
        case Schedule::Naive:
            a = naive_assignment(logical.num_qubits(), cfg.network);
            break;
        case Schedule::GP:
            a = gp_assignment(interaction_graph(logical), cfg.network, seed);
            break;
        case Schedule::Monolithic:
            throw std::invalid_argument("the monolithic schedule is not distributed");
    }
    DistributedCircuit d = distribute(logical, a, cfg.network);
    return {logical, std::move(a), std::move(d)};
}

std::vector<ResultRecord> run_experiment(const ExperimentConfig &cfg, const RunOptions &options) {
    return run_experiment_cached(cfg, options, nullptr);
}

std::vector<AggregateRow> aggregate(const std::vector<ResultRecord> &records) {
    std::map<std::tuple<std::string, Schedule>, std::vector<const ResultRecord *>> groups;
    for (const auto &r : records) {
        groups[{r.config_id, r.schedule}].push_back(&r);
    }
    std::vector<AggregateRow> rows;
    for (const auto &[key, group] : groups) {
        std::vector<double> fid;
        std::vector<double> remote;
        std::vector<double> dep;
        for (const auto *r : group) {
            fid.push_back(r->fidelity);
            remote.push_back(static_cast<double>(r->remote_cx));
            dep.push_back(static_cast<double>(r->depth));
        }
        AggregateRow row;
        row.config_id = std::get<0>(key);
        row.schedule = std::get<1>(key);
        row.n_seeds = group.size();
        row.fidelity_mean = mean_of(fid);
        row.fidelity_std = sample_std(fid);
        row.remote_cx_mean = mean_of(remote);
        row.depth_mean = mean_of(dep);
        row.total_qubits = group.front()->total_qubits;
        rows.push_back(row);
    }
    return rows;
}

std::vector<DepthRow> depth_table(const SuiteConfig &suite) {
    std::vector<DepthRow> rows;
    for (const auto &cfg : suite.experiments) {
        if (cfg.network.total_qubits() > suite.width_cap) {
            continue;
        }
        const Circuit logical = compile_logical(cfg);
        for (Schedule sched : cfg.schedules) {
            std::vector<double> dep;
            std::vector<double> remote;
            for (std::uint64_t seed : cfg.seeds) {
                const CompiledCell cell = compile_cell(cfg, logical, sched, seed);
                dep.push_back(static_cast<double>(depth(cell.distributed.circuit)));
                remote.push_back(static_cast<double>(cell.distributed.remote_cx_count));
            }
            DepthRow row;
            row.config_id = cfg.id;
            row.family = family_name(cfg.circuit.family);
            row.logical_qubits = cfg.circuit.num_qubits;
            row.num_qpus = cfg.network.num_qpus();
            row.comm_qubits = cfg.network.qpus.empty() ? 0 : cfg.network.qpus.front().comm_qubits;
            row.schedule = sched;
            row.depth_mean = mean_of(dep);
            row.remote_cx_mean = mean_of(remote);
            rows.push_back(row);
        }
    }
    return rows;
}

SuiteResult run_suite(SuiteConfig suite, const SuiteOverrides &overrides, const std::string &out_dir,
                      const RunOptions &options, std::ostream *log) {
    if (overrides.width_cap) {
        suite.width_cap = *overrides.width_cap;
    }
    for (auto &cfg : suite.experiments) {
        if (overrides.seed_count) {
            cfg.seeds.clear();
            for (std::size_t s = 1; s <= *overrides.seed_count; ++s) {
                cfg.seeds.push_back(s);
            }
        }
        if (overrides.n_traj) {
            cfg.n_traj = *overrides.n_traj;
        }
        if (overrides.noise) {
            cfg.noise = *overrides.noise;
        }
    }

    SuiteResult result;
    SuiteConfig kept = suite;
    kept.experiments.clear();
    BaselineCache cache;
    for (const auto &cfg : suite.experiments) {
        if (cfg.network.total_qubits() > suite.width_cap) {
            result.skipped.push_back(cfg.id);
            if (log) {
                *log << "skip " << cfg.id << ": " << cfg.network.total_qubits() << " qubits exceed width cap "
                     << suite.width_cap << '\n';
            }
            continue;
        }
        kept.experiments.push_back(cfg);
        const auto start = std::chrono::steady_clock::now();
        auto recs = run_experiment_cached(cfg, options, &cache);
        if (log) {
            *log << "ran " << cfg.id << " (" << family_name(cfg.circuit.family) << ' ' << cfg.circuit.num_qubits
                 << ", " << cfg.network.to_string() << ") in " << format_fixed(seconds_since(start), 1) << " s\n";
        }
        result.records.insert(result.records.end(), recs.begin(), recs.end());
    }
    result.aggregates = aggregate(result.records);
    result.depths = depth_table(kept);

    if (!out_dir.empty()) {
        const std::filesystem::path dir(out_dir);
        std::filesystem::create_directories(dir);
        std::ostringstream records_csv;
        write_csv(records_csv, result.records);
        write_file(dir / "records.csv", records_csv.str());
        std::ostringstream agg_csv;
        write_aggregate_csv(agg_csv, result.aggregates);
        write_file(dir / "aggregate.csv", agg_csv.str());
        std::ostringstream depth_csv;
        write_depth_csv(depth_csv, result.depths);
        write_file(dir / "depth.csv", depth_csv.str());
    }
    return result;
}

void write_csv(std::ostream &out, std::vector<ResultRecord> records) {
    std::stable_sort(records.begin(), records.end(), [](const ResultRecord &a, const ResultRecord &b) {
        return std::tie(a.config_id, a.schedule, a.seed) < std::tie(b.config_id, b.schedule, b.seed);
    });
    out << "config_id,schedule,seed,fidelity,std_err,remote_cx,depth,total_qubits,wall_time_s\n";
    for (const auto &r : records) {
        out << r.config_id << ',' << schedule_name(r.schedule) << ',' << r.seed << ',' << format_double(r.fidelity)
            << ',' << format_double(r.std_err) << ',' << r.remote_cx << ',' << r.depth << ',' << r.total_qubits << ','
            << format_double(r.wall_time_s) << '\n';
    }
}

void write_csv(const std::vector<ResultRecord> &records, const std::string &path) {
    std::ostringstream body;
    write_csv(body, records);
    write_file(path, body.str());
}

std::vector<ResultRecord> read_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line) ||
        line != "config_id,schedule,seed,fidelity,std_err,remote_cx,depth,total_qubits,wall_time_s") {
        throw std::invalid_argument("unexpected CSV header");
    }
    std::vector<ResultRecord> records;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        const auto f = split_csv_line(line);
        if (f.size() != 9) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 9 fields");
        }
        try {
            ResultRecord r;
            r.config_id = f[0];
            r.schedule = schedule_from_name(f[1]);
            r.seed = std::stoull(f[2]);
            r.fidelity = std::stod(f[3]);
            r.std_err = std::stod(f[4]);
            r.remote_cx = std::stoull(f[5]);
            r.depth = std::stoull(f[6]);
            r.total_qubits = std::stoull(f[7]);
            r.wall_time_s = std::stod(f[8]);
            records.push_back(r);
        } catch (const std::exception &e) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return records;
}

void write_aggregate_csv(std::ostream &out, const std::vector<AggregateRow> &rows) {
    out << "config_id,schedule,n_seeds,fidelity_mean,fidelity_std,remote_cx_mean,depth_mean,total_qubits\n";
    for (const auto &r : rows) {
        out << r.config_id << ',' << schedule_name(r.schedule) << ',' << r.n_seeds << ','
            << format_double(r.fidelity_mean) << ',' << format_double(r.fidelity_std) << ','
            << format_double(r.remote_cx_mean) << ',' << format_double(r.depth_mean) << ',' << r.total_qubits << '\n';
    }
}

void write_depth_csv(std::ostream &out, const std::vector<DepthRow> &rows) {
    out << "config_id,family,logical_qubits,qpus,comm_qubits,schedule,depth_mean,remote_cx_mean\n";
    for (const auto &r : rows) {
        out << r.config_id << ',' << r.family << ',' << r.logical_qubits << ',' << r.num_qpus << ',' << r.comm_qubits
            << ',' << schedule_name(r.schedule) << ',' << format_double(r.depth_mean) << ','
            << format_double(r.remote_cx_mean) << '\n';
    }
}

}  // namespace dqc
