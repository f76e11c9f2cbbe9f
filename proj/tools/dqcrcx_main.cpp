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

// dqcrcx command line: circuit generation, transpilation, partitioning,
// distribution, noisy simulation and the experiment grid.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "dqcrcx/circuit_io.hpp"
#include "dqcrcx/density.hpp"
#include "dqcrcx/distributor.hpp"
#include "dqcrcx/harness.hpp"
#include "dqcrcx/library.hpp"
#include "dqcrcx/scheduler.hpp"
#include "dqcrcx/simulator.hpp"
#include "dqcrcx/transpiler.hpp"

namespace {

using namespace dqc;

void emit_circuit(const Circuit &c, const std::string &path) {
    if (path.empty() || path == "-") {
        write_circuit(std::cout, c);
    } else {
        save_circuit(path, c);
    }
}

Circuit input_circuit(const std::string &path) {
    if (path == "-") {
        return read_circuit(std::cin);
    }
    return load_circuit(path);
}

Assignment read_assignment(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::vector<std::pair<std::size_t, Placement>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.find('=') != std::string::npos || line.rfind("qubit", 0) == 0) {
            continue;
        }
        std::size_t q = 0;
        Placement p;
        char c1 = 0;
        char c2 = 0;
        std::istringstream fields(line);
        if (!(fields >> q >> c1 >> p.qpu >> c2 >> p.slot) || c1 != ',' || c2 != ',') {
            throw std::invalid_argument("bad assignment line '" + line + "'");
        }
        rows.emplace_back(q, p);
    }
    std::vector<Placement> placements(rows.size());
    std::vector<bool> seen(rows.size(), false);
    for (const auto &[q, p] : rows) {
        if (q >= rows.size() || seen[q]) {
            throw std::invalid_argument("assignment must list qubits 0..n-1 exactly once");
        }
        seen[q] = true;
        placements[q] = p;
    }
    return Assignment(std::move(placements));
}

Assignment choose_assignment(const Circuit &logical, const NetworkConfig &net, const std::string &schedule,
                             const std::string &assignment_path, std::uint64_t seed) {
    if (!assignment_path.empty()) {
        return read_assignment(assignment_path);
    }
    switch (schedule_from_name(schedule)) {
        case Schedule::Naive:
            return naive_assignment(logical.num_qubits(), net);
        case Schedule::GP:
            return gp_assignment(interaction_graph(logical), net, seed);
        case Schedule::Monolithic:
            break;
    }
    throw std::invalid_argument("schedule must be naive or gp");
}

void print_summary(std::ostream &out, const DistributedCircuit &d) {
    out << "total_qubits=" << d.circuit.num_qubits() << '\n'
        << "remote_cx_count=" << d.remote_cx_count << '\n'
        << "depth=" << depth(d.circuit) << '\n';
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Distributed quantum circuits with remote CX"};
    app.require_subcommand(1);

    // generate
    auto *gen = app.add_subcommand("generate", "Write a benchmark circuit");
    std::string family;
    CircuitSpec spec;
    std::string marked;
    std::size_t iterations = 0;
    std::size_t layers = 0;
    std::size_t n2 = 0;
    std::size_t n1 = 0;
    std::string gen_out;
    bool gen_transpile = false;
    gen->add_option("--family", family, "ghz, grover, vqc or random")->required();
    gen->add_option("--qubits", spec.num_qubits, "Logical qubits")->required();
    gen->add_option("--seed", spec.seed, "Seed for vqc/random");
    gen->add_option("--marked", marked, "Grover marked bit string");
    gen->add_option("--iterations", iterations, "Grover iterations");
    gen->add_option("--layers", layers, "VQC layers");
    gen->add_option("--two-qubit-gates", n2, "Random circuit CX count");
    gen->add_option("--one-qubit-gates", n1, "Random circuit 1q gate count");
    gen->add_flag("--transpile", gen_transpile, "Rewrite into {X, H, RZ, CX}");
    gen->add_option("-o,--out", gen_out, "Output file (default stdout)");

    // inspect
    auto *insp = app.add_subcommand("inspect", "Print circuit statistics");
    std::string insp_in;
    insp->add_option("circuit", insp_in, "Circuit file or -")->required();

    // transpile
    auto *tr = app.add_subcommand("transpile", "Rewrite a circuit into the {X, H, RZ, CX} basis");
    std::string tr_in;
    std::string tr_out;
    bool tr_report = false;
    tr->add_option("circuit", tr_in, "Circuit file or -")->required();
    tr->add_option("-o,--out", tr_out, "Output file (default stdout)");
    tr->add_flag("--report", tr_report, "Print the basis report as key=value lines on stderr");

    // partition
    auto *part = app.add_subcommand("partition", "Assign logical qubits to QPUs");
    std::string part_in;
    std::string part_net;
    std::string part_sched = "gp";
    std::uint64_t part_seed = 1;
    part->add_option("circuit", part_in, "Circuit file or -")->required();
    part->add_option("--network", part_net, "comp:comm per QPU, comma separated")->required();
    part->add_option("--schedule", part_sched, "naive or gp");
    part->add_option("--seed", part_seed, "Partitioner seed");

    // build
    auto *build = app.add_subcommand("build", "Distribute a circuit over a network");
    std::string build_in;
    std::string build_net;
    std::string build_sched = "naive";
    std::string build_assign;
    std::uint64_t build_seed = 1;
    std::string build_out;
    build->add_option("circuit", build_in, "Circuit file or -")->required();
    build->add_option("--network", build_net, "comp:comm per QPU, comma separated")->required();
    build->add_option("--schedule", build_sched, "naive or gp");
    build->add_option("--assignment", build_assign, "qubit,qpu,slot CSV from `partition`");
    build->add_option("--seed", build_seed, "Partitioner seed");
    build->add_option("-o,--out", build_out, "Distributed circuit file (default stdout)");

    // simulate
    auto *sim = app.add_subcommand("simulate", "Estimate fidelity under noise");
    std::string sim_in;
    std::string sim_noise = "0.001,0.005,0.005";
    std::size_t sim_traj = 20000;
    std::uint64_t sim_seed = 1;
    bool sim_oracle = false;
    std::string sim_net;
    std::string sim_sched = "naive";
    std::string sim_assign;
    sim->add_option("circuit", sim_in, "Logical circuit file or -")->required();
    sim->add_option("--noise", sim_noise, "p1,p2,pro");
    sim->add_option("--trajectories", sim_traj, "Monte Carlo trajectories");
    sim->add_option("--seed", sim_seed, "Trajectory and partitioner seed");
    sim->add_flag("--oracle", sim_oracle, "Exact density-matrix evolution (at most 10 qubits)");
    sim->add_option("--network", sim_net, "Distribute over comp:comm,... before simulating");
    sim->add_option("--schedule", sim_sched, "naive or gp");
    sim->add_option("--assignment", sim_assign, "qubit,qpu,slot CSV");

    // run / suite / depth
    RunOptions run_opts;
    auto *run = app.add_subcommand("run", "Run every experiment of a config file");
    std::string run_cfg;
    std::string run_out;
    run->add_option("--config", run_cfg, "JSON experiment config")->required();
    run->add_option("--out", run_out, "Result CSV (default stdout)");
    run->add_flag("--timing", run_opts.record_timing, "Record wall times");

    auto *suite = app.add_subcommand("suite", "Run the experiment grid");
    std::string suite_cfg = "configs/table1.json";
    std::string suite_out = "results";
    std::optional<std::size_t> seeds;
    std::optional<std::size_t> traj;
    std::optional<std::size_t> width_cap;
    std::string suite_noise;
    suite->add_option("--config", suite_cfg, "JSON experiment config");
    suite->add_option("--seeds", seeds, "Use seeds 1..N");
    suite->add_option("--trajectories", traj, "Trajectories per cell");
    suite->add_option("--width-cap", width_cap, "Skip experiments wider than this");
    suite->add_option("--noise", suite_noise, "Override noise as p1,p2,pro");
    suite->add_option("--out", suite_out, "Output directory");
    suite->add_flag("--timing", run_opts.record_timing, "Record wall times");

    auto *dep = app.add_subcommand("depth", "Distributed depth per experiment, without simulation");
    std::string dep_cfg = "configs/table1.json";
    std::optional<std::size_t> dep_cap;
    dep->add_option("--config", dep_cfg, "JSON experiment config");
    dep->add_option("--width-cap", dep_cap, "Skip experiments wider than this");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            spec.family = family_from_name(family);
            if (!marked.empty()) {
                spec.marked = marked;
            }
            if (iterations) {
                spec.iterations = iterations;
            }
            if (layers) {
                spec.layers = layers;
            }
            if (n2) {
                spec.two_qubit_gates = n2;
            }
            if (n1) {
                spec.one_qubit_gates = n1;
            }
            Circuit c = build_circuit(spec);
            emit_circuit(gen_transpile ? transpile(c) : c, gen_out);
        } else if (*insp) {
            const Circuit c = input_circuit(insp_in);
            std::cout << "qubits=" << c.num_qubits() << "\nclbits=" << c.num_clbits() << "\ninstructions=" << c.size()
                      << "\ndepth=" << depth(c) << '\n';
            const auto hist = gate_histogram(c);
            for (std::size_t k = 0; k < hist.size(); ++k) {
                if (hist[k]) {
                    std::cout << "count_" << gate_name(static_cast<GateKind>(k)) << '=' << hist[k] << '\n';
                }
            }
        } else if (*tr) {
            BasisReport report;
            const Circuit out = transpile(input_circuit(tr_in), report);
            emit_circuit(out, tr_out);
            if (tr_report) {
                write_report(std::cerr, report);
            }
        } else if (*part) {
            const Circuit logical = transpile(input_circuit(part_in));
            const NetworkConfig net = NetworkConfig::parse(part_net);
            const Assignment a = choose_assignment(logical, net, part_sched, "", part_seed);
            std::cout << "qubit,qpu,slot\n";
            for (std::size_t q = 0; q < a.size(); ++q) {
                std::cout << q << ',' << a[q].qpu << ',' << a[q].slot << '\n';
            }
            std::cout << "cut_weight=" << cut_weight(interaction_graph(logical), a) << '\n';
        } else if (*build) {
            const Circuit logical = transpile(input_circuit(build_in));
            const NetworkConfig net = NetworkConfig::parse(build_net);
            const Assignment a = choose_assignment(logical, net, build_sched, build_assign, build_seed);
            const DistributedCircuit d = distribute(logical, a, net);
            if (build_out.empty() || build_out == "-") {
                write_layout_comments(std::cout, d);
                write_circuit(std::cout, d.circuit);
                print_summary(std::cerr, d);
            } else {
                std::ofstream out(build_out);
                if (!out) {
                    throw std::runtime_error("cannot write " + build_out);
                }
                write_layout_comments(out, d);
                write_circuit(out, d.circuit);
                print_summary(std::cout, d);
            }
        } else if (*sim) {
            const NoiseParams noise = NoiseParams::parse(sim_noise);
            const Circuit input = input_circuit(sim_in);
            const Eigen::VectorXcd ideal = simulate_ideal(input);
            const Circuit logical = transpile(input);
            Circuit target = logical;
            std::vector<Qubit> placement(logical.num_qubits());
            for (std::size_t q = 0; q < placement.size(); ++q) {
                placement[q] = static_cast<Qubit>(q);
            }
            if (!sim_net.empty()) {
                const NetworkConfig net = NetworkConfig::parse(sim_net);
                const DistributedCircuit d =
                    distribute(logical, choose_assignment(logical, net, sim_sched, sim_assign, sim_seed), net);
                target = d.circuit;
                placement = d.logical_to_physical();
            }
            std::cout << "mean,std_err,n_traj,convention\n";
            if (sim_oracle) {
                const double f = exact_density_fidelity(target, placement, ideal, noise);
                std::printf("%.10f,0,0,squared-overlap\n", f);
            } else {
                const FidelityEstimate f = estimate_fidelity(target, placement, ideal, noise, sim_traj, sim_seed);
                std::printf("%.10f,%.10f,%zu,%s\n", f.mean, f.std_err, f.n_trajectories, f.convention.c_str());
            }
        } else if (*run) {
            const SuiteConfig cfg = load_suite(run_cfg);
            std::vector<ResultRecord> records;
            for (const auto &e : cfg.experiments) {
                const auto r = run_experiment(e, run_opts);
                records.insert(records.end(), r.begin(), r.end());
            }
            if (run_out.empty()) {
                write_csv(std::cout, records);
            } else {
                write_csv(records, run_out);
            }
        } else if (*suite) {
            SuiteOverrides ov;
            ov.seed_count = seeds;
            ov.n_traj = traj;
            ov.width_cap = width_cap;
            if (!suite_noise.empty()) {
                ov.noise = NoiseParams::parse(suite_noise);
            }
            const SuiteResult r = run_suite(load_suite(suite_cfg), ov, suite_out, run_opts, &std::cerr);
            write_aggregate_csv(std::cout, r.aggregates);
        } else if (*dep) {
            SuiteConfig cfg = load_suite(dep_cfg);
            if (dep_cap) {
                cfg.width_cap = *dep_cap;
            }
            write_depth_csv(std::cout, depth_table(cfg));
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
