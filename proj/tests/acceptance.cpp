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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dqcrcx/density.hpp"
#include "dqcrcx/distributor.hpp"
#include "dqcrcx/harness.hpp"
#include "dqcrcx/library.hpp"
#include "dqcrcx/rng.hpp"
#include "dqcrcx/scheduler.hpp"
#include "dqcrcx/simulator.hpp"
#include "dqcrcx/transpiler.hpp"

using namespace dqc;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v, int digits = 4) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
        }
    }
    void note(const std::string &what) { detail += (detail.empty() ? "" : "; ") + what; }
};

std::vector<Outcome> outcomes;

void report(int number, const std::string &name, const Outcome &o) {
    std::cout << "criterion " << number << " [" << name << "]: " << (o.pass ? "PASS" : "FAIL") << " | "
              << o.detail << std::endl;
    outcomes.push_back(o);
}

SuiteConfig table() { return load_suite(std::string(DQCRCX_SOURCE_DIR) + "/configs/table1.json"); }

SuiteConfig only(const SuiteConfig &suite, const std::vector<std::string> &ids) {
    SuiteConfig out = suite;
    out.experiments.clear();
    for (const auto &cfg : suite.experiments) {
        if (std::find(ids.begin(), ids.end(), cfg.id) != ids.end()) {
            out.experiments.push_back(cfg);
        }
    }
    return out;
}

std::map<std::pair<std::string, Schedule>, AggregateRow> by_cell(const std::vector<AggregateRow> &rows) {
    std::map<std::pair<std::string, Schedule>, AggregateRow> m;
    for (const auto &r : rows) {
        m[{r.config_id, r.schedule}] = r;
    }
    return m;
}

std::map<std::pair<std::string, Schedule>, DepthRow> by_cell(const std::vector<DepthRow> &rows) {
    std::map<std::pair<std::string, Schedule>, DepthRow> m;
    for (const auto &r : rows) {
        m[{r.config_id, r.schedule}] = r;
    }
    return m;
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// 1. Zero noise gives fidelity 1 through every protocol instance.
void protocol_correctness() {
    const auto start = Clock::now();
    Outcome o;
    double worst = 0.0;
    std::size_t cells = 0;
    for (const auto &cfg : table().experiments) {
        const Circuit logical = compile_logical(cfg);
        const auto ideal = simulate_ideal(logical);
        for (Schedule s : {Schedule::Naive, Schedule::GP}) {
            const CompiledCell cell = compile_cell(cfg, logical, s, 1);
            const auto est = estimate_fidelity(cell.distributed, ideal, NoiseParams::none(), 8, 1);
            worst = std::max(worst, std::abs(est.mean - 1.0));
            ++cells;
        }
    }
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        auto rng = make_stream(777, seed);
        const std::size_t n = 2 + uniform_below(rng, 7);
        const std::size_t qpus = 2 + uniform_below(rng, n - 1);
        std::vector<QpuSpec> specs(qpus, QpuSpec{0, 1 + uniform_below(rng, 2)});
        for (std::size_t q = 0; q < n; ++q) {
            ++specs[q < qpus ? q : uniform_below(rng, qpus)].comp_qubits;
        }
        const NetworkConfig net{specs};
        const Circuit logical = transpile(random_circuit(n, seed, 3 * n, 3 * n));
        const auto ideal = simulate_ideal(logical);
        for (const Assignment &a : {naive_assignment(n, net), gp_assignment(interaction_graph(logical), net, seed)}) {
            const auto est = estimate_fidelity(distribute(logical, a, net), ideal, NoiseParams::none(), 20, seed);
            worst = std::max(worst, std::abs(est.mean - 1.0));
            ++cells;
        }
    }
    const double elapsed = seconds_since(start);
    o.require(worst <= 1e-9, "max |F - 1| <= 1e-9");
    o.require(elapsed < 120.0, "runtime < 120 s");
    o.note(std::to_string(cells) + " distributed circuits, max |F - 1| = " + std::to_string(worst) + ", " +
           fmt(elapsed, 1) + " s");
    report(1, "protocol correctness", o);
}

// 2. Trajectories agree with the exact density-matrix result.
void oracle_equivalence() {
    const auto start = Clock::now();
    Outcome o;
    const NoiseParams noise;
    std::vector<std::pair<Circuit, NetworkConfig>> cases{
        {ghz(4), NetworkConfig::uniform(2, 2, 1)},
        {transpile(grover(4, "1111", 3)), NetworkConfig::uniform(2, 2, 1)},
    };
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        cases.emplace_back(transpile(random_circuit(6, seed, 18, 18)), NetworkConfig::uniform(2, 3, 2));
    }
    double worst_ratio = 0.0;
    std::size_t index = 0;
    for (const auto &[logical, net] : cases) {
        const auto ideal = simulate_ideal(logical);
        const DistributedCircuit d = distribute(logical, naive_assignment(logical.num_qubits(), net), net);
        const double exact = exact_density_fidelity(d, ideal, noise);
        const auto est = estimate_fidelity(d, ideal, noise, 50000, 1000 + index);
        const double tol = std::max(3 * est.std_err, 0.005);
        const double diff = std::abs(est.mean - exact);
        worst_ratio = std::max(worst_ratio, diff / tol);
        o.require(diff <= tol, "case " + std::to_string(index) + " |" + fmt(est.mean) + " - " + fmt(exact) + "|");
        ++index;
    }
    const double elapsed = seconds_since(start);
    o.require(elapsed < 600.0, "runtime < 600 s");
    o.note(std::to_string(cases.size()) + " circuits, worst |diff|/tol = " + fmt(worst_ratio, 3) + ", " +
           fmt(elapsed, 1) + " s");
    report(2, "oracle equivalence", o);
}

// Rows 01-04 at full trajectory count, shared by criteria 3, 4 and 6.
SuiteResult full_small_rows() { return run_suite(only(table(), {"01", "02", "03", "04"}), {}, ""); }

void ghz_quantitative(const SuiteResult &r) {
    Outcome o;
    const auto cells = by_cell(r.aggregates);
    const double mono = cells.at({"02", Schedule::Monolithic}).fidelity_mean;
    const std::vector<std::pair<std::string, std::pair<double, double>>> rows{
        {"02", {0.95, 0.02}}, {"03", {0.92, 0.03}}, {"04", {0.85, 0.04}}};
    o.require(std::abs(mono - 0.97) <= 0.015, "monolithic 0.97 +- 0.015");
    std::string values = "mono " + fmt(mono);
    double previous = mono;
    for (const auto &[id, target] : rows) {
        const double f = cells.at({id, Schedule::Naive}).fidelity_mean;
        o.require(std::abs(f - target.first) <= target.second,
                  "row " + id + " " + fmt(f) + " vs " + fmt(target.first, 2) + " +- " + fmt(target.second, 2));
        o.require(f < previous, "monotone at row " + id);
        previous = f;
        values += ", " + id + " naive " + fmt(f);
    }
    o.note(values + " (T=20000, 5 seeds)");
    report(3, "GHZ quantitative", o);
}

void grover_gap(const SuiteResult &r) {
    Outcome o;
    const auto cells = by_cell(r.aggregates);
    const double mono = cells.at({"01", Schedule::Monolithic}).fidelity_mean;
    const double naive = cells.at({"01", Schedule::Naive}).fidelity_mean;
    const double gp = cells.at({"01", Schedule::GP}).fidelity_mean;
    o.require(mono >= 0.80, "monolithic >= 0.80");
    o.require(mono - naive >= 0.10, "naive gap >= 0.10");
    o.require(mono - gp >= 0.10, "gp gap >= 0.10");
    o.note("mono " + fmt(mono) + ", naive " + fmt(naive) + ", gp " + fmt(gp) + " (T=20000, 5 seeds)");
    report(4, "Grover gap", o);
}

void schedule_effect(const SuiteResult &grid) {
    Outcome o;
    const auto cells = by_cell(grid.aggregates);
    double best_gain = -1.0;
    std::string values;
    for (const char *id : {"05", "06", "07", "08", "09", "11", "13"}) {
        const double naive = cells.at({id, Schedule::Naive}).fidelity_mean;
        const double gp = cells.at({id, Schedule::GP}).fidelity_mean;
        o.require(gp >= naive, std::string("row ") + id + " gp >= naive");
        best_gain = std::max(best_gain, gp - naive);
        values += std::string(values.empty() ? "" : ", ") + id + " " + fmt(naive, 3) + "->" + fmt(gp, 3);
    }
    o.require(best_gain >= 0.03, "some row with gp - naive >= 0.03");

    std::size_t checked = 0;
    std::size_t violations = 0;
    for (const auto &cfg : table().experiments) {
        const Circuit logical = compile_logical(cfg);
        const InteractionGraph g = interaction_graph(logical);
        const std::size_t naive = cut_weight(g, naive_assignment(logical.num_qubits(), cfg.network));
        for (std::uint64_t seed : cfg.seeds) {
            const std::size_t gp = cut_weight(g, compile_cell(cfg, logical, Schedule::GP, seed).assignment);
            violations += gp > naive ? 1 : 0;
            ++checked;
        }
    }
    o.require(violations == 0, "cut_weight(gp) <= cut_weight(naive) everywhere");
    o.note(values + "; best gain " + fmt(best_gain, 3) + "; cut weight checked on " + std::to_string(checked) +
           " cells (T=2000, 5 seeds)");
    report(5, "schedule effect", o);
}

void schedule_neutrality(const SuiteResult &small, const SuiteResult &grid, const std::vector<DepthRow> &depths) {
    Outcome o;
    const auto ghz_cells = by_cell(small.aggregates);
    const auto grid_cells = by_cell(grid.aggregates);
    double worst = 0.0;
    for (const char *id : {"02", "03", "04"}) {
        worst = std::max(worst, std::abs(ghz_cells.at({id, Schedule::GP}).fidelity_mean -
                                         ghz_cells.at({id, Schedule::Naive}).fidelity_mean));
    }
    for (const char *id : {"14", "15", "16"}) {
        worst = std::max(worst, std::abs(grid_cells.at({id, Schedule::GP}).fidelity_mean -
                                         grid_cells.at({id, Schedule::Naive}).fidelity_mean));
    }
    o.require(worst <= 0.02, "|gp - naive| <= 0.02");
    const auto dcells = by_cell(depths);
    for (const char *id : {"14", "15", "16", "17", "18", "19"}) {
        o.require(dcells.at({id, Schedule::GP}).depth_mean == dcells.at({id, Schedule::Naive}).depth_mean,
                  std::string("VQC depth equal on row ") + id);
    }
    o.note("max |gp - naive| " + fmt(worst) + " on GHZ(8)/VQC(8) rows; VQC depths " +
           fmt(dcells.at({"14", Schedule::Naive}).depth_mean, 0) + "/" +
           fmt(dcells.at({"15", Schedule::Naive}).depth_mean, 0) + "/" +
           fmt(dcells.at({"16", Schedule::Naive}).depth_mean, 0) + " for both schedules");
    report(6, "schedule neutrality", o);
}

void comm_insensitivity(const SuiteResult &grid, const std::vector<DepthRow> &depths) {
    Outcome o;
    const auto cells = by_cell(grid.aggregates);
    const auto dcells = by_cell(depths);
    std::string values;
    for (Schedule s : {Schedule::Naive, Schedule::GP}) {
        double lo = 1.0;
        double hi = 0.0;
        double last_depth = 1e300;
        for (const char *id : {"05", "06", "07"}) {
            const double f = cells.at({id, s}).fidelity_mean;
            lo = std::min(lo, f);
            hi = std::max(hi, f);
            const double d = dcells.at({id, s}).depth_mean;
            o.require(d <= last_depth, schedule_name(s) + " depth non-increasing at row " + id);
            last_depth = d;
            values += std::string(values.empty() ? "" : ", ") + schedule_name(s) + " " + id + " F=" + fmt(f, 3) +
                      " depth=" + fmt(d, 1);
        }
        o.require(hi - lo <= 0.03, schedule_name(s) + " spread <= 0.03 (" + fmt(hi - lo) + ")");
    }
    o.note(values);
    report(7, "communication-qubit insensitivity", o);
}

void depth_trends(const std::vector<DepthRow> &depths) {
    Outcome o;
    const auto dcells = by_cell(depths);
    std::string values;
    for (const char *id : {"11", "12", "13"}) {
        const double naive = dcells.at({id, Schedule::Naive}).depth_mean;
        const double gp = dcells.at({id, Schedule::GP}).depth_mean;
        o.require(gp < naive, std::string("row ") + id + " gp depth < naive depth");
        values += std::string(values.empty() ? "" : ", ") + id + " naive " + fmt(naive, 1) + " gp " + fmt(gp, 1);
    }
    o.note(values);
    report(8, "depth trends", o);
}

int main_impl() {
    protocol_correctness();
    oracle_equivalence();

    const SuiteResult small = full_small_rows();
    ghz_quantitative(small);
    grover_gap(small);

    // Whole grid at a tenth of the trajectories; its wall time also gives the
    // full-profile estimate, since cost is linear in the trajectory count.
    SuiteOverrides reduced;
    reduced.n_traj = 2000;
    const auto grid_start = Clock::now();
    const SuiteResult grid = run_suite(table(), reduced, "", {}, &std::cerr);
    const double grid_seconds = seconds_since(grid_start);
    const std::vector<DepthRow> depths = depth_table(table());
    schedule_effect(grid);
    schedule_neutrality(small, grid, depths);
    comm_insensitivity(grid, depths);
    depth_trends(depths);

    // 9. Performance envelope.
    Outcome perf;
    double worst_trajectory = 0.0;
    for (const auto &cfg : only(table(), {"04", "10", "16"}).experiments) {
        const Circuit logical = compile_logical(cfg);
        for (Schedule s : {Schedule::Naive, Schedule::GP}) {
            const CompiledCell cell = compile_cell(cfg, logical, s, 1);
            auto rng = make_stream(1, 0);
            const auto start = Clock::now();
            run_trajectory(cell.distributed.circuit, NoiseParams{}, rng);
            worst_trajectory = std::max(worst_trajectory, seconds_since(start));
        }
    }
    const auto tmp = std::filesystem::temp_directory_path() / "dqcrcx_acceptance";
    std::filesystem::remove_all(tmp);
    SuiteOverrides ci;
    ci.n_traj = 2000;
    ci.width_cap = 16;
    const auto ci_start = Clock::now();
    run_suite(table(), ci, (tmp / "first").string());
    const double ci_seconds = seconds_since(ci_start);
    const double full_estimate = grid_seconds * 10.0;
    perf.require(worst_trajectory < 1.0, "24-qubit trajectory < 1 s");
    perf.require(ci_seconds < 900.0, "CI profile < 15 min");
    perf.require(full_estimate < 4 * 3600.0, "full suite < 4 h");
    perf.note("24-qubit trajectory " + fmt(worst_trajectory * 1e3, 2) + " ms; CI profile " + fmt(ci_seconds, 1) +
              " s; full suite estimated " + fmt(full_estimate / 60.0, 1) + " min (10 x the " +
              fmt(grid_seconds, 1) + " s T=2000 grid run) on " + std::to_string(default_thread_count()) +
              " thread(s)");
    report(9, "performance envelope", perf);

    // 10. Determinism.
    Outcome det;
    run_suite(table(), ci, (tmp / "second").string());
    for (const char *name : {"records.csv", "aggregate.csv", "depth.csv"}) {
        const std::string a = slurp(tmp / "first" / name);
        det.require(!a.empty() && a == slurp(tmp / "second" / name), std::string(name) + " identical");
    }
    det.note("two CI-profile runs compared byte for byte (records, aggregate, depth)");
    report(10, "determinism", det);
    std::filesystem::remove_all(tmp);

    const auto failed = std::count_if(outcomes.begin(), outcomes.end(), [](const Outcome &o) { return !o.pass; });
    std::cout << (outcomes.size() - static_cast<std::size_t>(failed)) << "/" << outcomes.size()
              << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main() {
    try {
        return main_impl();
    } catch (const std::exception &e) {
        std::cerr << "acceptance aborted: " << e.what() << '\n';
        return 2;
    }
}
