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

#include "dqcrcx/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "dqcrcx/rng.hpp"

namespace dqc {

NoiseParams NoiseParams::parse(const std::string &text) {
    std::istringstream in(text);
    std::string item;
    std::vector<double> values;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception &) {
            throw std::invalid_argument("bad noise probability '" + item + "'");
        }
    }
    if (values.size() != 3) {
        throw std::invalid_argument("noise must be given as p1,p2,pro");
    }
    NoiseParams p{values[0], values[1], values[2]};
    p.validate();
    return p;
}

void NoiseParams::validate() const {
    for (double p : {p1, p2, p_ro}) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument("noise probabilities must lie in [0, 1]");
        }
    }
}

Eigen::VectorXcd simulate_ideal(const Circuit &circuit) {
    for (const auto &inst : circuit) {
        if (!is_unitary(inst.kind)) {
            throw std::invalid_argument("ideal simulation does not support " + std::string(gate_name(inst.kind)));
        }
    }
    std::mt19937_64 unused(0);
    return run_trajectory(circuit, NoiseParams::none(), unused).state.to_dense();
}

TrajectoryResult run_trajectory(const Circuit &circuit, const NoiseParams &noise, std::mt19937_64 &rng,
                                bool compact) {
    if (circuit.num_qubits() > StateVector::kMaxQubits) {
        throw std::invalid_argument("circuit width " + std::to_string(circuit.num_qubits()) +
                                    " exceeds the simulator limit");
    }
    TrajectoryResult result{StateVector(circuit.num_qubits(), compact), std::vector<std::uint8_t>(circuit.num_clbits(), 0),
                            0};
    StateVector &psi = result.state;
    const bool noisy_gates = noise.p1 > 0.0 || noise.p2 > 0.0;

    auto noise1 = [&](Qubit q) {
        if (uniform01(rng) < noise.p1) {
            psi.pauli(q, 1 + static_cast<int>(uniform_below(rng, 3)));
            ++result.error_events;
        }
    };
    auto noise2 = [&](Qubit a, Qubit b) {
        if (uniform01(rng) < noise.p2) {
            const int k = 1 + static_cast<int>(uniform_below(rng, 15));
            psi.pauli(a, k & 3);
            psi.pauli(b, k >> 2);
            ++result.error_events;
        }
    };

    for (const auto &inst : circuit) {
        const auto &q = inst.qubits;
        switch (inst.kind) {
            case GateKind::X:
                psi.x(q[0]);
                noise1(q[0]);
                break;
            case GateKind::H:
                psi.h(q[0]);
                noise1(q[0]);
                break;
            case GateKind::RZ:
                psi.rz(q[0], inst.theta);
                noise1(q[0]);
                break;
            case GateKind::RY:
                psi.ry(q[0], inst.theta);
                noise1(q[0]);
                break;
            case GateKind::RX:
                psi.rx(q[0], inst.theta);
                noise1(q[0]);
                break;
            case GateKind::CX:
                psi.cx(q[0], q[1]);
                noise2(q[0], q[1]);
                break;
            case GateKind::CZ:
                psi.cz(q[0], q[1]);
                noise2(q[0], q[1]);
                break;
            case GateKind::CCX:
            case GateKind::MCZ:
                if (noisy_gates) {
                    throw std::invalid_argument("noise is defined on one- and two-qubit gates; transpile " +
                                                std::string(gate_name(inst.kind)) + " first");
                }
                if (inst.kind == GateKind::CCX) {
                    psi.multi_controlled_x(q);
                } else {
                    psi.multi_controlled_z(q);
                }
                break;
            case GateKind::Measure: {
                const bool outcome = psi.measure(q[0], uniform01(rng));
                const bool flip = uniform01(rng) < noise.p_ro;
                result.error_events += flip ? 1 : 0;
                result.record[*inst.clbit] = static_cast<std::uint8_t>(outcome != flip);
                break;
            }
            case GateKind::Reset:
                psi.reset(q[0], uniform01(rng));
                break;
            case GateKind::ConditionalX:
            case GateKind::ConditionalZ:
                if (result.record[*inst.clbit]) {
                    if (inst.kind == GateKind::ConditionalX) {
                        psi.x(q[0]);
                    } else {
                        psi.z(q[0]);
                    }
                    noise1(q[0]);
                }
                break;
        }
    }
    return result;
}

std::size_t default_thread_count() {
    if (const char *env = std::getenv("DQCRCX_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n > 0) {
            return static_cast<std::size_t>(n);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

FidelityEstimate estimate_fidelity(const Circuit &circuit, const std::vector<Qubit> &placement,
                                   const Eigen::VectorXcd &ideal, const NoiseParams &noise, std::size_t n_traj,
                                   std::uint64_t seed, SimulationOptions options) {
    noise.validate();
    if (static_cast<std::uint64_t>(ideal.size()) != (std::uint64_t{1} << placement.size())) {
        throw std::invalid_argument("ideal state has " + std::to_string(ideal.size()) + " amplitudes for " +
                                    std::to_string(placement.size()) + " computational qubits");
    }
    if (n_traj == 0) {
        throw std::invalid_argument("need at least one trajectory");
    }
    std::vector<double> fidelity(n_traj, 0.0);
    std::atomic<std::size_t> next{0};
    constexpr std::size_t kChunk = 64;
    auto worker = [&] {
        for (;;) {
            const std::size_t begin = next.fetch_add(kChunk);
            if (begin >= n_traj) {
                return;
            }
            const std::size_t end = std::min(n_traj, begin + kChunk);
            for (std::size_t t = begin; t < end; ++t) {
                auto rng = make_stream(seed, t);
                const auto run = run_trajectory(circuit, noise, rng);
                fidelity[t] = std::norm(run.state.overlap(ideal, placement));
            }
        }
    };
    const std::size_t threads =
        std::min(options.threads ? options.threads : default_thread_count(), (n_traj + kChunk - 1) / kChunk);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t i = 0; i < threads; ++i) {
            pool.emplace_back(worker);
        }
        for (auto &th : pool) {
            th.join();
        }
    }

    FidelityEstimate est;
    est.n_trajectories = n_traj;
    const double sum = std::accumulate(fidelity.begin(), fidelity.end(), 0.0);
    est.mean = sum / static_cast<double>(n_traj);
    if (n_traj > 1) {
        double sq = 0.0;
        for (double f : fidelity) {
            sq += (f - est.mean) * (f - est.mean);
        }
        est.std_err = std::sqrt(sq / static_cast<double>(n_traj - 1)) / std::sqrt(static_cast<double>(n_traj));
    }
    est.mean = std::clamp(est.mean, 0.0, 1.0);
    return est;
}

FidelityEstimate estimate_fidelity(const DistributedCircuit &d, const Eigen::VectorXcd &ideal,
                                   const NoiseParams &noise, std::size_t n_traj, std::uint64_t seed,
                                   SimulationOptions options) {
    return estimate_fidelity(d.circuit, d.logical_to_physical(), ideal, noise, n_traj, seed, options);
}

FidelityEstimate estimate_fidelity(const Circuit &circuit, const Eigen::VectorXcd &ideal, const NoiseParams &noise,
                                   std::size_t n_traj, std::uint64_t seed, SimulationOptions options) {
    std::vector<Qubit> placement(circuit.num_qubits());
    std::iota(placement.begin(), placement.end(), Qubit{0});
    return estimate_fidelity(circuit, placement, ideal, noise, n_traj, seed, options);
}

}  // namespace dqc
