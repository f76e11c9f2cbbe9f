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

#ifndef DQCRCX_SIMULATOR_HPP
#define DQCRCX_SIMULATOR_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dqcrcx/circuit.hpp"
#include "dqcrcx/distributor.hpp"
#include "dqcrcx/statevector.hpp"

namespace dqc {

/// Depolarizing probabilities for one- and two-qubit gates and the readout
/// flip probability of measurement records.
struct NoiseParams {
    double p1 = 0.001;
    double p2 = 0.005;
    double p_ro = 0.005;

    static NoiseParams none() { return {0.0, 0.0, 0.0}; }
    /// Parses "p1,p2,pro".
    static NoiseParams parse(const std::string &text);
    void validate() const;
    bool is_zero() const { return p1 == 0.0 && p2 == 0.0 && p_ro == 0.0; }
};

/// Exact statevector of a unitary circuit started in |0...0>.
Eigen::VectorXcd simulate_ideal(const Circuit &circuit);

struct TrajectoryResult {
    StateVector state;
    std::vector<std::uint8_t> record;
    /// Number of Pauli errors inserted plus readout flips.
    std::size_t error_events = 0;
};

/// One Monte Carlo run of `circuit` under `noise`.
///
/// After each one-qubit gate a uniformly random X, Y or Z hits the qubit with
/// probability p1; after each two-qubit gate one of the 15 non-identity
/// two-qubit Paulis hits the pair with probability p2. A conditional gate
/// counts as a one-qubit gate only when it fires. Measurements collapse the
/// state by the Born rule and then flip the recorded bit with probability
/// p_ro; the state itself is not flipped. Reset collapses without readout
/// error and is noiseless.
TrajectoryResult run_trajectory(const Circuit &circuit, const NoiseParams &noise, std::mt19937_64 &rng,
                                bool compact = true);

struct FidelityEstimate {
    double mean = 0.0;
    double std_err = 0.0;
    std::size_t n_trajectories = 0;
    /// Always "squared-overlap": mean of |<ideal|psi>|^2 = <ideal|rho|ideal>.
    std::string convention = "squared-overlap";
};

struct SimulationOptions {
    /// Zero selects DQCRCX_THREADS from the environment, else the hardware
    /// concurrency.
    std::size_t threads = 0;
};

std::size_t default_thread_count();

/// Mean squared overlap of noisy trajectories with `ideal`, where logical
/// qubit k of `ideal` lives on physical qubit `placement[k]` and every other
/// physical qubit must end in |0>. Trajectory t draws from stream (seed, t),
/// so the result does not depend on the thread count.
FidelityEstimate estimate_fidelity(const Circuit &circuit, const std::vector<Qubit> &placement,
                                   const Eigen::VectorXcd &ideal, const NoiseParams &noise, std::size_t n_traj,
                                   std::uint64_t seed, SimulationOptions options = {});

FidelityEstimate estimate_fidelity(const DistributedCircuit &d, const Eigen::VectorXcd &ideal,
                                   const NoiseParams &noise, std::size_t n_traj, std::uint64_t seed,
                                   SimulationOptions options = {});

/// Monolithic circuit: qubit k of `ideal` is qubit k of `circuit`.
FidelityEstimate estimate_fidelity(const Circuit &circuit, const Eigen::VectorXcd &ideal, const NoiseParams &noise,
                                   std::size_t n_traj, std::uint64_t seed, SimulationOptions options = {});

}  // namespace dqc

#endif
