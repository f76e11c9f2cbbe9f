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

#ifndef DQCRCX_DENSITY_HPP
#define DQCRCX_DENSITY_HPP

#include <Eigen/Dense>
#include <vector>

#include "dqcrcx/circuit.hpp"
#include "dqcrcx/distributor.hpp"
#include "dqcrcx/simulator.hpp"

namespace dqc {

inline constexpr std::size_t kMaxDensityQubits = 10;

/// Exact <ideal (x) 0_rest| rho |ideal (x) 0_rest> for `circuit` under `noise`,
/// by density-matrix evolution with the same noise model as run_trajectory.
///
/// Measurements are deferred: Measure(e -> m) dephases e and applies the
/// readout flip to e itself, a conditional reading m becomes a gate
/// controlled by e (with its depolarizing noise controlled as well), and
/// Reset(e) traces e out and re-prepares |0>. A measured qubit therefore must
/// not be touched again before its bits are last read. Limited to
/// kMaxDensityQubits qubits.
double exact_density_fidelity(const Circuit &circuit, const std::vector<Qubit> &placement,
                              const Eigen::VectorXcd &ideal, const NoiseParams &noise);

double exact_density_fidelity(const DistributedCircuit &d, const Eigen::VectorXcd &ideal, const NoiseParams &noise);

double exact_density_fidelity(const Circuit &circuit, const Eigen::VectorXcd &ideal, const NoiseParams &noise);

}  // namespace dqc

#endif
