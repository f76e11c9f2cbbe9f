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

#ifndef DQCRCX_STATEVECTOR_HPP
#define DQCRCX_STATEVECTOR_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "dqcrcx/circuit.hpp"

namespace dqc {

using Amplitude = std::complex<double>;

/// Pure state of an n-qubit register stored over its live qubits only.
///
/// A qubit is dead while it is known to be |0> and unentangled: initially,
/// and after a Reset. Dead qubits take no space; a gate that could move a
/// dead qubit out of |0> makes it live first. With `compact == false` every
/// qubit is live from the start and Reset keeps the qubit allocated.
class StateVector {
   public:
    static constexpr std::size_t kMaxQubits = 26;

    explicit StateVector(std::size_t num_qubits, bool compact = true);

    std::size_t num_qubits() const { return slot_of_.size(); }
    std::size_t live_qubits() const { return qubit_of_slot_.size(); }
    bool is_live(Qubit q) const { return slot_of_[q] >= 0; }
    Eigen::Map<const Eigen::VectorXcd> live_amplitudes() const {
        return {amps_.data(), static_cast<Eigen::Index>(dim_)};
    }

    void x(Qubit q);
    void y(Qubit q);
    void z(Qubit q);
    void h(Qubit q);
    void rz(Qubit q, double theta);
    void ry(Qubit q, double theta);
    void rx(Qubit q, double theta);
    void cx(Qubit control, Qubit target);
    void cz(Qubit a, Qubit b);
    /// Applies X to the last qubit when all others are 1.
    void multi_controlled_x(const std::vector<Qubit> &qubits);
    /// Negates the amplitude where every listed qubit is 1.
    void multi_controlled_z(const std::vector<Qubit> &qubits);

    /// I, X, Y or Z for index 0..3.
    void pauli(Qubit q, int index);

    /// Probability of reading 1 on `q`.
    double probability_one(Qubit q) const;

    /// Projective Z measurement. `u` is a uniform sample in [0, 1); the
    /// outcome is 1 when u < P(1). The state is collapsed and renormalised.
    bool measure(Qubit q, double u);

    /// Measures with `u`, then flips the qubit to |0>. In compact mode the
    /// qubit becomes dead afterwards.
    void reset(Qubit q, double u);

    double norm_squared() const { return live_amplitudes().squaredNorm(); }

    /// Amplitude of a full-register basis state.
    Amplitude amplitude(std::uint64_t index) const;

    /// Full 2^n amplitude vector.
    Eigen::VectorXcd to_dense() const;

    /// <phi (x) 0_rest | this>, where qubit k of `phi` is physical qubit
    /// `placement[k]` and every other qubit is projected onto |0>.
    Amplitude overlap(const Eigen::VectorXcd &phi, const std::vector<Qubit> &placement) const;

   private:
    std::size_t make_live(Qubit q);
    void remove_slot(std::size_t slot, bool value);

    // Grow-only buffer; the first dim_ entries hold the live amplitudes.
    Eigen::VectorXcd amps_;
    std::uint64_t dim_ = 1;
    std::vector<int> slot_of_;
    std::vector<Qubit> qubit_of_slot_;
    bool compact_;
};

}  // namespace dqc

#endif
