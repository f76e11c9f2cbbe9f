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

#ifndef DQCRCX_DISTRIBUTOR_HPP
#define DQCRCX_DISTRIBUTOR_HPP

#include <iosfwd>
#include <vector>

#include "dqcrcx/circuit.hpp"
#include "dqcrcx/scheduler.hpp"

namespace dqc {

enum class QubitRole { Computational, Communication };

/// Physical register of a network. Each QPU owns a contiguous block of
/// indices: its computational slots first, then its communication slots.
class PhysicalLayout {
   public:
    PhysicalLayout() = default;
    explicit PhysicalLayout(const NetworkConfig &net);

    std::size_t total_qubits() const { return roles_.size(); }
    std::size_t num_qpus() const { return offsets_.size(); }
    Qubit comp_index(std::size_t qpu, std::size_t slot) const;
    Qubit comm_index(std::size_t qpu, std::size_t slot) const;
    QubitRole role(Qubit q) const { return roles_[q]; }
    std::size_t qpu_of(Qubit q) const { return owner_[q]; }
    std::size_t comp_count(std::size_t qpu) const { return comp_[qpu]; }
    std::size_t comm_count(std::size_t qpu) const { return comm_[qpu]; }

   private:
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> comp_;
    std::vector<std::size_t> comm_;
    std::vector<QubitRole> roles_;
    std::vector<std::size_t> owner_;
};

struct DistributedCircuit {
    Circuit circuit;
    PhysicalLayout layout;
    Assignment assignment;
    NetworkConfig network;
    std::size_t remote_cx_count = 0;
    /// Instruction indices of the Bell-pair CX gates, the only gates that
    /// span two QPUs.
    std::vector<std::size_t> bell_pair_gates;

    /// Physical index of every logical qubit.
    std::vector<Qubit> logical_to_physical() const;
};

/// The 11-instruction remote CX between `control` and `target` through the
/// communication qubits `comm_a` (control side) and `comm_b` (target side):
/// Bell pair, two local CX, measure + X correction on the target, H +
/// measure + Z correction on the control, then both communication qubits are
/// reset.
std::vector<Instruction> protocol_template(Qubit control, Qubit target, Qubit comm_a, Qubit comm_b, Clbit m0,
                                           Clbit m1);

inline constexpr std::size_t kProtocolLength = 11;

/// Maps a transpiled circuit onto the network. Local gates are remapped;
/// every CX across QPUs becomes a protocol instance using the communication
/// slot that frees up earliest on each side (lowest index on ties).
DistributedCircuit distribute(const Circuit &circuit, const Assignment &assignment, const NetworkConfig &net);

/// `# ...` comment lines describing the layout, readable by read_circuit.
void write_layout_comments(std::ostream &out, const DistributedCircuit &d);

}  // namespace dqc

#endif
