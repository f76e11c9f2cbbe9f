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

#include "dqcrcx/distributor.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace dqc {

PhysicalLayout::PhysicalLayout(const NetworkConfig &net) {
    std::size_t offset = 0;
    for (std::size_t k = 0; k < net.num_qpus(); ++k) {
        const auto &qpu = net.qpus[k];
        offsets_.push_back(offset);
        comp_.push_back(qpu.comp_qubits);
        comm_.push_back(qpu.comm_qubits);
        roles_.insert(roles_.end(), qpu.comp_qubits, QubitRole::Computational);
        roles_.insert(roles_.end(), qpu.comm_qubits, QubitRole::Communication);
        owner_.insert(owner_.end(), qpu.comp_qubits + qpu.comm_qubits, k);
        offset += qpu.comp_qubits + qpu.comm_qubits;
    }
}

Qubit PhysicalLayout::comp_index(std::size_t qpu, std::size_t slot) const {
    if (qpu >= num_qpus() || slot >= comp_[qpu]) {
        throw std::out_of_range("no computational slot " + std::to_string(slot) + " on QPU " + std::to_string(qpu));
    }
    return static_cast<Qubit>(offsets_[qpu] + slot);
}

Qubit PhysicalLayout::comm_index(std::size_t qpu, std::size_t slot) const {
    if (qpu >= num_qpus() || slot >= comm_[qpu]) {
        throw std::out_of_range("no communication slot " + std::to_string(slot) + " on QPU " + std::to_string(qpu));
    }
    return static_cast<Qubit>(offsets_[qpu] + comp_[qpu] + slot);
}

std::vector<Qubit> DistributedCircuit::logical_to_physical() const {
    std::vector<Qubit> map(assignment.size());
    for (std::size_t q = 0; q < assignment.size(); ++q) {
        map[q] = layout.comp_index(assignment[q].qpu, assignment[q].slot);
    }
    return map;
}

std::vector<Instruction> protocol_template(Qubit control, Qubit target, Qubit comm_a, Qubit comm_b, Clbit m0,
                                           Clbit m1) {
    const Qubit qs[] = {control, target, comm_a, comm_b};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < i; ++j) {
            if (qs[i] == qs[j]) {
                throw std::invalid_argument("remote CX needs four distinct qubits");
            }
        }
    }
    if (m0 == m1) {
        throw std::invalid_argument("remote CX needs two distinct classical bits");
    }
    return {
        Instruction::h(comm_a),
        Instruction::cx(comm_a, comm_b),
        Instruction::cx(control, comm_a),
        Instruction::cx(comm_b, target),
        Instruction::measure(comm_a, m0),
        Instruction::cond_x(target, m0),
        Instruction::h(comm_b),
        Instruction::measure(comm_b, m1),
        Instruction::cond_z(control, m1),
        Instruction::reset(comm_a),
        Instruction::reset(comm_b),
    };
}

namespace {

Qubit earliest_comm(const PhysicalLayout &layout, const LayerTracker &tracker, std::size_t qpu) {
    Qubit best = layout.comm_index(qpu, 0);
    for (std::size_t slot = 1; slot < layout.comm_count(qpu); ++slot) {
        const Qubit q = layout.comm_index(qpu, slot);
        if (tracker.qubit_ready(q) < tracker.qubit_ready(best)) {
            best = q;
        }
    }
    return best;
}

}  // namespace

DistributedCircuit distribute(const Circuit &circuit, const Assignment &assignment, const NetworkConfig &net) {
    assignment.validate(net);
    if (assignment.size() != circuit.num_qubits()) {
        throw std::invalid_argument("assignment covers " + std::to_string(assignment.size()) + " qubits, circuit has " +
                                    std::to_string(circuit.num_qubits()));
    }
    DistributedCircuit d;
    d.layout = PhysicalLayout(net);
    d.assignment = assignment;
    d.network = net;
    const auto phys = d.logical_to_physical();

    Circuit out(d.layout.total_qubits(), circuit.num_clbits());
    LayerTracker tracker(out.num_qubits(), out.num_clbits());
    auto emit = [&](Instruction inst) {
        tracker.push(inst);
        out.append(std::move(inst));
    };

    for (const auto &inst : circuit) {
        if (!is_basis_gate(inst.kind) && is_unitary(inst.kind)) {
            throw std::invalid_argument("distribute needs a transpiled circuit; found " +
                                        std::string(gate_name(inst.kind)));
        }
        Instruction mapped = inst;
        for (Qubit &q : mapped.qubits) {
            q = phys[q];
        }
        if (inst.kind != GateKind::CX) {
            emit(std::move(mapped));
            continue;
        }
        const Qubit control = mapped.qubits[0];
        const Qubit target = mapped.qubits[1];
        const std::size_t qpu_a = d.layout.qpu_of(control);
        const std::size_t qpu_b = d.layout.qpu_of(target);
        if (qpu_a == qpu_b) {
            emit(std::move(mapped));
            continue;
        }
        for (std::size_t qpu : {qpu_a, qpu_b}) {
            if (d.layout.comm_count(qpu) == 0) {
                throw std::invalid_argument("QPU " + std::to_string(qpu) +
                                            " has no communication qubit for a remote CX");
            }
        }
        const Qubit comm_a = earliest_comm(d.layout, tracker, qpu_a);
        const Qubit comm_b = earliest_comm(d.layout, tracker, qpu_b);
        const auto m0 = static_cast<Clbit>(out.num_clbits());
        out.add_clbits(2);
        tracker.add_clbits(2);
        d.bell_pair_gates.push_back(out.size() + 1);
        for (auto &step : protocol_template(control, target, comm_a, comm_b, m0, m0 + 1)) {
            emit(std::move(step));
        }
        ++d.remote_cx_count;
    }
    d.circuit = std::move(out);
    return d;
}

void write_layout_comments(std::ostream &out, const DistributedCircuit &d) {
    out << "# network " << d.network.to_string() << '\n';
    for (std::size_t k = 0; k < d.layout.num_qpus(); ++k) {
        out << "# qpu " << k;
        if (d.layout.comp_count(k)) {
            out << " comp " << d.layout.comp_index(k, 0) << '-' << d.layout.comp_index(k, d.layout.comp_count(k) - 1);
        }
        if (d.layout.comm_count(k)) {
            out << " comm " << d.layout.comm_index(k, 0) << '-' << d.layout.comm_index(k, d.layout.comm_count(k) - 1);
        }
        out << '\n';
    }
    const auto phys = d.logical_to_physical();
    for (std::size_t q = 0; q < phys.size(); ++q) {
        out << "# logical " << q << " -> q" << phys[q] << '\n';
    }
    out << "# remote_cx " << d.remote_cx_count << '\n';
}

}  // namespace dqc
