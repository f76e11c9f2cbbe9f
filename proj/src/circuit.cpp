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

#include "dqcrcx/circuit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dqc {

namespace {

constexpr std::array<std::string_view, kNumGateKinds> kNames = {
    "X", "H", "RZ", "CX", "RY", "RX", "CZ", "CCX", "MCZ", "MEASURE", "RESET", "IFX", "IFZ",
};

}  // namespace

std::string_view gate_name(GateKind kind) {
    return kNames[static_cast<std::size_t>(kind)];
}

std::optional<GateKind> gate_from_name(std::string_view name) {
    for (std::size_t k = 0; k < kNames.size(); ++k) {
        if (kNames[k] == name) {
            return static_cast<GateKind>(k);
        }
    }
    return std::nullopt;
}

bool is_basis_gate(GateKind kind) {
    return kind == GateKind::X || kind == GateKind::H || kind == GateKind::RZ || kind == GateKind::CX;
}

bool is_parametric(GateKind kind) {
    return kind == GateKind::RZ || kind == GateKind::RY || kind == GateKind::RX;
}

bool is_conditional(GateKind kind) {
    return kind == GateKind::ConditionalX || kind == GateKind::ConditionalZ;
}

bool is_unitary(GateKind kind) {
    return kind != GateKind::Measure && kind != GateKind::Reset && !is_conditional(kind);
}

std::size_t fixed_arity(GateKind kind) {
    switch (kind) {
        case GateKind::CX:
        case GateKind::CZ:
            return 2;
        case GateKind::CCX:
            return 3;
        case GateKind::MCZ:
            return 0;
        default:
            return 1;
    }
}

Circuit::Circuit(std::size_t num_qubits, std::size_t num_clbits)
    : num_qubits_(num_qubits), num_clbits_(num_clbits), written_(num_clbits, false) {
}

void Circuit::validate(const Instruction &inst) const {
    const auto name = std::string(gate_name(inst.kind));
    const std::size_t arity = fixed_arity(inst.kind);
    if (arity != 0 && inst.qubits.size() != arity) {
        throw std::invalid_argument(name + " expects " + std::to_string(arity) + " qubit(s), got " +
                                    std::to_string(inst.qubits.size()));
    }
    if (inst.kind == GateKind::MCZ && inst.qubits.size() < 2) {
        throw std::invalid_argument("MCZ needs at least one control and a target");
    }
    for (std::size_t i = 0; i < inst.qubits.size(); ++i) {
        if (inst.qubits[i] >= num_qubits_) {
            throw std::out_of_range(name + " qubit " + std::to_string(inst.qubits[i]) +
                                    " outside circuit of width " + std::to_string(num_qubits_));
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (inst.qubits[i] == inst.qubits[j]) {
                throw std::invalid_argument(name + " repeats qubit " + std::to_string(inst.qubits[i]));
            }
        }
    }
    if (!std::isfinite(inst.theta)) {
        throw std::invalid_argument(name + " has a non-finite angle");
    }
    const bool wants_clbit = inst.kind == GateKind::Measure || is_conditional(inst.kind);
    if (wants_clbit != inst.clbit.has_value()) {
        throw std::invalid_argument(name + (wants_clbit ? " requires" : " must not carry") + " a classical bit");
    }
    if (inst.clbit) {
        if (*inst.clbit >= num_clbits_) {
            throw std::out_of_range(name + " clbit " + std::to_string(*inst.clbit) + " outside register of size " +
                                    std::to_string(num_clbits_));
        }
        if (is_conditional(inst.kind) && !written_[*inst.clbit]) {
            throw std::invalid_argument(name + " reads clbit " + std::to_string(*inst.clbit) +
                                        " before any measurement writes it");
        }
    }
}

Circuit &Circuit::append(Instruction inst) {
    validate(inst);
    if (inst.kind == GateKind::Measure) {
        written_[*inst.clbit] = true;
    }
    instructions_.push_back(std::move(inst));
    return *this;
}

Circuit &Circuit::append(std::initializer_list<Instruction> insts) {
    for (const auto &inst : insts) {
        append(inst);
    }
    return *this;
}

Circuit Circuit::with(Instruction inst) const {
    Circuit copy = *this;
    copy.append(std::move(inst));
    return copy;
}

void Circuit::add_clbits(std::size_t count) {
    num_clbits_ += count;
    written_.resize(num_clbits_, false);
}

bool Circuit::operator==(const Circuit &other) const {
    return num_qubits_ == other.num_qubits_ && num_clbits_ == other.num_clbits_ &&
           instructions_ == other.instructions_;
}

LayerTracker::LayerTracker(std::size_t num_qubits, std::size_t num_clbits)
    : qubit_ready_(num_qubits, 0), clbit_write_(num_clbits, 0), clbit_read_(num_clbits, 0) {
}

void LayerTracker::add_clbits(std::size_t count) {
    clbit_write_.resize(clbit_write_.size() + count, 0);
    clbit_read_.resize(clbit_read_.size() + count, 0);
}

std::size_t LayerTracker::push(const Instruction &inst) {
    std::size_t start = 0;
    for (Qubit q : inst.qubits) {
        start = std::max(start, qubit_ready_[q]);
    }
    if (inst.clbit) {
        const Clbit c = *inst.clbit;
        start = std::max(start, clbit_write_[c]);
        if (inst.kind == GateKind::Measure) {
            start = std::max(start, clbit_read_[c]);
        }
    }
    const std::size_t layer = start + 1;
    for (Qubit q : inst.qubits) {
        qubit_ready_[q] = layer;
    }
    if (inst.clbit) {
        const Clbit c = *inst.clbit;
        if (inst.kind == GateKind::Measure) {
            clbit_write_[c] = layer;
        } else {
            clbit_read_[c] = std::max(clbit_read_[c], layer);
        }
    }
    depth_ = std::max(depth_, layer);
    return layer;
}

std::size_t depth(const Circuit &circuit) {
    LayerTracker tracker(circuit.num_qubits(), circuit.num_clbits());
    for (const auto &inst : circuit) {
        tracker.push(inst);
    }
    return tracker.depth();
}

std::size_t count_gates(const Circuit &circuit, std::span<const GateKind> kinds) {
    return static_cast<std::size_t>(std::count_if(circuit.begin(), circuit.end(), [&](const Instruction &inst) {
        return std::find(kinds.begin(), kinds.end(), inst.kind) != kinds.end();
    }));
}

std::size_t count_gates(const Circuit &circuit, std::initializer_list<GateKind> kinds) {
    return count_gates(circuit, std::span<const GateKind>(kinds.begin(), kinds.size()));
}

std::vector<std::size_t> gate_histogram(const Circuit &circuit) {
    std::vector<std::size_t> hist(kNumGateKinds, 0);
    for (const auto &inst : circuit) {
        ++hist[static_cast<std::size_t>(inst.kind)];
    }
    return hist;
}

}  // namespace dqc
