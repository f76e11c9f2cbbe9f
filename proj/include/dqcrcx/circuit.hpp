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

#ifndef DQCRCX_CIRCUIT_HPP
#define DQCRCX_CIRCUIT_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace dqc {

using Qubit = std::uint32_t;
using Clbit = std::uint32_t;

enum class GateKind : std::uint8_t {
    X,
    H,
    RZ,
    CX,
    RY,
    RX,
    CZ,
    CCX,
    MCZ,
    Measure,
    Reset,
    ConditionalX,
    ConditionalZ,
};

inline constexpr std::size_t kNumGateKinds = 13;

std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_from_name(std::string_view name);

/// True for X, H, RZ and CX.
bool is_basis_gate(GateKind kind);
bool is_parametric(GateKind kind);
bool is_conditional(GateKind kind);
/// Unitary gates, excluding measurement, reset and classically conditioned gates.
bool is_unitary(GateKind kind);

/// Fixed qubit arity of `kind`; MCZ has variable arity and returns 0.
std::size_t fixed_arity(GateKind kind);

/// One circuit operation.
///
/// `clbit` is written by Measure and read by ConditionalX / ConditionalZ; a
/// conditional fires when the bit is 1. MCZ lists its controls first and its
/// target last, although the gate is symmetric.
struct Instruction {
    GateKind kind = GateKind::X;
    std::vector<Qubit> qubits;
    double theta = 0.0;
    std::optional<Clbit> clbit;

    static Instruction make(GateKind kind, std::vector<Qubit> qubits, double theta = 0.0,
                            std::optional<Clbit> clbit = std::nullopt) {
        Instruction inst;
        inst.kind = kind;
        inst.qubits = std::move(qubits);
        inst.theta = theta;
        inst.clbit = clbit;
        return inst;
    }
    static Instruction x(Qubit q) { return make(GateKind::X, {q}); }
    static Instruction h(Qubit q) { return make(GateKind::H, {q}); }
    static Instruction rz(Qubit q, double theta) { return make(GateKind::RZ, {q}, theta); }
    static Instruction ry(Qubit q, double theta) { return make(GateKind::RY, {q}, theta); }
    static Instruction rx(Qubit q, double theta) { return make(GateKind::RX, {q}, theta); }
    static Instruction cx(Qubit control, Qubit target) { return make(GateKind::CX, {control, target}); }
    static Instruction cz(Qubit a, Qubit b) { return make(GateKind::CZ, {a, b}); }
    static Instruction ccx(Qubit c0, Qubit c1, Qubit target) { return make(GateKind::CCX, {c0, c1, target}); }
    static Instruction mcz(std::vector<Qubit> qubits) { return make(GateKind::MCZ, std::move(qubits)); }
    static Instruction measure(Qubit q, Clbit c) { return make(GateKind::Measure, {q}, 0.0, c); }
    static Instruction reset(Qubit q) { return make(GateKind::Reset, {q}); }
    static Instruction cond_x(Qubit q, Clbit c) { return make(GateKind::ConditionalX, {q}, 0.0, c); }
    static Instruction cond_z(Qubit q, Clbit c) { return make(GateKind::ConditionalZ, {q}, 0.0, c); }

    bool operator==(const Instruction &other) const = default;
};

/// Ordered instruction list over `num_qubits` qubits and `num_clbits`
/// classical bits. Every appended instruction is validated; earlier
/// instructions are never modified.
class Circuit {
   public:
    Circuit() = default;
    Circuit(std::size_t num_qubits, std::size_t num_clbits = 0);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t num_clbits() const { return num_clbits_; }
    std::size_t size() const { return instructions_.size(); }
    bool empty() const { return instructions_.empty(); }

    std::span<const Instruction> instructions() const { return instructions_; }
    const Instruction &operator[](std::size_t i) const { return instructions_[i]; }
    auto begin() const { return instructions_.begin(); }
    auto end() const { return instructions_.end(); }

    /// Validates and appends. Throws std::out_of_range for bad indices and
    /// std::invalid_argument for arity / clbit-usage / read-before-write errors.
    Circuit &append(Instruction inst);
    Circuit &append(std::initializer_list<Instruction> insts);

    /// Returns a copy with `inst` appended.
    Circuit with(Instruction inst) const;

    /// Grows the classical register; existing bits keep their indices.
    void add_clbits(std::size_t count);

    bool operator==(const Circuit &other) const;

   private:
    void validate(const Instruction &inst) const;

    std::size_t num_qubits_ = 0;
    std::size_t num_clbits_ = 0;
    std::vector<Instruction> instructions_;
    std::vector<bool> written_;
};

/// Incremental as-soon-as-possible layering.
///
/// Two instructions conflict when they share a qubit, or share a clbit with
/// at least one of them writing it. `push` returns the 1-based layer of the
/// instruction; `depth` is the largest layer seen so far.
class LayerTracker {
   public:
    LayerTracker(std::size_t num_qubits, std::size_t num_clbits);

    std::size_t push(const Instruction &inst);
    std::size_t depth() const { return depth_; }
    std::size_t qubit_ready(Qubit q) const { return qubit_ready_[q]; }
    void add_clbits(std::size_t count);

   private:
    std::vector<std::size_t> qubit_ready_;
    std::vector<std::size_t> clbit_write_;
    std::vector<std::size_t> clbit_read_;
    std::size_t depth_ = 0;
};

std::size_t depth(const Circuit &circuit);

std::size_t count_gates(const Circuit &circuit, std::span<const GateKind> kinds);
std::size_t count_gates(const Circuit &circuit, std::initializer_list<GateKind> kinds);

/// Histogram indexed by static_cast<size_t>(GateKind).
std::vector<std::size_t> gate_histogram(const Circuit &circuit);

}  // namespace dqc

#endif
