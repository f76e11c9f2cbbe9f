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

#ifndef DQCRCX_LIBRARY_HPP
#define DQCRCX_LIBRARY_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "dqcrcx/circuit.hpp"

namespace dqc {

enum class CircuitFamily { GHZ, Grover, VQC, Random };

std::string family_name(CircuitFamily family);
CircuitFamily family_from_name(const std::string &name);

/// Description of a benchmark circuit. Unset optional fields take the
/// family defaults: Grover marks the all-ones state and runs
/// floor(pi/4 * sqrt(2^n)) iterations, VQC uses 2 layers, and random circuits
/// use 3n two-qubit and 3n one-qubit gates.
struct CircuitSpec {
    CircuitFamily family = CircuitFamily::GHZ;
    std::size_t num_qubits = 0;
    std::uint64_t seed = 0;
    std::optional<std::string> marked;
    std::optional<std::size_t> iterations;
    std::optional<std::size_t> layers;
    std::optional<std::size_t> two_qubit_gates;
    std::optional<std::size_t> one_qubit_gates;
};

/// H(0) followed by the CX chain CX(i, i+1).
Circuit ghz(std::size_t n);

/// Grover search for `marked` (most significant qubit first, so "0001" marks
/// basis index 1). Oracle and diffuser are emitted with MCZ gates.
Circuit grover(std::size_t n, const std::string &marked, std::size_t iterations);
std::size_t grover_default_iterations(std::size_t n);

/// Layers of RY, RZ rotations on every qubit, angles uniform in [0, 2pi),
/// each followed by a linear CX chain.
Circuit vqc(std::size_t n, std::size_t layers, std::uint64_t seed);

/// Interleaved random X/H/RZ single-qubit gates and CX on uniformly chosen
/// ordered pairs.
Circuit random_circuit(std::size_t n, std::uint64_t seed, std::size_t two_qubit_gates,
                       std::size_t one_qubit_gates);

Circuit build_circuit(const CircuitSpec &spec);

}  // namespace dqc

#endif
