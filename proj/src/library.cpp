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

#include "dqcrcx/library.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dqcrcx/rng.hpp"

namespace dqc {

std::string family_name(CircuitFamily family) {
    switch (family) {
        case CircuitFamily::GHZ:
            return "ghz";
        case CircuitFamily::Grover:
            return "grover";
        case CircuitFamily::VQC:
            return "vqc";
        case CircuitFamily::Random:
            return "random";
    }
    return "?";
}

CircuitFamily family_from_name(const std::string &name) {
    for (auto f : {CircuitFamily::GHZ, CircuitFamily::Grover, CircuitFamily::VQC, CircuitFamily::Random}) {
        if (family_name(f) == name) {
            return f;
        }
    }
    throw std::invalid_argument("unknown circuit family '" + name + "'");
}

Circuit ghz(std::size_t n) {
    if (n < 2) {
        throw std::invalid_argument("ghz needs at least 2 qubits");
    }
    Circuit c(n);
    c.append(Instruction::h(0));
    for (Qubit i = 0; i + 1 < n; ++i) {
        c.append(Instruction::cx(i, i + 1));
    }
    return c;
}

std::size_t grover_default_iterations(std::size_t n) {
    return static_cast<std::size_t>(std::floor(std::numbers::pi / 4 * std::sqrt(std::ldexp(1.0, static_cast<int>(n)))));
}

Circuit grover(std::size_t n, const std::string &marked, std::size_t iterations) {
    if (n < 2) {
        throw std::invalid_argument("grover needs at least 2 qubits");
    }
    if (marked.size() != n || marked.find_first_not_of("01") != std::string::npos) {
        throw std::invalid_argument("marked state must be a " + std::to_string(n) + "-character bitstring");
    }
    if (iterations < 1) {
        throw std::invalid_argument("grover needs at least one iteration");
    }
    std::vector<Qubit> all(n);
    for (Qubit q = 0; q < n; ++q) {
        all[q] = q;
    }
    // Character i of `marked` is qubit n-1-i.
    auto marked_bit = [&](Qubit q) { return marked[n - 1 - q] == '1'; };

    Circuit c(n);
    for (Qubit q : all) {
        c.append(Instruction::h(q));
    }
    for (std::size_t it = 0; it < iterations; ++it) {
        for (Qubit q : all) {
            if (!marked_bit(q)) {
                c.append(Instruction::x(q));
            }
        }
        c.append(Instruction::mcz(all));
        for (Qubit q : all) {
            if (!marked_bit(q)) {
                c.append(Instruction::x(q));
            }
        }
        for (Qubit q : all) {
            c.append(Instruction::h(q));
        }
        for (Qubit q : all) {
            c.append(Instruction::x(q));
        }
        c.append(Instruction::mcz(all));
        for (Qubit q : all) {
            c.append(Instruction::x(q));
        }
        for (Qubit q : all) {
            c.append(Instruction::h(q));
        }
    }
    return c;
}

Circuit vqc(std::size_t n, std::size_t layers, std::uint64_t seed) {
    if (n < 2 || layers < 1) {
        throw std::invalid_argument("vqc needs at least 2 qubits and 1 layer");
    }
    auto rng = make_stream(seed, 0);
    const double two_pi = 2 * std::numbers::pi;
    Circuit c(n);
    for (std::size_t layer = 0; layer < layers; ++layer) {
        for (Qubit q = 0; q < n; ++q) {
            c.append(Instruction::ry(q, two_pi * uniform01(rng)));
            c.append(Instruction::rz(q, two_pi * uniform01(rng)));
        }
        for (Qubit q = 0; q + 1 < n; ++q) {
            c.append(Instruction::cx(q, q + 1));
        }
    }
    return c;
}

Circuit random_circuit(std::size_t n, std::uint64_t seed, std::size_t two_qubit_gates, std::size_t one_qubit_gates) {
    if (n < 2) {
        throw std::invalid_argument("random circuit needs at least 2 qubits");
    }
    auto rng = make_stream(seed, 0);
    Circuit c(n);
    std::size_t left2 = two_qubit_gates;
    std::size_t left1 = one_qubit_gates;
    while (left1 + left2 > 0) {
        if (uniform_below(rng, left1 + left2) < left2) {
            const auto control = static_cast<Qubit>(uniform_below(rng, n));
            auto target = static_cast<Qubit>(uniform_below(rng, n - 1));
            if (target >= control) {
                ++target;
            }
            c.append(Instruction::cx(control, target));
            --left2;
        } else {
            const auto q = static_cast<Qubit>(uniform_below(rng, n));
            switch (uniform_below(rng, 3)) {
                case 0:
                    c.append(Instruction::x(q));
                    break;
                case 1:
                    c.append(Instruction::h(q));
                    break;
                default:
                    c.append(Instruction::rz(q, 2 * std::numbers::pi * uniform01(rng)));
                    break;
            }
            --left1;
        }
    }
    return c;
}

Circuit build_circuit(const CircuitSpec &spec) {
    const std::size_t n = spec.num_qubits;
    switch (spec.family) {
        case CircuitFamily::GHZ:
            return ghz(n);
        case CircuitFamily::Grover:
            return grover(n, spec.marked.value_or(std::string(n, '1')),
                          spec.iterations.value_or(grover_default_iterations(n)));
        case CircuitFamily::VQC:
            return vqc(n, spec.layers.value_or(2), spec.seed);
        case CircuitFamily::Random:
            return random_circuit(n, spec.seed, spec.two_qubit_gates.value_or(3 * n),
                                  spec.one_qubit_gates.value_or(3 * n));
    }
    throw std::invalid_argument("unknown circuit family");
}

}  // namespace dqc
