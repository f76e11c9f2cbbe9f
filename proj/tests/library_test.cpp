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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dqcrcx/library.hpp"
#include "dqcrcx/scheduler.hpp"
#include "dqcrcx/simulator.hpp"
#include "dqcrcx/transpiler.hpp"

using namespace dqc;

namespace {

double grover_closed_form(std::size_t n, std::size_t k) {
    const double theta = std::asin(std::pow(2.0, -0.5 * static_cast<double>(n)));
    const double s = std::sin((2.0 * static_cast<double>(k) + 1.0) * theta);
    return s * s;
}

// Basis index of a marked string whose character i is qubit n-1-i.
std::uint64_t marked_index(const std::string &marked) {
    std::uint64_t idx = 0;
    for (char ch : marked) {
        idx = (idx << 1) | (ch == '1' ? 1U : 0U);
    }
    return idx;
}

}  // namespace

TEST(Ghz, Structure) {
    Circuit expected(3);
    expected.append({Instruction::h(0), Instruction::cx(0, 1), Instruction::cx(1, 2)});
    EXPECT_EQ(ghz(3), expected);
    EXPECT_EQ(ghz(8).size(), 8U);
    EXPECT_THROW(ghz(1), std::invalid_argument);
}

TEST(Ghz, IdealState) {
    const auto psi2 = simulate_ideal(ghz(2));
    EXPECT_NEAR(std::abs(psi2(0) - std::sqrt(0.5)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(psi2(3) - std::sqrt(0.5)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(psi2(1)) + std::abs(psi2(2)), 0.0, 1e-12);
    for (std::size_t n = 2; n <= 10; ++n) {
        const auto psi = simulate_ideal(ghz(n));
        int nonzero = 0;
        for (Eigen::Index i = 0; i < psi.size(); ++i) {
            if (std::norm(psi(i)) > 1e-12) {
                ++nonzero;
                EXPECT_NEAR(std::norm(psi(i)), 0.5, 1e-12);
            }
        }
        EXPECT_EQ(nonzero, 2);
    }
}

TEST(Grover, TwoQubitsExact) {
    const auto psi = simulate_ideal(grover(2, "11", 1));
    EXPECT_NEAR(std::norm(psi(3)), 1.0, 1e-12);
}

TEST(Grover, DefaultIterations) {
    EXPECT_EQ(grover_default_iterations(4), 3U);
    EXPECT_EQ(grover_default_iterations(2), 1U);
    CircuitSpec spec;
    spec.family = CircuitFamily::Grover;
    spec.num_qubits = 4;
    EXPECT_EQ(build_circuit(spec), grover(4, "1111", 3));
}

TEST(Grover, ClosedForm) {
    const auto psi = simulate_ideal(grover(4, "1111", 3));
    EXPECT_NEAR(std::norm(psi(15)), grover_closed_form(4, 3), 1e-9);
    EXPECT_NEAR(std::norm(psi(15)), 0.961, 0.001);
    for (const auto &[marked, k] : {std::pair<std::string, std::size_t>{"0110", 1}, {"10110", 2}, {"001", 2},
                                    {"101101", 6}, {"0000", 3}}) {
        const auto p = simulate_ideal(grover(marked.size(), marked, k));
        EXPECT_NEAR(std::norm(p(static_cast<Eigen::Index>(marked_index(marked)))),
                    grover_closed_form(marked.size(), k), 1e-9)
            << marked;
    }
}

TEST(Grover, ClosedFormAfterTranspile) {
    const auto psi = simulate_ideal(transpile(grover(4, "1011", 3)));
    EXPECT_NEAR(std::norm(psi(11)), grover_closed_form(4, 3), 1e-9);
}

TEST(Grover, BadArguments) {
    EXPECT_THROW(grover(3, "10", 1), std::invalid_argument);
    EXPECT_THROW(grover(3, "1x1", 1), std::invalid_argument);
    EXPECT_THROW(grover(3, "101", 0), std::invalid_argument);
}

TEST(Vqc, Structure) {
    const Circuit c = vqc(8, 1, 5);
    EXPECT_EQ(count_gates(c, {GateKind::RY, GateKind::RZ}), 16U);
    EXPECT_EQ(count_gates(c, {GateKind::CX}), 7U);
    EXPECT_EQ(vqc(8, 2, 5), vqc(8, 2, 5));
    EXPECT_FALSE(vqc(8, 2, 5) == vqc(8, 2, 6));
    for (const auto &inst : vqc(6, 3, 9)) {
        if (inst.kind == GateKind::RY || inst.kind == GateKind::RZ) {
            EXPECT_GE(inst.theta, 0.0);
            EXPECT_LT(inst.theta, 2 * std::numbers::pi);
        }
    }
}

TEST(Vqc, PathInteractionGraph) {
    for (std::size_t layers : {1U, 2U, 3U}) {
        const InteractionGraph g = interaction_graph(transpile(vqc(8, layers, 11)));
        EXPECT_EQ(g.edges().size(), 7U);
        for (std::size_t i = 0; i + 1 < 8; ++i) {
            EXPECT_EQ(g.weight(i, i + 1), layers);
        }
    }
}

TEST(RandomCircuit, Determinism) {
    EXPECT_EQ(random_circuit(8, 3, 24, 24), random_circuit(8, 3, 24, 24));
    EXPECT_FALSE(random_circuit(8, 3, 24, 24) == random_circuit(8, 4, 24, 24));
}

TEST(RandomCircuit, Counts) {
    const Circuit c = random_circuit(12, 1, 36, 20);
    EXPECT_EQ(count_gates(c, {GateKind::CX}), 36U);
    EXPECT_EQ(count_gates(c, {GateKind::X, GateKind::H, GateKind::RZ}), 20U);
    EXPECT_EQ(c.size(), 56U);
}

TEST(RandomCircuit, NoTwoQubitGates) {
    const Circuit c = random_circuit(8, 2, 0, 30);
    const InteractionGraph g = interaction_graph(c);
    EXPECT_TRUE(g.edges().empty());
    EXPECT_EQ(cut_weight(g, naive_assignment(8, NetworkConfig::uniform(8, 1, 1))), 0U);
}

TEST(RandomCircuit, OneQubitKindsUniform) {
    const Circuit c = random_circuit(4, 17, 0, 30000);
    const double x = static_cast<double>(count_gates(c, {GateKind::X}));
    const double h = static_cast<double>(count_gates(c, {GateKind::H}));
    const double rz = static_cast<double>(count_gates(c, {GateKind::RZ}));
    // 5 sigma of a binomial(30000, 1/3) count is about 408.
    for (double v : {x, h, rz}) {
        EXPECT_NEAR(v, 10000.0, 410.0);
    }
}

TEST(BuildCircuit, Defaults) {
    CircuitSpec spec;
    spec.family = CircuitFamily::Random;
    spec.num_qubits = 8;
    spec.seed = 4;
    EXPECT_EQ(build_circuit(spec), random_circuit(8, 4, 24, 24));
    spec.family = CircuitFamily::VQC;
    EXPECT_EQ(build_circuit(spec), vqc(8, 2, 4));
    EXPECT_EQ(family_from_name("vqc"), CircuitFamily::VQC);
    EXPECT_THROW(family_from_name("qft"), std::invalid_argument);
}
