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
#include <random>

#include "dqcrcx/distributor.hpp"
#include "dqcrcx/gate_matrices.hpp"
#include "dqcrcx/library.hpp"
#include "dqcrcx/rng.hpp"
#include "dqcrcx/scheduler.hpp"
#include "dqcrcx/simulator.hpp"
#include "dqcrcx/transpiler.hpp"

using namespace dqc;
using cd = std::complex<double>;

namespace {

Circuit one_gate(Instruction inst) {
    Circuit c(1);
    c.append(std::move(inst));
    return c;
}

Eigen::VectorXcd random_state(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Eigen::VectorXcd v(static_cast<Eigen::Index>(std::size_t{1} << n));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        v(i) = cd(g(rng), g(rng));
    }
    return v.normalized();
}

}  // namespace

TEST(StateVector, Basics) {
    StateVector s(3);
    EXPECT_EQ(s.live_qubits(), 0U);
    s.h(1);
    EXPECT_EQ(s.live_qubits(), 1U);
    EXPECT_NEAR(s.probability_one(1), 0.5, 1e-15);
    EXPECT_NEAR(s.probability_one(0), 0.0, 1e-15);
    s.h(1);
    EXPECT_NEAR(std::abs(s.amplitude(0) - 1.0), 0.0, 1e-15);
    EXPECT_THROW(StateVector(StateVector::kMaxQubits + 1), std::invalid_argument);
}

TEST(StateVector, MeasureCollapse) {
    StateVector s(2, false);
    s.h(0);
    s.cx(0, 1);
    EXPECT_TRUE(s.measure(0, 0.3));
    EXPECT_NEAR(std::norm(s.amplitude(3)), 1.0, 1e-12);
    StateVector t(2, false);
    t.h(0);
    t.cx(0, 1);
    EXPECT_FALSE(t.measure(1, 0.7));
    EXPECT_NEAR(std::norm(t.amplitude(0)), 1.0, 1e-12);
}

TEST(StateVector, ResetFreesCompactSlot) {
    StateVector s(4);
    s.h(2);
    s.cx(2, 3);
    EXPECT_EQ(s.live_qubits(), 2U);
    s.reset(3, 0.1);
    EXPECT_EQ(s.live_qubits(), 1U);
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
    EXPECT_NEAR(s.probability_one(3), 0.0, 1e-15);
}

TEST(SimulateIdeal, Examples) {
    const auto bell = simulate_ideal(ghz(2));
    EXPECT_NEAR(std::abs(bell(0) - std::sqrt(0.5)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(bell(3) - std::sqrt(0.5)), 0.0, 1e-15);
    Circuit hh(1);
    hh.append({Instruction::h(0), Instruction::h(0)});
    const auto zero = simulate_ideal(hh);
    EXPECT_NEAR(std::abs(zero(0) - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(zero(1)), 0.0, 1e-15);
    Circuit m(1, 1);
    m.append(Instruction::measure(0, 0));
    EXPECT_THROW(simulate_ideal(m), std::invalid_argument);
}

TEST(SimulateIdeal, GateMatricesAgree) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> angle(-4.0, 4.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double t = angle(rng);
        Circuit c(1);
        c.append({Instruction::h(0), Instruction::rz(0, 0.3), Instruction::ry(0, t), Instruction::rx(0, -t)});
        Eigen::Vector2cd v(1.0, 0.0);
        v = hadamard<double>() * v;
        v = rz_matrix(0.3) * v;
        v = ry_matrix(t) * v;
        v = rx_matrix(-t) * v;
        EXPECT_LT((simulate_ideal(c) - v).norm(), 1e-12);
    }
}

TEST(Trajectory, NoiselessEqualsIdeal) {
    const Circuit c = transpile(grover(4, "0111", 2));
    std::mt19937_64 rng(1);
    const auto run = run_trajectory(c, NoiseParams::none(), rng);
    EXPECT_LT((run.state.to_dense() - simulate_ideal(c)).norm(), 1e-12);
    EXPECT_EQ(run.error_events, 0U);
}

TEST(Trajectory, OneQubitPauliRate) {
    const Circuit c = one_gate(Instruction::x(0));
    NoiseParams noise{0.001, 0.0, 0.0};
    std::size_t hits = 0;
    const std::size_t trials = 1000000;
    for (std::size_t t = 0; t < trials; ++t) {
        auto rng = make_stream(5, t);
        hits += run_trajectory(c, noise, rng).error_events;
    }
    EXPECT_NEAR(static_cast<double>(hits) / trials, 0.001, 3e-4);
}

TEST(Trajectory, ReadoutFlipRate) {
    Circuit c(1, 1);
    c.append({Instruction::x(0), Instruction::measure(0, 0)});
    NoiseParams noise{0.0, 0.0, 0.005};
    std::size_t zeros = 0;
    const std::size_t trials = 1000000;
    for (std::size_t t = 0; t < trials; ++t) {
        auto rng = make_stream(6, t);
        const auto run = run_trajectory(c, noise, rng);
        zeros += run.record[0] == 0 ? 1 : 0;
        // Readout errors corrupt the record, never the state.
        ASSERT_NEAR(run.state.probability_one(0), 1.0, 1e-15);
    }
    const double sigma = std::sqrt(0.005 * 0.995 / trials);
    EXPECT_NEAR(static_cast<double>(zeros) / trials, 0.005, 3 * sigma);
}

TEST(Trajectory, TwoQubitPaulisUniform) {
    Circuit c(2);
    c.append(Instruction::cx(0, 1));
    NoiseParams noise{0.0, 1.0, 0.0};
    std::vector<std::size_t> counts(4, 0);
    const std::size_t trials = 150000;
    for (std::size_t t = 0; t < trials; ++t) {
        auto rng = make_stream(8, t);
        const auto psi = run_trajectory(c, noise, rng).state.to_dense();
        for (int i = 0; i < 4; ++i) {
            if (std::norm(psi(i)) > 0.5) {
                ++counts[static_cast<std::size_t>(i)];
            }
        }
    }
    // Of the 15 Paulis on |00>, 3 keep |00> and 4 reach each other basis state.
    const double expected[] = {3.0 / 15, 4.0 / 15, 4.0 / 15, 4.0 / 15};
    for (int i = 0; i < 4; ++i) {
        const double p = expected[i];
        EXPECT_NEAR(static_cast<double>(counts[static_cast<std::size_t>(i)]) / trials, p,
                    5 * std::sqrt(p * (1 - p) / trials));
    }
}

TEST(Trajectory, CompactMatchesDense) {
    const NetworkConfig net = NetworkConfig::uniform(3, 2, 2);
    const Circuit c = transpile(random_circuit(6, 4, 14, 14));
    const DistributedCircuit d = distribute(c, naive_assignment(6, net), net);
    const NoiseParams noise{0.02, 0.05, 0.05};
    for (std::uint64_t t = 0; t < 40; ++t) {
        auto r1 = make_stream(9, t);
        auto r2 = make_stream(9, t);
        const auto compact = run_trajectory(d.circuit, noise, r1, true);
        const auto dense = run_trajectory(d.circuit, noise, r2, false);
        EXPECT_EQ(compact.record, dense.record);
        EXPECT_EQ(compact.error_events, dense.error_events);
        EXPECT_LT((compact.state.to_dense() - dense.state.to_dense()).norm(), 1e-10);
        EXPECT_LE(compact.state.live_qubits(), 6U);
        EXPECT_NEAR(compact.state.norm_squared(), 1.0, 1e-9);
    }
}

TEST(Trajectory, RejectsUntranspiledUnderNoise) {
    Circuit c(3);
    c.append(Instruction::ccx(0, 1, 2));
    std::mt19937_64 rng(1);
    EXPECT_THROW(run_trajectory(c, NoiseParams{}, rng), std::invalid_argument);
    EXPECT_NO_THROW(run_trajectory(c, NoiseParams::none(), rng));
}

TEST(Fidelity, CxOnZeroClosedForm) {
    Circuit c(2);
    c.append(Instruction::cx(0, 1));
    const NoiseParams noise{0.0, 0.005, 0.0};
    Eigen::VectorXcd ideal = Eigen::VectorXcd::Zero(4);
    ideal(0) = 1.0;
    const auto est = estimate_fidelity(c, ideal, noise, 400000, 3);
    EXPECT_NEAR(est.mean, 1.0 - 0.005 * 12.0 / 15.0, std::max(3 * est.std_err, 1e-4));
}

TEST(Fidelity, DepolarizingSymmetry) {
    // One gate followed by the channel, against an arbitrary reference phi:
    // F = (1 - p)|<phi|psi>|^2 + p/3 sum_P |<phi|P|psi>|^2.
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    for (double p : {1.0, 0.3}) {
        for (int trial = 0; trial < 6; ++trial) {
            const Circuit c = one_gate(trial % 2 ? Instruction::ry(0, angle(rng)) : Instruction::rx(0, angle(rng)));
            const Eigen::Vector2cd psi = simulate_ideal(c);
            const Eigen::VectorXcd phi = random_state(1, rng);
            double expected = (1 - p) * std::norm(phi.dot(psi));
            for (int k = 1; k < 4; ++k) {
                expected += p / 3 * std::norm(phi.dot(pauli<double>(k) * psi));
            }
            const auto est = estimate_fidelity(c, phi, NoiseParams{p, 0.0, 0.0}, 60000, 100 + trial);
            EXPECT_NEAR(est.mean, expected, std::max(4 * est.std_err, 1e-3));
            if (p == 1.0) {
                const auto self = estimate_fidelity(c, simulate_ideal(c), NoiseParams{p, 0.0, 0.0}, 20000, 1);
                EXPECT_NEAR(self.mean, 1.0 / 3.0, 4 * self.std_err);
            }
        }
    }
}

TEST(Fidelity, NoiselessIsOne) {
    const Circuit c = transpile(grover(4, "1111", 1));
    const NetworkConfig net = NetworkConfig::uniform(2, 2, 2);
    const DistributedCircuit d = distribute(c, naive_assignment(4, net), net);
    const auto est = estimate_fidelity(d, simulate_ideal(c), NoiseParams::none(), 500, 1);
    EXPECT_NEAR(est.mean, 1.0, 1e-9);
    EXPECT_NEAR(est.std_err, 0.0, 1e-9);
    EXPECT_EQ(est.n_trajectories, 500U);
    EXPECT_EQ(est.convention, "squared-overlap");
}

TEST(Fidelity, ThreadCountIndependent) {
    const Circuit c = transpile(random_circuit(8, 2, 24, 24));
    const NetworkConfig net = NetworkConfig::uniform(4, 2, 2);
    const DistributedCircuit d = distribute(c, naive_assignment(8, net), net);
    const auto ideal = simulate_ideal(c);
    const auto base = estimate_fidelity(d, ideal, NoiseParams{}, 1000, 42, {1});
    for (std::size_t threads : {2U, 3U, 8U}) {
        const auto est = estimate_fidelity(d, ideal, NoiseParams{}, 1000, 42, {threads});
        EXPECT_EQ(est.mean, base.mean);
        EXPECT_EQ(est.std_err, base.std_err);
    }
    const auto other = estimate_fidelity(d, ideal, NoiseParams{}, 1000, 43, {1});
    EXPECT_NE(other.mean, base.mean);
}

TEST(Fidelity, GhzMonolithic) {
    const Circuit g = ghz(8);
    const auto est = estimate_fidelity(g, simulate_ideal(g), NoiseParams{}, 20000, 1);
    EXPECT_NEAR(est.mean, 0.97, 0.015);
    EXPECT_LT(est.std_err, 0.004);
}

TEST(Fidelity, WidthMismatch) {
    const Circuit g = ghz(3);
    EXPECT_THROW(estimate_fidelity(g, Eigen::VectorXcd::Zero(4), NoiseParams{}, 10, 1), std::invalid_argument);
    EXPECT_THROW(estimate_fidelity(g, simulate_ideal(g), NoiseParams{}, 0, 1), std::invalid_argument);
}

TEST(NoiseParams, ParseAndValidate) {
    const NoiseParams p = NoiseParams::parse("0.001,0.005,0.005");
    EXPECT_EQ(p.p1, 0.001);
    EXPECT_EQ(p.p2, 0.005);
    EXPECT_EQ(p.p_ro, 0.005);
    EXPECT_FALSE(p.is_zero());
    EXPECT_TRUE(NoiseParams::none().is_zero());
    EXPECT_THROW(NoiseParams::parse("0.1,0.2"), std::invalid_argument);
    EXPECT_THROW(NoiseParams::parse("0.1,2,0"), std::invalid_argument);
    EXPECT_THROW(NoiseParams::parse("a,b,c"), std::invalid_argument);
}

TEST(Rng, StreamsDiffer) {
    auto a = make_stream(1, 0);
    auto b = make_stream(1, 1);
    auto c = make_stream(2, 0);
    const auto va = a();
    EXPECT_NE(va, b());
    EXPECT_NE(va, c());
    auto a2 = make_stream(1, 0);
    EXPECT_EQ(va, a2());
    std::mt19937_64 r(3);
    for (int i = 0; i < 1000; ++i) {
        const double u = uniform01(r);
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        ASSERT_LT(uniform_below(r, 15), 15U);
    }
}
