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

#include "dqcrcx/transpiler.hpp"

#include <algorithm>
#include <bit>
#include <complex>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "dqcrcx/gate_matrices.hpp"

namespace dqc {

namespace {

constexpr double kPi = std::numbers::pi;

// Toffoli with 6 CX, T = RZ(pi/4) up to phase.
void decompose_ccx(Circuit &out, Qubit a, Qubit b, Qubit t) {
    const double q = kPi / 4;
    out.append({
        Instruction::h(t),
        Instruction::cx(b, t),
        Instruction::rz(t, -q),
        Instruction::cx(a, t),
        Instruction::rz(t, q),
        Instruction::cx(b, t),
        Instruction::rz(t, -q),
        Instruction::cx(a, t),
        Instruction::rz(b, q),
        Instruction::rz(t, q),
        Instruction::h(t),
        Instruction::cx(a, b),
        Instruction::rz(a, q),
        Instruction::rz(b, -q),
        Instruction::cx(a, b),
    });
}

// The MCZ phase pi * x_0 x_1 ... x_{m-1} expands into parity phases
//   sum over nonempty S of pi / 2^(m-1) * (-1)^(|S|-1) * parity_S(x).
// Parities whose highest member is j are accumulated on qubit j by walking a
// Gray code over the lower qubits, which costs 2^j CX. Total: 2^m - 2 CX.
void decompose_mcz(Circuit &out, const std::vector<Qubit> &qubits) {
    const std::size_t m = qubits.size();
    const double unit = kPi / std::ldexp(1.0, static_cast<int>(m - 1));
    auto angle = [&](int weight) { return (weight % 2 == 1) ? unit : -unit; };
    for (std::size_t j = m - 1; j >= 1; --j) {
        const Qubit acc = qubits[j];
        out.append(Instruction::rz(acc, angle(1)));
        const std::uint64_t codes = std::uint64_t{1} << j;
        std::uint64_t prev = 0;
        for (std::uint64_t i = 1; i < codes; ++i) {
            const std::uint64_t gray = i ^ (i >> 1);
            const int flipped = std::countr_zero(gray ^ prev);
            out.append(Instruction::cx(qubits[flipped], acc));
            out.append(Instruction::rz(acc, angle(std::popcount(gray) + 1)));
            prev = gray;
        }
        out.append(Instruction::cx(qubits[j - 1], acc));
    }
    out.append(Instruction::rz(qubits[0], angle(1)));
}

// Local matrix of a unitary instruction; bit k of the local index is qubits[k].
Eigen::MatrixXcd local_matrix(const Instruction &inst) {
    switch (inst.kind) {
        case GateKind::X:
            return pauli_x<double>();
        case GateKind::H:
            return hadamard<double>();
        case GateKind::RZ:
            return rz_matrix(inst.theta);
        case GateKind::RY:
            return ry_matrix(inst.theta);
        case GateKind::RX:
            return rx_matrix(inst.theta);
        case GateKind::CX:
        case GateKind::CCX: {
            const std::size_t dim = std::size_t{1} << inst.qubits.size();
            const std::size_t controls = dim / 2 - 1;
            const std::size_t target_bit = dim / 2;
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
            for (std::size_t col = 0; col < dim; ++col) {
                const std::size_t row = (col & controls) == controls ? col ^ target_bit : col;
                m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = 1.0;
            }
            return m;
        }
        case GateKind::CZ:
        case GateKind::MCZ: {
            const std::size_t dim = std::size_t{1} << inst.qubits.size();
            Eigen::VectorXcd diag = Eigen::VectorXcd::Ones(static_cast<Eigen::Index>(dim));
            diag(static_cast<Eigen::Index>(dim - 1)) = -1.0;
            return diag.asDiagonal();
        }
        default:
            throw std::invalid_argument(std::string(gate_name(inst.kind)) + " has no unitary matrix");
    }
}

// Left-multiplies `m` by the instruction embedded in the full register.
void apply_local(Eigen::MatrixXcd &m, const Eigen::MatrixXcd &gate, const std::vector<Qubit> &qubits) {
    const auto dim = static_cast<std::size_t>(m.rows());
    const auto gdim = static_cast<std::size_t>(gate.rows());
    std::size_t mask = 0;
    for (Qubit q : qubits) {
        mask |= std::size_t{1} << q;
    }
    std::vector<std::size_t> offsets(gdim);
    for (std::size_t l = 0; l < gdim; ++l) {
        std::size_t g = 0;
        for (std::size_t k = 0; k < qubits.size(); ++k) {
            g |= ((l >> k) & 1U) << qubits[k];
        }
        offsets[l] = g;
    }
    Eigen::VectorXcd in(static_cast<Eigen::Index>(gdim));
    for (std::size_t base = 0; base < dim; ++base) {
        if (base & mask) {
            continue;
        }
        for (Eigen::Index col = 0; col < m.cols(); ++col) {
            for (std::size_t l = 0; l < gdim; ++l) {
                in(static_cast<Eigen::Index>(l)) = m(static_cast<Eigen::Index>(base | offsets[l]), col);
            }
            const Eigen::VectorXcd res = gate * in;
            for (std::size_t l = 0; l < gdim; ++l) {
                m(static_cast<Eigen::Index>(base | offsets[l]), col) = res(static_cast<Eigen::Index>(l));
            }
        }
    }
}

double max_abs(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b, double phi) {
    return (a - std::polar(1.0, phi) * b).cwiseAbs().maxCoeff();
}

}  // namespace

void decompose_into(Circuit &out, const Instruction &inst) {
    const auto &q = inst.qubits;
    switch (inst.kind) {
        case GateKind::X:
        case GateKind::H:
        case GateKind::RZ:
        case GateKind::CX:
        case GateKind::Measure:
        case GateKind::Reset:
        case GateKind::ConditionalX:
        case GateKind::ConditionalZ:
            out.append(inst);
            return;
        case GateKind::RX:
            out.append({Instruction::h(q[0]), Instruction::rz(q[0], inst.theta), Instruction::h(q[0])});
            return;
        case GateKind::RY:
            // RY = S RX S^dagger with S = RZ(pi/2) up to phase.
            out.append({
                Instruction::rz(q[0], -kPi / 2),
                Instruction::h(q[0]),
                Instruction::rz(q[0], inst.theta),
                Instruction::h(q[0]),
                Instruction::rz(q[0], kPi / 2),
            });
            return;
        case GateKind::CZ:
            out.append({Instruction::h(q[1]), Instruction::cx(q[0], q[1]), Instruction::h(q[1])});
            return;
        case GateKind::CCX:
            decompose_ccx(out, q[0], q[1], q[2]);
            return;
        case GateKind::MCZ:
            decompose_mcz(out, q);
            return;
    }
    throw std::invalid_argument("unknown gate kind");
}

Circuit transpile(const Circuit &circuit) {
    Circuit out(circuit.num_qubits(), circuit.num_clbits());
    for (const auto &inst : circuit) {
        decompose_into(out, inst);
    }
    return out;
}

Circuit transpile(const Circuit &circuit, BasisReport &report) {
    Circuit out = transpile(circuit);
    report.input_histogram = gate_histogram(circuit);
    report.output_histogram = gate_histogram(out);
    const bool unitary_only =
        std::all_of(circuit.begin(), circuit.end(), [](const Instruction &i) { return is_unitary(i.kind); });
    report.verified = unitary_only && circuit.num_qubits() <= kMaxVerifyQubits;
    report.max_deviation = report.verified ? verify_unitary(circuit, out) : 0.0;
    return out;
}

Eigen::MatrixXcd circuit_unitary(const Circuit &circuit) {
    if (circuit.num_qubits() > kMaxVerifyQubits) {
        throw std::invalid_argument("dense unitaries are limited to " + std::to_string(kMaxVerifyQubits) + " qubits");
    }
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << circuit.num_qubits());
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
    for (const auto &inst : circuit) {
        if (!is_unitary(inst.kind)) {
            throw std::invalid_argument("circuit contains non-unitary " + std::string(gate_name(inst.kind)));
        }
        apply_local(u, local_matrix(inst), inst.qubits);
    }
    return u;
}

double verify_unitary(const Circuit &a, const Circuit &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("circuit widths differ");
    }
    const Eigen::MatrixXcd ua = circuit_unitary(a);
    const Eigen::MatrixXcd ub = circuit_unitary(b);
    // Least-squares phase first; fall back to a scan plus local refinement
    // when the circuits are not equivalent.
    const std::complex<double> overlap = (ub.adjoint() * ua).trace();
    double best_phi = std::abs(overlap) > 0 ? std::arg(overlap) : 0.0;
    double best = max_abs(ua, ub, best_phi);
    if (best < 1e-9) {
        return best;
    }
    constexpr int kSteps = 720;
    for (int s = 0; s < kSteps; ++s) {
        const double phi = 2 * kPi * s / kSteps;
        const double d = max_abs(ua, ub, phi);
        if (d < best) {
            best = d;
            best_phi = phi;
        }
    }
    double step = 2 * kPi / kSteps;
    while (step > 1e-12) {
        bool moved = false;
        for (double phi : {best_phi - step, best_phi + step}) {
            const double d = max_abs(ua, ub, phi);
            if (d < best) {
                best = d;
                best_phi = phi;
                moved = true;
            }
        }
        if (!moved) {
            step /= 2;
        }
    }
    return best;
}

void write_report(std::ostream &out, const BasisReport &report) {
    auto histogram = [&](const char *prefix, const std::vector<std::size_t> &hist) {
        for (std::size_t k = 0; k < hist.size(); ++k) {
            if (hist[k] != 0) {
                out << prefix << '.' << gate_name(static_cast<GateKind>(k)) << '=' << hist[k] << '\n';
            }
        }
    };
    histogram("input", report.input_histogram);
    histogram("output", report.output_histogram);
    out << "verified=" << (report.verified ? "true" : "false") << '\n';
    if (report.verified) {
        out << "max_deviation=" << report.max_deviation << '\n';
    }
}

}  // namespace dqc
