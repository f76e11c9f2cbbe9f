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

#include "dqcrcx/density.hpp"

#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "dqcrcx/gate_matrices.hpp"

namespace dqc {

namespace {

using Matrix = Eigen::MatrixXcd;

// Vectorised density matrix: entry (r, c) lives at r + (c << n), so the row
// index occupies bits [0, n) and the column index bits [n, 2n).
class DensityMatrix {
   public:
    explicit DensityMatrix(std::size_t n) : n_(n) {
        rho_ = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(std::uint64_t{1} << (2 * n)));
        rho_(0) = 1.0;
    }

    std::size_t num_qubits() const { return n_; }

    /// rho -> G rho G^dagger on `qubits` (bit k of G's index is qubits[k]).
    void apply(const Matrix &g, const std::vector<Qubit> &qubits) {
        std::vector<unsigned> rows(qubits.begin(), qubits.end());
        std::vector<unsigned> cols;
        for (Qubit q : qubits) {
            cols.push_back(static_cast<unsigned>(q + n_));
        }
        apply_bits(rho_, g, rows);
        apply_bits(rho_, g.conjugate(), cols);
    }

    /// rho -> sum_i K_i rho K_i^dagger.
    void channel(const std::vector<Matrix> &kraus, const std::vector<Qubit> &qubits) {
        Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(rho_.size());
        const Eigen::VectorXcd start = rho_;
        for (const auto &k : kraus) {
            rho_ = start;
            apply(k, qubits);
            acc += rho_;
        }
        rho_ = std::move(acc);
    }

    /// Depolarizing channel of strength p on `qubits`, in closed form:
    /// rho -> (1 - d^2 p / (d^2 - 1)) rho + (d p / (d^2 - 1)) Tr_S(rho) (x) I.
    /// With a `control`, only the block where the control is 1 on both sides
    /// is depolarized; blocks mixing control values are zeroed.
    void depolarize(double p, const std::vector<Qubit> &qubits, std::optional<Qubit> control = std::nullopt) {
        const std::uint64_t d = std::uint64_t{1} << qubits.size();
        const double dd = static_cast<double>(d * d);
        const double keep = 1.0 - dd * p / (dd - 1.0);
        const double mix = static_cast<double>(d) * p / (dd - 1.0);
        std::uint64_t mask = 0;
        std::vector<std::uint64_t> row_off(d, 0);
        std::vector<std::uint64_t> col_off(d, 0);
        for (std::size_t k = 0; k < qubits.size(); ++k) {
            mask |= (std::uint64_t{1} << qubits[k]) | (std::uint64_t{1} << (qubits[k] + n_));
        }
        for (std::uint64_t l = 0; l < d; ++l) {
            for (std::size_t k = 0; k < qubits.size(); ++k) {
                row_off[l] |= ((l >> k) & 1U) << qubits[k];
                col_off[l] |= ((l >> k) & 1U) << (qubits[k] + n_);
            }
        }
        const std::uint64_t crow = control ? std::uint64_t{1} << *control : 0;
        const std::uint64_t ccol = control ? std::uint64_t{1} << (*control + n_) : 0;
        for (std::uint64_t base = 0; base < static_cast<std::uint64_t>(rho_.size()); ++base) {
            if (base & mask) {
                continue;
            }
            if (control) {
                const bool r = base & crow;
                const bool c = base & ccol;
                if (r != c) {
                    for (std::uint64_t a = 0; a < d; ++a) {
                        for (std::uint64_t b = 0; b < d; ++b) {
                            rho_(static_cast<Eigen::Index>(base | row_off[a] | col_off[b])) = 0.0;
                        }
                    }
                    continue;
                }
                if (!r) {
                    continue;
                }
            }
            Amplitude trace = 0.0;
            for (std::uint64_t l = 0; l < d; ++l) {
                trace += rho_(static_cast<Eigen::Index>(base | row_off[l] | col_off[l]));
            }
            for (std::uint64_t a = 0; a < d; ++a) {
                for (std::uint64_t b = 0; b < d; ++b) {
                    auto &x = rho_(static_cast<Eigen::Index>(base | row_off[a] | col_off[b]));
                    x = keep * x + (a == b ? mix * trace : Amplitude(0.0));
                }
            }
        }
    }

    /// Drops the coherences between |0> and |1> of `q`.
    void dephase(Qubit q) {
        const std::uint64_t row = std::uint64_t{1} << q;
        const std::uint64_t col = std::uint64_t{1} << (q + n_);
        for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(rho_.size()); ++i) {
            if (((i & row) != 0) != ((i & col) != 0)) {
                rho_(static_cast<Eigen::Index>(i)) = 0.0;
            }
        }
    }

    double expectation(const Eigen::VectorXcd &psi) const {
        const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << n_);
        Eigen::Map<const Matrix> m(rho_.data(), dim, dim);
        return (psi.adjoint() * m * psi)(0, 0).real();
    }

   private:
    static void apply_bits(Eigen::VectorXcd &v, const Matrix &g, const std::vector<unsigned> &bits) {
        switch (g.rows()) {
            case 2:
                apply_fixed<2>(v, g, bits);
                break;
            case 4:
                apply_fixed<4>(v, g, bits);
                break;
            case 8:
                apply_fixed<8>(v, g, bits);
                break;
            default:
                apply_fixed<Eigen::Dynamic>(v, g, bits);
        }
    }

    template <int N>
    static void apply_fixed(Eigen::VectorXcd &v, const Matrix &gm, const std::vector<unsigned> &bits) {
        const Eigen::Matrix<Amplitude, N, N> g = gm;
        const auto gdim = static_cast<std::uint64_t>(gm.rows());
        std::uint64_t mask = 0;
        std::vector<std::uint64_t> offsets(gdim, 0);
        for (std::size_t k = 0; k < bits.size(); ++k) {
            mask |= std::uint64_t{1} << bits[k];
        }
        for (std::uint64_t l = 0; l < gdim; ++l) {
            for (std::size_t k = 0; k < bits.size(); ++k) {
                offsets[l] |= ((l >> k) & 1U) << bits[k];
            }
        }
        Eigen::Matrix<Amplitude, N, 1> in(static_cast<Eigen::Index>(gdim));
        Eigen::Matrix<Amplitude, N, 1> out(static_cast<Eigen::Index>(gdim));
        for (std::uint64_t base = 0; base < static_cast<std::uint64_t>(v.size()); ++base) {
            if (base & mask) {
                continue;
            }
            for (std::uint64_t l = 0; l < gdim; ++l) {
                in(static_cast<Eigen::Index>(l)) = v(static_cast<Eigen::Index>(base | offsets[l]));
            }
            out.noalias() = g * in;
            for (std::uint64_t l = 0; l < gdim; ++l) {
                v(static_cast<Eigen::Index>(base | offsets[l])) = out(static_cast<Eigen::Index>(l));
            }
        }
    }

    std::size_t n_;
    Eigen::VectorXcd rho_;
};

// Gate with all-but-last local bits as controls and `g` on the last.
Matrix controlled(const Matrix &g, std::size_t num_qubits) {
    const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << num_qubits);
    const Eigen::Index half = dim / 2;
    Matrix m = Matrix::Identity(dim, dim);
    const Eigen::Index ctrl = half - 1;
    m(ctrl, ctrl) = g(0, 0);
    m(ctrl, ctrl + half) = g(0, 1);
    m(ctrl + half, ctrl) = g(1, 0);
    m(ctrl + half, ctrl + half) = g(1, 1);
    return m;
}

Matrix one_qubit_matrix(const Instruction &inst) {
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
        default:
            throw std::logic_error("not a one-qubit gate");
    }
}

}  // namespace

double exact_density_fidelity(const Circuit &circuit, const std::vector<Qubit> &placement,
                              const Eigen::VectorXcd &ideal, const NoiseParams &noise) {
    noise.validate();
    const std::size_t n = circuit.num_qubits();
    if (n > kMaxDensityQubits) {
        throw std::invalid_argument("density-matrix oracle limited to " + std::to_string(kMaxDensityQubits) +
                                    " qubits, circuit has " + std::to_string(n));
    }
    if (static_cast<std::uint64_t>(ideal.size()) != (std::uint64_t{1} << placement.size())) {
        throw std::invalid_argument("ideal state does not match the number of computational qubits");
    }

    DensityMatrix rho(n);
    const std::vector<Matrix> readout{std::sqrt(1.0 - noise.p_ro) * Matrix(Matrix::Identity(2, 2)),
                                      std::sqrt(noise.p_ro) * Matrix(pauli_x<double>())};
    Matrix k0 = Matrix::Zero(2, 2);
    k0(0, 0) = 1.0;
    Matrix k1 = Matrix::Zero(2, 2);
    k1(0, 1) = 1.0;
    const std::vector<Matrix> reset{k0, k1};

    // Qubit holding each clbit's value, valid until that qubit is touched.
    std::vector<long> source(circuit.num_clbits(), -1);
    auto touch = [&](Qubit q) {
        for (auto &s : source) {
            if (s == static_cast<long>(q)) {
                s = -1;
            }
        }
    };

    for (const auto &inst : circuit) {
        const auto &q = inst.qubits;
        switch (inst.kind) {
            case GateKind::X:
            case GateKind::H:
            case GateKind::RZ:
            case GateKind::RY:
            case GateKind::RX:
                touch(q[0]);
                rho.apply(one_qubit_matrix(inst), q);
                if (noise.p1 > 0) {
                    rho.depolarize(noise.p1, q);
                }
                break;
            case GateKind::CX:
            case GateKind::CZ:
                touch(q[0]);
                touch(q[1]);
                rho.apply(controlled(inst.kind == GateKind::CX ? Matrix(pauli_x<double>()) : Matrix(pauli_z<double>()), 2),
                          q);
                if (noise.p2 > 0) {
                    rho.depolarize(noise.p2, q);
                }
                break;
            case GateKind::CCX:
            case GateKind::MCZ:
                if (noise.p1 > 0 || noise.p2 > 0) {
                    throw std::invalid_argument("noise is defined on one- and two-qubit gates; transpile " +
                                                std::string(gate_name(inst.kind)) + " first");
                }
                for (Qubit x : q) {
                    touch(x);
                }
                rho.apply(controlled(inst.kind == GateKind::CCX ? Matrix(pauli_x<double>()) : Matrix(pauli_z<double>()),
                                     q.size()),
                          q);
                break;
            case GateKind::Measure:
                touch(q[0]);
                rho.dephase(q[0]);
                if (noise.p_ro > 0) {
                    rho.channel(readout, q);
                }
                source[*inst.clbit] = q[0];
                break;
            case GateKind::Reset:
                touch(q[0]);
                rho.channel(reset, q);
                break;
            case GateKind::ConditionalX:
            case GateKind::ConditionalZ: {
                const long src = source[*inst.clbit];
                if (src < 0) {
                    throw std::invalid_argument("clbit " + std::to_string(*inst.clbit) +
                                                " is read after its measured qubit was reused");
                }
                touch(q[0]);
                const std::vector<Qubit> pair{static_cast<Qubit>(src), q[0]};
                const Matrix g = inst.kind == GateKind::ConditionalX ? Matrix(pauli_x<double>()) : Matrix(pauli_z<double>());
                rho.apply(controlled(g, 2), pair);
                if (noise.p1 > 0) {
                    // Depolarizing noise only on branches where the correction fired.
                    rho.depolarize(noise.p1, {q[0]}, static_cast<Qubit>(src));
                }
                break;
            }
        }
    }

    const std::uint64_t dim = std::uint64_t{1} << n;
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    for (std::uint64_t x = 0; x < static_cast<std::uint64_t>(ideal.size()); ++x) {
        std::uint64_t full = 0;
        for (std::size_t k = 0; k < placement.size(); ++k) {
            full |= ((x >> k) & 1U) << placement[k];
        }
        psi(static_cast<Eigen::Index>(full)) = ideal(static_cast<Eigen::Index>(x));
    }
    return rho.expectation(psi);
}

double exact_density_fidelity(const DistributedCircuit &d, const Eigen::VectorXcd &ideal, const NoiseParams &noise) {
    return exact_density_fidelity(d.circuit, d.logical_to_physical(), ideal, noise);
}

double exact_density_fidelity(const Circuit &circuit, const Eigen::VectorXcd &ideal, const NoiseParams &noise) {
    std::vector<Qubit> placement(circuit.num_qubits());
    std::iota(placement.begin(), placement.end(), Qubit{0});
    return exact_density_fidelity(circuit, placement, ideal, noise);
}

}  // namespace dqc
