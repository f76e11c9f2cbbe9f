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

#ifndef DQCRCX_GATE_MATRICES_HPP
#define DQCRCX_GATE_MATRICES_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>

namespace dqc {

template <typename Scalar>
using Matrix2c = Eigen::Matrix<std::complex<Scalar>, 2, 2>;
template <typename Scalar>
using Matrix4c = Eigen::Matrix<std::complex<Scalar>, 4, 4>;
template <typename Scalar>
using MatrixXc = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorXc = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar>
Matrix2c<Scalar> pauli_x() {
    Matrix2c<Scalar> m;
    m << 0, 1, 1, 0;
    return m;
}

template <typename Scalar>
Matrix2c<Scalar> pauli_y() {
    using C = std::complex<Scalar>;
    Matrix2c<Scalar> m;
    m << C(0), C(0, -1), C(0, 1), C(0);
    return m;
}

template <typename Scalar>
Matrix2c<Scalar> pauli_z() {
    Matrix2c<Scalar> m;
    m << 1, 0, 0, -1;
    return m;
}

template <typename Scalar>
Matrix2c<Scalar> hadamard() {
    const Scalar s = Scalar(1) / std::sqrt(Scalar(2));
    Matrix2c<Scalar> m;
    m << s, s, s, -s;
    return m;
}

/// exp(-i theta Z / 2).
template <typename Scalar>
Matrix2c<Scalar> rz_matrix(Scalar theta) {
    using C = std::complex<Scalar>;
    Matrix2c<Scalar> m;
    m << std::polar(Scalar(1), -theta / 2), C(0), C(0), std::polar(Scalar(1), theta / 2);
    return m;
}

/// exp(-i theta Y / 2).
template <typename Scalar>
Matrix2c<Scalar> ry_matrix(Scalar theta) {
    const Scalar c = std::cos(theta / 2);
    const Scalar s = std::sin(theta / 2);
    Matrix2c<Scalar> m;
    m << c, -s, s, c;
    return m;
}

/// exp(-i theta X / 2).
template <typename Scalar>
Matrix2c<Scalar> rx_matrix(Scalar theta) {
    using C = std::complex<Scalar>;
    const Scalar c = std::cos(theta / 2);
    const Scalar s = std::sin(theta / 2);
    Matrix2c<Scalar> m;
    m << C(c), C(0, -s), C(0, -s), C(c);
    return m;
}

/// I, X, Y, Z for index 0..3.
template <typename Scalar>
Matrix2c<Scalar> pauli(int index) {
    switch (index) {
        case 1:
            return pauli_x<Scalar>();
        case 2:
            return pauli_y<Scalar>();
        case 3:
            return pauli_z<Scalar>();
        default:
            return Matrix2c<Scalar>::Identity();
    }
}

}  // namespace dqc

#endif
