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

#include "dqcrcx/statevector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dqc {

namespace {

// Calls f(i0, i1) for every index pair differing only in `bit`.
template <typename F>
inline void for_each_pair(std::uint64_t size, std::uint64_t bit, F &&f) {
    for (std::uint64_t base = 0; base < size; base += 2 * bit) {
        for (std::uint64_t i0 = base; i0 < base + bit; ++i0) {
            f(i0, i0 | bit);
        }
    }
}

// Calls f(i) for every index with both `lo_bit` and `hi_bit` clear (lo_bit < hi_bit).
template <typename F>
inline void for_each_quad(std::uint64_t size, std::uint64_t lo_bit, std::uint64_t hi_bit, F &&f) {
    for (std::uint64_t outer = 0; outer < size; outer += 2 * hi_bit) {
        for (std::uint64_t mid = outer; mid < outer + hi_bit; mid += 2 * lo_bit) {
            for (std::uint64_t i = mid; i < mid + lo_bit; ++i) {
                f(i);
            }
        }
    }
}

// Multiplication without the NaN recovery path of operator*.
inline Amplitude mul(Amplitude a, Amplitude b) {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

}  // namespace

StateVector::StateVector(std::size_t num_qubits, bool compact) : slot_of_(num_qubits, -1), compact_(compact) {
    if (num_qubits > kMaxQubits) {
        throw std::invalid_argument("state vector limited to " + std::to_string(kMaxQubits) + " qubits, got " +
                                    std::to_string(num_qubits));
    }
    if (!compact_) {
        dim_ = std::uint64_t{1} << num_qubits;
        for (Qubit q = 0; q < num_qubits; ++q) {
            slot_of_[q] = static_cast<int>(q);
            qubit_of_slot_.push_back(q);
        }
    }
    amps_ = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim_));
    amps_(0) = 1.0;
}

std::size_t StateVector::make_live(Qubit q) {
    if (slot_of_[q] >= 0) {
        return static_cast<std::size_t>(slot_of_[q]);
    }
    const std::size_t slot = qubit_of_slot_.size();
    const auto old = static_cast<Eigen::Index>(dim_);
    if (amps_.size() < 2 * old) {
        amps_.conservativeResize(2 * old);
    }
    amps_.segment(old, old).setZero();
    dim_ *= 2;
    slot_of_[q] = static_cast<int>(slot);
    qubit_of_slot_.push_back(q);
    return slot;
}

void StateVector::remove_slot(std::size_t slot, bool value) {
    const auto size = dim_;
    const std::uint64_t bit = std::uint64_t{1} << slot;
    const std::uint64_t set = value ? bit : 0;
    // Destination indices never overtake their sources, so compaction is in place.
    Amplitude *a = amps_.data();
    std::uint64_t out = 0;
    for (std::uint64_t base = 0; base < size; base += 2 * bit) {
        for (std::uint64_t i = base; i < base + bit; ++i) {
            a[out++] = a[i | set];
        }
    }
    dim_ = size / 2;
    slot_of_[qubit_of_slot_[slot]] = -1;
    qubit_of_slot_.erase(qubit_of_slot_.begin() + static_cast<long>(slot));
    for (std::size_t k = slot; k < qubit_of_slot_.size(); ++k) {
        slot_of_[qubit_of_slot_[k]] = static_cast<int>(k);
    }
}

void StateVector::x(Qubit q) {
    const unsigned s = static_cast<unsigned>(make_live(q));
    const std::uint64_t bit = std::uint64_t{1} << s;
    const auto size = dim_;
    Amplitude *a = amps_.data();
    for_each_pair(size, bit, [&](std::uint64_t i0, std::uint64_t i1) {
        std::swap(a[i0], a[i1]);
    });
}

void StateVector::y(Qubit q) {
    const unsigned s = static_cast<unsigned>(make_live(q));
    const std::uint64_t bit = std::uint64_t{1} << s;
    const auto size = dim_;
    Amplitude *a = amps_.data();
    for_each_pair(size, bit, [&](std::uint64_t i0, std::uint64_t i1) {
        const Amplitude a0 = a[i0];
        const Amplitude a1 = a[i1];
        a[i0] = {a1.imag(), -a1.real()};
        a[i1] = {-a0.imag(), a0.real()};
    });
}

void StateVector::z(Qubit q) {
    if (!is_live(q)) {
        return;
    }
    const unsigned s = static_cast<unsigned>(slot_of_[q]);
    const std::uint64_t bit = std::uint64_t{1} << s;
    const auto size = dim_;
    Amplitude *a = amps_.data();
    for_each_pair(size, bit, [&](std::uint64_t, std::uint64_t i1) { a[i1] = -a[i1]; });
}

void StateVector::h(Qubit q) {
    const unsigned s = static_cast<unsigned>(make_live(q));
    const std::uint64_t bit = std::uint64_t{1} << s;
    const auto size = dim_;
    const double r = 1.0 / std::sqrt(2.0);
    Amplitude *a = amps_.data();
    for_each_pair(size, bit, [&](std::uint64_t i0, std::uint64_t i1) {
        const Amplitude a0 = a[i0];
        const Amplitude a1 = a[i1];
        a[i0] = r * (a0 + a1);
        a[i1] = r * (a0 - a1);
    });
}

void StateVector::rz(Qubit q, double theta) {
    const Amplitude lo = std::polar(1.0, -theta / 2);
    if (!is_live(q)) {
        amps_.head(static_cast<Eigen::Index>(dim_)) *= lo;
        return;
    }
    const Amplitude hi = std::polar(1.0, theta / 2);
    const unsigned s = static_cast<unsigned>(slot_of_[q]);
    const std::uint64_t bit = std::uint64_t{1} << s;
    const auto size = dim_;
    Amplitude *a = amps_.data();
    for_each_pair(size, bit, [&](std::uint64_t i0, std::uint64_t i1) {
        a[i0] = mul(a[i0], lo);
        a[i1] = mul(a[i1], hi);
    });
}

void StateVector::ry(Qubit q, double theta) {
    const unsigned s = static_cast<unsigned>(make_live(q));
    const std::uint64_t bit = std::uint64_t{1} << s;
    const auto size = dim_;
    const double c = std::cos(theta / 2);
    const double sn = std::sin(theta / 2);
    Amplitude *a = amps_.data();
    for_each_pair(size, bit, [&](std::uint64_t i0, std::uint64_t i1) {
        const Amplitude a0 = a[i0];
        const Amplitude a1 = a[i1];
        a[i0] = c * a0 - sn * a1;
        a[i1] = sn * a0 + c * a1;
    });
}

void StateVector::rx(Qubit q, double theta) {
    const unsigned s = static_cast<unsigned>(make_live(q));
    const std::uint64_t bit = std::uint64_t{1} << s;
    const auto size = dim_;
    const double c = std::cos(theta / 2);
    const double sn = std::sin(theta / 2);
    Amplitude *a = amps_.data();
    for_each_pair(size, bit, [&](std::uint64_t i0, std::uint64_t i1) {
        const Amplitude a0 = a[i0];
        const Amplitude a1 = a[i1];
        a[i0] = c * a0 + sn * Amplitude(a1.imag(), -a1.real());
        a[i1] = sn * Amplitude(a0.imag(), -a0.real()) + c * a1;
    });
}

void StateVector::cx(Qubit control, Qubit target) {
    if (!is_live(control)) {
        return;
    }
    const unsigned t = static_cast<unsigned>(make_live(target));
    const unsigned c = static_cast<unsigned>(slot_of_[control]);
    const std::uint64_t cbit = std::uint64_t{1} << c;
    const std::uint64_t tbit = std::uint64_t{1} << t;
    const auto size = dim_;
    Amplitude *a = amps_.data();
    for_each_quad(size, std::min(cbit, tbit), std::max(cbit, tbit),
                  [&](std::uint64_t i) { std::swap(a[i | cbit], a[i | cbit | tbit]); });
}

void StateVector::cz(Qubit qa, Qubit qb) {
    if (!is_live(qa) || !is_live(qb)) {
        return;
    }
    const unsigned sa = static_cast<unsigned>(slot_of_[qa]);
    const unsigned sb = static_cast<unsigned>(slot_of_[qb]);
    const std::uint64_t ba = std::uint64_t{1} << sa;
    const std::uint64_t bb = std::uint64_t{1} << sb;
    const auto size = dim_;
    Amplitude *a = amps_.data();
    for_each_quad(size, std::min(ba, bb), std::max(ba, bb), [&](std::uint64_t i) { a[i | ba | bb] = -a[i | ba | bb]; });
}

void StateVector::multi_controlled_x(const std::vector<Qubit> &qubits) {
    std::uint64_t cmask = 0;
    for (std::size_t k = 0; k + 1 < qubits.size(); ++k) {
        if (!is_live(qubits[k])) {
            return;
        }
        cmask |= std::uint64_t{1} << slot_of_[qubits[k]];
    }
    const std::uint64_t tbit = std::uint64_t{1} << make_live(qubits.back());
    Amplitude *a = amps_.data();
    for (std::uint64_t i = 0; i < dim_; ++i) {
        if ((i & cmask) == cmask && !(i & tbit)) {
            std::swap(a[i], a[i | tbit]);
        }
    }
}

void StateVector::multi_controlled_z(const std::vector<Qubit> &qubits) {
    std::uint64_t mask = 0;
    for (Qubit q : qubits) {
        if (!is_live(q)) {
            return;
        }
        mask |= std::uint64_t{1} << slot_of_[q];
    }
    Amplitude *a = amps_.data();
    for (std::uint64_t i = 0; i < dim_; ++i) {
        if ((i & mask) == mask) {
            a[i] = -a[i];
        }
    }
}

void StateVector::pauli(Qubit q, int index) {
    switch (index) {
        case 1:
            x(q);
            break;
        case 2:
            y(q);
            break;
        case 3:
            z(q);
            break;
        default:
            break;
    }
}

double StateVector::probability_one(Qubit q) const {
    if (!is_live(q)) {
        return 0.0;
    }
    const unsigned s = static_cast<unsigned>(slot_of_[q]);
    const std::uint64_t bit = std::uint64_t{1} << s;
    const auto size = dim_;
    const Amplitude *a = amps_.data();
    double p = 0.0;
    for_each_pair(size, bit, [&](std::uint64_t, std::uint64_t i1) { p += std::norm(a[i1]); });
    return p;
}

bool StateVector::measure(Qubit q, double u) {
    if (!is_live(q)) {
        return false;
    }
    const double p1 = probability_one(q);
    bool outcome = u < p1;
    if (outcome && p1 <= 0.0) {
        outcome = false;
    } else if (!outcome && p1 >= 1.0) {
        outcome = true;
    }
    const double keep = outcome ? p1 : 1.0 - p1;
    const double scale = 1.0 / std::sqrt(keep);
    const unsigned s = static_cast<unsigned>(slot_of_[q]);
    const std::uint64_t bit = std::uint64_t{1} << s;
    const auto size = dim_;
    Amplitude *a = amps_.data();
    for_each_pair(size, bit, [&](std::uint64_t i0, std::uint64_t i1) {
        if (outcome) {
            a[i0] = 0.0;
            a[i1] *= scale;
        } else {
            a[i0] *= scale;
            a[i1] = 0.0;
        }
    });
    return outcome;
}

void StateVector::reset(Qubit q, double u) {
    if (!is_live(q)) {
        return;
    }
    const bool outcome = measure(q, u);
    if (compact_) {
        remove_slot(static_cast<std::size_t>(slot_of_[q]), outcome);
    } else if (outcome) {
        x(q);
    }
}

Amplitude StateVector::amplitude(std::uint64_t index) const {
    std::uint64_t local = 0;
    for (Qubit q = 0; q < num_qubits(); ++q) {
        if ((index >> q) & 1U) {
            if (!is_live(q)) {
                return 0.0;
            }
            local |= std::uint64_t{1} << slot_of_[q];
        }
    }
    return amps_(static_cast<Eigen::Index>(local));
}

Eigen::VectorXcd StateVector::to_dense() const {
    const std::uint64_t dim = std::uint64_t{1} << num_qubits();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    for (std::uint64_t local = 0; local < dim_; ++local) {
        std::uint64_t full = 0;
        for (std::size_t s = 0; s < qubit_of_slot_.size(); ++s) {
            full |= ((local >> s) & 1U) << qubit_of_slot_[s];
        }
        out(static_cast<Eigen::Index>(full)) = amps_(static_cast<Eigen::Index>(local));
    }
    return out;
}

Amplitude StateVector::overlap(const Eigen::VectorXcd &phi, const std::vector<Qubit> &placement) const {
    const std::size_t k = placement.size();
    if (static_cast<std::uint64_t>(phi.size()) != (std::uint64_t{1} << k)) {
        throw std::invalid_argument("reference state does not match the placement width");
    }
    std::uint64_t dead_mask = 0;
    std::vector<std::uint64_t> slot_bit(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
        if (placement[j] >= num_qubits()) {
            throw std::out_of_range("placement refers to a qubit outside the register");
        }
        if (is_live(placement[j])) {
            slot_bit[j] = std::uint64_t{1} << slot_of_[placement[j]];
        } else {
            dead_mask |= std::uint64_t{1} << j;
        }
    }
    Amplitude sum = 0.0;
    const Amplitude *a = amps_.data();
    for (std::uint64_t x = 0; x < static_cast<std::uint64_t>(phi.size()); ++x) {
        if (x & dead_mask) {
            continue;
        }
        std::uint64_t local = 0;
        for (std::size_t j = 0; j < k; ++j) {
            if ((x >> j) & 1U) {
                local |= slot_bit[j];
            }
        }
        sum += std::conj(phi(static_cast<Eigen::Index>(x))) * a[local];
    }
    return sum;
}

}  // namespace dqc
