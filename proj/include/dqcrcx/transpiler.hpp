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

#ifndef DQCRCX_TRANSPILER_HPP
#define DQCRCX_TRANSPILER_HPP

#include <Eigen/Dense>
#include <iosfwd>
#include <vector>

#include "dqcrcx/circuit.hpp"

namespace dqc {

/// Gate histograms before and after rewriting into {X, RZ, H, CX}.
struct BasisReport {
    std::vector<std::size_t> input_histogram;
    std::vector<std::size_t> output_histogram;
    /// Set when the unitary equivalence check ran (unitary circuits of at
    /// most kMaxVerifyQubits qubits); `max_deviation` holds its result.
    bool verified = false;
    double max_deviation = 0.0;
};

inline constexpr std::size_t kMaxVerifyQubits = 6;

/// Rewrites every gate into X, RZ, H and CX. Measure, Reset and the
/// conditional gates pass through. The unitary is preserved up to global
/// phase; no cancellation or fusion is performed.
Circuit transpile(const Circuit &circuit);
Circuit transpile(const Circuit &circuit, BasisReport &report);

/// Appends the basis decomposition of one instruction.
void decompose_into(Circuit &out, const Instruction &inst);

/// Dense unitary of a measurement-free circuit; column j is the image of
/// basis state j. Limited to kMaxVerifyQubits qubits.
Eigen::MatrixXcd circuit_unitary(const Circuit &circuit);

/// Max entrywise |A - e^{i phi} B| minimised over the global phase phi.
double verify_unitary(const Circuit &a, const Circuit &b);

void write_report(std::ostream &out, const BasisReport &report);

}  // namespace dqc

#endif
