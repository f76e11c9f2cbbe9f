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

#ifndef DQCRCX_CIRCUIT_IO_HPP
#define DQCRCX_CIRCUIT_IO_HPP

#include <iosfwd>
#include <string>

#include "dqcrcx/circuit.hpp"

namespace dqc {

// Line-based circuit text format:
//
//   qubits=<n> clbits=<m>
//   KIND q<i> [q<j> ...] [theta=<float>] [c=<k>]
//
// Blank lines and lines starting with '#' are ignored. Qubit 0 is the least
// significant bit of a basis-state index.

void write_circuit(std::ostream &out, const Circuit &circuit);
std::string to_text(const Circuit &circuit);
std::string to_text(const Instruction &inst);

/// Throws std::invalid_argument with a line number on malformed input.
Circuit read_circuit(std::istream &in);
Circuit parse_circuit(const std::string &text);

Circuit load_circuit(const std::string &path);
void save_circuit(const std::string &path, const Circuit &circuit);

}  // namespace dqc

#endif
