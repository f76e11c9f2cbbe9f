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

#include "dqcrcx/circuit_io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace dqc {

namespace {

std::string format_double(double value) {
    std::ostringstream os;
    os << std::setprecision(17) << value;
    return os.str();
}

template <typename T>
T parse_unsigned(std::string_view token, std::size_t line_no) {
    T value{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": bad integer '" + std::string(token) + "'");
    }
    return value;
}

double parse_double(std::string_view token, std::size_t line_no) {
    try {
        std::size_t used = 0;
        double value = std::stod(std::string(token), &used);
        if (used != token.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return value;
    } catch (const std::exception &) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": bad angle '" + std::string(token) + "'");
    }
}

}  // namespace

std::string to_text(const Instruction &inst) {
    std::string line(gate_name(inst.kind));
    for (Qubit q : inst.qubits) {
        line += " q" + std::to_string(q);
    }
    if (is_parametric(inst.kind)) {
        line += " theta=" + format_double(inst.theta);
    }
    if (inst.clbit) {
        line += " c=" + std::to_string(*inst.clbit);
    }
    return line;
}

void write_circuit(std::ostream &out, const Circuit &circuit) {
    out << "qubits=" << circuit.num_qubits() << " clbits=" << circuit.num_clbits() << '\n';
    for (const auto &inst : circuit) {
        out << to_text(inst) << '\n';
    }
}

std::string to_text(const Circuit &circuit) {
    std::ostringstream os;
    write_circuit(os, circuit);
    return os.str();
}

Circuit read_circuit(std::istream &in) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<Circuit> circuit;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream tokens(line);
        std::string first;
        if (!(tokens >> first)) {
            continue;
        }
        if (!circuit) {
            std::string second;
            tokens >> second;
            if (first.rfind("qubits=", 0) != 0 || second.rfind("clbits=", 0) != 0) {
                throw std::invalid_argument("line " + std::to_string(line_no) +
                                            ": expected header 'qubits=<n> clbits=<m>'");
            }
            circuit.emplace(parse_unsigned<std::size_t>(std::string_view(first).substr(7), line_no),
                            parse_unsigned<std::size_t>(std::string_view(second).substr(7), line_no));
            continue;
        }
        auto kind = gate_from_name(first);
        if (!kind) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": unknown gate '" + first + "'");
        }
        Instruction inst;
        inst.kind = *kind;
        std::string token;
        while (tokens >> token) {
            std::string_view tv(token);
            if (tv.size() > 1 && tv[0] == 'q') {
                inst.qubits.push_back(parse_unsigned<Qubit>(tv.substr(1), line_no));
            } else if (tv.rfind("theta=", 0) == 0) {
                inst.theta = parse_double(tv.substr(6), line_no);
            } else if (tv.rfind("c=", 0) == 0) {
                inst.clbit = parse_unsigned<Clbit>(tv.substr(2), line_no);
            } else {
                throw std::invalid_argument("line " + std::to_string(line_no) + ": unexpected token '" + token + "'");
            }
        }
        try {
            circuit->append(std::move(inst));
        } catch (const std::exception &e) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!circuit) {
        throw std::invalid_argument("missing circuit header");
    }
    return std::move(*circuit);
}

Circuit parse_circuit(const std::string &text) {
    std::istringstream in(text);
    return read_circuit(in);
}

Circuit load_circuit(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open circuit file " + path);
    }
    return read_circuit(in);
}

void save_circuit(const std::string &path, const Circuit &circuit) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write circuit file " + path);
    }
    write_circuit(out, circuit);
}

}  // namespace dqc
