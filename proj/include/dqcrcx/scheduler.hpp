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

#ifndef DQCRCX_SCHEDULER_HPP
#define DQCRCX_SCHEDULER_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dqcrcx/circuit.hpp"

namespace dqc {

/// Qubits as nodes, CX gates as edges weighted by their multiplicity.
class InteractionGraph {
   public:
    explicit InteractionGraph(std::size_t num_nodes = 0);

    std::size_t num_nodes() const { return num_nodes_; }
    /// Adds `weight` to the undirected edge {a, b}.
    void add_edge(std::size_t a, std::size_t b, std::size_t weight = 1);
    std::size_t weight(std::size_t a, std::size_t b) const;
    /// Edges keyed by (min, max) endpoint.
    const std::map<std::pair<std::size_t, std::size_t>, std::size_t> &edges() const { return edges_; }
    std::size_t total_weight() const;

   private:
    std::size_t num_nodes_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> edges_;
};

struct QpuSpec {
    std::size_t comp_qubits = 0;
    std::size_t comm_qubits = 0;

    bool operator==(const QpuSpec &) const = default;
};

struct NetworkConfig {
    std::vector<QpuSpec> qpus;

    static NetworkConfig uniform(std::size_t num_qpus, std::size_t comp, std::size_t comm);
    /// Parses "comp:comm,comp:comm,...".
    static NetworkConfig parse(const std::string &text);
    std::string to_string() const;

    std::size_t num_qpus() const { return qpus.size(); }
    std::size_t comp_capacity() const;
    std::size_t total_qubits() const;

    bool operator==(const NetworkConfig &) const = default;
};

struct Placement {
    std::size_t qpu = 0;
    std::size_t slot = 0;

    bool operator==(const Placement &) const = default;
};

/// Logical qubit -> (QPU, computational slot).
class Assignment {
   public:
    Assignment() = default;
    explicit Assignment(std::vector<Placement> placements) : placements_(std::move(placements)) {}

    /// Builds an assignment from per-qubit QPU labels; slots are handed out in
    /// increasing qubit order within each QPU.
    static Assignment from_parts(const std::vector<std::size_t> &qpu_of);

    std::size_t size() const { return placements_.size(); }
    const Placement &operator[](std::size_t q) const { return placements_[q]; }
    const std::vector<Placement> &placements() const { return placements_; }
    std::vector<std::size_t> parts() const;

    /// Throws std::invalid_argument unless the assignment is injective and
    /// within the capacities of `net`.
    void validate(const NetworkConfig &net) const;

    bool operator==(const Assignment &) const = default;

   private:
    std::vector<Placement> placements_;
};

/// Edge weights count CX gates between each pair, either direction. Throws
/// for any other multi-qubit gate.
InteractionGraph interaction_graph(const Circuit &circuit);

/// Fills QPU 0 first, then QPU 1, and so on, in qubit order.
Assignment naive_assignment(std::size_t num_logical, const NetworkConfig &net);

struct PartitionOptions {
    std::size_t restarts = 8;
};

/// Capacity-exact k-way partition minimising the cut weight: recursive
/// bisection from seeded greedy growth, refined by Fiduccia-Mattheyses passes,
/// best of `restarts` runs. The naive assignment is always a candidate, so the
/// result never cuts more weight than it. Part sizes follow the naive fill.
Assignment gp_assignment(const InteractionGraph &g, const NetworkConfig &net, std::uint64_t seed,
                         PartitionOptions options = {});

/// Total weight of edges whose endpoints sit on different QPUs.
std::size_t cut_weight(const InteractionGraph &g, const Assignment &a);

/// Per-QPU target sizes used by both schedules.
std::vector<std::size_t> fill_sizes(std::size_t num_logical, const NetworkConfig &net);

}  // namespace dqc

#endif
