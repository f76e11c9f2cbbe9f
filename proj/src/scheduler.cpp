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

#include "dqcrcx/scheduler.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dqcrcx/rng.hpp"

namespace dqc {

InteractionGraph::InteractionGraph(std::size_t num_nodes) : num_nodes_(num_nodes) {
}

void InteractionGraph::add_edge(std::size_t a, std::size_t b, std::size_t weight) {
    if (a == b) {
        throw std::invalid_argument("interaction graph has no self-loops");
    }
    if (a >= num_nodes_ || b >= num_nodes_) {
        throw std::out_of_range("edge endpoint outside graph");
    }
    if (weight == 0) {
        return;
    }
    edges_[{std::min(a, b), std::max(a, b)}] += weight;
}

std::size_t InteractionGraph::weight(std::size_t a, std::size_t b) const {
    auto it = edges_.find({std::min(a, b), std::max(a, b)});
    return it == edges_.end() ? 0 : it->second;
}

std::size_t InteractionGraph::total_weight() const {
    std::size_t total = 0;
    for (const auto &[edge, w] : edges_) {
        total += w;
    }
    return total;
}

NetworkConfig NetworkConfig::uniform(std::size_t num_qpus, std::size_t comp, std::size_t comm) {
    return NetworkConfig{std::vector<QpuSpec>(num_qpus, QpuSpec{comp, comm})};
}

NetworkConfig NetworkConfig::parse(const std::string &text) {
    NetworkConfig net;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            throw std::invalid_argument("network entry '" + item + "' is not comp:comm");
        }
        try {
            std::size_t used_a = 0;
            std::size_t used_b = 0;
            const std::string a = item.substr(0, colon);
            const std::string b = item.substr(colon + 1);
            QpuSpec spec{std::stoul(a, &used_a), std::stoul(b, &used_b)};
            if (used_a != a.size() || used_b != b.size()) {
                throw std::invalid_argument("trailing characters");
            }
            net.qpus.push_back(spec);
        } catch (const std::exception &) {
            throw std::invalid_argument("network entry '" + item + "' is not comp:comm");
        }
    }
    if (net.qpus.empty()) {
        throw std::invalid_argument("network needs at least one QPU");
    }
    return net;
}

std::string NetworkConfig::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < qpus.size(); ++i) {
        if (i) {
            s += ',';
        }
        s += std::to_string(qpus[i].comp_qubits) + ':' + std::to_string(qpus[i].comm_qubits);
    }
    return s;
}

std::size_t NetworkConfig::comp_capacity() const {
    std::size_t total = 0;
    for (const auto &q : qpus) {
        total += q.comp_qubits;
    }
    return total;
}

std::size_t NetworkConfig::total_qubits() const {
    std::size_t total = 0;
    for (const auto &q : qpus) {
        total += q.comp_qubits + q.comm_qubits;
    }
    return total;
}

Assignment Assignment::from_parts(const std::vector<std::size_t> &qpu_of) {
    std::vector<Placement> placements(qpu_of.size());
    std::vector<std::size_t> next_slot;
    for (std::size_t q = 0; q < qpu_of.size(); ++q) {
        if (qpu_of[q] >= next_slot.size()) {
            next_slot.resize(qpu_of[q] + 1, 0);
        }
        placements[q] = {qpu_of[q], next_slot[qpu_of[q]]++};
    }
    return Assignment(std::move(placements));
}

std::vector<std::size_t> Assignment::parts() const {
    std::vector<std::size_t> out(placements_.size());
    for (std::size_t q = 0; q < placements_.size(); ++q) {
        out[q] = placements_[q].qpu;
    }
    return out;
}

void Assignment::validate(const NetworkConfig &net) const {
    std::set<std::pair<std::size_t, std::size_t>> used;
    for (std::size_t q = 0; q < placements_.size(); ++q) {
        const auto &p = placements_[q];
        if (p.qpu >= net.num_qpus()) {
            throw std::invalid_argument("qubit " + std::to_string(q) + " assigned to missing QPU " +
                                        std::to_string(p.qpu));
        }
        if (p.slot >= net.qpus[p.qpu].comp_qubits) {
            throw std::invalid_argument("qubit " + std::to_string(q) + " exceeds the computational capacity of QPU " +
                                        std::to_string(p.qpu));
        }
        if (!used.insert({p.qpu, p.slot}).second) {
            throw std::invalid_argument("two qubits share QPU " + std::to_string(p.qpu) + " slot " +
                                        std::to_string(p.slot));
        }
    }
}

InteractionGraph interaction_graph(const Circuit &circuit) {
    InteractionGraph g(circuit.num_qubits());
    for (const auto &inst : circuit) {
        if (inst.kind == GateKind::CX) {
            g.add_edge(inst.qubits[0], inst.qubits[1]);
        } else if (inst.qubits.size() > 1) {
            throw std::invalid_argument("interaction graph needs a transpiled circuit; found " +
                                        std::string(gate_name(inst.kind)));
        }
    }
    return g;
}

std::vector<std::size_t> fill_sizes(std::size_t num_logical, const NetworkConfig &net) {
    std::vector<std::size_t> sizes;
    std::size_t left = num_logical;
    for (const auto &qpu : net.qpus) {
        const std::size_t take = std::min(left, qpu.comp_qubits);
        sizes.push_back(take);
        left -= take;
    }
    if (left > 0) {
        throw std::invalid_argument(std::to_string(num_logical) + " logical qubits exceed the computational capacity " +
                                    std::to_string(net.comp_capacity()));
    }
    return sizes;
}

Assignment naive_assignment(std::size_t num_logical, const NetworkConfig &net) {
    const auto sizes = fill_sizes(num_logical, net);
    std::vector<std::size_t> qpu_of;
    for (std::size_t k = 0; k < sizes.size(); ++k) {
        qpu_of.insert(qpu_of.end(), sizes[k], k);
    }
    return Assignment::from_parts(qpu_of);
}

std::size_t cut_weight(const InteractionGraph &g, const Assignment &a) {
    if (a.size() < g.num_nodes()) {
        throw std::invalid_argument("assignment does not cover every qubit");
    }
    std::size_t cut = 0;
    for (const auto &[edge, w] : g.edges()) {
        if (a[edge.first].qpu != a[edge.second].qpu) {
            cut += w;
        }
    }
    return cut;
}

namespace {

using WeightMatrix = std::vector<std::vector<long>>;

// Two-way split of `nodes` with exactly `left_size` on the left, starting
// from greedy growth around a random seed node and improved by FM passes.
class Bisector {
   public:
    Bisector(const WeightMatrix &w, std::vector<std::size_t> nodes, std::size_t left_size)
        : w_(w), nodes_(std::move(nodes)), left_size_(left_size), side_(nodes_.size(), 1) {}

    std::pair<std::vector<std::size_t>, std::vector<std::size_t>> run(std::mt19937_64 &rng) {
        grow(rng);
        while (fm_pass()) {
        }
        std::pair<std::vector<std::size_t>, std::vector<std::size_t>> out;
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            (side_[i] == 0 ? out.first : out.second).push_back(nodes_[i]);
        }
        return out;
    }

   private:
    long weight(std::size_t i, std::size_t j) const { return w_[nodes_[i]][nodes_[j]]; }

    long gain(std::size_t i) const {
        long g = 0;
        for (std::size_t j = 0; j < nodes_.size(); ++j) {
            if (j != i) {
                g += side_[j] != side_[i] ? weight(i, j) : -weight(i, j);
            }
        }
        return g;
    }

    long cut() const {
        long c = 0;
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            for (std::size_t j = i + 1; j < nodes_.size(); ++j) {
                if (side_[i] != side_[j]) {
                    c += weight(i, j);
                }
            }
        }
        return c;
    }

    void grow(std::mt19937_64 &rng) {
        if (left_size_ == 0) {
            return;
        }
        side_[uniform_below(rng, nodes_.size())] = 0;
        for (std::size_t count = 1; count < left_size_; ++count) {
            std::size_t best = nodes_.size();
            long best_gain = std::numeric_limits<long>::min();
            for (std::size_t i = 0; i < nodes_.size(); ++i) {
                if (side_[i] == 1) {
                    const long g = gain(i);
                    if (g > best_gain) {
                        best_gain = g;
                        best = i;
                    }
                }
            }
            side_[best] = 0;
        }
    }

    // One Fiduccia-Mattheyses pass under an exact balance constraint: moves
    // alternate so the left side never drifts more than one node from its
    // target, and only exactly balanced prefixes are candidates.
    bool fm_pass() {
        const std::size_t m = nodes_.size();
        std::vector<bool> locked(m, false);
        std::vector<std::size_t> moves;
        std::size_t left_count = left_size_;
        long current = cut();
        const long start = current;
        long best = current;
        std::size_t best_prefix = 0;
        for (std::size_t step = 0; step < m; ++step) {
            std::size_t pick = m;
            long pick_gain = std::numeric_limits<long>::min();
            for (std::size_t i = 0; i < m; ++i) {
                if (locked[i]) {
                    continue;
                }
                const bool from_left = side_[i] == 0;
                if ((left_count > left_size_ && !from_left) || (left_count < left_size_ && from_left)) {
                    continue;
                }
                if ((from_left && left_count == 0) || (!from_left && left_count == m)) {
                    continue;
                }
                const long g = gain(i);
                if (g > pick_gain) {
                    pick_gain = g;
                    pick = i;
                }
            }
            if (pick == m) {
                break;
            }
            left_count += side_[pick] == 0 ? std::size_t(-1) : 1;
            side_[pick] ^= 1;
            locked[pick] = true;
            current -= pick_gain;
            moves.push_back(pick);
            if (left_count == left_size_ && current < best) {
                best = current;
                best_prefix = moves.size();
            }
        }
        for (std::size_t k = moves.size(); k > best_prefix; --k) {
            side_[moves[k - 1]] ^= 1;
        }
        return best < start;
    }

    const WeightMatrix &w_;
    std::vector<std::size_t> nodes_;
    std::size_t left_size_;
    std::vector<int> side_;
};

void recursive_bisect(const WeightMatrix &w, const std::vector<std::size_t> &nodes, std::size_t lo, std::size_t hi,
                      const std::vector<std::size_t> &sizes, std::mt19937_64 &rng, std::vector<std::size_t> &qpu_of) {
    if (nodes.empty()) {
        return;
    }
    if (hi - lo == 1) {
        for (std::size_t v : nodes) {
            qpu_of[v] = lo;
        }
        return;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    const std::size_t left_size = std::accumulate(sizes.begin() + static_cast<long>(lo),
                                                  sizes.begin() + static_cast<long>(mid), std::size_t{0});
    auto [left, right] = Bisector(w, nodes, left_size).run(rng);
    recursive_bisect(w, left, lo, mid, sizes, rng, qpu_of);
    recursive_bisect(w, right, mid, hi, sizes, rng, qpu_of);
}

}  // namespace

Assignment gp_assignment(const InteractionGraph &g, const NetworkConfig &net, std::uint64_t seed,
                         PartitionOptions options) {
    const std::size_t n = g.num_nodes();
    const auto sizes = fill_sizes(n, net);

    WeightMatrix w(n, std::vector<long>(n, 0));
    for (const auto &[edge, weight] : g.edges()) {
        w[edge.first][edge.second] = w[edge.second][edge.first] = static_cast<long>(weight);
    }
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});

    // Candidate 0 is the naive fill; ties keep the lower candidate index.
    Assignment best = naive_assignment(n, net);
    std::size_t best_cut = cut_weight(g, best);
    for (std::size_t r = 0; r < options.restarts; ++r) {
        auto rng = make_stream(seed, r);
        std::vector<std::size_t> qpu_of(n, 0);
        recursive_bisect(w, all, 0, net.num_qpus(), sizes, rng, qpu_of);
        Assignment candidate = Assignment::from_parts(qpu_of);
        const std::size_t c = cut_weight(g, candidate);
        if (c < best_cut) {
            best_cut = c;
            best = std::move(candidate);
        }
    }
    best.validate(net);
    return best;
}

}  // namespace dqc
