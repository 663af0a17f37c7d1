// A configuration: node states plus the set of active edges over n nodes.
// State counts, degrees and the active-edge count are maintained incrementally
// so stop predicates can gate in O(1).
#pragma once

#include "netcon/graph.hpp"
#include "netcon/protocol.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace netcon {

struct Overrides {
    std::vector<std::pair<std::uint32_t, std::string>> node_states;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> active_edges;
};

class Configuration {
public:
    Configuration() = default;

    Configuration(std::uint32_t n, const Protocol& p) : n_(n) {
        state_.assign(n, p.initial);
        count_.assign(p.size(), 0);
        count_[p.initial] = n;
        degree_.assign(n, 0);
        bits_.assign((pair_count(n) + 63) / 64, 0);
    }

    std::uint32_t n() const { return n_; }
    std::uint64_t active_count() const { return active_; }
    StateId state(std::uint32_t u) const { return state_[u]; }
    std::uint32_t degree(std::uint32_t u) const { return degree_[u]; }
    std::uint32_t count(StateId s) const { return count_[s]; }

    static std::uint64_t pair_count(std::uint32_t n) {
        return static_cast<std::uint64_t>(n) * (n - 1) / 2;
    }

    // canonical index of unordered pair {u,v}
    static std::uint64_t pair_index(std::uint32_t u, std::uint32_t v) {
        if (u > v) std::swap(u, v);
        return static_cast<std::uint64_t>(v) * (v - 1) / 2 + u;
    }

    bool edge(std::uint32_t u, std::uint32_t v) const {
        const auto i = pair_index(u, v);
        return (bits_[i >> 6] >> (i & 63)) & 1;
    }

    void set_state(std::uint32_t u, StateId s) {
        --count_[state_[u]];
        state_[u] = s;
        ++count_[s];
    }

    void set_edge(std::uint32_t u, std::uint32_t v, bool on) {
        const auto i = pair_index(u, v);
        const std::uint64_t mask = 1ULL << (i & 63);
        const bool cur = bits_[i >> 6] & mask;
        if (cur == on) return;
        bits_[i >> 6] ^= mask;
        if (on) {
            ++active_;
            ++degree_[u];
            ++degree_[v];
        } else {
            --active_;
            --degree_[u];
            --degree_[v];
        }
    }

    std::vector<std::pair<std::uint32_t, std::uint32_t>> active_edges() const {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
        out.reserve(active_);
        for (std::uint32_t v = 1; v < n_; ++v)
            for (std::uint32_t u = 0; u < v; ++u)
                if (edge(u, v)) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Configuration& o) const {
        return n_ == o.n_ && state_ == o.state_ && bits_ == o.bits_;
    }

    const std::vector<StateId>& states() const { return state_; }

private:
    std::uint32_t n_ = 0;
    std::vector<StateId> state_;
    std::vector<std::uint32_t> count_;
    std::vector<std::uint32_t> degree_;
    std::vector<std::uint64_t> bits_;
    std::uint64_t active_ = 0;
};

inline Configuration initial_configuration(std::uint32_t n, const Protocol& p,
                                           const Overrides& ov = {}) {
    if (n < 2) throw Error("population size must be at least 2");
    Configuration c(n, p);
    for (const auto& [node, state] : ov.node_states) {
        if (node >= n) throw Error("state override for node " + std::to_string(node) +
                                   " outside population of " + std::to_string(n));
        c.set_state(node, p.state_id(state));
    }
    for (const auto& [u, v] : ov.active_edges) {
        if (u >= n || v >= n || u == v) throw Error("edge override outside population");
        c.set_edge(u, v, true);
    }
    return c;
}

// Active subgraph induced by the nodes in output states.
inline Graph output_graph(const Configuration& c, const Protocol& p) {
    Graph g;
    std::vector<bool> in(c.n(), false);
    for (std::uint32_t u = 0; u < c.n(); ++u)
        if (p.output[c.state(u)]) {
            in[u] = true;
            g.nodes.push_back(u);
        }
    for (std::uint32_t v = 1; v < c.n(); ++v)
        for (std::uint32_t u = 0; u < v; ++u)
            if (in[u] && in[v] && c.edge(u, v)) g.edges.emplace_back(u, v);
    return g;
}

}  // namespace netcon
