// Exhaustive Markov-chain analysis at tiny n: reachable configurations under
// the uniform scheduler, closed-class stability verdicts, and exact expected
// hitting times (direct sparse solve, iterative fallback for large chains).
#pragma once

#include "netcon/configuration.hpp"
#include "netcon/engine.hpp"
#include "netcon/protocol.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <deque>
#include <functional>
#include <optional>
#include <ostream>
#include <unordered_map>
#include <vector>

namespace netcon {

inline constexpr std::uint32_t kOracleMaxNodes = 8;

struct PackedConfig {
    std::array<std::uint8_t, kOracleMaxNodes> st{};
    std::uint32_t edges = 0;
    std::uint8_t n = 0;

    bool operator==(const PackedConfig&) const = default;
};

struct PackedConfigHash {
    std::size_t operator()(const PackedConfig& c) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        auto mix = [&h](std::uint64_t x) {
            h ^= x;
            h *= 0x100000001b3ULL;
            h ^= h >> 29;
        };
        std::uint64_t s = 0;
        for (std::uint32_t i = 0; i < c.n; ++i) s = s << 8 | c.st[i];
        mix(s);
        mix(c.edges);
        return static_cast<std::size_t>(h);
    }
};

struct ReachabilityChain {
    const Protocol* protocol = nullptr;
    std::uint32_t n = 0;
    std::vector<PackedConfig> configs;
    // row-stochastic sparse transitions, aggregated per successor
    std::vector<std::vector<std::pair<std::uint32_t, double>>> succ;
    std::uint32_t initial = 0;

    std::size_t size() const { return configs.size(); }
};

inline PackedConfig pack(const Configuration& c) {
    if (c.n() > kOracleMaxNodes) throw Error("oracle configurations limited to 8 nodes");
    PackedConfig out;
    out.n = static_cast<std::uint8_t>(c.n());
    for (std::uint32_t u = 0; u < c.n(); ++u)
        out.st[u] = static_cast<std::uint8_t>(c.state(u));
    for (std::uint32_t v = 1; v < c.n(); ++v)
        for (std::uint32_t u = 0; u < v; ++u)
            if (c.edge(u, v)) out.edges |= 1u << Configuration::pair_index(u, v);
    return out;
}

inline Configuration unpack(const PackedConfig& pc, const Protocol& p) {
    Configuration c(pc.n, p);
    for (std::uint32_t u = 0; u < pc.n; ++u) c.set_state(u, pc.st[u]);
    for (std::uint32_t v = 1; v < pc.n; ++v)
        for (std::uint32_t u = 0; u < v; ++u)
            if (pc.edges >> Configuration::pair_index(u, v) & 1) c.set_edge(u, v, true);
    return c;
}

struct EnumerateOptions {
    std::uint32_t node_bound = 4;         // refuse larger populations
    std::size_t state_bound = 5'000'000;  // abort when the space explodes
};

inline ReachabilityChain enumerate_reachable(const Protocol& p, std::uint32_t n,
                                             const Overrides& ov = {},
                                             const EnumerateOptions& opts = {}) {
    if (n > opts.node_bound)
        throw Error("population " + std::to_string(n) + " above the oracle bound of " +
                    std::to_string(opts.node_bound));
    ReachabilityChain chain;
    chain.protocol = &p;
    chain.n = n;
    chain.initial = 0;

    const double pair_prob = 1.0 / static_cast<double>(Configuration::pair_count(n));
    std::unordered_map<PackedConfig, std::uint32_t, PackedConfigHash> index;
    std::deque<std::uint32_t> work;

    auto intern = [&](const PackedConfig& pc) {
        auto [it, fresh] = index.emplace(pc, static_cast<std::uint32_t>(chain.configs.size()));
        if (fresh) {
            if (chain.configs.size() >= opts.state_bound)
                throw Error("reachable-configuration bound exceeded after " +
                            std::to_string(chain.configs.size()) + " states");
            chain.configs.push_back(pc);
            chain.succ.emplace_back();
            work.push_back(it->second);
        }
        return it->second;
    };

    intern(pack(initial_configuration(n, p, ov)));

    std::vector<std::pair<std::uint32_t, double>> row;
    while (!work.empty()) {
        const std::uint32_t idx = work.front();
        work.pop_front();
        row.clear();
        auto add = [&](const PackedConfig& pc, double prob) {
            const std::uint32_t j = intern(pc);
            for (auto& e : row)
                if (e.first == j) {
                    e.second += prob;
                    return;
                }
            row.emplace_back(j, prob);
        };

        const PackedConfig cur = chain.configs[idx];  // copy: intern may reallocate
        for (std::uint32_t v = 1; v < n; ++v)
            for (std::uint32_t u = 0; u < v; ++u) {
                const auto ei = Configuration::pair_index(u, v);
                const int ec = cur.edges >> ei & 1;
                const auto m = p.lookup(cur.st[u], cur.st[v], ec);
                if (!m.rule || !m.effective) {
                    add(cur, pair_prob);
                    continue;
                }
                for (const auto& br : m.rule->branches) {
                    const double bp = pair_prob * br.weight.value();
                    auto emit = [&](StateId su, StateId sv, int e2, double prob) {
                        PackedConfig next = cur;
                        next.st[u] = static_cast<std::uint8_t>(su);
                        next.st[v] = static_cast<std::uint8_t>(sv);
                        if (e2) next.edges |= 1u << ei;
                        else next.edges &= ~(1u << ei);
                        add(next, prob);
                    };
                    StateId first = br.out.a, second = br.out.b;
                    if (m.rule->a == m.rule->b && first != second) {
                        emit(first, second, br.out.edge, bp / 2);
                        emit(second, first, br.out.edge, bp / 2);
                    } else if (m.swapped) {
                        emit(second, first, br.out.edge, bp);
                    } else {
                        emit(first, second, br.out.edge, bp);
                    }
                }
            }
        chain.succ[idx] = row;
    }
    return chain;
}

struct ClosedClassInfo {
    std::uint32_t representative = 0;
    std::size_t size = 0;
    bool constant_output = false;
    bool target_ok = false;
    Graph output;
};

struct StabilityVerdict {
    bool pass = false;
    std::vector<ClosedClassInfo> classes;
    std::vector<Configuration> counterexample;  // shortest path into a bad class
};

namespace chain_detail {

// Iterative Tarjan; SCC ids are assigned in reverse topological order.
inline std::vector<std::uint32_t> scc_ids(const ReachabilityChain& chain,
                                          std::uint32_t& scc_count) {
    const std::size_t n = chain.size();
    std::vector<std::uint32_t> idx(n, 0), low(n, 0), comp(n, UINT32_MAX);
    std::vector<bool> on_stack(n, false);
    std::vector<std::uint32_t> stack;
    std::uint32_t counter = 1, comps = 0;

    struct Frame {
        std::uint32_t v;
        std::size_t child;
    };
    std::vector<Frame> frames;
    for (std::uint32_t root = 0; root < n; ++root) {
        if (idx[root]) continue;
        frames.push_back({root, 0});
        idx[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& fr = frames.back();
            const std::uint32_t v = fr.v;
            if (fr.child < chain.succ[v].size()) {
                const std::uint32_t w = chain.succ[v][fr.child++].first;
                if (!idx[w]) {
                    idx[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], idx[w]);
                }
                continue;
            }
            if (low[v] == idx[v]) {
                while (true) {
                    const std::uint32_t w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = comps;
                    if (w == v) break;
                }
                ++comps;
            }
            frames.pop_back();
            if (!frames.empty()) {
                const std::uint32_t parent = frames.back().v;
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }
    scc_count = comps;
    return comp;
}

struct OutputMask {
    std::uint8_t nodes = 0;
    std::uint32_t edges = 0;
    bool operator==(const OutputMask&) const = default;
};

inline OutputMask output_mask(const PackedConfig& c, const Protocol& p) {
    OutputMask m;
    for (std::uint32_t u = 0; u < c.n; ++u)
        if (p.output[c.st[u]]) m.nodes |= 1u << u;
    for (std::uint32_t v = 1; v < c.n; ++v)
        for (std::uint32_t u = 0; u < v; ++u) {
            const auto ei = Configuration::pair_index(u, v);
            if ((c.edges >> ei & 1) && (m.nodes >> u & 1) && (m.nodes >> v & 1))
                m.edges |= 1u << ei;
        }
    return m;
}

}  // namespace chain_detail

inline StabilityVerdict verify_stabilization(
    const ReachabilityChain& chain,
    const std::function<bool(const Graph&)>& target = {}) {
    const Protocol& p = *chain.protocol;
    std::uint32_t comps = 0;
    const auto comp = chain_detail::scc_ids(chain, comps);

    std::vector<bool> closed(comps, true);
    for (std::uint32_t v = 0; v < chain.size(); ++v)
        for (const auto& [w, prob] : chain.succ[v])
            if (comp[w] != comp[v]) closed[comp[v]] = false;

    // collect members per closed class
    std::vector<std::vector<std::uint32_t>> members(comps);
    for (std::uint32_t v = 0; v < chain.size(); ++v)
        if (closed[comp[v]]) members[comp[v]].push_back(v);

    StabilityVerdict verdict;
    verdict.pass = true;
    std::vector<bool> bad_class(comps, false);
    for (std::uint32_t c = 0; c < comps; ++c) {
        if (!closed[c] || members[c].empty()) continue;
        ClosedClassInfo info;
        info.representative = members[c].front();
        info.size = members[c].size();
        const auto mask0 = chain_detail::output_mask(chain.configs[info.representative], p);
        info.constant_output = true;
        for (const std::uint32_t v : members[c])
            if (!(chain_detail::output_mask(chain.configs[v], p) == mask0)) {
                info.constant_output = false;
                break;
            }
        info.output = output_graph(unpack(chain.configs[info.representative], p), p);
        info.target_ok = info.constant_output && (!target || target(info.output));
        if (!info.target_ok) {
            verdict.pass = false;
            bad_class[c] = true;
        }
        verdict.classes.push_back(info);
    }

    if (!verdict.pass) {
        // shortest path from the initial configuration into any bad class
        std::vector<std::int64_t> parent(chain.size(), -2);
        std::deque<std::uint32_t> q{chain.initial};
        parent[chain.initial] = -1;
        std::int64_t hit = -1;
        while (!q.empty() && hit < 0) {
            const auto v = q.front();
            q.pop_front();
            if (closed[comp[v]] && bad_class[comp[v]]) {
                hit = v;
                break;
            }
            for (const auto& [w, prob] : chain.succ[v])
                if (parent[w] == -2) {
                    parent[w] = v;
                    q.push_back(w);
                }
        }
        for (std::int64_t v = hit; v >= 0; v = parent[static_cast<std::size_t>(v)])
            verdict.counterexample.push_back(unpack(chain.configs[static_cast<std::size_t>(v)], p));
        std::reverse(verdict.counterexample.begin(), verdict.counterexample.end());
    }
    return verdict;
}

// For every configuration, whether all configurations reachable from it have
// the same output graph (true output-stability, used to audit checkers).
inline std::vector<bool> output_stable_flags(const ReachabilityChain& chain) {
    const Protocol& p = *chain.protocol;
    std::uint32_t comps = 0;
    const auto comp = chain_detail::scc_ids(chain, comps);
    // Tarjan order: successors of an SCC always carry smaller ids
    std::vector<bool> constant(comps, true);
    std::vector<chain_detail::OutputMask> mask(comps);
    std::vector<bool> seen(comps, false);
    for (std::uint32_t v = 0; v < chain.size(); ++v) {
        const auto m = chain_detail::output_mask(chain.configs[v], p);
        if (!seen[comp[v]]) {
            seen[comp[v]] = true;
            mask[comp[v]] = m;
        } else if (!(mask[comp[v]] == m)) {
            constant[comp[v]] = false;
        }
    }
    for (std::uint32_t c = 0; c < comps; ++c) seen[c] = false;
    // process SCC ids ascending = reverse topological order
    std::vector<std::vector<std::uint32_t>> scc_edges(comps);
    for (std::uint32_t v = 0; v < chain.size(); ++v)
        for (const auto& [w, prob] : chain.succ[v])
            if (comp[w] != comp[v]) scc_edges[comp[v]].push_back(comp[w]);
    for (std::uint32_t c = 0; c < comps; ++c) {
        for (const auto d : scc_edges[c]) {
            if (!constant[d] || !(mask[d] == mask[c])) constant[c] = false;
        }
    }
    std::vector<bool> out(chain.size());
    for (std::uint32_t v = 0; v < chain.size(); ++v) out[v] = constant[comp[v]];
    return out;
}

// Expected steps from the initial configuration into the absorbing set,
// solving E = 1 + P.E with E = 0 on absorbing configurations.
inline double expected_hitting_time(const ReachabilityChain& chain,
                                    const std::function<bool(const Configuration&)>& absorbing,
                                    double residual_tol = 1e-10) {
    const Protocol& p = *chain.protocol;
    const std::size_t n = chain.size();
    std::vector<bool> absorb(n, false);
    for (std::size_t v = 0; v < n; ++v)
        absorb[v] = absorbing(unpack(chain.configs[v], p));
    if (absorb[chain.initial]) return 0.0;

    // every transient configuration must reach the absorbing set
    {
        std::vector<std::vector<std::uint32_t>> rev(n);
        for (std::uint32_t v = 0; v < n; ++v)
            for (const auto& [w, prob] : chain.succ[v])
                if (w != v) rev[w].push_back(v);
        std::vector<bool> reaches(n, false);
        std::deque<std::uint32_t> q;
        for (std::uint32_t v = 0; v < n; ++v)
            if (absorb[v]) {
                reaches[v] = true;
                q.push_back(v);
            }
        if (q.empty()) throw Error("absorbing set is empty");
        while (!q.empty()) {
            const auto v = q.front();
            q.pop_front();
            for (const auto w : rev[v])
                if (!reaches[w]) {
                    reaches[w] = true;
                    q.push_back(w);
                }
        }
        for (std::uint32_t v = 0; v < n; ++v)
            if (!reaches[v])
                throw Error("absorbing set unreachable from configuration " + std::to_string(v));
    }

    std::vector<std::int32_t> tid(n, -1);
    std::vector<std::uint32_t> transient;
    for (std::uint32_t v = 0; v < n; ++v)
        if (!absorb[v]) {
            tid[v] = static_cast<std::int32_t>(transient.size());
            transient.push_back(v);
        }
    const std::size_t t = transient.size();

    if (t <= 20'000) {
        Eigen::SparseMatrix<double> A(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(t));
        std::vector<Eigen::Triplet<double>> trips;
        for (std::size_t i = 0; i < t; ++i) {
            double diag = 1.0;
            for (const auto& [w, prob] : chain.succ[transient[i]]) {
                if (absorb[w]) continue;
                if (w == transient[i]) diag -= prob;
                else trips.emplace_back(static_cast<int>(i), tid[w], -prob);
            }
            trips.emplace_back(static_cast<int>(i), static_cast<int>(i), diag);
        }
        A.setFromTriplets(trips.begin(), trips.end());
        Eigen::VectorXd b = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(t));
        Eigen::SparseLU<Eigen::SparseMatrix<double>> solver;
        solver.analyzePattern(A);
        solver.factorize(A);
        if (solver.info() != Eigen::Success)
            throw Error("hitting-time system is singular");
        Eigen::VectorXd x = solver.solve(b);
        if (solver.info() != Eigen::Success)
            throw Error("hitting-time solve failed");
        return x[tid[chain.initial]];
    }

    // Gauss-Seidel sweeps, deterministic order.
    std::vector<double> x(t, 0.0);
    for (std::size_t iter = 0; iter < 2'000'000; ++iter) {
        double max_res = 0.0;
        for (std::size_t i = 0; i < t; ++i) {
            double self = 0.0, rhs = 1.0;
            for (const auto& [w, prob] : chain.succ[transient[i]]) {
                if (absorb[w]) continue;
                if (w == transient[i]) self += prob;
                else rhs += prob * x[tid[w]];
            }
            if (self >= 1.0) throw Error("hitting-time system is singular");
            const double nx = rhs / (1.0 - self);
            max_res = std::max(max_res, std::abs(nx - x[i]));
            x[i] = nx;
        }
        if (max_res < residual_tol) return x[tid[chain.initial]];
    }
    throw Error("hitting-time iteration did not converge");
}

// Diagnostic dump: `index : node-states : active-edges : successors`.
inline void dump_chain(std::ostream& out, const ReachabilityChain& chain) {
    const Protocol& p = *chain.protocol;
    char buf[64];
    for (std::uint32_t i = 0; i < chain.size(); ++i) {
        const auto& c = chain.configs[i];
        out << i << " : ";
        for (std::uint32_t u = 0; u < c.n; ++u) {
            if (u) out << ",";
            out << p.state_name(c.st[u]);
        }
        out << " : ";
        bool any = false;
        for (std::uint32_t v = 1; v < c.n; ++v)
            for (std::uint32_t u = 0; u < v; ++u)
                if (c.edges >> Configuration::pair_index(u, v) & 1) {
                    if (any) out << " ";
                    out << u << "-" << v;
                    any = true;
                }
        if (!any) out << "-";
        out << " :";
        for (const auto& [w, prob] : chain.succ[i]) {
            std::snprintf(buf, sizeof buf, "%.12g", prob);
            out << " " << w << "@" << buf;
        }
        out << "\n";
    }
}

}  // namespace netcon
