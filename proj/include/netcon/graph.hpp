// Output graphs and the target predicates used as stop conditions and
// correctness verdicts, plus small-graph isomorphism.
#pragma once

#include "netcon/core.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

namespace netcon {

struct Graph {
    std::vector<std::uint32_t> nodes;                          // subset of 0..n-1
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // u < v, within nodes

    std::size_t order() const { return nodes.size(); }
};

namespace detail {

struct AdjView {
    explicit AdjView(const Graph& g) {
        std::uint32_t maxid = 0;
        for (auto v : g.nodes) maxid = std::max(maxid, v);
        for (auto [u, v] : g.edges) maxid = std::max({maxid, u, v});
        degree.assign(maxid + 1, 0);
        adj.assign(maxid + 1, {});
        present.assign(maxid + 1, false);
        for (auto v : g.nodes) present[v] = true;
        for (auto [u, v] : g.edges) {
            if (u == v) throw Error("graph has a self-loop");
            if (u >= present.size() || v >= present.size() || !present[u] || !present[v])
                throw Error("graph edge references unlisted node");
            ++degree[u];
            ++degree[v];
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
    }

    // Number of nodes reachable from `start` over edges.
    std::size_t component_size(std::uint32_t start) const {
        std::vector<std::uint32_t> stack{start};
        std::vector<bool> seen(adj.size(), false);
        seen[start] = true;
        std::size_t cnt = 0;
        while (!stack.empty()) {
            const auto u = stack.back();
            stack.pop_back();
            ++cnt;
            for (auto w : adj[u])
                if (!seen[w]) { seen[w] = true; stack.push_back(w); }
        }
        return cnt;
    }

    std::vector<std::uint32_t> degree;
    std::vector<std::vector<std::uint32_t>> adj;
    std::vector<bool> present;
};

inline bool spans(const Graph& g, std::uint32_t n) {
    if (g.nodes.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (auto v : g.nodes) {
        if (v >= n || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

inline bool connected(const AdjView& a, const Graph& g) {
    if (g.nodes.empty()) return true;
    return a.component_size(g.nodes.front()) == g.nodes.size();
}

}  // namespace detail

// Connected, 2 nodes of degree 1, n-2 of degree 2 (n=2: the single edge).
inline bool is_spanning_line(const Graph& g, std::uint32_t n) {
    if (n < 2 || !detail::spans(g, n)) return false;
    if (g.edges.size() != n - 1) return false;
    detail::AdjView a(g);
    std::uint32_t deg1 = 0;
    for (auto v : g.nodes) {
        if (a.degree[v] == 1) ++deg1;
        else if (a.degree[v] != 2) return false;
    }
    return deg1 == 2 && detail::connected(a, g);
}

inline bool is_spanning_ring(const Graph& g, std::uint32_t n) {
    if (n < 3 || !detail::spans(g, n)) return false;
    if (g.edges.size() != n) return false;
    detail::AdjView a(g);
    for (auto v : g.nodes)
        if (a.degree[v] != 2) return false;
    return detail::connected(a, g);
}

inline bool is_spanning_star(const Graph& g, std::uint32_t n) {
    if (n < 2 || !detail::spans(g, n)) return false;
    if (g.edges.size() != n - 1) return false;
    detail::AdjView a(g);
    std::uint32_t centers = 0;
    for (auto v : g.nodes) {
        if (a.degree[v] == n - 1) ++centers;
        else if (a.degree[v] != 1) return false;
    }
    return n == 2 ? centers == 2 : centers == 1;
}

// Node-disjoint cycles covering all but at most `waste` nodes; the leftovers
// are either isolated or one pair joined by a single edge.
inline bool is_cycle_cover(const Graph& g, std::uint32_t n, std::uint32_t waste) {
    if (waste != 0 && waste != 2) throw Error("cycle-cover waste must be 0 or 2");
    if (!detail::spans(g, n)) return false;
    detail::AdjView a(g);
    std::vector<bool> seen(n, false);
    std::uint32_t leftover = 0;
    for (auto v : g.nodes) {
        if (seen[v]) continue;
        // walk the component of v
        std::vector<std::uint32_t> comp{v};
        seen[v] = true;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (auto w : a.adj[comp[i]])
                if (!seen[w]) { seen[w] = true; comp.push_back(w); }
        std::size_t ecount = 0;
        bool all2 = true;
        for (auto u : comp) {
            ecount += a.degree[u];
            if (a.degree[u] != 2) all2 = false;
        }
        ecount /= 2;
        if (all2 && ecount == comp.size() && comp.size() >= 3) continue;  // a cycle
        if (comp.size() == 1 && ecount == 0) { leftover += 1; continue; }
        if (comp.size() == 2 && ecount == 1) { leftover += 2; continue; }
        return false;
    }
    return leftover <= waste;
}

// Connected and spanning; >= n-k+1 nodes of degree k, the remaining l <= k-1
// nodes each of degree in [l-1, k-1].
inline bool is_k_regular_relaxed(const Graph& g, std::uint32_t n, std::uint32_t k) {
    if (!detail::spans(g, n)) return false;
    detail::AdjView a(g);
    std::vector<std::uint32_t> deficient;
    for (auto v : g.nodes) {
        if (a.degree[v] == k) continue;
        deficient.push_back(v);
    }
    const std::size_t l = deficient.size();
    if (l > k - 1) return false;
    for (auto v : deficient) {
        if (a.degree[v] > k - 1) return false;
        if (l >= 1 && a.degree[v] + 1 < l) return false;  // degree >= l-1
    }
    return detail::connected(a, g);
}

// Exactly floor(n/c) components that are c-cliques; the n mod c leftover nodes
// have no edges to covered nodes. With `strict`, leftovers must additionally
// be isolated or form a single star.
inline bool is_clique_partition(const Graph& g, std::uint32_t n, std::uint32_t c,
                                bool strict = false) {
    if (c < 2) throw Error("clique order must be >= 2");
    if (!detail::spans(g, n)) return false;
    detail::AdjView a(g);
    std::vector<bool> seen(n, false);
    std::uint32_t cliques = 0;
    std::vector<std::vector<std::uint32_t>> leftover_comps;
    for (auto v : g.nodes) {
        if (seen[v]) continue;
        std::vector<std::uint32_t> comp{v};
        seen[v] = true;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (auto w : a.adj[comp[i]])
                if (!seen[w]) { seen[w] = true; comp.push_back(w); }
        std::size_t ecount = 0;
        for (auto u : comp) ecount += a.degree[u];
        ecount /= 2;
        if (comp.size() == c && ecount == c * (c - 1) / 2) { ++cliques; continue; }
        leftover_comps.push_back(comp);
    }
    if (cliques != n / c) return false;
    std::size_t leftover_nodes = 0;
    for (const auto& comp : leftover_comps) leftover_nodes += comp.size();
    if (leftover_nodes != n % c) return false;
    if (strict) {
        if (leftover_comps.size() > 1) {
            for (const auto& comp : leftover_comps)
                if (comp.size() != 1) return false;
        } else if (leftover_comps.size() == 1) {
            const auto& comp = leftover_comps.front();
            std::uint32_t hubs = 0;
            for (auto u : comp) {
                if (a.degree[u] == comp.size() - 1) ++hubs;
                else if (a.degree[u] != 1 && comp.size() > 1) return false;
            }
            if (comp.size() > 1 && hubs == 0) return false;
        }
    }
    return true;
}

inline bool is_maximum_matching(const Graph& g, std::uint32_t n) {
    if (g.edges.size() != n / 2) return false;
    detail::AdjView a(g);
    for (auto v : g.nodes)
        if (a.degree[v] > 1) return false;
    return true;
}

// All active edges incident to one node, which has degree `deg`.
inline bool is_degree_star(const Graph& g, std::uint32_t deg) {
    if (g.edges.size() != deg) return false;
    if (deg == 0) return true;
    detail::AdjView a(g);
    std::uint32_t center = g.edges.front().first;
    if (a.degree[center] != deg) center = g.edges.front().second;
    if (a.degree[center] != deg) return false;
    for (auto [u, v] : g.edges)
        if (u != center && v != center) return false;
    return true;
}

// Backtracking isomorphism for graphs of at most 64 nodes, pruned by degree
// sequence and neighbourhood-degree multisets.
inline bool graphs_isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.nodes.size() > 64 || g2.nodes.size() > 64)
        throw Error("isomorphism test limited to 64 nodes");
    if (g1.nodes.size() != g2.nodes.size() || g1.edges.size() != g2.edges.size()) return false;
    const std::size_t n = g1.nodes.size();
    if (n == 0) return true;

    // relabel to 0..n-1
    auto compact = [](const Graph& g) {
        std::map<std::uint32_t, int> id;
        for (auto v : g.nodes) id.emplace(v, static_cast<int>(id.size()));
        std::vector<std::uint64_t> adj(g.nodes.size(), 0);
        for (auto [u, v] : g.edges) {
            adj[id.at(u)] |= 1ULL << id.at(v);
            adj[id.at(v)] |= 1ULL << id.at(u);
        }
        return adj;
    };
    const auto a1 = compact(g1);
    const auto a2 = compact(g2);

    auto degrees = [n](const std::vector<std::uint64_t>& adj) {
        std::vector<int> d(n);
        for (std::size_t i = 0; i < n; ++i) d[i] = std::popcount(adj[i]);
        return d;
    };
    const auto d1 = degrees(a1);
    const auto d2 = degrees(a2);
    {
        auto s1 = d1, s2 = d2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return false;
    }
    auto nbr_profile = [n](const std::vector<std::uint64_t>& adj, const std::vector<int>& d) {
        std::vector<std::vector<int>> p(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                if (adj[i] >> j & 1) p[i].push_back(d[j]);
            std::sort(p[i].begin(), p[i].end());
        }
        return p;
    };
    const auto p1 = nbr_profile(a1, d1);
    const auto p2 = nbr_profile(a2, d2);

    // map g1 nodes in decreasing-degree order
    std::vector<int> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return d1[x] > d1[y]; });

    std::vector<int> map1(n, -1);
    std::uint64_t used = 0;

    auto consistent = [&](int u, int v) {
        if (d1[u] != d2[v] || p1[u] != p2[v]) return false;
        for (std::size_t w = 0; w < n; ++w) {
            const int mw = map1[w];
            if (mw < 0) continue;
            const bool e1 = (a1[u] >> w) & 1;
            const bool e2 = (a2[v] >> mw) & 1;
            if (e1 != e2) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == n) return true;
        const int u = order[depth];
        for (std::size_t v = 0; v < n; ++v) {
            if (used >> v & 1) continue;
            if (!consistent(u, static_cast<int>(v))) continue;
            map1[u] = static_cast<int>(v);
            used |= 1ULL << v;
            if (self(self, depth + 1)) return true;
            map1[u] = -1;
            used &= ~(1ULL << v);
        }
        return false;
    };
    return rec(rec, 0);
}

// Fixture format: first line n, then one `u v` pair per edge. Nodes 0..n-1.
inline Graph read_graph(std::istream& in) {
    std::uint32_t n = 0;
    if (!(in >> n)) throw Error("graph fixture: missing node count");
    Graph g;
    for (std::uint32_t i = 0; i < n; ++i) g.nodes.push_back(i);
    std::uint32_t u, v;
    while (in >> u >> v) {
        if (u >= n || v >= n || u == v) throw Error("graph fixture: bad edge");
        g.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    return g;
}

inline void write_graph(std::ostream& out, const Graph& g, std::uint32_t n) {
    out << n << "\n";
    for (auto [u, v] : g.edges) out << u << " " << v << "\n";
}

}  // namespace netcon
