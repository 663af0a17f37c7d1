// Output-stability checkers, one per protocol family. Each returns true only
// on configurations whose output graph can never change again; cheap gates on
// maintained counts run first. Families without a crisp characterisation use
// the target predicate plus an exhaustive can-any-rule-touch-an-edge scan.
#pragma once

#include "netcon/configuration.hpp"
#include "netcon/engine.hpp"
#include "netcon/graph.hpp"
#include "netcon/protocol.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>

namespace netcon {

using StabilityChecker = std::function<bool(const Configuration&)>;

// True when no pair of nodes could flip an edge state under the current
// node states. O(n^2) table probes.
inline bool edge_silent(const Configuration& c, const Protocol& p) {
    for (std::uint32_t v = 1; v < c.n(); ++v)
        for (std::uint32_t u = 0; u < v; ++u)
            if (p.rule_can_modify_edge(c.state(u), c.state(v), c.edge(u, v) ? 1 : 0))
                return false;
    return true;
}

namespace detail {

inline bool spanning_line_states(const Configuration& c, const Protocol& p,
                                 std::initializer_list<const char*> zero_states,
                                 std::initializer_list<const char*> leader_states,
                                 std::uint32_t leader_total) {
    if (c.active_count() != c.n() - 1) return false;
    for (const char* s : zero_states)
        if (c.count(p.state_id(s)) != 0) return false;
    std::uint32_t leaders = 0;
    for (const char* s : leader_states) leaders += c.count(p.state_id(s));
    if (leaders > leader_total) return false;
    return is_spanning_line(output_graph(c, p), c.n());
}

}  // namespace detail

// Builds the checker for a protocol; geared to the built-in catalog. A null
// result means the protocol is quiescence-detected only (no sound checker).
inline StabilityChecker make_stability_checker(const Protocol& proto) {
    const Protocol* p = &proto;
    const std::string& id = proto.checker;

    if (id == "one-way-epidemic") {
        const StateId a = p->state_id("a");
        return [p, a](const Configuration& c) { return c.count(a) == c.n(); };
    }
    if (id == "one-to-one-elimination") {
        const StateId a = p->state_id("a");
        return [a](const Configuration& c) { return c.count(a) == 1; };
    }
    if (id == "one-to-all-elimination" || id == "node-cover") {
        const StateId a = p->state_id("a");
        return [a](const Configuration& c) { return c.count(a) == 0; };
    }
    if (id == "meet-everybody") {
        const StateId b = p->state_id("b");
        return [b](const Configuration& c) { return c.count(b) == 0; };
    }
    if (id == "edge-cover") {
        return [](const Configuration& c) {
            return c.active_count() == Configuration::pair_count(c.n());
        };
    }
    if (id == "max-matching") {
        const StateId a = p->state_id("a");
        return [a](const Configuration& c) { return c.count(a) <= 1; };
    }
    if (id == "simple-global-line") {
        return [p](const Configuration& c) {
            return detail::spanning_line_states(c, *p, {"q0"}, {"l", "w"}, 1) &&
                   c.count(p->state_id("l")) + c.count(p->state_id("w")) == 1;
        };
    }
    if (id == "intermediate-global-line") {
        return [p](const Configuration& c) {
            return detail::spanning_line_states(c, *p, {"q0"}, {"l"}, 1);
        };
    }
    if (id == "fast-global-line") {
        return [p](const Configuration& c) {
            if (c.count(p->state_id("l")) != 1) return false;
            return detail::spanning_line_states(
                c, *p, {"q0", "f0", "f1", "l'", "l''", "q2'"}, {"l"}, 1);
        };
    }
    if (id == "cycle-cover") {
        const StateId q0 = p->state_id("q0");
        const StateId q1 = p->state_id("q1");
        return [q0, q1](const Configuration& c) {
            // silent leftovers: nothing, one isolated q0, or one joined q1 pair
            const std::uint32_t zeros = c.count(q0);
            const std::uint32_t ones = c.count(q1);
            if (zeros > 1 || (zeros == 1 && ones != 0)) return false;
            if (ones == 0) return true;
            if (ones != 2) return false;
            std::uint32_t a = c.n(), b = c.n();
            for (std::uint32_t u = 0; u < c.n(); ++u)
                if (c.state(u) == q1) (a == c.n() ? a : b) = u;
            return c.edge(a, b);  // the leftover pair must hold its one edge
        };
    }
    if (id == "global-star") {
        const StateId center = p->state_id("c");
        return [center](const Configuration& c) {
            if (c.active_count() != c.n() - 1 || c.count(center) != 1) return false;
            for (std::uint32_t u = 0; u < c.n(); ++u)
                if (c.state(u) == center) return c.degree(u) == c.n() - 1;
            return false;
        };
    }
    if (id == "global-ring") {
        // terminal: spanning ring of q2s, one walking leader, and the two
        // adjacent blocked endpoints that closed it
        return [p](const Configuration& c) {
            if (c.active_count() != c.n()) return false;
            const StateId q2 = p->state_id("q2");
            const StateId w = p->state_id("w");
            const StateId q1p = p->state_id("q1'");
            if (c.count(q2) != c.n() - 3 || c.count(w) != 1 || c.count(q1p) != 2)
                return false;
            std::uint32_t a = c.n(), b = c.n();
            for (std::uint32_t u = 0; u < c.n(); ++u)
                if (c.state(u) == q1p) (a == c.n() ? a : b) = u;
            if (!c.edge(a, b)) return false;
            return is_spanning_ring(output_graph(c, *p), c.n());
        };
    }
    if (id == "2rc") {
        const StateId l2 = p->state_id("l2");
        const StateId q2 = p->state_id("q2");
        return [p, l2, q2](const Configuration& c) {
            if (c.count(l2) != 1 || c.count(q2) != c.n() - 1) return false;
            return is_spanning_ring(output_graph(c, *p), c.n());
        };
    }
    if (id == "krc") {
        const auto k = static_cast<std::uint32_t>(p->params.at("k"));
        const StateId qk = p->state_id("q" + std::to_string(k));
        const StateId lk = p->state_id("l" + std::to_string(k));
        return [p, k, qk, lk](const Configuration& c) {
            if (c.count(qk) + c.count(lk) + k < c.n() + 1) return false;
            return is_k_regular_relaxed(output_graph(c, *p), c.n(), k) && edge_silent(c, *p);
        };
    }
    if (id == "c-cliques") {
        const auto cc = static_cast<std::uint32_t>(p->params.at("c"));
        const StateId done = p->state_id(std::to_string(cc - 1));
        return [p, cc, done](const Configuration& c) {
            // members of completed cliques sit at counter c-1 unless they
            // currently carry their visiting leader (at most one per clique)
            const std::uint32_t groups = c.n() / cc;
            if (c.count(done) + groups < groups * (cc - 1)) return false;
            return is_clique_partition(output_graph(c, *p), c.n(), cc) && edge_silent(c, *p);
        };
    }
    if (id == "power-degree") {
        const auto d = static_cast<std::uint32_t>(p->params.at("d"));
        const std::uint32_t want = 1u << d;
        const StateId ad = p->state_id("a" + std::to_string(d));
        const StateId q = p->state_id("q");
        return [p, want, ad, q](const Configuration& c) {
            if (c.count(ad) != want || c.count(q) != 1) return false;
            return is_degree_star(output_graph(c, *p), want) && edge_silent(c, *p);
        };
    }
    if (id == "leader-replication") {
        const StateId l = p->state_id("l");
        const StateId f = p->state_id("f");
        const StateId r = p->state_id("r");
        const StateId r0 = p->state_id("r0");
        const StateId q0 = p->state_id("q0");
        std::vector<StateId> marks;
        for (const char* s : {"l_a", "l_d", "f_a", "f_d", "r_a", "r_d", "r'"})
            marks.push_back(p->state_id(s));
        return [p, l, f, r, r0, q0, marks](const Configuration& c) {
            if (c.count(q0) != 0 || c.count(l) != 1) return false;
            for (StateId s : marks)
                if (c.count(s) != 0) return false;
            // every original node has a unique replica partner
            const std::uint32_t n = c.n();
            std::vector<std::uint32_t> partner(n, n);
            std::vector<std::uint32_t> originals;
            for (std::uint32_t u = 0; u < n; ++u) {
                const StateId s = c.state(u);
                if (s == l || s == f) originals.push_back(u);
                else if (s != r && s != r0) return false;
            }
            for (std::uint32_t u : originals) {
                std::uint32_t match = n;
                for (std::uint32_t v = 0; v < n; ++v) {
                    if (v == u || !c.edge(u, v)) continue;
                    if (c.state(v) == r) {
                        if (match != n) return false;
                        match = v;
                    }
                }
                if (match == n) return false;
                partner[u] = match;
            }
            for (std::uint32_t v = 0; v < n; ++v)
                if (c.state(v) == r0 && c.degree(v) != 0) return false;
            // replica edges must mirror the input edges exactly
            for (std::size_t i = 0; i < originals.size(); ++i)
                for (std::size_t j = i + 1; j < originals.size(); ++j) {
                    const auto x = originals[i], y = originals[j];
                    if (c.edge(x, y) != c.edge(partner[x], partner[y])) return false;
                }
            return true;
        };
    }
    if (id == "quiescence-heuristic") return nullptr;
    throw Error("unknown stability checker '" + id + "'");
}

// Protocols whose checker is a heuristic fallback (target + edge-silence scan
// or quiescence window); their stability verdicts at n > 4 are estimates.
inline bool checker_is_estimated(const Protocol& p, std::uint32_t n) {
    if (n <= 4) return false;
    return p.checker == "krc" || p.checker == "c-cliques" || p.checker == "power-degree" ||
           p.checker == "global-ring" || p.checker == "quiescence-heuristic";
}

}  // namespace netcon
