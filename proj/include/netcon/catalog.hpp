// Built-in protocol catalog: the basic probabilistic processes, the three
// spanning-line constructors, the direct constructors, the replication
// protocol, the 2^d-neighbour construction and the (U,D,M) partition rules.
// Parameterised families are materialised to concrete rules.
#pragma once

#include "netcon/configuration.hpp"
#include "netcon/graph.hpp"
#include "netcon/protocol.hpp"
#include "netcon/rng.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace netcon {

namespace catalog_detail {

inline std::string tok(const std::string& base, long i) { return base + std::to_string(i); }

inline Protocol processes_two_state(std::string name) {
    Protocol p;
    p.name = std::move(name);
    p.add_state("a");
    p.add_state("b");
    return p;
}

// Rules of the basic processes fire identically on both edge states.
inline void add_both_edges(Protocol& p, const char* a, const char* b, const char* a2,
                           const char* b2) {
    p.add_rule(a, b, 0, a2, b2, 0);
    p.add_rule(a, b, 1, a2, b2, 1);
}

inline Protocol one_way_epidemic() {
    Protocol p = processes_two_state("one-way-epidemic");
    p.set_initial("b");
    add_both_edges(p, "a", "b", "a", "a");
    p.checker = "one-way-epidemic";
    p.setup = {Setup::DistinguishedNode, "a"};
    p.finalize();
    return p;
}

inline Protocol one_to_one_elimination() {
    Protocol p = processes_two_state("one-to-one-elimination");
    p.set_initial("a");
    add_both_edges(p, "a", "a", "a", "b");
    p.checker = "one-to-one-elimination";
    p.finalize();
    return p;
}

inline Protocol max_matching() {
    Protocol p = processes_two_state("max-matching");
    p.set_initial("a");
    p.add_rule("a", "a", 0, "b", "b", 1);
    p.checker = "max-matching";
    p.finalize();
    return p;
}

inline Protocol one_to_all_elimination() {
    Protocol p = processes_two_state("one-to-all-elimination");
    p.set_initial("a");
    add_both_edges(p, "a", "a", "b", "a");
    add_both_edges(p, "a", "b", "b", "b");
    p.checker = "one-to-all-elimination";
    p.finalize();
    return p;
}

inline Protocol meet_everybody() {
    Protocol p;
    p.name = "meet-everybody";
    p.add_state("a");
    p.add_state("b");
    p.add_state("c");
    p.set_initial("b");
    add_both_edges(p, "a", "b", "a", "c");
    p.checker = "meet-everybody";
    p.setup = {Setup::DistinguishedNode, "a"};
    p.finalize();
    return p;
}

inline Protocol node_cover() {
    Protocol p = processes_two_state("node-cover");
    p.set_initial("a");
    add_both_edges(p, "a", "a", "b", "b");
    add_both_edges(p, "a", "b", "b", "b");
    p.checker = "node-cover";
    p.finalize();
    return p;
}

inline Protocol edge_cover() {
    Protocol p;
    p.name = "edge-cover";
    p.add_state("a");
    p.set_initial("a");
    p.add_rule("a", "a", 0, "a", "a", 1);
    p.checker = "edge-cover";
    p.finalize();
    return p;
}

inline Protocol simple_global_line() {
    Protocol p;
    p.name = "simple-global-line";
    for (const char* s : {"q0", "q1", "q2", "l", "w"}) p.add_state(s);
    p.set_initial("q0");
    p.add_rule("q0", "q0", 0, "q1", "l", 1);
    p.add_rule("l", "q0", 0, "q2", "l", 1);
    p.add_rule("l", "l", 0, "q2", "w", 1);
    p.add_rule("w", "q2", 1, "q2", "w", 1);
    p.add_rule("w", "q1", 1, "q2", "l", 1);
    p.checker = "simple-global-line";
    p.finalize();
    return p;
}

inline Protocol intermediate_global_line() {
    Protocol p;
    p.name = "intermediate-global-line";
    for (const char* s : {"q0", "q1", "q2", "l", "wb", "w1", "w2", "w3"}) p.add_state(s);
    p.set_initial("q0");
    p.add_rule("q0", "q0", 0, "q1", "l", 1);
    p.add_rule("l", "q0", 0, "q2", "l", 1);
    p.add_rule("l", "l", 0, "wb", "w1", 1);
    p.add_rule("w1", "q2", 1, "w1", "w1", 1);
    p.add_rule("w1", "q1", 1, "w2", "q1", 1);
    p.add_rule("w2", "w1", 1, "w2", "w2", 1);
    p.add_rule("w2", "wb", 1, "w3", "q2", 1);
    p.add_rule("w3", "w2", 1, "q2", "w3", 1);
    p.add_rule("w3", "q1", 1, "q2", "l", 1);
    p.checker = "intermediate-global-line";
    p.finalize();
    return p;
}

inline Protocol fast_global_line() {
    Protocol p;
    p.name = "fast-global-line";
    for (const char* s : {"q0", "q1", "q2", "q2'", "l", "l'", "l''", "f0", "f1"})
        p.add_state(s);
    p.set_initial("q0");
    p.add_rule("q0", "q0", 0, "q1", "l", 1);
    p.add_rule("l", "q0", 0, "q2", "l", 1);
    p.add_rule("l", "l", 0, "q2'", "l'", 1);
    p.add_rule("l'", "q2", 1, "l''", "f1", 0);
    p.add_rule("l'", "q1", 1, "l''", "f0", 0);
    p.add_rule("l''", "q2'", 1, "l", "q2", 1);
    p.add_rule("l", "f0", 0, "q2", "l", 1);
    p.add_rule("l", "f1", 0, "q2'", "l'", 1);
    p.checker = "fast-global-line";
    p.finalize();
    return p;
}

inline Protocol cycle_cover() {
    Protocol p;
    p.name = "cycle-cover";
    for (const char* s : {"q0", "q1", "q2"}) p.add_state(s);
    p.set_initial("q0");
    p.add_rule("q0", "q0", 0, "q1", "q1", 1);
    p.add_rule("q1", "q0", 0, "q2", "q1", 1);
    p.add_rule("q1", "q1", 0, "q2", "q2", 1);
    p.checker = "cycle-cover";
    p.finalize();
    return p;
}

inline Protocol global_star() {
    Protocol p;
    p.name = "global-star";
    p.add_state("c");
    p.add_state("p");
    p.set_initial("c");
    p.add_rule("c", "c", 0, "c", "p", 1);
    p.add_rule("p", "p", 1, "p", "p", 0);
    p.add_rule("c", "p", 0, "c", "p", 1);
    p.checker = "global-star";
    p.finalize();
    return p;
}

// Line construction as in simple-global-line; a line closes into a ring
// between its two q1 endpoints while the leader walks inside. Closing from
// an l endpoint is unsound: a fresh pair [l,q1] can then end up with both
// ends blocked against different partners, and the backtrack rules cannot
// tell its interior edge from a closing edge (reachable deadlock). With
// q1-only closure a blocked node's interior neighbour is never a blocked
// q1, so backtracks always hit true closing edges. l' and l'' stay in the
// alphabet but no longer carry rules.
inline Protocol global_ring() {
    Protocol p;
    p.name = "global-ring";
    for (const char* s : {"q0", "q1", "q2", "l", "w", "l'", "l''", "q1'", "q1''"})
        p.add_state(s);
    p.set_initial("q0");
    p.add_rule("q0", "q0", 0, "q1", "l", 1);
    p.add_rule("l", "q0", 0, "q2", "l", 1);
    p.add_rule("l", "l", 0, "q2", "w", 1);
    p.add_rule("w", "q2", 1, "q2", "w", 1);
    p.add_rule("w", "q1", 1, "q2", "l", 1);
    // an endpoint leader steps back inside, enabling closure
    p.add_rule("l", "q2", 1, "q1", "w", 1);
    p.add_rule("q1", "q1", 0, "q1'", "q1'", 1);
    // a blocked endpoint that sees any other component marks itself
    for (const char* y : {"l", "q1", "q0"})
        p.add_rule("q1'", y, 0, "q1''", y, 0);
    p.add_rule("q1'", "q1'", 0, "q1''", "q1''", 0);
    p.add_rule("q1'", "q1''", 0, "q1''", "q1''", 0);
    // marked pairs backtrack: reopen the ring and unblock
    p.add_rule("q1''", "q1'", 1, "q1", "q1", 0);
    p.add_rule("q1''", "q1''", 1, "q1", "q1", 0);
    p.checker = "global-ring";
    p.finalize();
    return p;
}

// kRC; 2RC is the k=2 instance.
inline Protocol krc(long k, std::string name = "") {
    if (k < 2) throw UsageError("krc requires k >= 2");
    Protocol p;
    p.name = name.empty() ? "krc" : std::move(name);
    for (long i = 0; i <= k; ++i) p.add_state(tok("q", i));
    for (long i = 1; i <= k + 1; ++i) p.add_state(tok("l", i));
    p.set_initial("q0");
    if (p.name == "krc") p.params["k"] = k;

    p.add_rule("q0", "q0", 0, "q1", "l1", 1);
    // degree growth between non-leaders (one orientation per unordered pair)
    for (long i = 1; i < k; ++i)
        for (long j = 0; j <= i; ++j)
            p.add_rule(tok("q", i), tok("q", j), 0, tok("q", i + 1), tok("q", j + 1), 1);
    // two leaders join components; the higher-degree one stays leader
    for (long i = 1; i < k; ++i)
        for (long j = 1; j <= i; ++j)
            p.add_rule(tok("l", i), tok("l", j), 0, tok("l", i + 1), tok("q", j + 1), 1);
    // a leader grows towards a non-leader and passes leadership on
    for (long i = 1; i < k; ++i)
        for (long j = 0; j < k; ++j)
            p.add_rule(tok("l", i), tok("q", j), 0, tok("q", i + 1), tok("l", j + 1), 1);
    // swapping: the leader walks inside its component
    for (long i = 1; i <= k; ++i)
        for (long j = 1; j <= k; ++j)
            p.add_rule(tok("l", i), tok("q", j), 1, tok("q", i), tok("l", j), 1);
    // leader elimination inside a component
    for (long i = 1; i <= k; ++i)
        for (long j = i; j <= k; ++j)
            p.add_rule(tok("l", i), tok("l", j), 1, tok("q", i), tok("l", j), 1);
    // opening saturated components while other components exist
    p.add_rule(tok("l", k), "q0", 0, tok("l", k + 1), "q1", 1);
    for (long i = 1; i < k; ++i)
        p.add_rule(tok("l", k), tok("l", i), 0, tok("l", k + 1), tok("q", i + 1), 1);
    p.add_rule(tok("l", k), tok("l", k), 0, tok("l", k + 1), tok("l", k + 1), 1);
    p.add_rule(tok("l", k + 1), "q1", 1, tok("l", k), "q0", 0);
    for (long i = 2; i <= k; ++i)
        p.add_rule(tok("l", k + 1), tok("q", i), 1, tok("l", k), tok("l", i - 1), 0);
    p.add_rule(tok("l", k + 1), "l1", 1, tok("l", k), "q0", 0);
    for (long i = 2; i <= k; ++i)
        p.add_rule(tok("l", k + 1), tok("l", i), 1, tok("l", k), tok("l", i - 1), 0);
    p.add_rule(tok("l", k + 1), tok("l", k + 1), 1, tok("l", k), tok("l", k), 0);
    p.checker = "krc";
    p.finalize();
    return p;
}

inline Protocol two_rc() {
    Protocol p = krc(2, "2rc");
    p.checker = "2rc";
    p.finalize();
    return p;
}

inline Protocol c_cliques(long c) {
    if (c < 2) throw UsageError("c-cliques requires c >= 2");
    Protocol p;
    p.name = "c-cliques";
    p.params["c"] = c;
    for (long i = 0; i <= c - 2; ++i) p.add_state(tok("l", i));
    for (long i = 1; i <= c - 2; ++i) p.add_state(tok("f", i));
    p.add_state("f");
    for (long i = 0; i <= c - 2; ++i) p.add_state(tok("lb", i));
    p.add_state("l");
    for (long i = 1; i <= c - 1; ++i) p.add_state(std::to_string(i));
    for (long i = 1; i <= c - 1; ++i) p.add_state(tok("l", i) + "'");
    p.add_state("r");
    p.set_initial("l0");

    auto num = [](long i) { return std::to_string(i); };
    auto prime = [](long i) { return "l" + std::to_string(i) + "'"; };

    // gathering: a leader with i members recruits fresh nodes and absorbs
    // smaller leaders; a full group starts converting members to counters
    if (c == 2) {
        p.add_rule("l0", "l0", 0, "l", num(1), 1);
    } else {
        p.add_rule("l0", "l0", 0, "l1", "f", 1);
        for (long i = 1; i < c - 2; ++i)
            p.add_rule(tok("l", i), "l0", 0, tok("l", i + 1), "f", 1);
        p.add_rule(tok("l", c - 2), "l0", 0, "lb1", num(1), 1);
        for (long i = 1; i < c - 2; ++i)
            for (long j = 1; j <= i; ++j)
                p.add_rule(tok("l", i), tok("l", j), 0, tok("l", i + 1), tok("f", j), 1);
        for (long j = 1; j <= c - 2; ++j)
            p.add_rule(tok("l", c - 2), tok("l", j), 0, "lb0", tok("f", j), 1);
        // an absorbed leader releases its own members before becoming plain f
        for (long i = 2; i <= c - 2; ++i)
            p.add_rule(tok("f", i), "f", 1, tok("f", i - 1), "l0", 0);
        p.add_rule("f1", "f", 1, "f", "l0", 0);
        // conversion: the full leader turns members into counter state 1
        for (long i = 0; i < c - 2; ++i)
            p.add_rule(tok("lb", i), "f", 1, tok("lb", i + 1), num(1), 1);
        p.add_rule(tok("lb", c - 2), "f", 1, "l", num(1), 1);
    }
    // members connect until their counters reach c-1
    for (long i = 1; i < c - 1; ++i)
        for (long j = 1; j <= i; ++j)
            p.add_rule(num(i), num(j), 0, num(i + 1), num(j + 1), 1);
    // the leader rides members and cleans inter-clique edges it finds
    for (long i = 1; i <= c - 1; ++i) p.add_rule("l", num(i), 1, "r", prime(i), 1);
    for (long i = 2; i <= c - 1; ++i)
        for (long j = 2; j <= i; ++j)
            p.add_rule(prime(i), prime(j), 1, prime(i - 1), prime(j - 1), 0);
    for (long i = 1; i <= c - 1; ++i) p.add_rule(prime(i), "r", 1, num(i), "l", 1);
    if (c == 2) {
        // a dangling group of one member can still be absorbed elsewhere: not
        // applicable at c=2; the lb0 entry stays for the state-count contract
        p.add_rule("lb0", "f", 1, "l", num(1), 1);
    }
    p.checker = "c-cliques";
    p.finalize();
    return p;
}

// Repaired replication protocol; see the l/f mark-and-copy cycle.
inline Protocol leader_replication() {
    Protocol p;
    p.name = "leader-replication";
    for (const char* s :
         {"q0", "r0", "l", "l_a", "l_d", "f", "f_a", "f_d", "r", "r_a", "r_d", "r'"})
        p.add_state(s);
    p.set_initial("r0");
    p.set_output({"r", "r_a", "r_d", "r'"});

    p.add_rule("q0", "r0", 0, "l", "r", 1);
    p.add_rule("l", "l", 0, "l", "f", 0);
    p.add_rule("l", "l", 1, "l", "f", 1);
    p.add_rule("l", "f", 0,
               {{Rational{1, 2}, {"l_d", "f_d"}}, {Rational{1, 2}, {"f", "l"}}}, {0, 0});
    p.add_rule("l", "f", 1,
               {{Rational{1, 2}, {"l_a", "f_a"}}, {Rational{1, 2}, {"f", "l"}}}, {1, 1});
    for (const char* x : {"l", "f"})
        for (const char* i : {"a", "d"}) {
            const std::string xi = std::string(x) + "_" + i;
            p.add_rule(xi, "r", 1, xi, std::string("r_") + i, 1);
        }
    p.add_rule("r_a", "r_a", 0, "r'", "r'", 1);
    p.add_rule("r_a", "r_a", 1, "r'", "r'", 1);  // re-copy of an edge already on
    p.add_rule("r_d", "r_d", 1, "r'", "r'", 0);
    p.add_rule("r_d", "r_d", 0, "r'", "r'", 0);  // re-copy of an edge already off
    for (const char* x : {"l", "f"})
        for (const char* i : {"a", "d"}) {
            const std::string xi = std::string(x) + "_" + i;
            p.add_rule("r'", xi, 1, "r", x, 1);
        }
    // eliminations between marked leaders
    const char* marks[2] = {"a", "d"};
    for (int i = 0; i < 2; ++i)
        for (int j = i; j < 2; ++j)
            for (int c = 0; c < 2; ++c)
                p.add_rule(std::string("l_") + marks[i], std::string("l_") + marks[j], c,
                           std::string("l_") + marks[i], std::string("f_") + marks[j], c);
    p.checker = "leader-replication";
    p.setup = {Setup::ReplicationInput, "q0"};
    p.finalize();
    return p;
}

// One node obtains 2^d neighbours using 2(d+2) states.
inline Protocol power_degree(long d) {
    if (d < 1) throw UsageError("power-degree requires d >= 1");
    Protocol p;
    p.name = "power-degree";
    p.params["d"] = d;
    p.add_state("q0");
    p.add_state("q0'");
    p.add_state("q");
    for (long i = 1; i <= d; ++i) p.add_state(tok("q", i));
    for (long i = 0; i <= d; ++i) p.add_state(tok("a", i));
    p.set_initial("a0");
    p.add_rule("q0", "a0", 0, "q0'", "a1", 1);
    p.add_rule("q0'", "a0", 0, "q", "a1", 1);
    for (long i = 1; i <= d - 1; ++i)
        p.add_rule("q", tok("a", i), 1, tok("q", i + 1), tok("a", i + 1), 1);
    for (long j = 2; j <= d; ++j)
        p.add_rule(tok("q", j), "a0", 0, "q", tok("a", j), 1);
    p.checker = "power-degree";
    p.setup = {Setup::DistinguishedNode, "q0"};
    p.finalize();
    return p;
}

// The (U,D,M) population partition rule set; no stability claim.
inline Protocol udm_partition() {
    Protocol p;
    p.name = "udm-partition";
    for (const char* s : {"q0", "qu'", "qu", "qd", "qm'", "qm"}) p.add_state(s);
    p.set_initial("q0");
    p.add_rule("q0", "q0", 0, "qu'", "qd", 1);
    p.add_rule("qu'", "q0", 0, "qu", "qm", 1);
    p.add_rule("qu'", "qu'", 0, "qu", "qm'", 1);
    p.add_rule("qm'", "qd", 1, "qm", "q0", 0);
    p.checker = "quiescence-heuristic";
    p.finalize();
    return p;
}

}  // namespace catalog_detail

inline const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {
        "one-way-epidemic", "one-to-one-elimination", "max-matching",
        "one-to-all-elimination", "meet-everybody", "node-cover", "edge-cover",
        "simple-global-line", "intermediate-global-line", "fast-global-line",
        "cycle-cover", "global-star", "global-ring", "2rc", "krc", "c-cliques",
        "leader-replication", "power-degree", "udm-partition"};
    return names;
}

inline Protocol builtin(const std::string& name, const std::map<std::string, long>& params = {}) {
    using namespace catalog_detail;
    auto want = [&](const char* key) {
        auto it = params.find(key);
        if (it == params.end())
            throw UsageError("protocol '" + name + "' needs parameter " + key);
        return it->second;
    };
    Protocol p;
    if (name == "one-way-epidemic") p = one_way_epidemic();
    else if (name == "one-to-one-elimination") p = one_to_one_elimination();
    else if (name == "max-matching" || name == "maximum-matching") p = max_matching();
    else if (name == "one-to-all-elimination") p = one_to_all_elimination();
    else if (name == "meet-everybody") p = meet_everybody();
    else if (name == "node-cover") p = node_cover();
    else if (name == "edge-cover") p = edge_cover();
    else if (name == "simple-global-line") p = simple_global_line();
    else if (name == "intermediate-global-line") p = intermediate_global_line();
    else if (name == "fast-global-line") p = fast_global_line();
    else if (name == "cycle-cover") p = cycle_cover();
    else if (name == "global-star") p = global_star();
    else if (name == "global-ring") p = global_ring();
    else if (name == "2rc") p = two_rc();
    else if (name == "krc") p = krc(want("k"));
    else if (name == "c-cliques") p = c_cliques(want("c"));
    else if (name == "leader-replication") {
        p = leader_replication();
        if (auto it = params.find("v1"); it != params.end()) p.params["v1"] = it->second;
    } else if (name == "power-degree") p = power_degree(want("d"));
    else if (name == "udm-partition") p = udm_partition();
    else throw UsageError("unknown protocol '" + name + "'");
    return p;
}

// Uniform connected graph sample: G(k,1/2) resampled until connected.
inline Graph random_connected_graph(std::uint32_t k, Rng& rng) {
    Graph g;
    for (std::uint32_t i = 0; i < k; ++i) g.nodes.push_back(i);
    if (k <= 1) return g;
    while (true) {
        g.edges.clear();
        for (std::uint32_t v = 1; v < k; ++v)
            for (std::uint32_t u = 0; u < v; ++u)
                if (rng.coin()) g.edges.emplace_back(u, v);
        detail::AdjView a(g);
        if (a.component_size(0) == k) return g;
    }
}

// Initial-condition overrides implied by a protocol's setup descriptor.
// Replication inputs are drawn from `rng`; the chosen input graph is also
// returned so correctness verdicts can compare against it.
inline Overrides default_overrides(const Protocol& p, std::uint32_t n, Rng& rng,
                                   std::optional<Graph>* input_out = nullptr) {
    Overrides ov;
    if (input_out) input_out->reset();
    switch (p.setup.kind) {
        case Setup::Uniform:
            break;
        case Setup::DistinguishedNode:
            ov.node_states.emplace_back(0, p.setup.special);
            break;
        case Setup::ReplicationInput: {
            long v1 = n / 2;
            if (auto it = p.params.find("v1"); it != p.params.end()) v1 = it->second;
            if (v1 < 1 || 2 * v1 > n)
                throw Error("replication input needs 1 <= v1 <= n/2 (v1=" +
                            std::to_string(v1) + ", n=" + std::to_string(n) + ")");
            const Graph g = random_connected_graph(static_cast<std::uint32_t>(v1), rng);
            for (long u = 0; u < v1; ++u)
                ov.node_states.emplace_back(static_cast<std::uint32_t>(u), p.setup.special);
            ov.active_edges = g.edges;
            if (input_out) *input_out = g;
            break;
        }
    }
    return ov;
}

// Graph-level target predicate for `verify` and the oracle; empty when the
// protocol's goal is not a graph property (the basic processes).
inline std::function<bool(const Graph&)> make_target(const Protocol& p, std::uint32_t n,
                                                     const std::optional<Graph>& input = {}) {
    const std::string& f = p.name;
    if (f == "simple-global-line" || f == "intermediate-global-line" || f == "fast-global-line")
        return [n](const Graph& g) { return is_spanning_line(g, n); };
    if (f == "global-ring" || f == "2rc")
        return [n](const Graph& g) { return is_spanning_ring(g, n); };
    if (f == "global-star")
        return [n](const Graph& g) { return is_spanning_star(g, n); };
    if (f == "cycle-cover")
        return [n](const Graph& g) { return is_cycle_cover(g, n, 2); };
    if (f == "krc") {
        const auto k = static_cast<std::uint32_t>(p.params.at("k"));
        return [n, k](const Graph& g) { return is_k_regular_relaxed(g, n, k); };
    }
    if (f == "c-cliques") {
        const auto c = static_cast<std::uint32_t>(p.params.at("c"));
        return [n, c](const Graph& g) { return is_clique_partition(g, n, c); };
    }
    if (f == "max-matching")
        return [n](const Graph& g) { return is_maximum_matching(g, n); };
    if (f == "power-degree") {
        const auto d = static_cast<std::uint32_t>(p.params.at("d"));
        return [d](const Graph& g) { return is_degree_star(g, 1u << d); };
    }
    if (f == "leader-replication") {
        if (!input) return {};
        const Graph in = *input;
        return [in](const Graph& g) { return graphs_isomorphic(g, in); };
    }
    return {};
}

// Step caps sized at >= 50x the expected convergence time of each family.
inline std::uint64_t cap_for(const Protocol& p, std::uint32_t n) {
    const auto nn = static_cast<std::uint64_t>(n);
    const double logn = std::log(std::max<std::uint32_t>(n, 2));
    const std::string& f = p.name;
    if (f == "simple-global-line" || f == "global-ring") return 20 * nn * nn * nn * nn * nn;
    if (f == "intermediate-global-line") return 50 * nn * nn * nn * nn;
    if (f == "fast-global-line") return 100 * nn * nn * nn;
    if (f == "2rc" || f == "krc" || f == "c-cliques") return 100 * nn * nn * nn;
    if (f == "meet-everybody" || f == "edge-cover" || f == "power-degree" ||
        f == "udm-partition")
        return static_cast<std::uint64_t>(100.0 * nn * nn * logn);
    if (f == "leader-replication")
        return static_cast<std::uint64_t>(100.0 * nn * nn * nn * nn * logn);
    return 100 * nn * nn;
}

}  // namespace netcon
