// The interaction engine: uniform random scheduler, oriented rule application
// with the unbiased tie-break for symmetric patterns, and the run loop.
#pragma once

#include "netcon/configuration.hpp"
#include "netcon/protocol.hpp"
#include "netcon/rng.hpp"

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

namespace netcon {

struct ChangeRecord {
    std::uint64_t step = 0;
    std::uint32_t u = 0, v = 0;
    StateId a_old = 0, b_old = 0;
    StateId a_new = 0, b_new = 0;
    std::uint8_t c_old = 0, c_new = 0;
    std::int32_t rule = -1;  // -1: ineffective identity
    bool effective = false;
    bool edge_changed = false;

    bool operator==(const ChangeRecord&) const = default;
};

inline std::string format_trace_line(const ChangeRecord& r, const Protocol& p) {
    return std::to_string(r.step) + " " + std::to_string(r.u) + " " + std::to_string(r.v) +
           " (" + p.state_name(r.a_old) + "," + p.state_name(r.b_old) + "," +
           std::to_string(int(r.c_old)) + ")->(" + p.state_name(r.a_new) + "," +
           p.state_name(r.b_new) + "," + std::to_string(int(r.c_new)) + ")";
}

// One of the n(n-1)/2 unordered pairs, each with probability 2/(n(n-1)).
// Draw order is fixed: first node, then the offset for the second.
inline std::pair<std::uint32_t, std::uint32_t> uniform_pair(std::uint32_t n, Rng& rng) {
    if (n < 2) throw Error("uniform_pair needs a population of at least 2");
    const std::uint32_t u = rng.bounded(n);
    std::uint32_t v = rng.bounded(n - 1);
    if (v >= u) ++v;
    return {std::min(u, v), std::max(u, v)};
}

// Applies the resolved rule for the pair (u,v) in place. Draw order per
// interaction: branch selection first (only for rules with >= 2 branches),
// then the tie-break coin (only for symmetric patterns with split outcomes).
inline ChangeRecord apply_interaction(Configuration& c, std::uint32_t u, std::uint32_t v,
                                      const Protocol& p, Rng& rng, std::uint64_t step = 0) {
    if (u == v) throw Error("a node cannot interact with itself");
    ChangeRecord rec;
    rec.step = step;
    rec.u = u;
    rec.v = v;
    rec.a_old = c.state(u);
    rec.b_old = c.state(v);
    rec.c_old = c.edge(u, v) ? 1 : 0;
    rec.a_new = rec.a_old;
    rec.b_new = rec.b_old;
    rec.c_new = rec.c_old;

    const auto m = p.lookup(rec.a_old, rec.b_old, rec.c_old);
    if (!m.rule) return rec;

    const Rule& rule = *m.rule;
    rec.rule = static_cast<std::int32_t>(&rule - p.rules.data());

    const Branch* br = &rule.branches.front();
    if (rule.branches.size() > 1) {
        const double r = rng.uniform01();
        double cum = 0.0;
        for (const auto& cand : rule.branches) {
            cum += cand.weight.value();
            br = &cand;
            if (r < cum) break;
        }
    }

    StateId first = br->out.a, second = br->out.b;
    if (rule.a == rule.b && first != second) {
        if (rng.coin()) std::swap(first, second);
    }
    if (m.swapped) {
        rec.a_new = second;
        rec.b_new = first;
    } else {
        rec.a_new = first;
        rec.b_new = second;
    }
    rec.c_new = br->out.edge;

    if (rec.a_new != rec.a_old) c.set_state(u, rec.a_new);
    if (rec.b_new != rec.b_old) c.set_state(v, rec.b_new);
    rec.edge_changed = rec.c_new != rec.c_old;
    if (rec.edge_changed) c.set_edge(u, v, rec.c_new != 0);
    rec.effective = rec.edge_changed || rec.a_new != rec.a_old || rec.b_new != rec.b_old;
    return rec;
}

enum class StopReason { PredicateSatisfied, StepCap, QuiescenceWindow };

inline const char* to_string(StopReason r) {
    switch (r) {
        case StopReason::PredicateSatisfied: return "predicate-satisfied";
        case StopReason::StepCap: return "step-cap";
        case StopReason::QuiescenceWindow: return "quiescence-window";
    }
    return "?";
}

struct RunResult {
    std::uint64_t steps = 0;
    StopReason reason = StopReason::StepCap;
    std::uint64_t last_edge_change = 0;  // step index of the last edge flip
};

struct RunOptions {
    // stop after this many consecutive steps without an edge change (0: off)
    std::uint64_t quiescence_window = 0;
    std::function<void(const ChangeRecord&)> trace;
};

// Runs the uniform scheduler until `stop` holds (checked at step 0 and after
// effective steps), the quiescence window elapses, or `cap` steps.
inline RunResult run_until(Configuration& c, const Protocol& p,
                           const std::function<bool(const Configuration&)>& stop,
                           std::uint64_t cap, Rng& rng, const RunOptions& opts = {}) {
    if (cap < 1) throw Error("step cap must be at least 1");
    RunResult res;
    if (stop && stop(c)) {
        res.reason = StopReason::PredicateSatisfied;
        return res;
    }
    const std::uint32_t n = c.n();
    for (std::uint64_t t = 1; t <= cap; ++t) {
        const auto [u, v] = uniform_pair(n, rng);
        const ChangeRecord rec = apply_interaction(c, u, v, p, rng, t);
        if (opts.trace) opts.trace(rec);
        if (rec.edge_changed) res.last_edge_change = t;
        res.steps = t;
        if (rec.effective && stop && stop(c)) {
            res.reason = StopReason::PredicateSatisfied;
            return res;
        }
        if (opts.quiescence_window && t - res.last_edge_change >= opts.quiescence_window) {
            res.reason = StopReason::QuiescenceWindow;
            return res;
        }
    }
    res.steps = cap;
    res.reason = StopReason::StepCap;
    return res;
}

}  // namespace netcon
