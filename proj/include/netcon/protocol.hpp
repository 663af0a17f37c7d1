// Protocol = (Q, q0, Q_out, delta). Rules are stored once per unordered
// pattern; lookup resolves orientation. Unlisted triples are ineffective.
#pragma once

#include "netcon/core.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace netcon {

struct Outcome {
    StateId a = 0;
    StateId b = 0;
    std::uint8_t edge = 0;
    bool operator==(const Outcome&) const = default;
};

struct Branch {
    Rational weight;
    Outcome out;
    bool operator==(const Branch&) const = default;
};

struct Rule {
    StateId a = 0;
    StateId b = 0;
    std::uint8_t edge = 0;
    std::vector<Branch> branches;
    bool effective = false;  // some branch outcome differs from the pattern
    bool operator==(const Rule&) const = default;
};

// How the initial configuration of a protocol is seeded beyond all-q0.
struct Setup {
    enum Kind {
        Uniform,              // every node starts in q0
        DistinguishedNode,    // node 0 starts in `special`, rest in q0
        ReplicationInput,     // nodes 0..v1-1 carry an input graph in `special`
    };
    Kind kind = Uniform;
    std::string special;
};

class Protocol {
public:
    std::string name;
    std::vector<std::string> states;
    StateId initial = 0;
    std::vector<bool> output;            // Q_out membership per state
    std::vector<Rule> rules;
    std::map<std::string, long> params;  // k, c, d, v1 ...
    std::string checker = "quiescence-heuristic";
    Setup setup;

    std::size_t size() const { return states.size(); }

    StateId add_state(std::string name_) {
        if (by_name_.count(name_)) throw Error("duplicate state name: " + name_);
        const auto id = static_cast<StateId>(states.size());
        by_name_.emplace(name_, id);
        states.push_back(std::move(name_));
        return id;
    }

    bool has_state(std::string_view s) const { return by_name_.count(std::string(s)) != 0; }

    StateId state_id(std::string_view s) const {
        auto it = by_name_.find(std::string(s));
        if (it == by_name_.end()) throw Error(name + ": unknown state '" + std::string(s) + "'");
        return it->second;
    }

    const std::string& state_name(StateId s) const { return states.at(s); }

    void set_initial(std::string_view s) { initial = state_id(s); }

    void set_output(const std::vector<std::string>& names) {
        output.assign(states.size(), false);
        for (const auto& s : names) output[state_id(s)] = true;
    }

    void add_rule(std::string_view a, std::string_view b, int edge,
                  std::vector<std::pair<Rational, std::array<std::string, 2>>> branch_states,
                  const std::vector<int>& branch_edges) {
        Rule r;
        r.a = state_id(a);
        r.b = state_id(b);
        r.edge = static_cast<std::uint8_t>(edge);
        for (std::size_t i = 0; i < branch_states.size(); ++i) {
            Branch br;
            br.weight = branch_states[i].first;
            br.out.a = state_id(branch_states[i].second[0]);
            br.out.b = state_id(branch_states[i].second[1]);
            br.out.edge = static_cast<std::uint8_t>(branch_edges[i]);
            r.branches.push_back(br);
        }
        add_rule(std::move(r));
    }

    // Deterministic single-branch convenience.
    void add_rule(std::string_view a, std::string_view b, int edge,
                  std::string_view a2, std::string_view b2, int edge2) {
        add_rule(a, b, edge, {{Rational::one(), {std::string(a2), std::string(b2)}}}, {edge2});
    }

    void add_rule(Rule r) {
        if (r.branches.empty()) throw Error("rule with no branches");
        Rational sum{0, 1};
        for (const auto& br : r.branches) sum = sum + br.weight;
        if (sum != Rational::one())
            throw Error(name + ": branch weights of (" + pattern_str(r) + ") sum to " + sum.str());
        if (r.branches.size() > 1) {
            for (const auto& br : r.branches)
                if (br.weight.num <= 0) throw Error("non-positive branch weight");
        }
        if (slot(r.a, r.b, r.edge) >= 0)
            throw Error(name + ": pattern (" + pattern_str(r) + ") declared twice");
        if (r.a != r.b && slot(r.b, r.a, r.edge) >= 0)
            throw Error(name + ": both orientations of (" + pattern_str(r) + ") declared");
        r.effective = false;
        for (const auto& br : r.branches)
            if (br.out.a != r.a || br.out.b != r.b || br.out.edge != r.edge) r.effective = true;
        ensure_table();
        table_[index(r.a, r.b, r.edge)] = static_cast<std::int32_t>(rules.size());
        rules.push_back(std::move(r));
        finalized_ = false;
    }

    // Precompute per-triple edge-mutability; call after the last add_rule.
    void finalize() {
        ensure_table();
        if (output.empty()) output.assign(states.size(), true);
        const std::size_t q = states.size();
        edge_mod_.assign(q * q * 2, false);
        for (StateId a = 0; a < q; ++a)
            for (StateId b = 0; b < q; ++b)
                for (int c = 0; c < 2; ++c) {
                    const auto m = lookup(a, b, c);
                    if (!m.rule) continue;
                    for (const auto& br : m.rule->branches)
                        if (br.out.edge != c) edge_mod_[index(a, b, c)] = true;
                }
        finalized_ = true;
    }

    struct Match {
        const Rule* rule = nullptr;  // null: ineffective identity
        bool swapped = false;
        bool effective = false;
    };

    // Total over valid states: resolves (a,b,c), then (b,a,c), else identity.
    Match lookup(StateId a, StateId b, int edge) const {
        Match m;
        std::int32_t r = slot(a, b, edge);
        if (r < 0 && a != b) {
            r = slot(b, a, edge);
            if (r >= 0) m.swapped = true;
        }
        if (r >= 0) {
            m.rule = &rules[static_cast<std::size_t>(r)];
            m.effective = m.rule->effective;
        }
        return m;
    }

    bool rule_can_modify_edge(StateId a, StateId b, int edge) const {
        return edge_mod_[index(a, b, edge)] || edge_mod_[index(b, a, edge)];
    }

    bool finalized() const { return finalized_; }

    // Structural identity: name, state list, initial, Q_out, rule table.
    bool structurally_equal(const Protocol& o) const {
        if (name != o.name || states != o.states || initial != o.initial) return false;
        if (output != o.output) return false;
        if (rules.size() != o.rules.size()) return false;
        for (const auto& r : rules) {
            const std::int32_t s = o.slot(r.a, r.b, r.edge);
            if (s < 0 || !(o.rules[static_cast<std::size_t>(s)] == r)) return false;
        }
        return true;
    }

    std::string pattern_str(const Rule& r) const {
        return states[r.a] + "," + states[r.b] + "," + std::to_string(int(r.edge));
    }

private:
    std::size_t index(StateId a, StateId b, int edge) const {
        return (static_cast<std::size_t>(a) * states.size() + b) * 2 + static_cast<std::size_t>(edge);
    }

    std::int32_t slot(StateId a, StateId b, int edge) const {
        if (table_.size() != states.size() * states.size() * 2) return lookup_slow(a, b, edge);
        return table_[index(a, b, edge)];
    }

    std::int32_t lookup_slow(StateId a, StateId b, int edge) const {
        for (std::size_t i = 0; i < rules.size(); ++i)
            if (rules[i].a == a && rules[i].b == b && rules[i].edge == edge)
                return static_cast<std::int32_t>(i);
        return -1;
    }

    void ensure_table() {
        const std::size_t want = states.size() * states.size() * 2;
        if (table_.size() == want) return;
        table_.assign(want, -1);
        for (std::size_t i = 0; i < rules.size(); ++i)
            table_[index(rules[i].a, rules[i].b, rules[i].edge)] = static_cast<std::int32_t>(i);
    }

    std::unordered_map<std::string, StateId> by_name_;
    std::vector<std::int32_t> table_;
    std::vector<bool> edge_mod_;
    bool finalized_ = false;
};

}  // namespace netcon
