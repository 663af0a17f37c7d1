// Protocol text format.
//
//   protocol <name>
//   states: <tok> <tok> ...
//   initial: <tok>
//   output: <tok> ...                         # omitted = all states
//   rules:
//   (<tok>,<tok>,<0|1>) -> (<tok>,<tok>,<0|1>)
//   (<tok>,<tok>,<0|1>) -> <p>: (...) | <p>: (...)   # p rational, e.g. 1/2
//
// '#' starts a comment. One rule per line; no wildcards.
#pragma once

#include "netcon/protocol.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace netcon {

struct ProtocolSource {
    std::string text;
    Protocol protocol;
    std::string provenance;  // "builtin:<name>" or a file path
};

struct ValidationReport {
    std::size_t state_count = 0;
    std::size_t effective_rules = 0;
    std::vector<std::string> warnings;
};

namespace dsl_detail {

inline std::string strip(std::string s) {
    if (auto h = s.find('#'); h != std::string::npos) s.erase(h);
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

struct TripleText {
    std::string a, b;
    int edge = 0;
};

// "(x,y,0)" -> triple; `pos` advances past the closing paren.
inline TripleText parse_triple(const std::string& s, std::size_t& pos, int line) {
    auto fail = [&](const std::string& m) -> TripleText { throw ParseError(line, m); };
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos >= s.size() || s[pos] != '(') return fail("expected '('");
    const auto close = s.find(')', pos);
    if (close == std::string::npos) return fail("missing ')'");
    std::string inner = s.substr(pos + 1, close - pos - 1);
    pos = close + 1;
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= inner.size(); ++i) {
        if (i == inner.size() || inner[i] == ',') {
            parts.push_back(strip(inner.substr(start, i - start)));
            start = i + 1;
        }
    }
    if (parts.size() != 3 || parts[0].empty() || parts[1].empty())
        return fail("triple needs exactly (state,state,edge)");
    if (parts[2] != "0" && parts[2] != "1") return fail("edge state must be 0 or 1");
    return {parts[0], parts[1], parts[2] == "1" ? 1 : 0};
}

inline Rational parse_weight(const std::string& s, int line) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational{std::stoll(s), 1};
        return Rational{std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))};
    } catch (const std::exception&) {
        throw ParseError(line, "bad probability '" + s + "'");
    }
}

}  // namespace dsl_detail

inline Protocol parse_protocol(const std::string& text) {
    using namespace dsl_detail;
    Protocol p;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    enum { Head, Rules } section = Head;
    bool have_states = false, have_initial = false, have_output = false, named = false;

    auto require_states = [&](int ln) {
        if (!have_states) throw ParseError(ln, "rule before states: declaration");
    };

    while (std::getline(in, raw)) {
        ++line;
        const std::string s = strip(raw);
        if (s.empty()) continue;

        if (section == Head) {
            if (s.rfind("protocol", 0) == 0) {
                const auto toks = split_ws(s);
                if (toks.size() != 2) throw ParseError(line, "expected: protocol <name>");
                p.name = toks[1];
                named = true;
                continue;
            }
            if (s.rfind("states:", 0) == 0) {
                const auto toks = split_ws(s.substr(7));
                if (toks.empty()) throw ParseError(line, "states: needs at least one state");
                for (const auto& t : toks) {
                    if (p.has_state(t)) throw ParseError(line, "duplicate state '" + t + "'");
                    p.add_state(t);
                }
                have_states = true;
                continue;
            }
            if (s.rfind("initial:", 0) == 0) {
                const auto toks = split_ws(s.substr(8));
                if (toks.size() != 1) throw ParseError(line, "initial: needs one state");
                require_states(line);
                if (!p.has_state(toks[0]))
                    throw ParseError(line, "initial state '" + toks[0] + "' not declared");
                p.set_initial(toks[0]);
                have_initial = true;
                continue;
            }
            if (s.rfind("output:", 0) == 0) {
                const auto toks = split_ws(s.substr(7));
                require_states(line);
                for (const auto& t : toks)
                    if (!p.has_state(t))
                        throw ParseError(line, "output state '" + t + "' not declared");
                p.set_output(toks);
                have_output = true;
                continue;
            }
            if (s == "rules:") {
                require_states(line);
                section = Rules;
                continue;
            }
            throw ParseError(line, "unexpected line '" + s + "'");
        }

        // rule line
        std::size_t pos = 0;
        const TripleText pat = parse_triple(s, pos, line);
        for (const auto& st : {pat.a, pat.b})
            if (!p.has_state(st)) throw ParseError(line, "undeclared state '" + st + "'");
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        if (s.compare(pos, 2, "->") != 0) throw ParseError(line, "expected '->'");
        pos += 2;

        Rule r;
        r.a = p.state_id(pat.a);
        r.b = p.state_id(pat.b);
        r.edge = static_cast<std::uint8_t>(pat.edge);

        std::string rest = strip(s.substr(pos));
        std::vector<std::string> alts;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= rest.size(); ++i) {
            if (i == rest.size() || rest[i] == '|') {
                alts.push_back(strip(rest.substr(start, i - start)));
                start = i + 1;
            }
        }
        const bool weighted = alts.size() > 1 || rest.find(':') != std::string::npos;
        for (auto& alt : alts) {
            Branch br;
            std::size_t apos = 0;
            if (weighted) {
                const auto colon = alt.find(':');
                if (colon == std::string::npos)
                    throw ParseError(line, "branch needs '<p>: (...)'");
                br.weight = parse_weight(strip(alt.substr(0, colon)), line);
                apos = colon + 1;
            } else {
                br.weight = Rational::one();
            }
            const TripleText out = parse_triple(alt, apos, line);
            for (const auto& st : {out.a, out.b})
                if (!p.has_state(st)) throw ParseError(line, "undeclared state '" + st + "'");
            br.out = {p.state_id(out.a), p.state_id(out.b),
                      static_cast<std::uint8_t>(out.edge)};
            r.branches.push_back(br);
        }
        try {
            p.add_rule(std::move(r));
        } catch (const Error& e) {
            throw ParseError(line, e.what());
        }
    }

    if (!named) throw ParseError(line, "missing 'protocol <name>' header");
    if (!have_states) throw ParseError(line, "missing states: declaration");
    if (!have_initial) throw ParseError(line, "missing initial: declaration");
    if (!have_output) p.output.assign(p.size(), true);
    p.finalize();
    return p;
}

// Canonical form: states in declaration order, rules sorted by pattern.
inline std::string serialize_protocol(const Protocol& p) {
    std::ostringstream out;
    out << "protocol " << p.name << "\n";
    out << "states:";
    for (const auto& s : p.states) out << " " << s;
    out << "\n";
    out << "initial: " << p.state_name(p.initial) << "\n";
    if (std::find(p.output.begin(), p.output.end(), false) != p.output.end()) {
        out << "output:";
        for (StateId s = 0; s < p.size(); ++s)
            if (p.output[s]) out << " " << p.state_name(s);
        out << "\n";
    }
    out << "rules:\n";
    std::vector<const Rule*> sorted;
    for (const auto& r : p.rules) sorted.push_back(&r);
    std::sort(sorted.begin(), sorted.end(), [](const Rule* x, const Rule* y) {
        return std::tie(x->a, x->b, x->edge) < std::tie(y->a, y->b, y->edge);
    });
    auto triple = [&](StateId a, StateId b, int e) {
        return "(" + p.state_name(a) + "," + p.state_name(b) + "," + std::to_string(e) + ")";
    };
    for (const Rule* r : sorted) {
        out << triple(r->a, r->b, r->edge) << " -> ";
        if (r->branches.size() == 1 && r->branches.front().weight == Rational::one()) {
            const auto& o = r->branches.front().out;
            out << triple(o.a, o.b, o.edge);
        } else {
            bool first = true;
            for (const auto& br : r->branches) {
                if (!first) out << " | ";
                first = false;
                out << br.weight.str() << ": " << triple(br.out.a, br.out.b, br.out.edge);
            }
        }
        out << "\n";
    }
    return out.str();
}

// Diagnostics: state count, effective-rule count, unreachable states (no rule
// path from the seed states under any interaction sequence) and dead rules.
inline ValidationReport validate_protocol(const Protocol& p) {
    ValidationReport rep;
    rep.state_count = p.size();
    for (const auto& r : p.rules)
        if (r.effective) ++rep.effective_rules;

    std::vector<bool> reach(p.size(), false);
    reach[p.initial] = true;
    if (p.setup.kind != Setup::Uniform) reach[p.state_id(p.setup.special)] = true;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& r : p.rules) {
            if (!reach[r.a] || !reach[r.b]) continue;
            for (const auto& br : r.branches) {
                for (StateId s : {br.out.a, br.out.b}) {
                    if (!reach[s]) {
                        reach[s] = true;
                        grew = true;
                    }
                }
            }
        }
    }
    for (StateId s = 0; s < p.size(); ++s)
        if (!reach[s]) rep.warnings.push_back("unreachable state " + p.state_name(s));
    for (const auto& r : p.rules)
        if (!reach[r.a] || !reach[r.b])
            rep.warnings.push_back("dead rule (" + p.pattern_str(r) + ")");
    return rep;
}

inline ProtocolSource load_protocol_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open protocol file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    ProtocolSource src;
    src.text = buf.str();
    src.protocol = parse_protocol(src.text);
    src.provenance = path;
    return src;
}

}  // namespace netcon
