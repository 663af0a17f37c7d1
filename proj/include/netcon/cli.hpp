// Command-line front end: run / experiment / verify / oracle.
// Exit codes: 0 success or pass, 1 verification failure, 2 usage error.
#pragma once

#include "netcon/catalog.hpp"
#include "netcon/chain.hpp"
#include "netcon/dsl.hpp"
#include "netcon/experiment.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace netcon {

namespace cli_detail {

// "-p" accepts a builtin name, a parameterised name like krc(3), or a file.
inline ProtocolSource resolve_protocol(const std::string& spec) {
    std::string name = spec;
    std::map<std::string, long> params;
    const auto paren = spec.find('(');
    if (paren != std::string::npos && spec.back() == ')') {
        name = spec.substr(0, paren);
        const std::string arg = spec.substr(paren + 1, spec.size() - paren - 2);
        const std::map<std::string, const char*> keys = {{"krc", "k"},
                                                         {"c-cliques", "c"},
                                                         {"power-degree", "d"},
                                                         {"leader-replication", "v1"}};
        auto it = keys.find(name);
        if (it == keys.end()) throw UsageError("protocol '" + name + "' takes no parameter");
        try {
            params[it->second] = std::stol(arg);
        } catch (const std::exception&) {
            throw UsageError("bad parameter '" + arg + "' for " + name);
        }
    }
    const auto& names = builtin_names();
    if (std::find(names.begin(), names.end(), name) != names.end() ||
        name == "maximum-matching") {
        ProtocolSource src;
        src.protocol = builtin(name, params);
        src.text = serialize_protocol(src.protocol);
        src.provenance = "builtin:" + spec;
        return src;
    }
    if (std::filesystem::exists(spec)) return load_protocol_file(spec);
    throw UsageError("unknown protocol '" + spec + "' (not a builtin, not a file)");
}

inline std::vector<std::uint32_t> parse_ns(const std::string& s) {
    std::vector<std::uint32_t> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            const long v = std::stol(tok);
            if (v < 2) throw std::out_of_range("n");
            out.push_back(static_cast<std::uint32_t>(v));
        } catch (const std::exception&) {
            throw UsageError("bad population list entry '" + tok + "'");
        }
    }
    if (out.empty()) throw UsageError("--ns needs at least one value");
    return out;
}

inline std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

inline void print_stats_line(std::ostream& out, const TrialStats& st) {
    out << "n=" << st.n << "  trials=" << st.trials << "  mean=" << fmt(st.mean)
        << "  stddev=" << fmt(st.stddev) << "  stderr=" << fmt(st.stderr_)
        << "  min=" << st.min << "  max=" << st.max << "  capped=" << st.capped << "\n";
}

// plain `key = value` lines mirroring the experiment flags
struct ExperimentConfig {
    std::string protocol;
    std::string ns;
    std::uint32_t trials = 0;
    std::uint64_t seed = 0;
    bool fit = false;
    std::string csv;
    bool has_trials = false, has_seed = false;
};

inline ExperimentConfig read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file '" + path + "'");
    ExperimentConfig cfg;
    std::string line;
    int ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (eq == std::string::npos)
            throw UsageError("config line " + std::to_string(ln) + ": expected key = value");
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key == "protocol") cfg.protocol = val;
        else if (key == "ns") cfg.ns = val;
        else if (key == "trials") { cfg.trials = std::stoul(val); cfg.has_trials = true; }
        else if (key == "seed") { cfg.seed = std::stoull(val); cfg.has_seed = true; }
        else if (key == "fit") cfg.fit = val == "true" || val == "1";
        else if (key == "csv") cfg.csv = val;
        else throw UsageError("config line " + std::to_string(ln) + ": unknown key '" + key + "'");
    }
    return cfg;
}

}  // namespace cli_detail

inline int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
    using namespace cli_detail;
    CLI::App app{"network constructor laboratory"};
    app.require_subcommand(1);

    std::string proto_spec;
    std::uint32_t n = 0, trials = 0;
    std::uint64_t seed = 1;
    std::uint64_t cap = 0;
    std::string trace_path, csv_path, ns_spec, config_path, dump_path;
    bool do_fit = false, do_hitting = false, do_verify = false;
    std::uint32_t oracle_bound = 4;

    auto* run_cmd = app.add_subcommand("run", "single seeded execution");
    run_cmd->add_option("-p,--protocol", proto_spec, "builtin name or file")->required();
    run_cmd->add_option("-n", n, "population size")->required();
    run_cmd->add_option("--seed", seed, "master seed");
    run_cmd->add_option("--cap", cap, "step cap (default: per-protocol policy)");
    run_cmd->add_option("--trace", trace_path, "write an interaction trace");

    auto* exp_cmd = app.add_subcommand("experiment", "n-sweep with statistics");
    exp_cmd->add_option("-p,--protocol", proto_spec, "builtin name or file");
    exp_cmd->add_option("--ns", ns_spec, "comma-separated population sizes");
    exp_cmd->add_option("--trials", trials, "trials per n");
    exp_cmd->add_option("--seed", seed, "master seed");
    exp_cmd->add_flag("--fit", do_fit, "fit the log-log exponent");
    exp_cmd->add_option("--csv", csv_path, "write rows as CSV");
    exp_cmd->add_option("--config", config_path, "key = value file mirroring the flags");

    auto* ver_cmd = app.add_subcommand("verify", "all trials must reach the target");
    ver_cmd->add_option("-p,--protocol", proto_spec, "builtin name or file")->required();
    ver_cmd->add_option("-n", n, "population size")->required();
    ver_cmd->add_option("--trials", trials, "number of trials")->required();
    ver_cmd->add_option("--seed", seed, "master seed");
    ver_cmd->add_option("--cap", cap, "step cap (default: per-protocol policy)");

    auto* ora_cmd = app.add_subcommand("oracle", "exact chain analysis at tiny n");
    ora_cmd->add_option("-p,--protocol", proto_spec, "builtin name or file")->required();
    ora_cmd->add_option("-n", n, "population size")->required();
    ora_cmd->add_flag("--hitting", do_hitting, "expected steps to stability");
    ora_cmd->add_flag("--verify", do_verify, "closed-class stability verdict");
    ora_cmd->add_option("--dump", dump_path, "write the chain (diagnostic)");
    ora_cmd->add_option("--bound", oracle_bound, "population bound (<= 8)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (run_cmd->parsed()) {
            const ProtocolSource src = resolve_protocol(proto_spec);
            const Protocol& p = src.protocol;
            Rng setup_rng = Rng::stream(seed, 0, 1);
            std::optional<Graph> input;
            const Overrides ov = default_overrides(p, n, setup_rng, &input);
            Configuration c = initial_configuration(n, p, ov);
            const StabilityChecker checker = make_stability_checker(p);
            const std::uint64_t use_cap = cap ? cap : cap_for(p, n);
            Rng rng = Rng::stream(seed, 0, 0);
            RunOptions opts;
            if (!checker)
                opts.quiescence_window = kQuiescenceFactor * std::uint64_t(n) * n;
            std::ofstream trace_file;
            if (!trace_path.empty()) {
                trace_file.open(trace_path);
                if (!trace_file) throw Error("cannot write trace to '" + trace_path + "'");
                opts.trace = [&](const ChangeRecord& r) {
                    trace_file << format_trace_line(r, p) << "\n";
                };
            }
            const RunResult r = run_until(c, p, checker, use_cap, rng, opts);
            const Graph g = output_graph(c, p);
            out << "protocol: " << p.name
                << (p.params.empty() ? "" : " [" + params_string(p) + "]")
                << "  |Q|=" << p.size() << "\n";
            out << "n=" << n << "  seed=" << seed << "  cap=" << use_cap << "\n";
            out << "steps: " << r.steps << "  reason: " << to_string(r.reason)
                << "  last-edge-change: " << r.last_edge_change << "\n";
            out << "output graph: " << g.nodes.size() << " nodes, " << g.edges.size()
                << " active edges\n";
            const auto target = make_target(p, n, input);
            bool ok = r.reason != StopReason::StepCap;
            if (target) {
                const bool hit = target(g);
                out << "target: " << (hit ? "satisfied" : "missed") << "  (stability: "
                    << (checker_is_estimated(p, n) ? "estimated" : "confirmed") << ")\n";
                ok = ok && hit;
            }
            return ok ? 0 : 1;
        }

        if (exp_cmd->parsed()) {
            if (!config_path.empty()) {
                const auto cfg = read_config_file(config_path);
                if (proto_spec.empty()) proto_spec = cfg.protocol;
                if (ns_spec.empty()) ns_spec = cfg.ns;
                if (trials == 0 && cfg.has_trials) trials = cfg.trials;
                if (cfg.has_seed && seed == 1) seed = cfg.seed;
                if (cfg.fit) do_fit = true;
                if (csv_path.empty()) csv_path = cfg.csv;
            }
            if (proto_spec.empty()) throw UsageError("experiment needs --protocol");
            if (ns_spec.empty()) throw UsageError("experiment needs --ns");
            if (trials == 0) throw UsageError("experiment needs --trials");
            const ProtocolSource src = resolve_protocol(proto_spec);
            const Protocol& p = src.protocol;
            const auto ns = parse_ns(ns_spec);
            const SweepTable table =
                sweep(p, ns, trials, seed, [&](std::uint32_t nn) { return cap_for(p, nn); });
            out << "protocol: " << p.name
                << (p.params.empty() ? "" : " [" + params_string(p) + "]") << "  seed=" << seed
                << "\n";
            for (const auto& row : table.rows) {
                if (!row.valid) {
                    out << "n=" << row.n << "  INVALID (" << row.note << ")\n";
                    continue;
                }
                print_stats_line(out, row.stats);
            }
            if (do_fit) {
                const ExponentFit fit = fit_exponent(table);
                out << "log-log fit over n in [" << fit.n_min << ", " << fit.n_max
                    << "]: slope=" << fmt(fit.slope) << "  intercept=" << fmt(fit.intercept)
                    << "  r2=" << fmt(fit.r2) << "\n";
            }
            if (!csv_path.empty()) {
                emit_csv(table, csv_path);
                out << "csv written to " << csv_path << "\n";
            }
            return 0;
        }

        if (ver_cmd->parsed()) {
            const ProtocolSource src = resolve_protocol(proto_spec);
            const Protocol& p = src.protocol;
            const VerifyOutcome vr = verify_trials(
                p, n, trials, seed,
                cap ? std::optional<std::uint64_t>(cap) : std::nullopt);
            out << "protocol: " << p.name
                << (p.params.empty() ? "" : " [" + params_string(p) + "]") << "  n=" << n
                << "  trials=" << vr.trials << "  reached-target=" << vr.successes
                << (vr.estimated ? "  (stability: estimated)" : "  (stability: confirmed)")
                << "\n";
            for (const auto& f : vr.failures) out << "  " << f << "\n";
            out << (vr.passed() ? "PASS" : "FAIL") << "\n";
            return vr.passed() ? 0 : 1;
        }

        if (ora_cmd->parsed()) {
            if (oracle_bound > kOracleMaxNodes)
                throw UsageError("--bound cannot exceed " + std::to_string(kOracleMaxNodes));
            const ProtocolSource src = resolve_protocol(proto_spec);
            const Protocol& p = src.protocol;
            Rng setup_rng = Rng::stream(seed, 0, 1);
            std::optional<Graph> input;
            const Overrides ov = default_overrides(p, n, setup_rng, &input);
            EnumerateOptions eopts;
            eopts.node_bound = oracle_bound;
            const ReachabilityChain chain = enumerate_reachable(p, n, ov, eopts);
            out << "protocol: " << p.name << "  n=" << n
                << "  reachable configurations: " << chain.size() << "\n";
            if (!dump_path.empty()) {
                std::ofstream df(dump_path);
                if (!df) throw Error("cannot write chain dump to '" + dump_path + "'");
                dump_chain(df, chain);
                out << "chain dump written to " << dump_path << "\n";
            }
            int rc = 0;
            if (do_hitting) {
                const StabilityChecker checker = make_stability_checker(p);
                if (!checker)
                    throw Error(p.name + " has no stability characterisation to absorb into");
                const double h = expected_hitting_time(chain, checker);
                out << "expected steps to stability: " << fmt(h) << "\n";
            }
            if (do_verify) {
                const auto target = make_target(p, n, input);
                const StabilityVerdict v = verify_stabilization(chain, target);
                out << "closed classes: " << v.classes.size() << "\n";
                for (const auto& cls : v.classes) {
                    out << "  class of " << cls.size << " configuration(s): output "
                        << cls.output.nodes.size() << " nodes / " << cls.output.edges.size()
                        << " edges, " << (cls.constant_output ? "constant" : "NOT constant");
                    if (target) out << ", target " << (cls.target_ok ? "ok" : "MISSED");
                    out << "\n";
                }
                if (target) {
                    out << (v.pass ? "PASS" : "FAIL") << "\n";
                    if (!v.pass) rc = 1;
                } else {
                    out << "no target predicate for " << p.name
                        << "; classes reported descriptively\n";
                }
            }
            return rc;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace netcon
