// Monte-Carlo harness: seeded independent trials, n-sweeps, log-log exponent
// fits and CSV output. Trials may run on several threads (NETCON_THREADS);
// stream-per-trial seeding keeps results identical to a sequential run.
#pragma once

#include "netcon/catalog.hpp"
#include "netcon/configuration.hpp"
#include "netcon/engine.hpp"
#include "netcon/rng.hpp"
#include "netcon/stability.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace netcon {

inline constexpr std::uint64_t kQuiescenceFactor = 20;  // window = 20 n^2 steps

struct TrialStats {
    std::string protocol;
    std::string params;
    std::uint32_t n = 0;
    std::uint32_t trials = 0;
    std::vector<std::uint64_t> steps;     // per trial
    std::vector<StopReason> reasons;      // per trial
    double mean = 0, stddev = 0, stderr_ = 0;
    std::uint64_t min = 0, max = 0;
    std::uint32_t capped = 0;
    bool valid = true;
    std::uint64_t seed = 0;
    std::uint64_t cap = 0;
};

struct SweepRow {
    std::uint32_t n = 0;
    TrialStats stats;
    bool valid = true;
    std::string note;
};

struct SweepTable {
    std::string protocol;
    std::string params;
    std::vector<SweepRow> rows;
};

struct ExponentFit {
    double slope = 0;
    double intercept = 0;
    double r2 = 0;
    std::uint32_t n_min = 0, n_max = 0;
};

inline std::string params_string(const Protocol& p) {
    std::string out;
    for (const auto& [k, v] : p.params) {
        if (!out.empty()) out += ";";
        out += k + "=" + std::to_string(v);
    }
    return out;
}

inline unsigned thread_budget() {
    const char* env = std::getenv("NETCON_THREADS");
    if (!env || !*env) return 1;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (!end || *end != '\0' || v < 1)
        throw Error("NETCON_THREADS must be a positive integer");
    return static_cast<unsigned>(v);
}

namespace experiment_detail {

struct TrialOutcome {
    std::uint64_t steps = 0;
    StopReason reason = StopReason::StepCap;
};

inline TrialOutcome one_trial(const Protocol& p, std::uint32_t n, std::uint64_t master,
                              std::uint64_t trial, std::uint64_t cap,
                              const StabilityChecker& checker) {
    Rng setup_rng = Rng::stream(master, trial, 1);
    const Overrides ov = default_overrides(p, n, setup_rng);
    Configuration c = initial_configuration(n, p, ov);
    Rng rng = Rng::stream(master, trial, 0);
    RunOptions opts;
    if (!checker) opts.quiescence_window = kQuiescenceFactor * std::uint64_t(n) * n;
    const RunResult r = run_until(c, p, checker, cap, rng, opts);
    return {r.steps, r.reason};
}

}  // namespace experiment_detail

inline TrialStats run_trials(const Protocol& p, std::uint32_t n, std::uint32_t trials,
                             std::uint64_t seed, std::uint64_t cap) {
    if (trials == 0) throw Error("at least one trial is required");
    if (cap == 0) throw Error("step cap must be positive");
    TrialStats st;
    st.protocol = p.name;
    st.params = params_string(p);
    st.n = n;
    st.trials = trials;
    st.seed = seed;
    st.cap = cap;
    st.steps.resize(trials);
    st.reasons.resize(trials);

    const StabilityChecker checker = make_stability_checker(p);
    const unsigned workers = std::min<unsigned>(thread_budget(), trials);
    if (workers <= 1) {
        for (std::uint32_t i = 0; i < trials; ++i) {
            const auto out = experiment_detail::one_trial(p, n, seed, i, cap, checker);
            st.steps[i] = out.steps;
            st.reasons[i] = out.reason;
        }
    } else {
        std::atomic<std::uint32_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                const StabilityChecker local = make_stability_checker(p);
                while (true) {
                    const std::uint32_t i = next.fetch_add(1);
                    if (i >= trials) return;
                    const auto out = experiment_detail::one_trial(p, n, seed, i, cap, local);
                    st.steps[i] = out.steps;
                    st.reasons[i] = out.reason;
                }
            });
        for (auto& t : pool) t.join();
    }

    std::uint64_t minv = UINT64_MAX, maxv = 0;
    double sum = 0;
    std::uint32_t converged = 0;
    for (std::uint32_t i = 0; i < trials; ++i) {
        if (st.reasons[i] == StopReason::StepCap) {
            ++st.capped;
            continue;
        }
        ++converged;
        sum += static_cast<double>(st.steps[i]);
        minv = std::min(minv, st.steps[i]);
        maxv = std::max(maxv, st.steps[i]);
    }
    if (converged == 0) throw Error(p.name + ": every trial hit the step cap");
    st.mean = sum / converged;
    double ss = 0;
    for (std::uint32_t i = 0; i < trials; ++i) {
        if (st.reasons[i] == StopReason::StepCap) continue;
        const double d = static_cast<double>(st.steps[i]) - st.mean;
        ss += d * d;
    }
    st.stddev = converged > 1 ? std::sqrt(ss / (converged - 1)) : 0.0;
    st.stderr_ = st.stddev / std::sqrt(static_cast<double>(converged));
    st.min = minv;
    st.max = maxv;
    // capped trials are tolerable below 1%; beyond that the stats are suspect
    st.valid = st.capped * 100 < trials;
    return st;
}

struct VerifyOutcome {
    std::uint32_t trials = 0;
    std::uint32_t successes = 0;
    bool estimated = false;
    std::vector<std::string> failures;  // one note per failed trial

    bool passed() const { return successes == trials; }
};

// Seeded correctness sweep: every trial must stop before the cap and satisfy
// the protocol's target predicate on its terminal output graph.
inline VerifyOutcome verify_trials(const Protocol& p, std::uint32_t n, std::uint32_t trials,
                                   std::uint64_t seed,
                                   std::optional<std::uint64_t> cap_override = {}) {
    if (trials == 0) throw Error("at least one trial is required");
    VerifyOutcome out;
    out.trials = trials;
    out.estimated = checker_is_estimated(p, n);
    const StabilityChecker checker = make_stability_checker(p);
    const std::uint64_t cap = cap_override ? *cap_override : cap_for(p, n);
    for (std::uint32_t i = 0; i < trials; ++i) {
        Rng setup_rng = Rng::stream(seed, i, 1);
        std::optional<Graph> input;
        const Overrides ov = default_overrides(p, n, setup_rng, &input);
        Configuration c = initial_configuration(n, p, ov);
        Rng rng = Rng::stream(seed, i, 0);
        RunOptions opts;
        if (!checker) opts.quiescence_window = kQuiescenceFactor * std::uint64_t(n) * n;
        const RunResult r = run_until(c, p, checker, cap, rng, opts);
        if (r.reason == StopReason::StepCap) {
            out.failures.push_back("trial " + std::to_string(i) + ": hit the step cap");
            continue;
        }
        const auto target = make_target(p, n, input);
        if (target && !target(output_graph(c, p))) {
            out.failures.push_back("trial " + std::to_string(i) +
                                   ": terminal output misses the target");
            continue;
        }
        ++out.successes;
    }
    return out;
}

inline SweepTable sweep(const Protocol& p, const std::vector<std::uint32_t>& ns,
                        std::uint32_t trials, std::uint64_t seed,
                        const std::function<std::uint64_t(std::uint32_t)>& cap_policy) {
    std::vector<std::uint32_t> sorted = ns;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() < 2) throw Error("a sweep needs at least two distinct n");
    SweepTable table;
    table.protocol = p.name;
    table.params = params_string(p);
    for (const auto n : sorted) {
        SweepRow row;
        row.n = n;
        try {
            row.stats = run_trials(p, n, trials, seed, cap_policy(n));
            row.valid = row.stats.valid;
            if (!row.valid) row.note = "cap hits above 1%";
        } catch (const Error& e) {
            row.valid = false;
            row.note = e.what();
            row.stats.protocol = p.name;
            row.stats.params = table.params;
            row.stats.n = n;
            row.stats.seed = seed;
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

// Least squares on (ln n, ln mean) over the valid rows.
inline ExponentFit fit_exponent(const SweepTable& table) {
    std::vector<std::pair<double, double>> pts;
    std::uint32_t n_min = 0, n_max = 0;
    for (const auto& row : table.rows) {
        if (!row.valid) continue;
        pts.emplace_back(std::log(static_cast<double>(row.n)), std::log(row.stats.mean));
        n_max = row.n;
        if (!n_min) n_min = row.n;
    }
    if (pts.size() < 3) throw Error("exponent fit needs at least 3 valid rows");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double m = static_cast<double>(pts.size());
    ExponentFit fit;
    fit.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / m;
    double ss_res = 0, ss_tot = 0;
    const double ybar = sy / m;
    for (auto [x, y] : pts) {
        const double e = y - (fit.intercept + fit.slope * x);
        ss_res += e * e;
        ss_tot += (y - ybar) * (y - ybar);
    }
    fit.r2 = ss_tot == 0 ? 1.0 : 1.0 - ss_res / ss_tot;
    fit.n_min = n_min;
    fit.n_max = n_max;
    return fit;
}

namespace csv_detail {

inline std::string field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

inline std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace csv_detail

inline constexpr const char* kCsvHeader =
    "protocol,params,n,trials,mean_steps,stddev,stderr,min,max,capped,seed";

inline std::string csv_row(const TrialStats& st) {
    using csv_detail::field;
    using csv_detail::num;
    std::ostringstream out;
    out << field(st.protocol) << ',' << field(st.params) << ',' << st.n << ',' << st.trials
        << ',' << num(st.mean) << ',' << num(st.stddev) << ',' << num(st.stderr_) << ','
        << st.min << ',' << st.max << ',' << st.capped << ',' << st.seed;
    return out.str();
}

inline std::string to_csv(const SweepTable& table) {
    std::string out = std::string(kCsvHeader) + "\n";
    for (const auto& row : table.rows)
        if (row.valid) out += csv_row(row.stats) + "\n";
    return out;
}

inline void emit_csv(const SweepTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write CSV to '" + path + "'");
    out << to_csv(table);
    if (!out) throw Error("write failed for '" + path + "'");
}

inline void emit_csv(const TrialStats& st, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write CSV to '" + path + "'");
    out << kCsvHeader << "\n" << csv_row(st) << "\n";
    if (!out) throw Error("write failed for '" + path + "'");
}

}  // namespace netcon
