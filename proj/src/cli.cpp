#include "digitdrift/cli.hpp"

#include "digitdrift/bitstring.hpp"
#include "digitdrift/charfn.hpp"
#include "digitdrift/cylinder.hpp"
#include "digitdrift/measure.hpp"
#include "digitdrift/oracle.hpp"
#include "digitdrift/stochastic.hpp"
#include "digitdrift/variance.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace digitdrift::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

BigInt parse_big(const std::string& text, const char* flag) {
    try {
        BigInt v(text);
        if (sgn(v) < 0) throw UsageError(std::string(flag) + " must be non-negative");
        return v;
    } catch (const std::invalid_argument&) {
        throw UsageError(std::string(flag) + ": not a decimal integer: " + text);
    }
}

Rat parse_bias(const std::string& text) {
    Rat p;
    try {
        p = parse_rat(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--p: ") + e.what());
    }
    if (p < 0 || p > 1) throw UsageError("--p must lie in [0, 1]");
    return p;
}

std::vector<double> linspace(double lo, double hi, unsigned steps) {
    if (steps == 0) throw UsageError("--grid: STEPS must be >= 1");
    std::vector<double> xs;
    xs.reserve(steps);
    if (steps == 1) {
        xs.push_back(lo);
        return xs;
    }
    for (unsigned i = 0; i < steps; ++i)
        xs.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1));
    return xs;
}

// Result sink: stdout by default; with --out, the table plus a manifest
class Sink {
public:
    Sink(std::string subcommand, std::string out_path)
        : subcommand_(std::move(subcommand)),
          out_path_(std::move(out_path)),
          start_(std::chrono::steady_clock::now()) {}

    void param(const std::string& key, const std::string& value) { params_[key] = value; }
    void param(const std::string& key, long long value) { params_[key] = value; }
    void param(const std::string& key, unsigned long long value) { params_[key] = value; }
    void seed(uint64_t s) { seed_ = s; has_seed_ = true; }

    void deliver(const std::string& text) const {
        if (out_path_.empty()) {
            std::cout << text;
            if (!text.empty() && text.back() != '\n') std::cout << '\n';
            return;
        }
        write_file(out_path_, text);
        json manifest;
        manifest["subcommand"] = subcommand_;
        manifest["parameters"] = params_;
        if (has_seed_) manifest["seed"] = seed_;
        manifest["tool_version"] = kToolVersion;
        manifest["outputs"] = json::array({out_path_});
        manifest["wall_clock_seconds"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        write_file(out_path_ + ".manifest.json", manifest.dump(2) + "\n");
    }

private:
    static void write_file(const std::string& path, const std::string& text) {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + path);
        f << text;
        if (!f) throw std::runtime_error("write failed: " + path);
    }

    std::string subcommand_;
    std::string out_path_;
    json params_ = json::object();
    uint64_t seed_ = 0;
    bool has_seed_ = false;
    std::chrono::steady_clock::time_point start_;
};

std::string rows_to_csv(const ExperimentResult& result) {
    std::ostringstream csv;
    csv << "n,statistic,value,target,deviation\n";
    for (const auto& row : result.rows)
        csv << row.n << ',' << row.statistic << ',' << format_double(row.value) << ','
            << format_double(row.target) << ',' << format_double(row.deviation) << '\n';
    return csv.str();
}

// Renders an exact rational either as its canonical string or as a float
json rat_field(const Rat& q, bool float_mode) {
    if (float_mode) return to_double(q);
    return rat_str(q);
}

// ---- subcommand handlers ----

void run_measure(const BigInt& a, bool have_window, long lo, long hi, bool float_mode,
                 Sink& sink) {
    MeasureRep rep = build_measure(a);
    if (!have_window) {
        lo = -12;
        hi = support_upper_bound(rep);
    }
    if (lo > hi) throw UsageError("--window: LO must be <= HI");
    json out;
    out["a"] = a.get_str();
    out["window"] = json::array({lo, hi});
    out["rep"] = json::parse(to_json_text(rep));
    json values = json::object();
    for (long d = lo; d <= hi; ++d) values[std::to_string(d)] = rat_field(evaluate(rep, d), float_mode);
    out["values"] = values;
    out["total_mass"] = rat_field(total_mass(rep), float_mode);
    out["mean"] = rat_field(mean(rep), float_mode);
    out["variance"] = rat_field(variance(rep), float_mode);
    sink.deliver(out.dump(2) + "\n");
}

void run_variance(const BigInt& a, bool breakdown, bool float_mode, Sink& sink) {
    VarianceBreakdown v = variance_closed_form(a);
    json out;
    out["a"] = a.get_str();
    out["total"] = rat_field(v.total, float_mode);
    if (breakdown) {
        out["leading"] = rat_field(v.leading, float_mode);
        out["tail"] = rat_field(v.tail, float_mode);
        out["correlation_sum"] = rat_field(v.correlation_sum, float_mode);
        out["boundary_sum"] = rat_field(v.boundary_sum, float_mode);
    }
    sink.deliver(out.dump(2) + "\n");
}

void run_moments(const BigInt& a, unsigned max_order, bool float_mode, Sink& sink) {
    std::vector<Rat> m = moments_via_jets(a, max_order);
    std::ostringstream csv;
    csv << "k,m_k\n";
    for (unsigned k = 0; k < m.size(); ++k) {
        if (float_mode)
            csv << k << ',' << format_double(to_double(m[k])) << '\n';
        else
            csv << k << ',' << rat_str(m[k]) << '\n';
    }
    sink.deliver(csv.str());
}

void run_charfn(const BigInt& a, double lo, double hi, unsigned steps, Sink& sink) {
    std::ostringstream csv;
    csv << "theta,re,im\n";
    for (double theta : linspace(lo, hi, steps)) {
        auto v = eval_charfn(a, theta);
        csv << format_double(theta) << ',' << format_double(v.real()) << ','
            << format_double(v.imag()) << '\n';
    }
    sink.deliver(csv.str());
}

void run_cylinders(const BigInt& a, long d, Sink& sink) {
    WordSet ws = solve(a, d);
    std::ostringstream text;
    for (const auto& w : ws.words) text << w.chars << '\n';
    text << "density " << rat_str(density(ws)) << '\n';
    sink.deliver(text.str());
}

void run_oracle(const BigInt& a, long d, unsigned M, bool float_mode, Sink& sink) {
    auto hist = brute_histogram(a, CountingWindow{M});
    auto it = hist.find(d);
    uint64_t count = it == hist.end() ? 0 : it->second;
    Rat brute = Rat(BigInt(count)) / Rat(pow2_int(M));
    Rat exact = evaluate(build_measure(a), d);
    json out;
    out["a"] = a.get_str();
    out["d"] = d;
    out["M"] = M;
    out["count"] = count;
    out["brute"] = rat_field(brute, float_mode);
    out["exact"] = rat_field(exact, float_mode);
    out["abs_error"] = std::abs(to_double(brute - exact));
    sink.deliver(out.dump(2) + "\n");
}

void run_cusick(const BigInt& max_a, bool float_mode, Sink& sink) {
    CusickScan scan = cusick_scan(max_a);
    json out;
    out["max_a"] = max_a.get_str();
    out["min_c"] = rat_field(scan.min_c, float_mode);
    out["argmin"] = scan.argmin.get_str();
    sink.deliver(out.dump(2) + "\n");
}

} // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"digitdrift: exact and empirical distribution of s2(n+a) - s2(n)"};
    app.require_subcommand(1);

    // shared option storage
    std::string a_str, p_str = "1/2", out_path, max_a_str;
    bool float_mode = false, breakdown = false;
    std::vector<long> window;
    std::vector<double> grid_spec;
    long d = 0;
    unsigned M = 20, max_order = 6, seeds = 1;
    unsigned long n = 1024;
    uint64_t seed = 1;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write results to PATH plus PATH.manifest.json");
        cmd->add_flag("--float", float_mode, "emit floats instead of exact rationals");
    };

    CLI::App* measure_cmd = app.add_subcommand("measure", "exact measure values on a window");
    measure_cmd->add_option("--a", a_str, "shift a (decimal, arbitrary size)")->required();
    measure_cmd->add_option("--window", window, "evaluation window LO HI")->expected(2);
    add_common(measure_cmd);

    CLI::App* variance_cmd = app.add_subcommand("variance", "closed-form variance of mu_a");
    variance_cmd->add_option("--a", a_str, "shift a >= 1")->required();
    variance_cmd->add_flag("--breakdown", breakdown, "also print the four formula terms");
    add_common(variance_cmd);

    CLI::App* moments_cmd = app.add_subcommand("moments", "exact moments via the jet chain");
    moments_cmd->add_option("--a", a_str, "shift a")->required();
    moments_cmd->add_option("--max-order", max_order, "highest moment order K (default 6)");
    add_common(moments_cmd);

    CLI::App* charfn_cmd = app.add_subcommand("charfn", "characteristic function on a theta grid");
    charfn_cmd->add_option("--a", a_str, "shift a")->required();
    charfn_cmd->add_option("--grid", grid_spec, "grid LO HI STEPS (default 0 2*pi*63/64 64)")
        ->expected(3);
    add_common(charfn_cmd);

    CLI::App* cylinders_cmd = app.add_subcommand("cylinders", "suffix words of {n : s2(n+a)-s2(n)=d}");
    cylinders_cmd->add_option("--a", a_str, "shift a")->required();
    cylinders_cmd->add_option("--d", d, "difference d")->required();
    add_common(cylinders_cmd);

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force density vs the exact path");
    oracle_cmd->add_option("--a", a_str, "shift a")->required();
    oracle_cmd->add_option("--d", d, "difference d")->required();
    oracle_cmd->add_option("--M", M, "count over n < 2^M (M <= 30, default 20)");
    add_common(oracle_cmd);

    CLI::App* corr_cmd = app.add_subcommand("corr", "order-2 correlation of the sign stream");
    corr_cmd->add_option("--n", n, "bit count top index (default 1024)");
    corr_cmd->add_option("--seed", seed, "base seed (default 1)");
    corr_cmd->add_option("--seeds", seeds, "number of consecutive seeds (default 1)");
    corr_cmd->add_option("--p", p_str, "bit bias NUM/DEN (default 1/2)");
    add_common(corr_cmd);

    CLI::App* clt_cmd = app.add_subcommand("clt", "renormalized moments vs normal-law targets");
    clt_cmd->add_option("--n", n, "bit count top index (default 1024)");
    clt_cmd->add_option("--seed", seed, "base seed (default 1)");
    clt_cmd->add_option("--seeds", seeds, "number of consecutive seeds (default 1)");
    clt_cmd->add_option("--max-order", max_order, "highest moment order K <= 12 (default 6)");
    clt_cmd->add_option("--p", p_str, "bit bias NUM/DEN (default 1/2)");
    add_common(clt_cmd);

    CLI::App* cdf_cmd = app.add_subcommand("cdf", "rescaled exact CDF against Phi");
    cdf_cmd->add_option("--n", n, "bit count top index (default 1024)");
    cdf_cmd->add_option("--seed", seed, "base seed (default 1)");
    cdf_cmd->add_option("--seeds", seeds, "number of consecutive seeds (default 1)");
    cdf_cmd->add_option("--p", p_str, "bit bias NUM/DEN (default 1/2)");
    cdf_cmd->add_option("--grid", grid_spec, "grid LO HI STEPS (default -4 4 41)")->expected(3);
    add_common(cdf_cmd);

    CLI::App* cusick_cmd = app.add_subcommand("cusick", "minimum Cusick statistic under max-a");
    cusick_cmd->add_option("--max-a", max_a_str, "scan 1 <= a < MAX_A")->required();
    add_common(cusick_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exit 0
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help() << std::flush;
        return 2;
    }

    try {
        if (app.got_subcommand(measure_cmd)) {
            Sink sink("measure", out_path);
            BigInt a = parse_big(a_str, "--a");
            bool have_window = !window.empty();
            sink.param("a", a_str);
            if (have_window) {
                sink.param("window_lo", static_cast<long long>(window[0]));
                sink.param("window_hi", static_cast<long long>(window[1]));
            }
            sink.param("float", float_mode ? "true" : "false");
            run_measure(a, have_window, have_window ? window[0] : 0, have_window ? window[1] : 0,
                        float_mode, sink);
        } else if (app.got_subcommand(variance_cmd)) {
            Sink sink("variance", out_path);
            BigInt a = parse_big(a_str, "--a");
            sink.param("a", a_str);
            sink.param("breakdown", breakdown ? "true" : "false");
            sink.param("float", float_mode ? "true" : "false");
            run_variance(a, breakdown, float_mode, sink);
        } else if (app.got_subcommand(moments_cmd)) {
            Sink sink("moments", out_path);
            BigInt a = parse_big(a_str, "--a");
            sink.param("a", a_str);
            sink.param("max_order", static_cast<unsigned long long>(max_order));
            sink.param("float", float_mode ? "true" : "false");
            run_moments(a, max_order, float_mode, sink);
        } else if (app.got_subcommand(charfn_cmd)) {
            Sink sink("charfn", out_path);
            BigInt a = parse_big(a_str, "--a");
            double lo = 0.0, hi = 2.0 * std::numbers::pi * 63.0 / 64.0;
            unsigned steps = 64;
            if (!grid_spec.empty()) {
                lo = grid_spec[0];
                hi = grid_spec[1];
                if (grid_spec[2] < 1) throw UsageError("--grid: STEPS must be >= 1");
                steps = static_cast<unsigned>(grid_spec[2]);
            }
            sink.param("a", a_str);
            sink.param("grid_lo", format_double(lo));
            sink.param("grid_hi", format_double(hi));
            sink.param("grid_steps", static_cast<unsigned long long>(steps));
            run_charfn(a, lo, hi, steps, sink);
        } else if (app.got_subcommand(cylinders_cmd)) {
            Sink sink("cylinders", out_path);
            BigInt a = parse_big(a_str, "--a");
            sink.param("a", a_str);
            sink.param("d", static_cast<long long>(d));
            run_cylinders(a, d, sink);
        } else if (app.got_subcommand(oracle_cmd)) {
            Sink sink("oracle", out_path);
            if (M > 30) throw UsageError("--M must be <= 30");
            BigInt a = parse_big(a_str, "--a");
            sink.param("a", a_str);
            sink.param("d", static_cast<long long>(d));
            sink.param("M", static_cast<unsigned long long>(M));
            sink.param("float", float_mode ? "true" : "false");
            run_oracle(a, d, M, float_mode, sink);
        } else if (app.got_subcommand(corr_cmd)) {
            Sink sink("corr", out_path);
            ExperimentConfig config{seed, parse_bias(p_str), n, seeds, max_order};
            sink.param("n", static_cast<unsigned long long>(n));
            sink.param("p", p_str);
            sink.param("seeds", static_cast<unsigned long long>(seeds));
            sink.seed(seed);
            sink.deliver(rows_to_csv(correlation_experiment(config)));
        } else if (app.got_subcommand(clt_cmd)) {
            Sink sink("clt", out_path);
            ExperimentConfig config{seed, parse_bias(p_str), n, seeds, max_order};
            sink.param("n", static_cast<unsigned long long>(n));
            sink.param("p", p_str);
            sink.param("seeds", static_cast<unsigned long long>(seeds));
            sink.param("max_order", static_cast<unsigned long long>(max_order));
            sink.seed(seed);
            sink.deliver(rows_to_csv(clt_moments_experiment(config)));
        } else if (app.got_subcommand(cdf_cmd)) {
            Sink sink("cdf", out_path);
            ExperimentConfig config{seed, parse_bias(p_str), n, seeds, max_order};
            double lo = -4.0, hi = 4.0;
            unsigned steps = 41;
            if (!grid_spec.empty()) {
                lo = grid_spec[0];
                hi = grid_spec[1];
                if (grid_spec[2] < 1) throw UsageError("--grid: STEPS must be >= 1");
                steps = static_cast<unsigned>(grid_spec[2]);
            }
            sink.param("n", static_cast<unsigned long long>(n));
            sink.param("p", p_str);
            sink.param("seeds", static_cast<unsigned long long>(seeds));
            sink.param("grid_lo", format_double(lo));
            sink.param("grid_hi", format_double(hi));
            sink.param("grid_steps", static_cast<unsigned long long>(steps));
            sink.seed(seed);
            sink.deliver(rows_to_csv(cdf_experiment(config, linspace(lo, hi, steps))));
        } else if (app.got_subcommand(cusick_cmd)) {
            Sink sink("cusick", out_path);
            BigInt max_a = parse_big(max_a_str, "--max-a");
            sink.param("max_a", max_a_str);
            sink.param("float", float_mode ? "true" : "false");
            run_cusick(max_a, float_mode, sink);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace digitdrift::cli
