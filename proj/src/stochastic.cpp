#include "digitdrift/stochastic.hpp"

#include "digitdrift/charfn.hpp"
#include "digitdrift/measure.hpp"
#include "digitdrift/parallel.hpp"
#include "digitdrift/variance.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

namespace digitdrift {

namespace {

std::string seed_suffix(const ExperimentConfig& config, uint64_t seed) {
    if (config.samples <= 1) return "";
    return "/seed" + std::to_string(seed);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string metadata(const ExperimentConfig& config, const char* experiment, double wall_seconds) {
    nlohmann::json j;
    j["experiment"] = experiment;
    j["seed"] = config.seed;
    j["p"] = rat_str(config.p);
    j["n"] = config.n;
    j["samples"] = config.samples;
    j["max_moment_order"] = config.max_moment_order;
    j["wall_seconds"] = wall_seconds;
    return j.dump();
}

void sort_rows(std::vector<ResultRow>& rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const ResultRow& x, const ResultRow& y) {
        return x.n != y.n ? x.n < y.n : x.statistic < y.statistic;
    });
}

std::vector<unsigned long> halving_ladder(unsigned long n) {
    std::vector<unsigned long> ladder;
    for (unsigned long m = n; m >= 16; m /= 2) {
        ladder.push_back(m);
        if (m == 16) break;
    }
    if (ladder.empty()) ladder.push_back(n);
    std::reverse(ladder.begin(), ladder.end());
    return ladder;
}

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

} // namespace

std::vector<uint8_t> gen_bits(uint64_t seed, const Rat& p, unsigned long n) {
    if (p < 0 || p > 1) throw std::domain_error("gen_bits: p outside [0, 1]");
    std::vector<uint8_t> bits(n + 1);
    if (p == 1) {
        std::fill(bits.begin(), bits.end(), uint8_t{1});
        return bits;
    }
    if (p == 0) return bits;
    // cutoff = floor(p * 2^64); draw < cutoff has probability cutoff / 2^64
    Rat scaled = p * Rat(pow2_int(64));
    BigInt cut = scaled.get_num() / scaled.get_den();
    uint64_t cutoff = mpz_get_ui(cut.get_mpz_t());
    std::mt19937_64 engine(seed);
    for (auto& b : bits) b = engine() < cutoff ? 1 : 0;
    return bits;
}

std::vector<uint8_t> gen_bits(const ExperimentConfig& config) {
    return gen_bits(config.seed, config.p, config.n);
}

uint64_t correlation_C2(const SignSequence& signs) {
    const auto& b = signs.signs();
    std::size_t len = b.size();
    if (len < 3) throw std::domain_error("correlation_C2: need length >= 3");
    long best = 0;
    for (std::size_t g = 1; g < len; ++g) {
        // prefix sums of b_j b_{j+g}; the max windowed |sum| is the spread
        long prefix = 0, lo = 0, hi = 0;
        for (std::size_t j = 0; j + g < len; ++j) {
            prefix += b[j] * b[j + g];
            lo = std::min(lo, prefix);
            hi = std::max(hi, prefix);
        }
        best = std::max(best, hi - lo);
    }
    return static_cast<uint64_t>(best);
}

ExperimentResult generic_variance_experiment(const ExperimentConfig& config) {
    Stopwatch watch;
    ExperimentResult result;
    double target = 4.0 * to_double(config.p) * (1.0 - to_double(config.p));
    auto ladder = halving_ladder(config.n);
    for (unsigned s = 0; s < config.samples; ++s) {
        uint64_t seed = config.seed + s;
        auto bits = gen_bits(seed, config.p, config.n);
        for (unsigned long m : ladder) {
            BitString a = BitString::from_value(assemble(bits, m));
            double value = a.is_zero() ? 0.0 : 2.0 * variance_truncated(a) / static_cast<double>(m);
            result.rows.push_back({m, "2var_over_n" + seed_suffix(config, seed), value, target,
                                   std::abs(value - target)});
        }
    }
    sort_rows(result.rows);
    result.metadata_json = metadata(config, "generic_variance", watch.seconds());
    return result;
}

ExperimentResult clt_moments_experiment(const ExperimentConfig& config) {
    if (config.max_moment_order > 12)
        throw std::domain_error("clt_moments_experiment: max_moment_order > 12");
    Stopwatch watch;
    ExperimentResult result;
    unsigned K = config.max_moment_order;
    double n_dbl = static_cast<double>(config.n);

    std::vector<std::vector<ResultRow>> buckets(config.samples);
    parallel_for(config.samples, [&](unsigned, uint64_t begin, uint64_t end) {
        for (uint64_t s = begin; s < end; ++s) {
            uint64_t seed = config.seed + s;
            auto bits = gen_bits(seed, config.p, config.n);
            BigInt a = assemble(bits, config.n);
            std::vector<Rat> m = moments_via_jets(a, K);
            for (unsigned k = 0; k <= K; ++k) {
                double value = to_double(m[k]) * std::exp2(0.5 * k) / std::pow(n_dbl, 0.5 * k);
                double target = 0.0;
                if (k % 2 == 0) {
                    unsigned j = k / 2;
                    target = to_double(Rat(factorial(k)) / Rat(pow2_int(j) * factorial(j)));
                }
                buckets[s].push_back({config.n, "mtilde_" + std::to_string(k) + seed_suffix(config, seed),
                                      value, target, std::abs(value - target)});
            }
        }
    });
    for (auto& bucket : buckets)
        result.rows.insert(result.rows.end(), bucket.begin(), bucket.end());
    sort_rows(result.rows);
    result.metadata_json = metadata(config, "clt_moments", watch.seconds());
    return result;
}

ExperimentResult cdf_experiment(const ExperimentConfig& config, const std::vector<double>& grid) {
    Stopwatch watch;
    ExperimentResult result;
    double scale = std::sqrt(static_cast<double>(config.n) / 2.0);
    for (unsigned s = 0; s < config.samples; ++s) {
        uint64_t seed = config.seed + s;
        auto bits = gen_bits(seed, config.p, config.n);
        MeasureRep rep = build_measure(assemble(bits, config.n));
        double sup = 0.0;
        for (double x : grid) {
            double value = to_double(cdf(rep, x * scale));
            double target = normal_cdf(x);
            double dev = std::abs(value - target);
            sup = std::max(sup, dev);
            result.rows.push_back(
                {config.n, "cdf@" + format_double(x) + seed_suffix(config, seed), value, target, dev});
        }
        result.rows.push_back({config.n, "sup_distance" + seed_suffix(config, seed), sup, 0.0, sup});
    }
    sort_rows(result.rows);
    result.metadata_json = metadata(config, "cdf", watch.seconds());
    return result;
}

ExperimentResult correlation_experiment(const ExperimentConfig& config) {
    Stopwatch watch;
    ExperimentResult result;
    double threshold = std::pow(static_cast<double>(config.n), 0.6);
    std::vector<std::vector<ResultRow>> buckets(config.samples);
    parallel_for(config.samples, [&](unsigned, uint64_t begin, uint64_t end) {
        for (uint64_t s = begin; s < end; ++s) {
            uint64_t seed = config.seed + s;
            auto bits = gen_bits(seed, config.p, config.n);
            SignSequence signs(bits);
            double value = static_cast<double>(correlation_C2(signs));
            buckets[s].push_back({config.n, "c2n" + seed_suffix(config, seed), value, threshold,
                                  std::abs(value - threshold)});
        }
    });
    for (auto& bucket : buckets)
        result.rows.insert(result.rows.end(), bucket.begin(), bucket.end());
    sort_rows(result.rows);
    result.metadata_json = metadata(config, "correlation", watch.seconds());
    return result;
}

CusickScan cusick_scan(const BigInt& max_a) {
    if (max_a < 1) throw std::domain_error("cusick_scan: max_a must be >= 1");
    CusickScan best{Rat(1), BigInt(0)};
    bool first = true;
    for (BigInt a = 1; a < max_a; ++a) {
        Rat c = cusick_c(build_measure(a));
        if (first || c < best.min_c) {
            best.min_c = c;
            best.argmin = a;
            first = false;
        }
    }
    return best;
}

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

} // namespace digitdrift
