#pragma once
// stochastic.hpp - Seeded Bernoulli experiments on random a_X(n)
//
// A configured experiment draws X_0..X_n i.i.d. Bernoulli(p) from
// mt19937_64 (one 64-bit draw per bit, bit = draw < floor(p * 2^64)), forms
// a_X(n) = sum X_k 2^k, and reports statistics against their limit targets:
// 2 Var / n -> 4p(1-p), renormalized moments -> N(0,1) moments, rescaled CDF
// -> Phi, order-2 correlation of the sign stream, and the Cusick statistic.
// Same config => bit-identical rows (mt19937_64's output sequence is fixed
// by the standard).

#include "digitdrift/bitstring.hpp"
#include "digitdrift/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace digitdrift {

struct ExperimentConfig {
    uint64_t seed = 1;
    Rat p = Rat(1, 2);             // bit bias in [0, 1]
    unsigned long n = 1024;        // top index of a_X(n); n+1 bits are drawn
    unsigned samples = 1;          // consecutive seeds: seed, seed+1, ...
    unsigned max_moment_order = 6; // K for the moment experiment, <= 12
};

struct ResultRow {
    unsigned long n;
    std::string statistic;  // "/seed<k>" suffix when samples > 1
    double value;
    double target;
    double deviation;  // |value - target|
};

struct ExperimentResult {
    std::vector<ResultRow> rows;     // sorted by (n, statistic)
    std::string metadata_json;       // config echo + wall time
};

// X_0..X_n (n+1 bits); p = 0 and p = 1 are exact constant streams
std::vector<uint8_t> gen_bits(uint64_t seed, const Rat& p, unsigned long n);
std::vector<uint8_t> gen_bits(const ExperimentConfig& config);

// Order-2 correlation: max over lags g >= 1 and contiguous windows of
// |sum_j b_j b_{j+g}|, via per-lag prefix-sum spread, O(len^2).
// Requires length >= 3.
uint64_t correlation_C2(const SignSequence& signs);

// 2 Var(mu_{a_X(m)}) / m on a halving ladder m = ..., n/4, n/2, n
// (truncated-float variance path); target 4p(1-p)
ExperimentResult generic_variance_experiment(const ExperimentConfig& config);

// mtilde_k = 2^{k/2} m_k / n^{k/2} for k <= max_moment_order, moments exact
// via jets then floated; targets (2j)!/(2^j j!) for k = 2j, 0 for odd k
ExperimentResult clt_moments_experiment(const ExperimentConfig& config);

// Exact rescaled CDF of mu_{a_X(n)} at x sqrt(n/2) against Phi(x) on the
// grid; one "sup_distance" row per seed at the end
ExperimentResult cdf_experiment(const ExperimentConfig& config, const std::vector<double>& grid);

// C_{2,n} of the raw sign stream per seed; target column carries the n^0.6
// reference threshold
ExperimentResult correlation_experiment(const ExperimentConfig& config);

struct CusickScan {
    Rat min_c;
    BigInt argmin;
};

// Exact c_a sweep over 1 <= a < max_a; smallest value, smallest witness
CusickScan cusick_scan(const BigInt& max_a);

// Phi via the standard library error function (|error| well under 1e-7)
double normal_cdf(double x);

} // namespace digitdrift
