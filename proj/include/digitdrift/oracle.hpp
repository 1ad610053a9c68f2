#pragma once
// oracle.hpp - Brute-force counting referees for the exact paths
//
// Everything here counts s2(n+a) - s2(n) directly over n < 2^M and never
// touches the measure machinery, so agreement is evidence, not tautology.
// Desk-scale only: M <= 30.

#include "digitdrift/rational.hpp"

#include <cstdint>
#include <map>

namespace digitdrift {

struct CountingWindow {
    unsigned M;  // counts range over n < 2^M; M <= 30
};

// Counts of each difference d = s2(n+a) - s2(n) over n < 2^M
std::map<long, uint64_t> brute_histogram(const BigInt& a, CountingWindow window);

// #{ n < 2^M : s2(n+a) - s2(n) = d } / 2^M, exact
Rat brute_density(const BigInt& a, long d, CountingWindow window);

// Empirical k-th moment over the window, exact rational
Rat brute_moment(const BigInt& a, unsigned k, CountingWindow window);

// #{ n < 2^M : s2(n+a) >= s2(n) } / 2^M
Rat brute_cusick(const BigInt& a, CountingWindow window);

} // namespace digitdrift
