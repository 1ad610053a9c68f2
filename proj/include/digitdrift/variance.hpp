#pragma once
// variance.hpp - Closed-form variance of mu_a from the sign sequence of a
//
// With n the top bit index of a and b_j = (-1)^{a_j+1},
//   Var(mu_a) = (n+3)/2 - 1/2^{n+1}
//             - (1/2) sum_{i=1..n} sum_{k=0..n-i} b_{k+i} b_k / 2^i
//             + sum_{k=0..n} (b_k + b_{n-k}) / 2^{k+1}
// and equivalently, via the mismatch counts sigma_i(a),
//   Var(mu_a) = 1 + n/2^{n+1} + (1/2) sum_{i=1..n} i/2^i
//             + sum_{i=1..n} sigma_i(a)/2^i + sum_{k=0..n} (b_k + b_{n-k})/2^{k+1}.
// Both are exact and independent of the measure construction, so they act
// as referees for the measure and jet moment paths.

#include "digitdrift/bitstring.hpp"
#include "digitdrift/rational.hpp"

namespace digitdrift {

struct VarianceBreakdown {
    Rat leading;          // (n+3)/2
    Rat tail;             // -1/2^{n+1}
    Rat correlation_sum;  // -(1/2) sum_i sum_k b_{k+i} b_k / 2^i
    Rat boundary_sum;     // sum_k (b_k + b_{n-k}) / 2^{k+1}
    Rat total;            // sum of the four terms
};

// Exact evaluation of all four terms; a = 0 has no top index -> domain error
// (Var(mu_0) = 0 belongs to the measure path)
VarianceBreakdown variance_closed_form(const BitString& a);
VarianceBreakdown variance_closed_form(const BigInt& a);

// The sigma_i(a) route; exact, same value
Rat variance_sigma_form(const BitString& a);
Rat variance_sigma_form(const BigInt& a);

struct BoundsCheck {
    long lower;  // l(a) - 1
    Rat value;
    long upper;  // 4 l(a) + 2
    bool ok;
};

struct BoundsCheckFloat {
    long lower;
    double value;
    long upper;
    bool ok;
};

// l(a) - 1 <= Var(mu_a) <= 4 l(a) + 2, exact comparison
BoundsCheck variance_bounds_check(const BitString& a);

// Float-path variant for wide sweeps; compares with 1e-9 slack because
// Var(mu_1) = 2 sits exactly on its upper bound 4*l(1)+2
BoundsCheckFloat variance_bounds_check_float(const BitString& a);

// Truncated float path: correlation lags capped (terms below 2^-64 are
// sub-double-precision), O(lag_cap * n); serves n up to ~1e5
double variance_truncated(const BitString& a, unsigned lag_cap = 64);

} // namespace digitdrift
