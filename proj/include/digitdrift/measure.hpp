#pragma once
// measure.hpp - Exact finite representation and algebra of the measures mu_a
//
// mu_a(d) is the asymptotic density of { n >= 0 : s2(n+a) - s2(n) = d }.
// Every mu_a is a finite non-negative rational combination in the basis
// { shifted Dirac masses delta_k, shifted copies S^k mu_1 }, where
// mu_1(t) = 2^(t-2) for t <= 1 and 0 above, and (S^k mu_1)(d) = mu_1(d+k).
// The pair recurrence
//     mu_{2a}   = mu_a
//     mu_{2a+1} = (S^{-1} mu_a + S mu_{a+1}) / 2
// closes over that basis, so one pass over the bits of a builds mu_a exactly.

#include "digitdrift/rational.hpp"

#include <map>
#include <string>

namespace digitdrift {

struct MeasureRep {
    // delta[k] = coefficient of delta_k; mu1[k] = coefficient of S^k mu_1.
    // No explicit zeros are stored.
    std::map<long, Rat> delta;
    std::map<long, Rat> mu1;

    bool operator==(const MeasureRep&) const = default;
};

// Consecutive pair (mu_b, mu_{b+1}) maintained during construction
struct MeasurePair {
    MeasureRep lower;
    MeasureRep upper;
};

// mu_1(t) = 2^(t-2) for t <= 1, else 0
Rat mu1_value(long t);

// F_1(t) = sum_{d <= t} mu_1(d) = 2^(t-1) for t <= 1, else 1
Rat mu1_cdf(long t);

// One construction step: pair (mu_b, mu_{b+1}) -> (mu_{2b+bit}, mu_{2b+bit+1})
MeasurePair apply_bit(const MeasurePair& pair, int bit);

// Exact representation of mu_a. a = 0 gives delta_0; a >= 1 yields a pure
// mu1-part rep (the pair starts at (mu_1, mu_2) after the leading bit).
MeasureRep build_measure(const BigInt& a);
MeasureRep build_measure(unsigned long a);

// mu(d) = delta[d] + sum_k mu1[k] * mu_1(d+k), exact and >= 0
Rat evaluate(const MeasureRep& rep, long d);

Rat total_mass(const MeasureRep& rep);
Rat mean(const MeasureRep& rep);
Rat variance(const MeasureRep& rep);

// m_k = sum_d mu(d) d^k, geometric tails in closed form via the mu_1 moment
// table and binomial shift identities
Rat moment(const MeasureRep& rep, unsigned k);

// M_k = sum_{d <= 1} d^k 2^(d-2), exact
Rat mu1_moment(unsigned k);

// sum_d mu(d)^2 with the eventually-geometric left tail summed in closed form
Rat l2_norm_squared(const MeasureRep& rep);

// c_a = sum_{d >= 0} mu(d)
Rat cusick_c(const MeasureRep& rep);

// P(d <= x); mass lives on integers, so this is cdf_le(rep, floor(x))
Rat cdf(const MeasureRep& rep, double x);
Rat cdf_le(const MeasureRep& rep, long m);

// Largest d with possibly nonzero mass (max of delta keys and 1 - min mu1 key)
long support_upper_bound(const MeasureRep& rep);

// Largest d* such that mu(d-1) = mu(d)/2 for every d <= d* (exact geometric
// tail); everything at or below d* is c * 2^d with c = sum_k mu1[k] 2^(k-2)
long geometric_tail_start(const MeasureRep& rep);

// Serialized form {"delta": {"k": "num/den"}, "mu1": {"k": "num/den"}}
std::string to_json_text(const MeasureRep& rep);

// ---- Floating-point mirrors (double precision) ----
// Same semantics as the exact operations; used by large-n experiment paths.
// Exact and float results agree to 1e-9 relative error wherever both run.

double evaluate_d(const MeasureRep& rep, long d);
double total_mass_d(const MeasureRep& rep);
double mean_d(const MeasureRep& rep);
double variance_d(const MeasureRep& rep);
double moment_d(const MeasureRep& rep, unsigned k);
double l2_norm_squared_d(const MeasureRep& rep);
double cusick_c_d(const MeasureRep& rep);
double cdf_d(const MeasureRep& rep, double x);

} // namespace digitdrift
