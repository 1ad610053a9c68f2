#include "digitdrift/measure.hpp"
#include "digitdrift/bitstring.hpp"

#include <json.hpp>

#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace digitdrift {

namespace {

// dst += factor * src
void add_scaled(std::map<long, Rat>& dst, const std::map<long, Rat>& src, const Rat& factor) {
    for (const auto& [k, c] : src) {
        Rat& slot = dst[k];
        slot += c * factor;
        if (slot == 0) dst.erase(k);
    }
}

// S^s for s in {-1, +1}: S moves mu1 offsets up and delta offsets down,
// since (S mu)(d) = mu(d+1) and (S^k mu_1)(d) = mu_1(d+k)
MeasureRep shifted(const MeasureRep& rep, int s) {
    MeasureRep out;
    for (const auto& [k, c] : rep.mu1) out.mu1[k + s] = c;
    for (const auto& [k, c] : rep.delta) out.delta[k - s] = c;
    return out;
}

double mu1_value_dbl(long t) {
    if (t > 1) return 0.0;
    if (t - 2 < std::numeric_limits<int>::min()) return 0.0;
    return std::ldexp(1.0, static_cast<int>(t - 2));
}

double mu1_cdf_dbl(long t) {
    if (t > 1) return 1.0;
    if (t - 1 < std::numeric_limits<int>::min()) return 0.0;
    return std::ldexp(1.0, static_cast<int>(t - 1));
}

} // namespace

Rat mu1_value(long t) {
    if (t > 1) return Rat(0);
    return pow2_rat(t - 2);
}

Rat mu1_cdf(long t) {
    if (t > 1) return Rat(1);
    return pow2_rat(t - 1);
}

MeasurePair apply_bit(const MeasurePair& pair, int bit) {
    if (bit != 0 && bit != 1) throw std::domain_error("apply_bit: bit must be 0 or 1");
    const Rat half(1, 2);
    // mix = (S^{-1} lower + S upper) / 2 = mu_{2b+1}
    MeasureRep mix;
    MeasureRep lo_up = shifted(pair.lower, -1);
    MeasureRep hi_dn = shifted(pair.upper, +1);
    add_scaled(mix.mu1, lo_up.mu1, half);
    add_scaled(mix.delta, lo_up.delta, half);
    add_scaled(mix.mu1, hi_dn.mu1, half);
    add_scaled(mix.delta, hi_dn.delta, half);
    if (bit == 0) return MeasurePair{pair.lower, std::move(mix)};  // (mu_2b, mu_{2b+1})
    return MeasurePair{std::move(mix), pair.upper};                // (mu_{2b+1}, mu_{2b+2})
}

MeasureRep build_measure(const BigInt& a) {
    if (sgn(a) < 0) throw std::domain_error("build_measure: a must be non-negative");
    if (sgn(a) == 0) {
        MeasureRep rep;
        rep.delta[0] = 1;
        return rep;
    }
    // After consuming the leading 1-bit the prefix is b = 1, so start the
    // pair at (mu_1, mu_2); both are plain mu_1 in this basis.
    MeasureRep one;
    one.mu1[0] = 1;
    MeasurePair pair{one, one};
    std::size_t n = mpz_sizeinbase(a.get_mpz_t(), 2);
    for (std::size_t i = n - 1; i-- > 0;)
        pair = apply_bit(pair, mpz_tstbit(a.get_mpz_t(), i));
    return pair.lower;
}

MeasureRep build_measure(unsigned long a) {
    return build_measure(BigInt(a));
}

Rat evaluate(const MeasureRep& rep, long d) {
    Rat v(0);
    if (auto it = rep.delta.find(d); it != rep.delta.end()) v += it->second;
    for (const auto& [k, c] : rep.mu1)
        if (d + k <= 1) v += c * mu1_value(d + k);
    return v;
}

Rat total_mass(const MeasureRep& rep) {
    Rat v(0);
    for (const auto& [k, c] : rep.delta) v += c;
    for (const auto& [k, c] : rep.mu1) v += c;  // mu_1 is a probability measure
    return v;
}

Rat mean(const MeasureRep& rep) {
    return moment(rep, 1);
}

Rat variance(const MeasureRep& rep) {
    Rat m1 = moment(rep, 1);
    return moment(rep, 2) - m1 * m1;
}

Rat mu1_moment(unsigned k) {
    // M_k = (2 + [k=0] + (-1)^k T_k) / 4 with T_k = sum_{m>=1} m^k 2^{-m},
    // where T_k = 1 + sum_{j<k} C(k,j) T_j (differentiate the geometric series)
    static std::mutex guard;
    static std::vector<Rat> t_table{Rat(1)};  // T_0 = 1
    std::lock_guard<std::mutex> lock(guard);
    while (t_table.size() <= k) {
        unsigned kk = static_cast<unsigned>(t_table.size());
        Rat t(1);
        for (unsigned j = 0; j < kk; ++j) t += Rat(binomial(kk, j)) * t_table[j];
        t_table.push_back(t);
    }
    Rat m = Rat(2) + (k == 0 ? Rat(1) : Rat(0));
    m += (k % 2 == 0 ? t_table[k] : -t_table[k]);
    return m / 4;
}

Rat moment(const MeasureRep& rep, unsigned k) {
    Rat total(0);
    for (const auto& [d, c] : rep.delta) {
        BigInt p;
        mpz_pow_ui(p.get_mpz_t(), BigInt(d).get_mpz_t(), k);
        total += c * Rat(p);
    }
    // sum_d (S^j mu_1)(d) d^k = sum_t mu_1(t) (t-j)^k expanded binomially
    for (const auto& [j, c] : rep.mu1) {
        Rat component(0);
        BigInt base(-j);
        for (unsigned m = 0; m <= k; ++m) {
            BigInt p;
            mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), k - m);
            component += Rat(binomial(k, m) * p) * mu1_moment(m);
        }
        total += c * component;
    }
    return total;
}

long support_upper_bound(const MeasureRep& rep) {
    if (rep.delta.empty() && rep.mu1.empty())
        throw std::domain_error("support_upper_bound: empty measure");
    long hi = std::numeric_limits<long>::min();
    if (!rep.delta.empty()) hi = rep.delta.rbegin()->first;
    if (!rep.mu1.empty()) hi = std::max(hi, 1 - rep.mu1.begin()->first);
    return hi;
}

long geometric_tail_start(const MeasureRep& rep) {
    if (rep.delta.empty() && rep.mu1.empty())
        throw std::domain_error("geometric_tail_start: empty measure");
    long d = std::numeric_limits<long>::max();
    if (!rep.mu1.empty()) d = 1 - rep.mu1.rbegin()->first;  // all components in the 2^d zone
    if (!rep.delta.empty()) d = std::min(d, rep.delta.begin()->first - 1);
    return d;
}

Rat l2_norm_squared(const MeasureRep& rep) {
    long dstar = geometric_tail_start(rep);
    long upper = support_upper_bound(rep);
    // Below dstar the measure is exactly c * 2^d, so the squared tail is
    // c^2 * 4^dstar * (1 + 1/4 + ...) = c^2 * 4^dstar * 4/3
    Rat c(0);
    for (const auto& [k, q] : rep.mu1) c += q * pow2_rat(k - 2);
    Rat tail = c * c * pow2_rat(2 * dstar) * Rat(4, 3);
    Rat window(0);
    for (long d = dstar + 1; d <= upper; ++d) {
        Rat v = evaluate(rep, d);
        window += v * v;
    }
    return tail + window;
}

Rat cusick_c(const MeasureRep& rep) {
    Rat total(0);
    for (const auto& [d, c] : rep.delta)
        if (d >= 0) total += c;
    // sum_{d >= 0} (S^j mu_1)(d) = sum_{t >= j} mu_1(t) = 1 - F_1(j-1)
    for (const auto& [j, c] : rep.mu1) total += c * (Rat(1) - mu1_cdf(j - 1));
    return total;
}

Rat cdf_le(const MeasureRep& rep, long m) {
    Rat total(0);
    for (const auto& [d, c] : rep.delta)
        if (d <= m) total += c;
    for (const auto& [j, c] : rep.mu1) total += c * mu1_cdf(m + j);
    return total;
}

Rat cdf(const MeasureRep& rep, double x) {
    if (std::isnan(x)) throw std::domain_error("cdf: x is NaN");
    long upper = support_upper_bound(rep);
    if (x >= static_cast<double>(upper)) return cdf_le(rep, upper);
    if (x < -9e18) throw std::domain_error("cdf: x below representable cut range");
    return cdf_le(rep, static_cast<long>(std::floor(x)));
}

std::string to_json_text(const MeasureRep& rep) {
    nlohmann::json j;
    j["delta"] = nlohmann::json::object();
    j["mu1"] = nlohmann::json::object();
    for (const auto& [k, c] : rep.delta) j["delta"][std::to_string(k)] = rat_str(c);
    for (const auto& [k, c] : rep.mu1) j["mu1"][std::to_string(k)] = rat_str(c);
    return j.dump();
}

// ---- Floating-point mirrors ----

double evaluate_d(const MeasureRep& rep, long d) {
    double v = 0.0;
    if (auto it = rep.delta.find(d); it != rep.delta.end()) v += to_double(it->second);
    for (const auto& [k, c] : rep.mu1)
        if (d + k <= 1) v += to_double(c) * mu1_value_dbl(d + k);
    return v;
}

double total_mass_d(const MeasureRep& rep) {
    double v = 0.0;
    for (const auto& [k, c] : rep.delta) v += to_double(c);
    for (const auto& [k, c] : rep.mu1) v += to_double(c);
    return v;
}

double mean_d(const MeasureRep& rep) {
    return moment_d(rep, 1);
}

double variance_d(const MeasureRep& rep) {
    double m1 = moment_d(rep, 1);
    return moment_d(rep, 2) - m1 * m1;
}

double moment_d(const MeasureRep& rep, unsigned k) {
    double total = 0.0;
    for (const auto& [d, c] : rep.delta)
        total += to_double(c) * std::pow(static_cast<double>(d), static_cast<double>(k));
    for (const auto& [j, c] : rep.mu1) {
        double component = 0.0;
        for (unsigned m = 0; m <= k; ++m)
            component += to_double(Rat(binomial(k, m))) *
                         std::pow(static_cast<double>(-j), static_cast<double>(k - m)) *
                         to_double(mu1_moment(m));
        total += to_double(c) * component;
    }
    return total;
}

double l2_norm_squared_d(const MeasureRep& rep) {
    long dstar = geometric_tail_start(rep);
    long upper = support_upper_bound(rep);
    double c = 0.0;
    for (const auto& [k, q] : rep.mu1) c += std::ldexp(to_double(q), static_cast<int>(k - 2));
    long e = std::max(2 * dstar, -3000L);  // ldexp underflows to 0 well before -3000
    double tail = c * c * std::ldexp(1.0, static_cast<int>(e)) * (4.0 / 3.0);
    double window = 0.0;
    for (long d = dstar + 1; d <= upper; ++d) {
        double v = evaluate_d(rep, d);
        window += v * v;
    }
    return tail + window;
}

double cusick_c_d(const MeasureRep& rep) {
    double total = 0.0;
    for (const auto& [d, c] : rep.delta)
        if (d >= 0) total += to_double(c);
    for (const auto& [j, c] : rep.mu1) total += to_double(c) * (1.0 - mu1_cdf_dbl(j - 1));
    return total;
}

double cdf_d(const MeasureRep& rep, double x) {
    if (std::isnan(x)) throw std::domain_error("cdf_d: x is NaN");
    long upper = support_upper_bound(rep);
    long m = x >= static_cast<double>(upper) ? upper : static_cast<long>(std::floor(x));
    double total = 0.0;
    for (const auto& [d, c] : rep.delta)
        if (d <= m) total += to_double(c);
    for (const auto& [j, c] : rep.mu1) total += to_double(c) * mu1_cdf_dbl(m + j);
    return total;
}

} // namespace digitdrift
