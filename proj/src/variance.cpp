#include "digitdrift/variance.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace digitdrift {

namespace {

std::vector<int> sign_vector(const BitString& a) {
    if (a.is_zero()) throw std::domain_error("variance: a = 0 has no top bit index");
    SignSequence s(a);
    return std::vector<int>(s.signs().begin(), s.signs().end());
}

} // namespace

VarianceBreakdown variance_closed_form(const BitString& a) {
    std::vector<int> b = sign_vector(a);
    std::size_t n = a.top_index();

    VarianceBreakdown out;
    out.leading = Rat(static_cast<unsigned long>(n) + 3, 2);
    out.leading.canonicalize();
    out.tail = -pow2_rat(-static_cast<long>(n) - 1);

    out.correlation_sum = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        long inner = 0;  // sum_k b_{k+i} b_k, |inner| <= n
        for (std::size_t k = 0; k + i <= n; ++k) inner += b[k + i] * b[k];
        out.correlation_sum += Rat(inner) * pow2_rat(-static_cast<long>(i));
    }
    out.correlation_sum /= -2;

    out.boundary_sum = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        int pair = b[k] + b[n - k];  // in {-2, 0, 2}
        if (pair != 0) out.boundary_sum += Rat(pair) * pow2_rat(-static_cast<long>(k) - 1);
    }

    out.total = out.leading + out.tail + out.correlation_sum + out.boundary_sum;
    return out;
}

VarianceBreakdown variance_closed_form(const BigInt& a) {
    return variance_closed_form(BitString::from_value(a));
}

Rat variance_sigma_form(const BitString& a) {
    std::vector<int> b = sign_vector(a);
    std::size_t n = a.top_index();

    Rat v = Rat(1) + Rat(static_cast<unsigned long>(n)) * pow2_rat(-static_cast<long>(n) - 1);
    for (std::size_t i = 1; i <= n; ++i) {
        Rat w = pow2_rat(-static_cast<long>(i));
        v += Rat(static_cast<unsigned long>(i)) * w / 2;
        v += Rat(sigma(a, i)) * w;
    }
    for (std::size_t k = 0; k <= n; ++k) {
        int pair = b[k] + b[n - k];
        if (pair != 0) v += Rat(pair) * pow2_rat(-static_cast<long>(k) - 1);
    }
    return v;
}

Rat variance_sigma_form(const BigInt& a) {
    return variance_sigma_form(BitString::from_value(a));
}

BoundsCheck variance_bounds_check(const BitString& a) {
    BoundsCheck out;
    long l = static_cast<long>(l_count(a));
    out.lower = l - 1;
    out.upper = 4 * l + 2;
    out.value = variance_closed_form(a).total;
    out.ok = Rat(out.lower) <= out.value && out.value <= Rat(out.upper);
    return out;
}

BoundsCheckFloat variance_bounds_check_float(const BitString& a) {
    BoundsCheckFloat out;
    long l = static_cast<long>(l_count(a));
    out.lower = l - 1;
    out.upper = 4 * l + 2;
    out.value = variance_truncated(a);
    out.ok = static_cast<double>(out.lower) - 1e-9 <= out.value &&
             out.value <= static_cast<double>(out.upper) + 1e-9;
    return out;
}

double variance_truncated(const BitString& a, unsigned lag_cap) {
    std::vector<int> b = sign_vector(a);
    std::size_t n = a.top_index();

    double v = (static_cast<double>(n) + 3.0) / 2.0;
    if (n + 1 < 1060) v -= std::ldexp(1.0, -static_cast<int>(n) - 1);

    std::size_t max_lag = std::min<std::size_t>(n, lag_cap);
    double corr = 0.0;
    for (std::size_t i = 1; i <= max_lag; ++i) {
        long inner = 0;
        for (std::size_t k = 0; k + i <= n; ++k) inner += b[k + i] * b[k];
        corr += static_cast<double>(inner) * std::ldexp(1.0, -static_cast<int>(i));
    }
    v -= corr / 2.0;

    std::size_t max_k = std::min<std::size_t>(n, 1080);  // 2^-(k+1) underflows past here
    for (std::size_t k = 0; k <= max_k; ++k) {
        int pair = b[k] + b[n - k];
        if (pair != 0) v += static_cast<double>(pair) * std::ldexp(1.0, -static_cast<int>(k) - 1);
    }
    return v;
}

} // namespace digitdrift
