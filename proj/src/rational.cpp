#include "digitdrift/rational.hpp"

#include <stdexcept>

namespace digitdrift {

Rat pow2_rat(long e) {
    Rat q;
    if (e >= 0) {
        mpz_ui_pow_ui(q.get_num_mpz_t(), 2, static_cast<unsigned long>(e));
    } else {
        q.get_num() = 1;
        mpz_ui_pow_ui(q.get_den_mpz_t(), 2, static_cast<unsigned long>(-e));
    }
    // num/den already coprime: one side is 1
    return q;
}

BigInt pow2_int(unsigned long e) {
    BigInt z;
    mpz_ui_pow_ui(z.get_mpz_t(), 2, e);
    return z;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt z;
    mpz_bin_uiui(z.get_mpz_t(), n, k);
    return z;
}

BigInt factorial(unsigned n) {
    BigInt z;
    mpz_fac_ui(z.get_mpz_t(), n);
    return z;
}

std::string rat_str(const Rat& q) {
    return q.get_str();  // gmp prints "num" or "num/den", canonicalized
}

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    Rat q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + text);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

double to_double(const Rat& q) {
    return q.get_d();
}

} // namespace digitdrift
