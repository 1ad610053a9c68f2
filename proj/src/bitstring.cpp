#include "digitdrift/bitstring.hpp"

#include <stdexcept>

namespace digitdrift {

BitString BitString::from_value(const BigInt& value) {
    if (sgn(value) < 0) throw std::domain_error("BitString: negative value");
    BitString out;
    out.value_ = value;
    if (sgn(value) > 0) {
        std::size_t n = mpz_sizeinbase(value.get_mpz_t(), 2);
        out.bits_.resize(n);
        for (std::size_t k = 0; k < n; ++k)
            out.bits_[k] = static_cast<uint8_t>(mpz_tstbit(value.get_mpz_t(), k));
    }
    return out;
}

BitString BitString::from_value(unsigned long value) {
    return from_value(BigInt(value));
}

BitString BitString::from_bits(std::vector<uint8_t> bits) {
    while (!bits.empty() && bits.back() == 0) bits.pop_back();
    BitString out;
    out.bits_ = std::move(bits);
    for (std::size_t k = 0; k < out.bits_.size(); ++k) {
        if (out.bits_[k] > 1) throw std::domain_error("BitString: digit not in {0,1}");
        if (out.bits_[k]) mpz_setbit(out.value_.get_mpz_t(), k);
    }
    return out;
}

std::size_t BitString::top_index() const {
    if (bits_.empty()) throw std::domain_error("BitString: top index of 0 undefined");
    return bits_.size() - 1;
}

std::string BitString::to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto it = bits_.rbegin(); it != bits_.rend(); ++it)
        s.push_back(static_cast<char>('0' + *it));
    return s;
}

SignSequence::SignSequence(const BitString& a) : SignSequence(a.bits()) {}

SignSequence::SignSequence(const std::vector<uint8_t>& raw_bits) {
    signs_.resize(raw_bits.size());
    for (std::size_t j = 0; j < raw_bits.size(); ++j)
        signs_[j] = raw_bits[j] ? int8_t{1} : int8_t{-1};
}

unsigned long s2(const BigInt& value) {
    if (sgn(value) < 0) throw std::domain_error("s2: negative value");
    return mpz_popcount(value.get_mpz_t());
}

unsigned long s2(unsigned long value) {
    return static_cast<unsigned long>(__builtin_popcountll(value));
}

unsigned long l_count(const BitString& a) {
    const auto& b = a.bits();
    if (b.size() < 2) return 0;
    unsigned long count = 0;
    // "01" in a_n...a_0 means a_{j+1} = 0 and a_j = 1
    for (std::size_t j = 0; j + 1 < b.size(); ++j)
        if (b[j + 1] == 0 && b[j] == 1) ++count;
    return count;
}

unsigned long sigma(const BitString& a, unsigned long i) {
    if (a.is_zero()) throw std::domain_error("sigma: a = 0 has no valid window length");
    std::size_t n = a.top_index();
    if (i < 1 || i > n) throw std::domain_error("sigma: window length out of range");
    const auto& b = a.bits();
    unsigned long count = 0;
    // 0w1 or 1w0 with |w| = i-1 <=> endpoints differ at distance i
    for (std::size_t j = 0; j + i <= n; ++j)
        if (b[j + i] != b[j]) ++count;
    return count;
}

BigInt assemble(const std::vector<uint8_t>& bit_sequence, std::size_t n) {
    if (bit_sequence.size() < n + 1)
        throw std::domain_error("assemble: sequence shorter than n+1");
    BigInt v = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        if (bit_sequence[k] > 1) throw std::domain_error("assemble: digit not in {0,1}");
        if (bit_sequence[k]) mpz_setbit(v.get_mpz_t(), k);
    }
    return v;
}

} // namespace digitdrift
