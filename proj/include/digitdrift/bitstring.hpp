#pragma once
// bitstring.hpp - Binary expansions and their pattern statistics
//
// BitString holds the expansion a_n...a_0 of a non-negative integer with the
// least significant digit at index 0 and no leading zeros. Everything the
// closed-form variance needs from bin(a) lives here: the popcount s2, the
// "01" occurrence count, the window mismatch counts sigma_i, and the +-1
// sign sequence b_j = (-1)^{a_j+1}.

#include "digitdrift/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace digitdrift {

class BitString {
public:
    BitString() = default;  // value 0, empty expansion

    static BitString from_value(const BigInt& value);
    static BitString from_value(unsigned long value);

    // Trims leading zeros so the invariant (top bit set unless empty) holds.
    static BitString from_bits(std::vector<uint8_t> bits);

    const std::vector<uint8_t>& bits() const { return bits_; }
    const BigInt& value() const { return value_; }

    // Number of binary digits; 0 for the value 0
    std::size_t size() const { return bits_.size(); }
    bool is_zero() const { return bits_.empty(); }

    // Index n of the most significant digit; requires a nonzero value
    std::size_t top_index() const;

    // "a_n...a_0" (most significant first); empty string for 0
    std::string to_string() const;

private:
    std::vector<uint8_t> bits_;  // bits_[k] = a_k
    BigInt value_ = 0;
};

// Sign sequence b_j = (-1)^{a_j+1}: +1 at one-bits, -1 at zero-bits.
// Constructible from a raw bit vector too, because the stochastic experiments
// correlate the unstripped random stream X_0..X_n (leading zeros meaningful).
class SignSequence {
public:
    explicit SignSequence(const BitString& a);
    explicit SignSequence(const std::vector<uint8_t>& raw_bits);

    const std::vector<int8_t>& signs() const { return signs_; }
    std::size_t size() const { return signs_.size(); }

private:
    std::vector<int8_t> signs_;
};

// Number of 1-bits of value
unsigned long s2(const BigInt& value);
unsigned long s2(unsigned long value);

// Occurrences of the two-character pattern "01" in a_n...a_0, read most
// significant first, no implicit leading zero. l_count(1) = 0 under this
// literal reading.
unsigned long l_count(const BitString& a);

// Occurrences of 0w1 or 1w0 with |w| = i-1 inside a_n...a_0, i.e. the number
// of positions j in [0, n-i] with a_{j+i} != a_j. Requires 1 <= i <= n.
unsigned long sigma(const BitString& a, unsigned long i);

// a_X(n) = sum_{k=0}^{n} X_k 2^k. Requires at least n+1 entries.
BigInt assemble(const std::vector<uint8_t>& bit_sequence, std::size_t n);

} // namespace digitdrift
