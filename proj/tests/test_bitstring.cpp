#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "digitdrift/bitstring.hpp"

#include <stdexcept>
#include <vector>

using namespace digitdrift;

TEST_CASE("BitString round-trips values and strips leading zeros") {
    BitString z = BitString::from_value(0ul);
    CHECK(z.is_zero());
    CHECK(z.size() == 0);
    CHECK(z.to_string() == "");
    CHECK_THROWS_AS(z.top_index(), std::domain_error);

    BitString six = BitString::from_value(6ul);
    CHECK(six.to_string() == "110");
    CHECK(six.size() == 3);
    CHECK(six.top_index() == 2);
    CHECK(six.bits() == std::vector<uint8_t>{0, 1, 1});
    CHECK(six.value() == 6);

    BitString five = BitString::from_bits({1, 0, 1, 0, 0});
    CHECK(five.value() == 5);
    CHECK(five.size() == 3);
    CHECK(BitString::from_bits({0, 0, 0}).is_zero());
    CHECK(BitString::from_bits({}).is_zero());

    BigInt big = (BigInt(1) << 100) + 1;
    BitString b = BitString::from_value(big);
    CHECK(b.size() == 101);
    CHECK(b.top_index() == 100);
    CHECK(b.value() == big);
}

TEST_CASE("s2 counts one-bits") {
    CHECK(s2(0ul) == 0);
    CHECK(s2(7ul) == 3);
    CHECK(s2(BigInt(1) << 40) == 1);
    CHECK(s2(255ul) == 8);
    CHECK(s2((BigInt(1) << 100) - 1) == 100);
}

TEST_CASE("s2 doubling identities") {
    for (unsigned long a = 0; a < 4096; ++a) {
        CHECK(s2(2 * a) == s2(a));
        CHECK(s2(2 * a + 1) == s2(a) + 1);
    }
}

TEST_CASE("SignSequence maps one-bits to +1 and zero-bits to -1") {
    SignSequence s(BitString::from_value(6ul));  // bits a_0=0 a_1=1 a_2=1
    CHECK(s.signs() == std::vector<int8_t>{-1, 1, 1});

    // raw streams keep leading zeros (index order preserved)
    SignSequence raw(std::vector<uint8_t>{0, 1, 0, 0});
    CHECK(raw.size() == 4);
    CHECK(raw.signs() == std::vector<int8_t>{-1, 1, -1, -1});
}

TEST_CASE("l_count scans the literal expansion for the pattern 01") {
    CHECK(l_count(BitString::from_value(1ul)) == 0);
    CHECK(l_count(BitString::from_value(5ul)) == 1);
    CHECK(l_count(BitString::from_value(0ul)) == 0);
    CHECK(l_count(BitString::from_value(3ul)) == 0);
    CHECK(l_count(BitString::from_value(2ul)) == 0);
    CHECK(l_count(BitString::from_value(0b1011ul)) == 1);
    CHECK(l_count(BitString::from_value(0b10101ul)) == 2);
    CHECK(l_count(BitString::from_value(0b1001001ul)) == 2);
}

TEST_CASE("l_count is at most half the bit length") {
    for (unsigned long a = 1; a < 8192; ++a) {
        BitString bs = BitString::from_value(a);
        CHECK(2 * l_count(bs) <= bs.size());
    }
}

TEST_CASE("sigma counts window mismatches") {
    CHECK(sigma(BitString::from_value(3ul), 1) == 0);
    CHECK(sigma(BitString::from_value(5ul), 1) == 2);
    CHECK(sigma(BitString::from_value(5ul), 2) == 0);  // a_2 == a_0
    CHECK_THROWS_AS(sigma(BitString::from_value(0ul), 1), std::domain_error);
    CHECK_THROWS_AS(sigma(BitString::from_value(5ul), 0), std::domain_error);
    CHECK_THROWS_AS(sigma(BitString::from_value(5ul), 3), std::domain_error);

    for (unsigned long a = 2; a < 2048; ++a) {
        BitString bs = BitString::from_value(a);
        std::size_t n = bs.top_index();
        for (unsigned long i = 1; i <= n; ++i) CHECK(sigma(bs, i) <= n);
    }
}

TEST_CASE("assemble reconstructs a_X(n) from a bit stream") {
    CHECK(assemble({1, 0, 1}, 2) == 5);
    CHECK(assemble(std::vector<uint8_t>(11, 0), 10) == 0);
    CHECK(assemble({1, 1, 1, 1}, 3) == 15);
    CHECK_THROWS_AS(assemble({1, 0}, 2), std::domain_error);

    // left inverse of padded bit extraction
    for (unsigned long a = 0; a < 1024; ++a) {
        std::vector<uint8_t> padded(12, 0);
        BitString bs = BitString::from_value(a);
        for (std::size_t k = 0; k < bs.size(); ++k) padded[k] = bs.bits()[k];
        CHECK(assemble(padded, 11) == a);
    }
}
