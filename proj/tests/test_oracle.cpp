#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "digitdrift/bitstring.hpp"
#include "digitdrift/measure.hpp"
#include "digitdrift/oracle.hpp"

#include <cmath>

using namespace digitdrift;

TEST_CASE("histogram counts every residue once") {
    for (unsigned long a : {0ul, 1ul, 5ul, 44ul}) {
        auto hist = brute_histogram(BigInt(a), CountingWindow{14});
        uint64_t total = 0;
        for (const auto& [d, count] : hist) total += count;
        CHECK(total == uint64_t{1} << 14);
    }
}

TEST_CASE("exact densities at dyadic-complete scales") {
    // all cylinder words for these (a, d) are shorter than M, so the counted
    // share equals the measure exactly
    CHECK(brute_density(BigInt(1), 1, CountingWindow{10}) == Rat(1, 2));
    CHECK(brute_density(BigInt(1), 0, CountingWindow{10}) == Rat(1, 4));
    CHECK(brute_density(BigInt(3), 0, CountingWindow{16}) == Rat(5, 16));
    CHECK(brute_density(BigInt(5), 0, CountingWindow{16}) == Rat(1, 8));
    CHECK(brute_density(BigInt(5), 2, CountingWindow{16}) == Rat(1, 4));

    for (unsigned long a = 0; a < 16; ++a) {
        MeasureRep rep = build_measure(a);
        for (long d = -4; d <= 4; ++d)
            CHECK(brute_density(BigInt(a), d, CountingWindow{16}) == evaluate(rep, d));
    }
}

TEST_CASE("telescoping first moment") {
    // sum of differences over n < 2^M collapses to s2 values at the ends
    CHECK(brute_moment(BigInt(1), 1, CountingWindow{12}) == pow2_rat(-12));
    CHECK(brute_moment(BigInt(0), 1, CountingWindow{12}) == 0);
    CHECK(brute_moment(BigInt(0), 2, CountingWindow{12}) == 0);
}

TEST_CASE("second moment approaches the exact variance") {
    for (unsigned long a : {1ul, 3ul, 5ul, 21ul, 31ul}) {
        Rat exact = variance(build_measure(a));
        double approx = to_double(brute_moment(BigInt(a), 2, CountingWindow{20}));
        CHECK(std::fabs(approx - to_double(exact)) < 0.01);
    }
}

TEST_CASE("density error shrinks with the window") {
    for (unsigned long a : {3ul, 5ul, 21ul}) {
        MeasureRep rep = build_measure(a);
        for (long d : {-15l, -12l}) {
            Rat exact = evaluate(rep, d);
            double e16 =
                std::fabs(to_double(brute_density(BigInt(a), d, CountingWindow{16}) - exact));
            double e20 =
                std::fabs(to_double(brute_density(BigInt(a), d, CountingWindow{20}) - exact));
            CHECK(e16 <= std::ldexp(1.0, -10));
            CHECK(e20 <= e16 + 1e-18);
        }
    }
}

TEST_CASE("cusick share at counting scale") {
    CHECK(brute_cusick(BigInt(1), CountingWindow{20}) == Rat(3, 4));
    CHECK(brute_cusick(BigInt(3), CountingWindow{20}) == Rat(11, 16));
    CHECK(brute_cusick(BigInt(5), CountingWindow{20}) == Rat(5, 8));
}

TEST_CASE("large shifts use the big-integer path") {
    BigInt big = BigInt(1) << 70;
    auto hist = brute_histogram(big, CountingWindow{10});
    REQUIRE(hist.size() == 1);
    CHECK(hist.at(1) == 1024);

    // adding 1 on top of a far-away bit shifts the small histogram by one
    auto shifted = brute_histogram(big + 1, CountingWindow{10});
    auto small = brute_histogram(BigInt(1), CountingWindow{10});
    REQUIRE(shifted.size() == small.size());
    for (const auto& [d, count] : small) CHECK(shifted.at(d + 1) == count);
}

TEST_CASE("window guard") {
    CHECK_THROWS_AS(brute_histogram(BigInt(1), CountingWindow{31}), std::domain_error);
    CHECK_THROWS_AS(brute_density(BigInt(1), 0, CountingWindow{40}), std::domain_error);
}
