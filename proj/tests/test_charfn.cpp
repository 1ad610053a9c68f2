#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "digitdrift/bitstring.hpp"
#include "digitdrift/charfn.hpp"
#include "digitdrift/measure.hpp"
#include "digitdrift/stochastic.hpp"

#include <cmath>
#include <complex>
#include <numbers>

using namespace digitdrift;

namespace {

ComplexRational cr(long re_num, long re_den, long im_num, long im_den) {
    return {Rat(re_num, re_den), Rat(im_num, im_den)};
}

} // namespace

TEST_CASE("boundary jet: the pair (1, g)") {
    auto [one, g] = boundary_jet(6);
    for (unsigned j = 0; j <= 6; ++j)
        CHECK(one.coeff(j) == (j == 0 ? ComplexRational::one() : ComplexRational()));

    CHECK(g.coeff(0) == ComplexRational::one());
    CHECK(g.coeff(1) == ComplexRational());
    CHECK(g.coeff(2) == ComplexRational(Rat(-1)));
    CHECK(g.coeff(3) == ComplexRational::i());
    CHECK(g.coeff(4) == ComplexRational(Rat(19, 12)));
    CHECK(g.coeff(5) == cr(0, 1, -9, 4));
    CHECK(g.coeff(6) == ComplexRational(Rat(-1171, 360)));

    // defining relation g * (2 - e^{-i theta}) = e^{i theta}
    Jet relation = g * (Jet::constant(6, ComplexRational(Rat(2))) - exp_jet(-1, Rat(1), 6));
    CHECK(relation == exp_jet(1, Rat(1), 6));
}

TEST_CASE("jet matrices of the two transition matrices") {
    JetMatrix a0 = jet_matrix(0, 2);
    CHECK(a0.m[0][0] == Jet::constant(2, ComplexRational::one()));
    CHECK(a0.m[0][1] == Jet(2));
    CHECK(a0.m[1][0] == exp_jet(1, Rat(1, 2), 2));
    CHECK(a0.m[1][1] == exp_jet(-1, Rat(1, 2), 2));

    JetMatrix a1 = jet_matrix(1, 2);
    CHECK(a1.m[0][0] == exp_jet(1, Rat(1, 2), 2));
    CHECK(a1.m[0][1] == exp_jet(-1, Rat(1, 2), 2));
    CHECK(a1.m[1][0] == Jet(2));
    CHECK(a1.m[1][1] == Jet::constant(2, ComplexRational::one()));

    // coefficient pattern: order 1 carries i/2, order 2 carries -1/4
    CHECK(a0.m[1][0].coeff(1) == cr(0, 1, 1, 2));
    CHECK(a0.m[1][1].coeff(1) == cr(0, 1, -1, 2));
    CHECK(a0.m[1][0].coeff(2) == ComplexRational(Rat(-1, 4)));
    CHECK(a0.m[1][1].coeff(2) == ComplexRational(Rat(-1, 4)));
}

TEST_CASE("chain evaluation at frozen angles") {
    const double pi = std::numbers::pi;
    for (unsigned long a : {0ul, 1ul, 3ul, 5ul, 12ul, 117ul}) {
        auto v = eval_charfn(a, 0.0);
        CHECK(std::abs(v - std::complex<double>(1.0, 0.0)) < 1e-12);
    }
    CHECK(std::abs(eval_charfn(1ul, pi) - std::complex<double>(-1.0 / 3.0, 0.0)) < 1e-12);
    CHECK(std::abs(eval_charfn(3ul, pi) - std::complex<double>(1.0 / 3.0, 0.0)) < 1e-12);
    CHECK(std::abs(eval_charfn(0ul, 1.234) - std::complex<double>(1.0, 0.0)) < 1e-12);

    // doubling invariance carries over
    CHECK(std::abs(eval_charfn(6ul, 2.5) - eval_charfn(3ul, 2.5)) < 1e-12);
    CHECK(std::abs(eval_charfn(40ul, 0.7) - eval_charfn(5ul, 0.7)) < 1e-12);
}

TEST_CASE("chain path agrees with the measure path") {
    const double pi = std::numbers::pi;
    for (unsigned long a = 0; a < 256; ++a) {
        MeasureRep rep = build_measure(a);
        for (int k = 0; k < 64; ++k) {
            double theta = 2.0 * pi * k / 64.0;
            auto lhs = eval_charfn(a, theta);
            auto rhs = eval_charfn_from_measure(rep, theta);
            CHECK(std::abs(lhs - rhs) <= 1e-9);
            CHECK(std::abs(lhs) <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("symmetry and periodicity") {
    const double pi = std::numbers::pi;
    for (unsigned long a : {1ul, 3ul, 11ul, 87ul}) {
        for (double theta : {0.3, 1.1, 2.9}) {
            auto v = eval_charfn(a, theta);
            CHECK(std::abs(eval_charfn(a, 2 * pi - theta) - std::conj(v)) < 1e-12);
            CHECK(std::abs(eval_charfn(a, theta + 2 * pi) - v) < 1e-12);
            CHECK(std::abs(eval_charfn(a, theta - 2 * pi) - v) < 1e-12);
        }
    }
}

TEST_CASE("frozen moments via jets") {
    auto m1 = moments_via_jets(1ul, 4);
    auto m3 = moments_via_jets(3ul, 4);
    auto m5 = moments_via_jets(5ul, 4);
    REQUIRE(m1.size() == 5);
    const Rat e1[] = {Rat(1), Rat(0), Rat(2), Rat(-6), Rat(38)};
    const Rat e3[] = {Rat(1), Rat(0), Rat(3), Rat(-6), Rat(51)};
    const Rat e5[] = {Rat(1), Rat(0), Rat(7, 2), Rat(-15, 2), Rat(121, 2)};
    for (unsigned k = 0; k <= 4; ++k) {
        CHECK(m1[k] == e1[k]);
        CHECK(m3[k] == e3[k]);
        CHECK(m5[k] == e5[k]);
    }

    auto m0 = moments_via_jets(0ul, 6);
    CHECK(m0[0] == 1);
    for (unsigned k = 1; k <= 6; ++k) CHECK(m0[k] == 0);
}

TEST_CASE("jet moments equal measure moments") {
    for (unsigned long a = 0; a < 200; ++a) {
        MeasureRep rep = build_measure(a);
        auto m = moments_via_jets(a, 6);
        for (unsigned k = 0; k <= 6; ++k) CHECK(m[k] == moment(rep, k));
    }
    // deeper orders on a few values
    for (unsigned long a : {21ul, 333ul, 4095ul}) {
        MeasureRep rep = build_measure(a);
        auto m = moments_via_jets(a, 10);
        for (unsigned k = 0; k <= 10; ++k) CHECK(m[k] == moment(rep, k));
    }
}

TEST_CASE("normalized even moments grow with the expected power") {
    // m_k(a) for |a|_2 = n+1 scales like (n/2)^{k/2}; the normalized means
    // across doublings of n stay within a factor-4 band
    std::vector<unsigned long> sizes{64, 128, 256, 512};
    for (unsigned k : {2u, 4u, 6u, 8u}) {
        double lo = 0, hi = 0;
        bool first = true;
        for (unsigned long n : sizes) {
            double acc = 0;
            for (uint64_t seed = 101; seed < 109; ++seed) {
                auto bits = gen_bits(seed, Rat(1, 2), n);
                bits[n] = 1;
                BigInt a = assemble(bits, n);
                auto m = moments_via_jets(a, k);
                acc += to_double(m[k]) / std::pow(0.5 * static_cast<double>(n), 0.5 * k);
            }
            double mean_ratio = acc / 8.0;
            if (first) {
                lo = hi = mean_ratio;
                first = false;
            } else {
                lo = std::min(lo, mean_ratio);
                hi = std::max(hi, mean_ratio);
            }
        }
        CHECK(lo > 0);
        CHECK(hi / lo <= 4.0);
    }
}
