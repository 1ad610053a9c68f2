#pragma once
// jets.hpp - Order-K truncated power series with exact complex-rational
// coefficients, plus the 2x2 jet matrices they feed.
//
// A jet stores coefficients of theta^0..theta^K; ring operations truncate
// at K. Division requires an invertible constant term. These carry the
// Taylor data of the characteristic-function matrix chain, so every
// coefficient stays an exact Gaussian rational.

#include "digitdrift/rational.hpp"

#include <array>
#include <vector>

namespace digitdrift {

struct ComplexRational {
    Rat re;
    Rat im;

    ComplexRational() : re(0), im(0) {}
    ComplexRational(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    explicit ComplexRational(const Rat& r) : re(r), im(0) {}

    bool operator==(const ComplexRational&) const = default;
    bool is_zero() const { return re == 0 && im == 0; }

    ComplexRational operator+(const ComplexRational& o) const { return {re + o.re, im + o.im}; }
    ComplexRational operator-(const ComplexRational& o) const { return {re - o.re, im - o.im}; }
    ComplexRational operator-() const { return {-re, -im}; }
    ComplexRational operator*(const ComplexRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    ComplexRational& operator+=(const ComplexRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    ComplexRational conj() const { return {re, -im}; }
    ComplexRational inverse() const;  // throws std::domain_error on zero

    static ComplexRational one() { return ComplexRational(Rat(1)); }
    static ComplexRational i() { return {Rat(0), Rat(1)}; }
};

class Jet {
public:
    explicit Jet(unsigned order) : c_(order + 1) {}
    static Jet constant(unsigned order, const ComplexRational& v);

    unsigned order() const { return static_cast<unsigned>(c_.size() - 1); }
    const ComplexRational& coeff(unsigned j) const { return c_.at(j); }
    ComplexRational& coeff(unsigned j) { return c_.at(j); }

    Jet operator+(const Jet& o) const;
    Jet operator-(const Jet& o) const;
    Jet operator*(const Jet& o) const;  // truncated convolution
    Jet& operator+=(const Jet& o);
    Jet scaled(const ComplexRational& s) const;

    bool operator==(const Jet&) const = default;

private:
    std::vector<ComplexRational> c_;  // c_[j] multiplies theta^j
};

// num / den truncated at the common order; den must have an invertible
// constant term
Jet jet_divide(const Jet& num, const Jet& den);

// Jet of scale * e^{sign * i * theta}: coefficients scale * (sign i)^j / j!
Jet exp_jet(int sign, const Rat& scale, unsigned order);

struct JetMatrix {
    std::array<std::array<Jet, 2>, 2> m;

    explicit JetMatrix(unsigned order)
        : m{{{Jet(order), Jet(order)}, {Jet(order), Jet(order)}}} {}

    unsigned order() const { return m[0][0].order(); }
    JetMatrix operator*(const JetMatrix& o) const;
};

// Row-vector step r <- r * M (the chain is consumed as 2-vectors, never as a
// full matrix product)
void apply_row(std::array<Jet, 2>& row, const JetMatrix& M);

} // namespace digitdrift
