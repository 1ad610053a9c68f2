#include "digitdrift/jets.hpp"

#include <stdexcept>

namespace digitdrift {

ComplexRational ComplexRational::inverse() const {
    Rat norm = re * re + im * im;
    if (norm == 0) throw std::domain_error("ComplexRational: inverse of zero");
    return {re / norm, -im / norm};
}

Jet Jet::constant(unsigned order, const ComplexRational& v) {
    Jet j(order);
    j.c_[0] = v;
    return j;
}

Jet Jet::operator+(const Jet& o) const {
    if (order() != o.order()) throw std::domain_error("Jet: mixed orders");
    Jet out(order());
    for (unsigned j = 0; j <= order(); ++j) out.c_[j] = c_[j] + o.c_[j];
    return out;
}

Jet Jet::operator-(const Jet& o) const {
    if (order() != o.order()) throw std::domain_error("Jet: mixed orders");
    Jet out(order());
    for (unsigned j = 0; j <= order(); ++j) out.c_[j] = c_[j] - o.c_[j];
    return out;
}

Jet& Jet::operator+=(const Jet& o) {
    if (order() != o.order()) throw std::domain_error("Jet: mixed orders");
    for (unsigned j = 0; j <= order(); ++j) c_[j] += o.c_[j];
    return *this;
}

Jet Jet::operator*(const Jet& o) const {
    if (order() != o.order()) throw std::domain_error("Jet: mixed orders");
    Jet out(order());
    for (unsigned j = 0; j <= order(); ++j) {
        if (c_[j].is_zero()) continue;
        for (unsigned k = 0; j + k <= order(); ++k) out.c_[j + k] += c_[j] * o.c_[k];
    }
    return out;
}

Jet Jet::scaled(const ComplexRational& s) const {
    Jet out(order());
    for (unsigned j = 0; j <= order(); ++j) out.c_[j] = c_[j] * s;
    return out;
}

Jet jet_divide(const Jet& num, const Jet& den) {
    if (num.order() != den.order()) throw std::domain_error("jet_divide: mixed orders");
    ComplexRational inv0 = den.coeff(0).inverse();
    Jet q(num.order());
    // long division: q_j = (num_j - sum_{t=1..j} den_t q_{j-t}) / den_0
    for (unsigned j = 0; j <= num.order(); ++j) {
        ComplexRational acc = num.coeff(j);
        for (unsigned t = 1; t <= j; ++t) acc = acc - den.coeff(t) * q.coeff(j - t);
        q.coeff(j) = acc * inv0;
    }
    return q;
}

Jet exp_jet(int sign, const Rat& scale, unsigned order) {
    if (sign != 1 && sign != -1) throw std::domain_error("exp_jet: sign must be +-1");
    Jet out(order);
    // (sign i)^j / j! cycles through {1, si, -1, -si} / j!
    for (unsigned j = 0; j <= order; ++j) {
        Rat mag = scale / Rat(factorial(j));
        switch (j % 4) {
            case 0: out.coeff(j) = ComplexRational(mag, Rat(0)); break;
            case 1: out.coeff(j) = ComplexRational(Rat(0), Rat(sign) * mag); break;
            case 2: out.coeff(j) = ComplexRational(-mag, Rat(0)); break;
            default: out.coeff(j) = ComplexRational(Rat(0), Rat(-sign) * mag); break;
        }
    }
    return out;
}

JetMatrix JetMatrix::operator*(const JetMatrix& o) const {
    JetMatrix out(order());
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out.m[r][c] = m[r][0] * o.m[0][c] + m[r][1] * o.m[1][c];
    return out;
}

void apply_row(std::array<Jet, 2>& row, const JetMatrix& M) {
    Jet r0 = row[0] * M.m[0][0] + row[1] * M.m[1][0];
    Jet r1 = row[0] * M.m[0][1] + row[1] * M.m[1][1];
    row[0] = std::move(r0);
    row[1] = std::move(r1);
}

} // namespace digitdrift
