#include "digitdrift/charfn.hpp"

#include <cmath>
#include <numbers>

namespace digitdrift {

namespace {

using Cd = std::complex<double>;

struct Chain2x2 {
    Cd m[2][2];
};

double reduce_angle(double theta) {
    double two_pi = 2.0 * std::numbers::pi;
    double t = std::fmod(theta, two_pi);
    if (t < 0) t += two_pi;
    return t;
}

// Constant 2x2 rational matrices of the theta-expansion
struct BitBasis {
    Rat I[2][2], alpha[2][2], beta[2][2];
};

BitBasis bit_basis(int bit) {
    const Rat h(1, 2);
    BitBasis b{};
    if (bit == 0) {
        b.I[0][0] = 1;
        b.I[1][0] = h;
        b.I[1][1] = h;
        b.alpha[1][0] = h;
        b.alpha[1][1] = -h;
        b.beta[1][0] = h;
        b.beta[1][1] = h;
    } else {
        b.I[0][0] = h;
        b.I[0][1] = h;
        b.I[1][1] = 1;
        b.alpha[0][0] = h;
        b.alpha[0][1] = -h;
        b.beta[0][0] = h;
        b.beta[0][1] = h;
    }
    return b;
}

} // namespace

std::complex<double> eval_charfn(const BigInt& a, double theta) {
    if (sgn(a) < 0) throw std::domain_error("eval_charfn: a must be non-negative");
    double t = reduce_angle(theta);
    Cd eit = std::polar(1.0, t);
    Cd emit = std::conj(eit);
    Chain2x2 A[2] = {
        {{{Cd(1.0), Cd(0.0)}, {eit * 0.5, emit * 0.5}}},  // bit 0
        {{{eit * 0.5, emit * 0.5}, {Cd(0.0), Cd(1.0)}}},  // bit 1
    };
    Cd r0(1.0), r1(0.0);
    std::size_t n = sgn(a) == 0 ? 0 : mpz_sizeinbase(a.get_mpz_t(), 2);
    for (std::size_t k = 0; k < n; ++k) {
        const Chain2x2& M = A[mpz_tstbit(a.get_mpz_t(), k)];
        Cd s0 = r0 * M.m[0][0] + r1 * M.m[1][0];
        Cd s1 = r0 * M.m[0][1] + r1 * M.m[1][1];
        r0 = s0;
        r1 = s1;
    }
    Cd g = eit / (2.0 - emit);
    return r0 + r1 * g;
}

std::complex<double> eval_charfn(unsigned long a, double theta) {
    return eval_charfn(BigInt(a), theta);
}

std::complex<double> eval_charfn_from_measure(const MeasureRep& rep, double theta) {
    double t = reduce_angle(theta);
    Cd eit = std::polar(1.0, t);
    long dstar = geometric_tail_start(rep);
    long upper = support_upper_bound(rep);
    Cd window(0.0);
    for (long d = dstar + 1; d <= upper; ++d)
        window += evaluate_d(rep, d) * std::polar(1.0, t * static_cast<double>(d));
    // Tail: sum_{d <= D} c 2^d e^{i d t} = c z^D / (1 - 1/z), z = 2 e^{i t}
    double c = 0.0;
    for (const auto& [k, q] : rep.mu1) c += std::ldexp(to_double(q), static_cast<int>(k - 2));
    Cd tail(0.0);
    if (c != 0.0 && dstar > -1080) {
        Cd zD = std::ldexp(1.0, static_cast<int>(dstar)) *
                std::polar(1.0, t * static_cast<double>(dstar));
        tail = c * zD / (1.0 - std::conj(eit) * 0.5);
    }
    return window + tail;
}

JetMatrix jet_matrix(int bit, unsigned K) {
    if (bit != 0 && bit != 1) throw std::domain_error("jet_matrix: bit must be 0 or 1");
    BitBasis b = bit_basis(bit);
    JetMatrix out(K);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            out.m[r][c].coeff(0) = ComplexRational(b.I[r][c]);
            for (unsigned j = 1; j <= K; ++j) {
                // odd j = 2m+1: i (-1)^m alpha / j!; even j = 2m: (-1)^m beta / j!
                Rat mag = Rat(1) / Rat(factorial(j));
                if ((j / 2) % 2 == 1) mag = -mag;  // (-1)^m
                if (j % 2 == 1)
                    out.m[r][c].coeff(j) = ComplexRational(Rat(0), mag * b.alpha[r][c]);
                else
                    out.m[r][c].coeff(j) = ComplexRational(mag * b.beta[r][c], Rat(0));
            }
        }
    return out;
}

std::pair<Jet, Jet> boundary_jet(unsigned K) {
    Jet num = exp_jet(+1, Rat(1), K);
    Jet den = Jet::constant(K, ComplexRational(Rat(2))) - exp_jet(-1, Rat(1), K);
    return {Jet::constant(K, ComplexRational::one()), jet_divide(num, den)};
}

std::vector<Rat> moments_via_jets(const BigInt& a, unsigned K) {
    if (sgn(a) < 0) throw std::domain_error("moments_via_jets: a must be non-negative");
    JetMatrix A0 = jet_matrix(0, K);
    JetMatrix A1 = jet_matrix(1, K);
    std::array<Jet, 2> row{Jet::constant(K, ComplexRational::one()), Jet(K)};
    std::size_t n = sgn(a) == 0 ? 0 : mpz_sizeinbase(a.get_mpz_t(), 2);
    for (std::size_t k = 0; k < n; ++k)
        apply_row(row, mpz_tstbit(a.get_mpz_t(), k) ? A1 : A0);
    auto [bone, bg] = boundary_jet(K);
    Jet phi = row[0] * bone + row[1] * bg;

    std::vector<Rat> moments;
    moments.reserve(K + 1);
    for (unsigned k = 0; k <= K; ++k) {
        // c_k = i^k m_k / k!  =>  m_k = k! c_k i^{-k}
        ComplexRational ck = phi.coeff(k);
        ComplexRational rotated;
        switch (k % 4) {
            case 0: rotated = ck; break;
            case 1: rotated = ComplexRational(ck.im, -ck.re); break;  // * (-i)
            case 2: rotated = -ck; break;
            default: rotated = ComplexRational(-ck.im, ck.re); break;  // * i
        }
        if (rotated.im != 0)
            throw ConsistencyError("moments_via_jets: nonzero imaginary residue at k=" +
                                   std::to_string(k));
        moments.push_back(Rat(factorial(k)) * rotated.re);
    }
    if (moments[0] != 1)
        throw ConsistencyError("moments_via_jets: total mass m_0 != 1");
    if (K >= 1 && moments[1] != 0)
        throw ConsistencyError("moments_via_jets: mean m_1 != 0");
    return moments;
}

std::vector<Rat> moments_via_jets(unsigned long a, unsigned K) {
    return moments_via_jets(BigInt(a), K);
}

} // namespace digitdrift
