#pragma once
// charfn.hpp - Characteristic functions of the digit-drift measures
//
// hat(mu)_a(theta) = (1 0) A_{a_0} A_{a_1} ... A_{a_n} (1, g(theta))^T with
//     A_0 = [[1, 0], [e^{i theta}/2, e^{-i theta}/2]]
//     A_1 = [[e^{i theta}/2, e^{-i theta}/2], [0, 1]]
//     g(theta) = e^{i theta} / (2 - e^{-i theta})    (= hat(mu)_1)
// consumed least significant bit first as a row-through-chain product.
// The same chain evaluated on jets instead of complex doubles yields exact
// Taylor coefficients c_k = i^k m_k / k!, hence exact moments m_k.

#include "digitdrift/jets.hpp"
#include "digitdrift/measure.hpp"
#include "digitdrift/rational.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace digitdrift {

// Raised when a jet-extracted moment has a nonzero imaginary residue
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Chain evaluation; theta is reduced into [0, 2*pi). |result| <= 1.
std::complex<double> eval_charfn(const BigInt& a, double theta);
std::complex<double> eval_charfn(unsigned long a, double theta);

// Independent route: sum e^{i d theta} mu(d) over the finite window above the
// geometric tail, plus the closed tail sum
//     sum_{d <= D} c 2^d e^{i d theta} = c (2 e^{i theta})^D / (1 - (2 e^{i theta})^{-1}).
std::complex<double> eval_charfn_from_measure(const MeasureRep& rep, double theta);

// Exact jet expansion of A_bit to order K. The order-0 term is the theta=0
// matrix I_bit, order 1 is i*alpha_bit, order 2 is -beta_bit/2, and the full
// pattern alternates alpha (odd orders) and beta (even orders) with
// 1/j! magnitudes.
JetMatrix jet_matrix(int bit, unsigned K);

// Jets of the boundary pair (1, g(theta)); the g series starts 1 - theta^2.
std::pair<Jet, Jet> boundary_jet(unsigned K);

// Exact moments m_0..m_K of mu_a via the jet chain; m_k = k! c_k / i^k.
// Throws ConsistencyError if any m_k fails to be real, m_0 != 1, or m_1 != 0.
std::vector<Rat> moments_via_jets(const BigInt& a, unsigned K);
std::vector<Rat> moments_via_jets(unsigned long a, unsigned K);

} // namespace digitdrift
