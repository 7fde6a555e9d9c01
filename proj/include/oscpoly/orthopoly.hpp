#pragma once

#include <vector>

#include "oscpoly/hankel.hpp"
#include "oscpoly/types.hpp"

namespace oscpoly::orthopoly {

using hankel::Tolerances;

// Monic polynomial x^n + a_{n-1} x^{n-1} + ... + a_0 orthogonal to all lower
// degrees under the non-conjugating form (f,g) = integral f g e^{i w x}.
// Coefficient of x^m is real when n-m is even and pure imaginary when n-m is
// odd (alternation).
struct MonicPolynomial {
  Frequency omega;
  int degree;
  std::vector<Complex> coefficients;  // a_0..a_{n-1}
};

// Three-term recurrence data p_{k+1} = (x - alpha_k) p_k - beta_k p_{k-1}:
// alpha holds alpha_0..alpha_{n-1} (pure imaginary), beta holds
// beta_1..beta_{n-1} at beta[k-1] (real).
struct RecurrenceCoeffs {
  std::vector<Complex> alpha;
  std::vector<Complex> beta;
};

// Solves the moment linear system [v_0 ... v_{n-1}] u = -v_n with
// v_k = (mu_k..mu_{k+n-1})^T by pivoted elimination, then verifies the
// orthogonality residuals against 1e-9 * max|mu|. Frequencies below 1e-8
// route to the exact monic Legendre construction (the formulas above have
// 1/w singularities that cancel only in exact arithmetic). Degree 0 returns
// the constant polynomial 1.
// Throws ExistenceError (with the report) unless existence() says exists.
MonicPolynomial monic_op(Frequency omega, int n, Tolerances tol = {});

// |(p, x^j)| for j = 0..n-1, each inner product evaluated exactly as the
// moment combination sum_m a_m mu_{m+j} + mu_{n+j} (never by quadrature).
std::vector<double> orthogonality_residuals(const MonicPolynomial& p);

// alpha_k = (x p_k, p_k)/(p_k, p_k), beta_k = (p_k, p_k)/(p_{k-1}, p_{k-1}).
// Requires existence at every index k <= n; a failure throws ExistenceError
// naming the failing index.
RecurrenceCoeffs recurrence_coeffs(Frequency omega, int n, Tolerances tol = {});

}  // namespace oscpoly::orthopoly
