#include "oscpoly/orthopoly.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "oscpoly/moments.hpp"

namespace oscpoly::orthopoly {

using hankel::ExistenceError;
using hankel::Verdict;
using moments::MomentSequence;

namespace {

constexpr double kLegendreOmegaCutoff = 1e-8;

// Monic Legendre coefficients by p_{k+1} = x p_k - beta_k p_{k-1},
// beta_k = k^2/(4k^2-1); the exact w -> 0 limit.
std::vector<double> legendre_monic_coeffs(int n) {
  std::vector<double> pkm1{1.0};       // p_0
  if (n == 0) return {};               // monic 1: no lower coefficients
  std::vector<double> pk{0.0, 1.0};    // p_1 = x
  for (int k = 1; k < n; ++k) {
    const double beta = (static_cast<double>(k) * k) / (4.0 * k * k - 1.0);
    std::vector<double> next(pk.size() + 1, 0.0);
    for (size_t m = 0; m < pk.size(); ++m) next[m + 1] += pk[m];
    for (size_t m = 0; m < pkm1.size(); ++m) next[m] -= beta * pkm1[m];
    pkm1 = std::move(pk);
    pk = std::move(next);
  }
  pk.pop_back();  // drop the leading 1
  return pk;
}

// Non-conjugating bilinear form (x^shift p, q) = sum_{i,j} p_i q_j mu_{i+j+shift},
// from a moment table long enough to cover every index.
Complex bilinear(const std::vector<Complex>& p, const std::vector<Complex>& q, int shift,
                 const std::vector<Complex>& mu) {
  Complex acc(0.0, 0.0);
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < q.size(); ++j) acc += p[i] * q[j] * mu[i + j + static_cast<size_t>(shift)];
  return acc;
}

// Full coefficient vector (a_0..a_{n-1}, 1) of a monic polynomial.
std::vector<Complex> full_coeffs(const MonicPolynomial& p) {
  std::vector<Complex> c = p.coefficients;
  c.emplace_back(1.0, 0.0);
  return c;
}

}  // namespace

namespace {

// max_j |sum_i a_i mu_{i+j} + mu_{n+j}| for j < n.
double worst_residual(const std::vector<Complex>& a, const std::vector<Complex>& mu) {
  const size_t n = a.size();
  double worst = 0.0;
  for (size_t j = 0; j < n; ++j) {
    Complex acc = mu[n + j];
    for (size_t i = 0; i < n; ++i) acc += a[i] * mu[i + j];
    worst = std::max(worst, std::abs(acc));
  }
  return worst;
}

}  // namespace

MonicPolynomial monic_op(Frequency omega, int n, Tolerances tol) {
  if (n < 0) throw DomainError("monic_op: n must be >= 0");
  if (n == 0) return MonicPolynomial{omega, 0, {}};

  // Each route is verified against the moments that define it: the solve
  // route against its own omega, the Legendre limit route against omega = 0
  // (its residual at the tiny nonzero omega is O(omega) by construction,
  // which is exactly why the route exists).
  MonicPolynomial p{omega, n, {}};
  MomentSequence m = moments::moments(omega, 2 * n - 1);
  if (omega.value() < kLegendreOmegaCutoff) {
    const std::vector<double> legendre = legendre_monic_coeffs(n);
    p.coefficients.reserve(static_cast<size_t>(n));
    for (double c : legendre) p.coefficients.emplace_back(c, 0.0);
    if (omega.value() != 0.0) m = moments::moments(Frequency(0.0), 2 * n - 1);
  } else {
    const hankel::ExistenceReport rep = hankel::existence(omega, n, tol);
    if (rep.verdict != Verdict::exists)
      throw ExistenceError("monic_op: p_" + std::to_string(n) + " at omega = " +
                               std::to_string(omega.value()) + " is " +
                               hankel::to_string(rep.verdict),
                           rep);
    Eigen::MatrixXcd H(n, n);
    Eigen::VectorXcd v(n);
    for (int r = 0; r < n; ++r) {
      for (int s = 0; s < n; ++s) H(r, s) = m.values[static_cast<size_t>(r + s)];
      v(r) = m.values[static_cast<size_t>(r + n)];
    }
    const Eigen::VectorXcd u = Eigen::PartialPivLU<Eigen::MatrixXcd>(H).solve(-v);
    p.coefficients.assign(u.data(), u.data() + n);
  }

  // The construction must reproduce orthogonality at roundoff scale;
  // anything worse means the moments or the factorization misbehaved.
  double mu_scale = 0.0;
  for (const Complex& mu : m.values) mu_scale = std::max(mu_scale, std::abs(mu));
  const double worst = worst_residual(p.coefficients, m.values);
  if (worst > 1e-9 * mu_scale)
    throw NumericalError("monic_op: orthogonality residual " + std::to_string(worst) +
                         " exceeds 1e-9 * " + std::to_string(mu_scale));
  return p;
}

std::vector<double> orthogonality_residuals(const MonicPolynomial& p) {
  const int n = p.degree;
  if (n == 0) return {};
  const MomentSequence m = moments::moments(p.omega, 2 * n - 1);
  std::vector<double> out;
  out.reserve(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    Complex acc = m.values[static_cast<size_t>(n + j)];
    for (int i = 0; i < n; ++i)
      acc += p.coefficients[static_cast<size_t>(i)] * m.values[static_cast<size_t>(i + j)];
    out.push_back(std::abs(acc));
  }
  return out;
}

RecurrenceCoeffs recurrence_coeffs(Frequency omega, int n, Tolerances tol) {
  if (n < 1) throw DomainError("recurrence_coeffs: n must be >= 1");

  RecurrenceCoeffs rc;
  if (omega.value() < kLegendreOmegaCutoff) {
    // Exact Legendre limit: alpha_k = 0, beta_k = k^2/(4k^2-1).
    rc.alpha.assign(static_cast<size_t>(n), Complex(0.0, 0.0));
    for (int k = 1; k < n; ++k)
      rc.beta.emplace_back((static_cast<double>(k) * k) / (4.0 * k * k - 1.0), 0.0);
    return rc;
  }

  // (p_k, p_k) = Delta_{k+1}/Delta_k must be nonzero for every k < n, i.e.
  // existence must hold through index n.
  for (int k = 1; k <= n; ++k) {
    const hankel::ExistenceReport rep = hankel::existence(omega, k, tol);
    if (rep.verdict != Verdict::exists)
      throw ExistenceError("recurrence_coeffs: existence fails at index " + std::to_string(k) +
                               " (omega = " + std::to_string(omega.value()) + ", " +
                               hankel::to_string(rep.verdict) + ")",
                           rep);
  }

  const MomentSequence m = moments::moments(omega, 2 * n - 1);
  std::vector<Complex> prev_sq;  // (p_{k-1}, p_{k-1}) as 1-element cache
  for (int k = 0; k < n; ++k) {
    const std::vector<Complex> pk = full_coeffs(monic_op(omega, k, tol));
    const Complex sq = bilinear(pk, pk, 0, m.values);
    const Complex xsq = bilinear(pk, pk, 1, m.values);
    rc.alpha.push_back(xsq / sq);
    if (k >= 1) rc.beta.push_back(sq / prev_sq[0]);
    prev_sq.assign(1, sq);
  }
  return rc;
}

}  // namespace oscpoly::orthopoly
