#include "oscpoly/hankel.hpp"

#include <cmath>
#include <limits>

#include "mpfr_real.hpp"

namespace oscpoly::hankel {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::exists: return "exists";
    case Verdict::degenerate: return "degenerate";
    case Verdict::indeterminate: return "indeterminate";
  }
  return "?";
}

HankelMatrix hankel_matrix(const MomentSequence& m, int n) {
  if (n < 1) throw DomainError("hankel_matrix: n must be >= 1");
  const int need = 2 * n - 1;  // mu_0..mu_{2n-2}
  if (static_cast<int>(m.values.size()) < need)
    throw DomainError("hankel_matrix: need mu_0..mu_" + std::to_string(2 * n - 2) +
                      " (" + std::to_string(need) + " moments), got " +
                      std::to_string(m.values.size()));
  HankelMatrix H{n, Eigen::MatrixXcd(n, n)};
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) H.entries(r, s) = m.values[static_cast<size_t>(r + s)];
  return H;
}

Complex hankel_det(Frequency omega, int n) {
  if (n < 1) throw DomainError("hankel_det: n must be >= 1");
  const HankelMatrix H = hankel_matrix(moments::moments(omega, 2 * n - 2), n);
  return Eigen::PartialPivLU<Eigen::MatrixXcd>(H.entries).determinant();
}

Complex scaled_hankel_det(Frequency omega, int n) {
  const double w = omega.value();
  if (w <= 0.0) throw DomainError("scaled_hankel_det: requires omega > 0");
  if (n < 1) throw DomainError("scaled_hankel_det: n must be >= 1");

  // mu~_k = -2 k! [ cos(w) sum_{v odd <= k} (-i w)^{v-1}/v!
  //                 - (sin(w)/w)(1 + sum_{v even, 2<=v<=k} (-i w)^v/v!) ],
  // built directly (not as (-i w)^k mu_k) so the scaling relation against
  // Delta_n is a genuine cross-check of two code paths. The powers
  // (-i w)^{v-1} (v odd) and (-i w)^v (v even) are real powers of -w^2, so
  // every entry is real; the bracket cancels from O(1) summands down to
  // ~ w^k mu_k / (2 k!), which costs about log2(k!/w^k) bits at small w (and
  // up to ~w/ln 2 bits from the exponential tail), recovered by evaluating
  // it in extended precision.
  const int kmax = 2 * n - 2;
  const double cancel_bits =
      std::max(0.0, (std::lgamma(kmax + 1.0) - kmax * std::log(w)) / std::log(2.0)) +
      1.45 * w;
  const auto prec = static_cast<mpfr_prec_t>(64 + static_cast<long>(std::ceil(cancel_bits)));

  detail::MpReal wr(prec), c(prec), s(prec), p(prec), fact(prec);
  detail::MpReal s_odd(prec), s_even(prec), b(prec), t(prec);
  mpfr_set_d(wr.get(), w, MPFR_RNDN);
  mpfr_cos(c.get(), wr.get(), MPFR_RNDN);
  mpfr_sin(s.get(), wr.get(), MPFR_RNDN);
  mpfr_div(s.get(), s.get(), wr.get(), MPFR_RNDN);  // sin(w)/w
  mpfr_set_ui(p.get(), 1, MPFR_RNDN);               // real carrier of (-i w)^v/v!
  mpfr_set_ui(fact.get(), 1, MPFR_RNDN);            // k!
  mpfr_set_ui(s_odd.get(), 0, MPFR_RNDN);
  mpfr_set_ui(s_even.get(), 0, MPFR_RNDN);

  std::vector<double> mt(static_cast<size_t>(kmax) + 1);
  for (int k = 0; k <= kmax; ++k) {
    if (k > 0) {
      mpfr_mul_ui(fact.get(), fact.get(), static_cast<unsigned long>(k), MPFR_RNDN);
      if (k % 2 == 1) {
        // (-i w)^{k-1}/k! = previous carrier / k
        mpfr_div_ui(p.get(), p.get(), static_cast<unsigned long>(k), MPFR_RNDN);
        mpfr_add(s_odd.get(), s_odd.get(), p.get(), MPFR_RNDN);
      } else {
        // (-i w)^k/k! = previous carrier * (-w^2) / k
        mpfr_mul(p.get(), p.get(), wr.get(), MPFR_RNDN);
        mpfr_mul(p.get(), p.get(), wr.get(), MPFR_RNDN);
        mpfr_neg(p.get(), p.get(), MPFR_RNDN);
        mpfr_div_ui(p.get(), p.get(), static_cast<unsigned long>(k), MPFR_RNDN);
        mpfr_add(s_even.get(), s_even.get(), p.get(), MPFR_RNDN);
      }
    }
    // mu~_k = -2 k! (c*s_odd - s*(1 + s_even))
    mpfr_add_ui(t.get(), s_even.get(), 1, MPFR_RNDN);
    mpfr_mul(t.get(), t.get(), s.get(), MPFR_RNDN);
    mpfr_mul(b.get(), c.get(), s_odd.get(), MPFR_RNDN);
    mpfr_sub(b.get(), b.get(), t.get(), MPFR_RNDN);
    mpfr_mul(b.get(), b.get(), fact.get(), MPFR_RNDN);
    mpfr_mul_si(b.get(), b.get(), -2, MPFR_RNDN);
    mt[static_cast<size_t>(k)] = mpfr_get_d(b.get(), MPFR_RNDN);
  }

  Eigen::MatrixXcd H(n, n);
  for (int r = 0; r < n; ++r)
    for (int s2 = 0; s2 < n; ++s2) H(r, s2) = Complex(mt[static_cast<size_t>(r + s2)], 0.0);
  return Eigen::PartialPivLU<Eigen::MatrixXcd>(H).determinant();
}

ExistenceReport existence(Frequency omega, int n, Tolerances tol) {
  if (n < 1) throw DomainError("existence: n must be >= 1");
  const MomentSequence m = moments::moments(omega, 2 * n - 1);

  // Extended system [H | v_n] of the coefficient equations H u = -v_n.
  Eigen::MatrixXcd A(n, n + 1);
  for (int r = 0; r < n; ++r)
    for (int s = 0; s <= n; ++s) A(r, s) = m.values[static_cast<size_t>(r + s)];

  // Gaussian elimination with partial pivoting over the first n columns.
  // |delta| = product of pivot magnitudes = |Delta_n| exactly; scale is the
  // product of the eliminated rows' max magnitudes over the still-active
  // columns, so |delta|/scale is invariant under uniform moment scaling and
  // measures how far the system is from rank deficiency.
  Complex delta(1.0, 0.0);
  double scale = 1.0;
  for (int r = 0; r < n; ++r) {
    int piv = r;
    double best = std::abs(A(r, r));
    for (int i = r + 1; i < n; ++i) {
      const double cand = std::abs(A(i, r));
      if (cand > best) {
        best = cand;
        piv = i;
      }
    }
    if (piv != r) {
      A.row(piv).swap(A.row(r));
      delta = -delta;
    }
    double rowmax = 0.0;
    for (int c = r; c <= n; ++c) rowmax = std::max(rowmax, std::abs(A(r, c)));
    scale *= rowmax;
    const Complex p = A(r, r);
    delta *= p;
    if (p == Complex(0.0, 0.0)) continue;  // exact zero column: nothing to eliminate
    for (int i = r + 1; i < n; ++i) {
      const Complex f = A(i, r) / p;
      A(i, r) = Complex(0.0, 0.0);
      for (int c = r + 1; c <= n; ++c) A(i, c) -= f * A(r, c);
    }
  }

  // Condition estimate of the square Hankel block from its pivoted LU.
  Eigen::MatrixXcd H(n, n);
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) H(r, s) = m.values[static_cast<size_t>(r + s)];
  const double rcond = Eigen::PartialPivLU<Eigen::MatrixXcd>(H).rcond();
  const double cond = (rcond > 0.0) ? 1.0 / rcond : std::numeric_limits<double>::infinity();

  const double ad = std::abs(delta);
  Verdict v;
  if (ad == 0.0 || ad < tol.tol_zero * scale)
    v = Verdict::degenerate;
  else if (ad > tol.tol_exist * scale)
    v = Verdict::exists;
  else
    v = Verdict::indeterminate;
  return ExistenceReport{omega, n, delta, scale, v, cond};
}

}  // namespace oscpoly::hankel
