#include "oscpoly/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace oscpoly::oracle {

LegendreReference legendre_reference(int n) {
  if (n < 1 || n > 16) throw DomainError("legendre_reference: n must be in [1,16]");

  LegendreReference ref;

  // Monic coefficients: p_{k+1} = x p_k - beta_k p_{k-1}, beta_k = k^2/(4k^2-1).
  std::vector<double> pkm1{1.0};
  std::vector<double> pk{0.0, 1.0};
  for (int k = 1; k < n; ++k) {
    const double beta = (static_cast<double>(k) * k) / (4.0 * k * k - 1.0);
    std::vector<double> next(pk.size() + 1, 0.0);
    for (size_t m = 0; m < pk.size(); ++m) next[m + 1] += pk[m];
    for (size_t m = 0; m < pkm1.size(); ++m) next[m] -= beta * pkm1[m];
    pkm1 = std::move(pk);
    pk = std::move(next);
  }
  ref.monic_coeffs.assign(pk.begin(), pk.end() - 1);

  // Roots by Newton on the classical recurrence P_{k+1} = ((2k+1)x P_k - k P_{k-1})/(k+1),
  // with P'_n = n (x P_n - P_{n-1}) / (x^2 - 1); standard Chebyshev-like
  // initial guesses keep every root in its own basin.
  const auto eval_pair = [n](double x) {
    double p0 = 1.0, p1 = x;
    if (n == 1) return std::pair<double, double>{x, 1.0};
    for (int k = 1; k < n; ++k) {
      const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
      p0 = p1;
      p1 = p2;
    }
    const double dp = n * (x * p1 - p0) / (x * x - 1.0);
    return std::pair<double, double>{p1, dp};
  };

  ref.roots.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = (n == 1) ? 0.0 : std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [p, d] = eval_pair(x);
      const double dx = p / d;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    ref.roots[static_cast<size_t>(i)] = x;
  }
  std::sort(ref.roots.begin(), ref.roots.end());

  ref.weights.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double x = ref.roots[static_cast<size_t>(i)];
    if (n == 1) {
      ref.weights[0] = 2.0;
    } else {
      const double d = eval_pair(x).second;
      ref.weights[static_cast<size_t>(i)] = 2.0 / ((1.0 - x * x) * d * d);
    }
  }
  return ref;
}

namespace {

struct Panelized {
  Complex value;
  double fmax;
};

Panelized composite(const quadrule::IntegrandSpec& f, double w, int panels,
                    const LegendreReference& gl) {
  Complex acc(0.0, 0.0);
  double fmax = 0.0;
  const double h = 2.0 / panels;
  for (int p = 0; p < panels; ++p) {
    const double a = -1.0 + p * h;
    const double mid = a + h / 2.0, half = h / 2.0;
    for (size_t q = 0; q < gl.roots.size(); ++q) {
      const double x = mid + half * gl.roots[q];
      const Complex fx = quadrule::integrand_eval(f, Complex(x, 0.0), 0);
      fmax = std::max(fmax, std::abs(fx));
      acc += half * gl.weights[q] * fx * std::exp(Complex(0.0, w * x));
    }
  }
  return {acc, fmax};
}

}  // namespace

Complex oracle_integrate(const IntegrandSpec& f, Frequency omega, OracleConfig cfg) {
  if (cfg.panels_per_period < 4)
    throw DomainError("oracle_integrate: panels_per_period must be >= 4");
  if (cfg.base_rule_order < 1 || cfg.base_rule_order > 16)
    throw DomainError("oracle_integrate: base_rule_order must be in [1,16]");
  if (!(cfg.target_rel_tol > 0.0))
    throw DomainError("oracle_integrate: target_rel_tol must be > 0");

  const LegendreReference gl = legendre_reference(cfg.base_rule_order);
  const double w = omega.value();

  // Panel width <= 2 pi / (w * panels_per_period) in phase, i.e. at least
  // panels_per_period panels per oscillation period, keeps the fixed-order
  // base rule in its super-algebraic regime at every omega.
  int panels = std::max(8, static_cast<int>(std::ceil(w * cfg.panels_per_period / std::numbers::pi)));

  Panelized prev = composite(f, w, panels, gl);
  // Absolute floor for near-zero results (integrals that cancel exactly):
  // 1e-3 * (interval length) * max|f|.
  const double floor = 1e-3 * 2.0 * prev.fmax;
  for (int d = 0; d < 20; ++d) {
    panels *= 2;
    const Panelized cur = composite(f, w, panels, gl);
    if (std::abs(cur.value - prev.value) <=
        cfg.target_rel_tol * std::max(std::abs(cur.value), floor))
      return cur.value;
    prev = cur;
  }
  throw NumericalError("oracle_integrate: no convergence after 20 panel doublings");
}

}  // namespace oscpoly::oracle
