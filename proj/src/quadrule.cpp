#include "oscpoly/quadrule.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "oscpoly/moments.hpp"

namespace oscpoly::quadrule {

namespace {

Complex horner(const std::vector<Complex>& a, Complex x) {
  // monic: x^n + a_{n-1} x^{n-1} + ... + a_0
  Complex v(1.0, 0.0);
  for (size_t m = a.size(); m-- > 0;) v = v * x + a[m];
  return v;
}

Complex horner_deriv(const std::vector<Complex>& a, Complex x) {
  const size_t n = a.size();
  Complex v(static_cast<double>(n), 0.0);
  for (size_t m = n; m-- > 1;) v = v * x + static_cast<double>(m) * a[m];
  return v;
}

}  // namespace

std::vector<Complex> roots(const MonicPolynomial& p) {
  const int n = p.degree;
  if (n < 1) throw DomainError("roots: degree must be >= 1");
  const std::vector<Complex>& a = p.coefficients;

  double amax = 0.0;
  for (const Complex& c : a) amax = std::max(amax, std::abs(c));
  const double radius = 1.0 + amax;

  std::vector<Complex> x(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double ang = 2.0 * std::numbers::pi * j / n + 0.4;
    x[static_cast<size_t>(j)] = radius * Complex(std::cos(ang), std::sin(ang));
  }

  const auto residual_ok = [&](Complex z) {
    return std::abs(horner(a, z)) <= 1e-13 * std::pow(1.0 + std::abs(z), n);
  };

  constexpr int kMaxSweeps = 500;
  bool converged = false;
  double worst = std::numeric_limits<double>::infinity();
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (int i = 0; i < n; ++i) {
      Complex denom(1.0, 0.0);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        Complex diff = x[static_cast<size_t>(i)] - x[static_cast<size_t>(j)];
        if (diff == Complex(0.0, 0.0)) diff = Complex(1e-12, 1e-12);  // collision guard
        denom *= diff;
      }
      x[static_cast<size_t>(i)] -= horner(a, x[static_cast<size_t>(i)]) / denom;
    }
    converged = true;
    worst = 0.0;
    for (const Complex& z : x) {
      worst = std::max(worst, std::abs(horner(a, z)));
      if (!residual_ok(z)) converged = false;
    }
  }
  if (!converged)
    throw NumericalError("roots: Durand-Kerner did not converge in 500 sweeps; worst residual " +
                         std::to_string(worst));

  // Newton polish: keep a step only while it reduces |p|.
  for (Complex& z : x) {
    for (int step = 0; step < 3; ++step) {
      const Complex d = horner_deriv(a, z);
      if (std::abs(d) == 0.0) break;
      const Complex z2 = z - horner(a, z) / d;
      if (std::abs(horner(a, z2)) >= std::abs(horner(a, z))) break;
      z = z2;
    }
  }

  std::sort(x.begin(), x.end(), [](const Complex& l, const Complex& r) {
    if (l.real() != r.real()) return l.real() < r.real();
    return l.imag() < r.imag();
  });
  return x;
}

std::pair<std::vector<Complex>, std::vector<int>> detect_multiplicity(
    const std::vector<Complex>& roots, double cluster_tol) {
  if (!(cluster_tol > 0.0)) throw DomainError("detect_multiplicity: cluster_tol must be > 0");
  std::vector<Complex> centroids;
  std::vector<Complex> sums;
  std::vector<int> sizes;
  for (const Complex& r : roots) {
    bool placed = false;
    for (size_t c = 0; c < centroids.size(); ++c) {
      if (std::abs(r - centroids[c]) <= cluster_tol) {
        sums[c] += r;
        sizes[c] += 1;
        centroids[c] = sums[c] / static_cast<double>(sizes[c]);
        placed = true;
        break;
      }
    }
    if (!placed) {
      centroids.push_back(r);
      sums.push_back(r);
      sizes.push_back(1);
    }
  }
  return {std::move(centroids), std::move(sizes)};
}

namespace {

// Residual of the weight system on moment rows j = jlo..jhi, relative to
// 1 + |mu_j|. Derivative columns follow the confluent layout.
double moment_rows_residual(const QuadratureRule& rule, const std::vector<Complex>& mu, int jlo,
                            int jhi) {
  double worst = 0.0;
  for (int j = jlo; j <= jhi; ++j) {
    Complex acc(0.0, 0.0);
    for (size_t nu = 0; nu < rule.nodes.size(); ++nu)
      for (int k = 0; k < rule.multiplicities[nu]; ++k)
        acc += rule.weights[nu][static_cast<size_t>(k)] *
               integrand_eval(IntegrandSpec::monomial(j), rule.nodes[nu], k);
    const size_t sj = static_cast<size_t>(j);
    worst = std::max(worst, std::abs(acc - mu[sj]) / (1.0 + std::abs(mu[sj])));
  }
  return worst;
}

}  // namespace

QuadratureRule confluent_rule(const std::vector<Complex>& nodes,
                              const std::vector<int>& multiplicities, Frequency omega) {
  if (nodes.size() != multiplicities.size())
    throw DomainError("confluent_rule: nodes/multiplicities size mismatch");
  int n = 0;
  for (int m : multiplicities) {
    if (m < 1) throw DomainError("confluent_rule: multiplicities must be >= 1");
    n += m;
  }
  if (n < 1) throw DomainError("confluent_rule: empty rule");

  const auto m = moments::moments(omega, 2 * n - 1);

  // Generalized (Hermite-type) Vandermonde: column (nu,k) carries
  // d^k/dx^k x^j at node nu; fit rows j = 0..n-1 exactly.
  Eigen::MatrixXcd A(n, n);
  Eigen::VectorXcd b(n);
  for (int j = 0; j < n; ++j) {
    int col = 0;
    for (size_t nu = 0; nu < nodes.size(); ++nu)
      for (int k = 0; k < multiplicities[nu]; ++k, ++col)
        A(j, col) = integrand_eval(IntegrandSpec::monomial(j), nodes[nu], k);
    b(j) = m.values[static_cast<size_t>(j)];
  }
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(A);
  const double rcond = lu.rcond();
  if (!(rcond > 1e-14))
    throw NumericalError("confluent_rule: generalized Vandermonde system is singular "
                         "(rcond = " + std::to_string(rcond) + ")");
  const Eigen::VectorXcd w = lu.solve(b);

  QuadratureRule rule{omega, n, nodes, multiplicities, {}, 0.0};
  int col = 0;
  for (size_t nu = 0; nu < nodes.size(); ++nu) {
    std::vector<Complex> wk;
    for (int k = 0; k < multiplicities[nu]; ++k, ++col) wk.push_back(w(col));
    rule.weights.push_back(std::move(wk));
  }
  // The remaining Gaussian rows are earned by orthogonality, not imposed;
  // record how well they actually hold.
  rule.verify_residual = moment_rows_residual(rule, m.values, n, 2 * n - 1);
  return rule;
}

QuadratureRule gauss_rule(Frequency omega, int n, Tolerances tol, double cluster_tol) {
  if (n < 1) throw DomainError("gauss_rule: n must be >= 1");
  const MonicPolynomial p = orthopoly::monic_op(omega, n, tol);
  const std::vector<Complex> rts = roots(p);
  auto [nodes, mult] = detect_multiplicity(rts, cluster_tol);

  const bool all_simple =
      std::all_of(mult.begin(), mult.end(), [](int m) { return m == 1; });
  if (!all_simple) return confluent_rule(nodes, mult, omega);

  const auto m = moments::moments(omega, 2 * n - 1);
  Eigen::MatrixXcd V(n, n);
  Eigen::VectorXcd b(n);
  for (int nu = 0; nu < n; ++nu) V(0, nu) = Complex(1.0, 0.0);
  for (int j = 1; j < n; ++j)
    for (int nu = 0; nu < n; ++nu) V(j, nu) = V(j - 1, nu) * nodes[static_cast<size_t>(nu)];
  for (int j = 0; j < n; ++j) b(j) = m.values[static_cast<size_t>(j)];

  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(V);
  const double rcond = lu.rcond();
  if (!(rcond > 1e-14))
    throw NumericalError("gauss_rule: node Vandermonde system is ill-conditioned (rcond = " +
                         std::to_string(rcond) + ")");
  const Eigen::VectorXcd w = lu.solve(b);

  QuadratureRule rule{omega, n, std::move(nodes), std::move(mult), {}, 0.0};
  for (int nu = 0; nu < n; ++nu) rule.weights.push_back({w(nu)});
  rule.verify_residual = moment_rows_residual(rule, m.values, n, 2 * n - 1);
  return rule;
}

Complex integrate(const QuadratureRule& rule, const IntegrandSpec& f) {
  Complex acc(0.0, 0.0);
  for (size_t nu = 0; nu < rule.nodes.size(); ++nu)
    for (int k = 0; k < rule.multiplicities[nu]; ++k)
      acc += rule.weights[nu][static_cast<size_t>(k)] * integrand_eval(f, rule.nodes[nu], k);
  return acc;
}

double exactness_check(const QuadratureRule& rule) {
  const auto m = moments::moments(rule.omega, 2 * rule.n - 1);
  return moment_rows_residual(rule, m.values, 0, 2 * rule.n - 1);
}

double simplicity_report(Frequency omega, int n, Tolerances tol) {
  if (n < 1) throw DomainError("simplicity_report: n must be >= 1");
  if (n == 1) return std::numeric_limits<double>::infinity();
  const std::vector<Complex> rts = roots(orthopoly::monic_op(omega, n, tol));
  double gap = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < rts.size(); ++i)
    for (size_t j = i + 1; j < rts.size(); ++j) gap = std::min(gap, std::abs(rts[i] - rts[j]));
  return gap;
}

}  // namespace oscpoly::quadrule
