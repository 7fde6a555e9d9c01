#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "oscpoly/moments.hpp"
#include "oscpoly/oracle.hpp"
#include "oscpoly/quadrule.hpp"

using namespace oscpoly;
using namespace oscpoly::quadrule;

namespace {

constexpr double kPi = std::numbers::pi;

double cdist(Complex a, Complex b) { return std::abs(a - b); }

double crel(Complex a, Complex b) {
  return cdist(a, b) / std::max({1e-300, std::abs(a), std::abs(b)});
}

MonicPolynomial make_poly(double w, int degree, std::vector<Complex> coeffs) {
  return MonicPolynomial{Frequency(w), degree, std::move(coeffs)};
}

}  // namespace

TEST_CASE("roots of quadratic and linear polynomials") {
  const auto r2 = roots(make_poly(0.0, 2, {Complex(-1.0 / 3.0, 0.0), Complex(0.0, 0.0)}));
  REQUIRE(r2.size() == 2);
  const double g = 1.0 / std::sqrt(3.0);
  CHECK(cdist(r2[0], Complex(-g, 0.0)) <= 1e-12);
  CHECK(cdist(r2[1], Complex(g, 0.0)) <= 1e-12);

  const auto r1 = roots(make_poly(kPi / 2.0, 1, {Complex(0.0, -2.0 / kPi)}));
  REQUIRE(r1.size() == 1);
  CHECK(cdist(r1[0], Complex(0.0, 2.0 / kPi)) <= 1e-13);
}

TEST_CASE("roots handle repeated and wild coefficients") {
  // (x - 1/2)^3 = x^3 - 3/2 x^2 + 3/4 x - 1/8: a triple root strains the
  // iteration, so allow the cube-root-of-eps accuracy loss
  const auto r = roots(make_poly(0.0, 3,
                                 {Complex(-0.125, 0.0), Complex(0.75, 0.0), Complex(-1.5, 0.0)}));
  REQUIRE(r.size() == 3);
  for (const auto& x : r) CHECK(cdist(x, Complex(0.5, 0.0)) <= 1e-4);

  CHECK_THROWS_AS(roots(make_poly(0.0, 0, {})), DomainError);
}

TEST_CASE("root set is symmetric under x -> -conj(x)") {
  const auto p = orthopoly::monic_op(Frequency(1.0), 5);
  const auto r = roots(p);
  for (const auto& x : r) {
    const Complex mirror = -std::conj(x);
    double best = 1e300;
    for (const auto& y : r) best = std::min(best, cdist(mirror, y));
    CHECK(best <= 1e-10);
  }
}

TEST_CASE("multiplicity detection") {
  const auto [c1, m1] = detect_multiplicity({Complex(0.1, 0.0), Complex(0.9, 0.0)}, 1e-8);
  CHECK(c1.size() == 2);
  CHECK(m1 == std::vector<int>{1, 1});

  const auto [c2, m2] =
      detect_multiplicity({Complex(0.5, 0.0), Complex(0.5 + 1e-12, 0.0)}, 1e-8);
  REQUIRE(c2.size() == 1);
  CHECK(m2 == std::vector<int>{2});
  CHECK(cdist(c2[0], Complex(0.5 + 5e-13, 0.0)) <= 1e-12);

  const auto lr = oracle::legendre_reference(6);
  std::vector<Complex> zs(lr.roots.begin(), lr.roots.end());
  const auto [c3, m3] = detect_multiplicity(zs, 1e-8);
  CHECK(c3.size() == 6);
  for (int m : m3) CHECK(m == 1);

  CHECK_THROWS_AS(detect_multiplicity({Complex(0.0, 0.0)}, -1.0), DomainError);
}

TEST_CASE("gauss_rule reproduces Gauss-Legendre at omega ~ 0") {
  const auto rule = gauss_rule(Frequency(1e-12), 2);
  REQUIRE(rule.n == 2);
  REQUIRE(rule.nodes.size() == 2);
  const double g = 1.0 / std::sqrt(3.0);
  CHECK(cdist(rule.nodes[0], Complex(-g, 0.0)) <= 1e-10);
  CHECK(cdist(rule.nodes[1], Complex(g, 0.0)) <= 1e-10);
  CHECK(cdist(rule.weights[0][0], Complex(1.0, 0.0)) <= 1e-10);
  CHECK(cdist(rule.weights[1][0], Complex(1.0, 0.0)) <= 1e-10);
  CHECK(rule.verify_residual <= 1e-10);
}

TEST_CASE("gauss_rule one-point rule at omega = pi/2") {
  const auto rule = gauss_rule(Frequency(kPi / 2.0), 1);
  REQUIRE(rule.nodes.size() == 1);
  CHECK(cdist(rule.nodes[0], Complex(0.0, 2.0 / kPi)) <= 1e-13);
  // w_0 = mu_0 = 4/pi
  CHECK(cdist(rule.weights[0][0], Complex(4.0 / kPi, 0.0)) <= 1e-13);
}

TEST_CASE("gauss_rule propagates degeneracy as ExistenceError") {
  CHECK_THROWS_AS(gauss_rule(Frequency(kPi), 1), hankel::ExistenceError);
}

TEST_CASE("gauss_rule is moment-exact through degree 2n-1") {
  for (double w : {0.5, 1.0, kPi, 10.0}) {
    for (int n : {1, 2, 4, 6}) {
      if (w == kPi && n == 1) continue;  // degenerate: covered above
      const auto rule = gauss_rule(Frequency(w), n);
      CHECK(exactness_check(rule) <= 1e-9);
      CHECK(rule.verify_residual <= 1e-9);
      // weights sum to mu_0 (the rule integrates 1 exactly); absolute floor
      // because mu_0(pi) = 0
      Complex sum = 0.0;
      for (const auto& wv : rule.weights) sum += wv[0];
      const Complex mu0 = moments::moments(Frequency(w), 0).values[0];
      CHECK(cdist(sum, mu0) <= 1e-12 * std::max(1.0, std::abs(mu0)));
    }
  }
}

TEST_CASE("confluent_rule with simple nodes matches gauss_rule weights") {
  const auto gr = gauss_rule(Frequency(1.0), 3);
  const auto cr = confluent_rule(gr.nodes, {1, 1, 1}, Frequency(1.0));
  for (size_t nu = 0; nu < 3; ++nu)
    CHECK(cdist(gr.weights[nu][0], cr.weights[nu][0]) <= 1e-12);
}

TEST_CASE("confluent_rule with a double node at the origin, omega = 0") {
  // fit mu_0 = 2, mu_1 = 0 with w00 f(0) + w01 f'(0)
  const auto rule = confluent_rule({Complex(0.0, 0.0)}, {2}, Frequency(0.0));
  REQUIRE(rule.weights.size() == 1);
  REQUIRE(rule.weights[0].size() == 2);
  CHECK(cdist(rule.weights[0][0], Complex(2.0, 0.0)) <= 1e-14);
  CHECK(cdist(rule.weights[0][1], Complex(0.0, 0.0)) <= 1e-14);
  // only n = 2 moments are fitted; x^2 and x^3 cannot both hold, and the
  // shortfall must be reported, not hidden
  CHECK(rule.verify_residual > 1e-3);
}

TEST_CASE("confluent_rule validates its inputs") {
  CHECK_THROWS_AS(confluent_rule({}, {}, Frequency(1.0)), DomainError);
  CHECK_THROWS_AS(confluent_rule({Complex(0.0, 0.0)}, {0}, Frequency(1.0)), DomainError);
  CHECK_THROWS_AS(confluent_rule({Complex(0.0, 0.0)}, {1, 1}, Frequency(1.0)), DomainError);
}

TEST_CASE("integrate: monomials hit their moments") {
  const auto rule = gauss_rule(Frequency(1.0), 4);
  const auto mu = moments::moments(Frequency(1.0), 7).values;
  for (int j = 0; j <= 7; ++j) {
    const Complex got = integrate(rule, IntegrandSpec::monomial(j));
    CHECK(cdist(got, mu[static_cast<size_t>(j)]) <= 1e-10);
  }
  const Complex poly = integrate(rule, IntegrandSpec::polynomial({1.0, 0.0, -2.0}));
  CHECK(cdist(poly, mu[0] - 2.0 * mu[2]) <= 1e-10);
}

TEST_CASE("integrate: exponential against its closed form") {
  const double w = 10.0;
  const Complex iw(0.0, w);
  const Complex exact = (std::exp(Complex(1.0, 0.0) + iw) - std::exp(Complex(-1.0, 0.0) - iw)) /
                        (Complex(1.0, 0.0) + iw);
  const Complex got = integrate(gauss_rule(Frequency(w), 6), IntegrandSpec::exponential());
  CHECK(crel(got, exact) <= 1e-6);
}

TEST_CASE("integrate: runge error decreases with the rule order") {
  const double w = 3.0;
  const auto f = IntegrandSpec::runge(25.0);
  const Complex ref = oracle::oracle_integrate(f, Frequency(w), oracle::OracleConfig{});
  const double e2 = cdist(integrate(gauss_rule(Frequency(w), 2), f), ref);
  const double e6 = cdist(integrate(gauss_rule(Frequency(w), 6), f), ref);
  CHECK(e6 < e2);
}

TEST_CASE("exactness_check flags a perturbed rule") {
  auto rule = gauss_rule(Frequency(kPi), 2);
  CHECK(exactness_check(rule) <= 1e-10);
  rule.weights[0][0] += 1e-3;
  CHECK(exactness_check(rule) >= 1e-4);
}

TEST_CASE("simplicity_report") {
  // near omega = 0 the node gaps approach the Legendre ones
  const auto lr = oracle::legendre_reference(4);
  double leg_gap = 1e300;
  for (size_t i = 0; i + 1 < lr.roots.size(); ++i)
    leg_gap = std::min(leg_gap, lr.roots[i + 1] - lr.roots[i]);
  CHECK(std::abs(simplicity_report(Frequency(1e-3), 4) - leg_gap) <= 1e-2);

  CHECK(simplicity_report(Frequency(200.0), 4) > 1e-7);
  CHECK(simplicity_report(Frequency(1.0), 2) > 0.1);
  CHECK(std::isinf(simplicity_report(Frequency(0.5), 1)));
}
