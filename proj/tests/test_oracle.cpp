#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oscpoly/moments.hpp"
#include "oscpoly/oracle.hpp"

using namespace oscpoly;
using namespace oscpoly::oracle;
using quadrule::IntegrandSpec;

namespace {

constexpr double kPi = std::numbers::pi;

double crel(Complex a, Complex b) {
  return std::abs(a - b) / std::max({1e-300, std::abs(a), std::abs(b)});
}

}  // namespace

TEST_CASE("oracle hits closed forms") {
  // integral of 1 * e^{i pi x} = 2 sin(pi)/pi = 0
  CHECK(std::abs(oracle_integrate(IntegrandSpec::monomial(0), Frequency(kPi))) <= 1e-12);
  // integral of x^2 e^{i pi x} = -4/pi^2
  CHECK(crel(oracle_integrate(IntegrandSpec::monomial(2), Frequency(kPi)),
             Complex(-4.0 / (kPi * kPi), 0.0)) <= 1e-12);
  // integral of e^x e^{i w x} = (e^{1+iw} - e^{-1-iw})/(1+iw)
  const double w = 10.0;
  const Complex iw(0.0, w);
  const Complex exact = (std::exp(Complex(1.0, 0.0) + iw) - std::exp(Complex(-1.0, 0.0) - iw)) /
                        (Complex(1.0, 0.0) + iw);
  CHECK(crel(oracle_integrate(IntegrandSpec::exponential(), Frequency(w)), exact) <= 1e-12);
  // integral of cos(cx) e^{i w x}: real part is sin(c+w)/(c+w) + sin(c-w)/(c-w)
  const Complex got = oracle_integrate(IntegrandSpec::cosine(2.0), Frequency(5.0));
  const double re = std::sin(7.0) / 7.0 + std::sin(-3.0) / -3.0;
  CHECK(std::abs(got.real() - re) <= 1e-12);
}

TEST_CASE("oracle is self-consistent under tolerance tightening") {
  OracleConfig loose;
  OracleConfig tight;
  tight.target_rel_tol = loose.target_rel_tol / 2.0;
  const auto f = IntegrandSpec::runge(25.0);
  const Complex a = oracle_integrate(f, Frequency(3.0), loose);
  const Complex b = oracle_integrate(f, Frequency(3.0), tight);
  CHECK(std::abs(a - b) <= loose.target_rel_tol * std::abs(a) * 10.0 + 1e-15);
}

TEST_CASE("oracle agrees with the moment engine across frequencies") {
  for (double w : {0.1, 1.0, 10.0, 100.0}) {
    const auto m = moments::moments(Frequency(w), 20);
    for (int k = 0; k <= 20; ++k) {
      const Complex ref = oracle_integrate(IntegrandSpec::monomial(k), Frequency(w));
      const double scale = std::max(std::abs(ref), 1e-6);
      CHECK(std::abs(m.values[static_cast<size_t>(k)] - ref) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("legendre_reference: closed-form data for small n") {
  const auto l1 = legendre_reference(1);
  REQUIRE(l1.roots.size() == 1);
  CHECK(l1.roots[0] == 0.0);
  CHECK(std::abs(l1.weights[0] - 2.0) <= 1e-15);
  REQUIRE(l1.monic_coeffs.size() == 1);
  CHECK(l1.monic_coeffs[0] == 0.0);

  const auto l2 = legendre_reference(2);
  const double g = 1.0 / std::sqrt(3.0);
  CHECK(std::abs(l2.roots[0] + g) <= 1e-15);
  CHECK(std::abs(l2.roots[1] - g) <= 1e-15);
  CHECK(std::abs(l2.weights[0] - 1.0) <= 1e-14);
  CHECK(std::abs(l2.weights[1] - 1.0) <= 1e-14);
  CHECK(std::abs(l2.monic_coeffs[0] + 1.0 / 3.0) <= 1e-15);
  CHECK(l2.monic_coeffs[1] == 0.0);

  const auto l3 = legendre_reference(3);
  const double r = std::sqrt(0.6);
  CHECK(std::abs(l3.roots[0] + r) <= 1e-14);
  CHECK(std::abs(l3.roots[1]) <= 1e-15);
  CHECK(std::abs(l3.roots[2] - r) <= 1e-14);
  CHECK(std::abs(l3.weights[0] - 5.0 / 9.0) <= 1e-14);
  CHECK(std::abs(l3.weights[1] - 8.0 / 9.0) <= 1e-14);
  CHECK(std::abs(l3.weights[2] - 5.0 / 9.0) <= 1e-14);
}

TEST_CASE("legendre_reference: structural invariants up to n = 16") {
  for (int n = 1; n <= 16; ++n) {
    const auto l = legendre_reference(n);
    REQUIRE(static_cast<int>(l.roots.size()) == n);
    REQUIRE(static_cast<int>(l.weights.size()) == n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      CHECK(l.roots[static_cast<size_t>(i)] > -1.0);
      CHECK(l.roots[static_cast<size_t>(i)] < 1.0);
      if (i > 0) CHECK(l.roots[static_cast<size_t>(i)] > l.roots[static_cast<size_t>(i) - 1]);
      CHECK(l.weights[static_cast<size_t>(i)] > 0.0);
      sum += l.weights[static_cast<size_t>(i)];
    }
    CHECK(std::abs(sum - 2.0) <= 1e-14);
    // roots are symmetric about 0
    for (int i = 0; i < n; ++i)
      CHECK(std::abs(l.roots[static_cast<size_t>(i)] +
                     l.roots[static_cast<size_t>(n - 1 - i)]) <= 1e-14);
  }
}

TEST_CASE("configuration validation") {
  CHECK_THROWS_AS(legendre_reference(0), DomainError);
  CHECK_THROWS_AS(legendre_reference(17), DomainError);
  OracleConfig bad;
  bad.panels_per_period = 3;
  CHECK_THROWS_AS(oracle_integrate(IntegrandSpec::monomial(0), Frequency(1.0), bad), DomainError);
  OracleConfig bad2;
  bad2.target_rel_tol = 0.0;
  CHECK_THROWS_AS(oracle_integrate(IntegrandSpec::monomial(0), Frequency(1.0), bad2), DomainError);
}
