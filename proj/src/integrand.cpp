#include "oscpoly/integrand.hpp"

#include <cmath>
#include <numbers>

namespace oscpoly::quadrule {

IntegrandSpec IntegrandSpec::monomial(int j) {
  if (j < 0) throw DomainError("integrand: monomial degree must be >= 0");
  IntegrandSpec f;
  f.kind = Kind::monomial;
  f.j = j;
  return f;
}

IntegrandSpec IntegrandSpec::polynomial(std::vector<double> coeffs) {
  for (double c : coeffs)
    if (!std::isfinite(c)) throw DomainError("integrand: polynomial coefficients must be finite");
  IntegrandSpec f;
  f.kind = Kind::polynomial;
  f.coeffs = std::move(coeffs);
  return f;
}

IntegrandSpec IntegrandSpec::exponential() {
  IntegrandSpec f;
  f.kind = Kind::exponential;
  return f;
}

IntegrandSpec IntegrandSpec::cosine(double c) {
  if (!std::isfinite(c)) throw DomainError("integrand: cosine frequency must be finite");
  IntegrandSpec f;
  f.kind = Kind::cosine;
  f.c = c;
  return f;
}

IntegrandSpec IntegrandSpec::runge(double a) {
  if (!std::isfinite(a) || a <= 0.0) throw DomainError("integrand: runge parameter must be > 0");
  IntegrandSpec f;
  f.kind = Kind::runge;
  f.a = a;
  return f;
}

namespace {

// d^deriv/dx^deriv of x^j: j(j-1)...(j-deriv+1) x^{j-deriv}.
Complex monomial_deriv(int j, Complex x, int deriv) {
  if (deriv > j) return Complex(0.0, 0.0);
  double fall = 1.0;
  for (int i = 0; i < deriv; ++i) fall *= static_cast<double>(j - i);
  Complex pw(1.0, 0.0);
  for (int i = 0; i < j - deriv; ++i) pw *= x;
  return fall * pw;
}

}  // namespace

Complex integrand_eval(const IntegrandSpec& f, Complex x, int deriv) {
  if (deriv < 0) throw DomainError("integrand_eval: derivative order must be >= 0");
  switch (f.kind) {
    case IntegrandSpec::Kind::monomial:
      return monomial_deriv(f.j, x, deriv);
    case IntegrandSpec::Kind::polynomial: {
      Complex acc(0.0, 0.0);
      for (size_t m = 0; m < f.coeffs.size(); ++m)
        acc += f.coeffs[m] * monomial_deriv(static_cast<int>(m), x, deriv);
      return acc;
    }
    case IntegrandSpec::Kind::exponential:
      return std::exp(x);
    case IntegrandSpec::Kind::cosine:
      // d^k cos(cx) = c^k cos(cx + k pi/2)
      return std::pow(Complex(f.c, 0.0), deriv) *
             std::cos(f.c * x + deriv * std::numbers::pi / 2.0);
    case IntegrandSpec::Kind::runge: {
      // 1/(1+a x^2) = (1/2)[1/(1+i r x) + 1/(1-i r x)], r = sqrt(a);
      // d^k (1+cx)^{-1} = (-c)^k k! (1+cx)^{-(k+1)}.
      const double r = std::sqrt(f.a);
      const Complex ir(0.0, r);
      double kf = 1.0;
      for (int i = 2; i <= deriv; ++i) kf *= i;
      const Complex d1 = std::pow(-ir, deriv) * kf / std::pow(Complex(1.0, 0.0) + ir * x, deriv + 1);
      const Complex d2 = std::pow(ir, deriv) * kf / std::pow(Complex(1.0, 0.0) - ir * x, deriv + 1);
      return 0.5 * (d1 + d2);
    }
  }
  throw DomainError("integrand_eval: unknown kind");
}

}  // namespace oscpoly::quadrule
