#pragma once

#include <vector>

#include "oscpoly/types.hpp"

namespace oscpoly::quadrule {

// Built-in integrand family. Every kind is entire or analytically continued,
// with analytic derivatives of all orders, so confluent rules (which evaluate
// f^{(k)} at complex nodes) are always applicable.
struct IntegrandSpec {
  enum class Kind { monomial, polynomial, exponential, cosine, runge };
  Kind kind = Kind::monomial;
  int j = 0;                   // monomial: x^j
  std::vector<double> coeffs;  // polynomial: sum coeffs[m] x^m
  double c = 1.0;              // cosine: cos(c x)
  double a = 25.0;             // runge: 1/(1 + a x^2), a > 0

  static IntegrandSpec monomial(int j);
  static IntegrandSpec polynomial(std::vector<double> coeffs);
  static IntegrandSpec exponential();
  static IntegrandSpec cosine(double c);
  static IntegrandSpec runge(double a);
};

// deriv-th derivative at a complex point. runge uses the partial-fraction
// form 1/(1+a x^2) = (1/2)[1/(1+i sqrt(a) x) + 1/(1-i sqrt(a) x)].
Complex integrand_eval(const IntegrandSpec& f, Complex x, int deriv);

}  // namespace oscpoly::quadrule
