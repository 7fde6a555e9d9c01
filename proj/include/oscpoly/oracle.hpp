#pragma once

#include <vector>

#include "oscpoly/integrand.hpp"
#include "oscpoly/types.hpp"

namespace oscpoly::oracle {

using quadrule::IntegrandSpec;

struct OracleConfig {
  int panels_per_period = 8;  // >= 4
  int base_rule_order = 16;
  double target_rel_tol = 1e-12;
};

// Brute-force reference for integral f(x) e^{i w x} on [-1,1]: composite
// Gauss-Legendre with enough panels that each spans at most
// 2 pi / (w * panels_per_period) in phase (minimum 8), refined by doubling
// the panel count until two successive values agree to target_rel_tol
// (relative to the result, with an absolute floor of 1e-3 * 2 * max|f| so
// exact zeros converge too). More than 20 doublings throws NumericalError.
Complex oracle_integrate(const IntegrandSpec& f, Frequency omega,
                         OracleConfig cfg = {});

// Classical Gauss-Legendre data (w = 0 limit), built independently of the
// modules it checks: monic coefficients from the three-term recurrence and
// roots by Newton iteration on that recurrence.
struct LegendreReference {
  std::vector<double> monic_coeffs;  // a_0..a_{n-1}
  std::vector<double> roots;         // ascending
  std::vector<double> weights;
};

// 1 <= n <= 16.
LegendreReference legendre_reference(int n);

}  // namespace oscpoly::oracle
