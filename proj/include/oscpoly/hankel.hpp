#pragma once

#include <Eigen/Dense>
#include <string>

#include "oscpoly/moments.hpp"
#include "oscpoly/types.hpp"

namespace oscpoly::hankel {

using moments::MomentSequence;

// n x n moment matrix, entry(r,s) = mu_{r+s} (0-based indices).
struct HankelMatrix {
  int n;
  Eigen::MatrixXcd entries;
};

struct Tolerances {
  double tol_exist = 1e-8;
  double tol_zero = 1e-12;
};

enum class Verdict { exists, degenerate, indeterminate };

const char* to_string(Verdict v);

// delta = Delta_n; scale is a moment-magnitude normalizer (product of row
// max-magnitudes of the row-reduced extended system, see existence());
// verdict: exists iff |delta| > tol_exist*scale, degenerate iff
// |delta| < tol_zero*scale or delta == 0, indeterminate in between.
struct ExistenceReport {
  Frequency omega;
  int n;
  Complex delta;
  double scale;
  Verdict verdict;
  double condition_estimate;
};

// Degenerate/indeterminate existence where a construction required `exists`;
// carries the offending report. The CLI maps this to exit code 3.
struct ExistenceError : std::runtime_error {
  ExistenceReport report;
  ExistenceError(const std::string& msg, ExistenceReport rep)
      : std::runtime_error(msg), report(std::move(rep)) {}
};

// Requires m to cover mu_0..mu_{2n-2}; rejects shorter sequences naming the
// required length.
HankelMatrix hankel_matrix(const MomentSequence& m, int n);

// det of hankel_matrix(moments(omega, 2n-2), n) by pivoted LU. 0 is a legal
// value, not an error.
Complex hankel_det(Frequency omega, int n);

// Same determinant for the rescaled moments mu~_k = (-i w)^k mu_k, evaluated
// directly from their factorial-sum form (not by multiplying mu_k back up).
// Satisfies Delta_n = (1/(i w))^{n(n-1)} * Delta~_n. Rejects w = 0.
Complex scaled_hankel_det(Frequency omega, int n);

// Scale-relative existence verdict. Gaussian elimination with partial
// pivoting runs on the extended n x (n+1) system [H | v_n] of the polynomial
// coefficient equations; |delta| equals the pivot-magnitude product exactly,
// and scale is the product over elimination steps of the pivot row's max
// magnitude over the remaining columns. Both sides of the verdict comparison
// scale identically under uniform scaling of the moments.
ExistenceReport existence(Frequency omega, int n, Tolerances tol = {});

}  // namespace oscpoly::hankel
