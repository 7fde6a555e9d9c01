#pragma once

#include <utility>
#include <vector>

#include "oscpoly/integrand.hpp"
#include "oscpoly/orthopoly.hpp"
#include "oscpoly/types.hpp"

namespace oscpoly::quadrule {

using hankel::Tolerances;
using orthopoly::MonicPolynomial;

// Quadrature rule for integral f(x) e^{i w x} on [-1,1]. Applies
// sum_nu sum_k weights[nu][k] * f^{(k)}(nodes[nu]); multiplicities[nu] is the
// node's multiplicity (weights[nu] has that many entries). verify_residual is
// the max relative residual of the rule on the moment equations
// j = n..2n-1, recorded at construction (the first n are fitted exactly).
struct QuadratureRule {
  Frequency omega;
  int n;
  std::vector<Complex> nodes;
  std::vector<int> multiplicities;
  std::vector<std::vector<Complex>> weights;
  double verify_residual = 0.0;
};

// All n roots by Durand-Kerner simultaneous iteration started on the circle
// of radius 1 + max|a_m|, run to residual |p(x)| <= 1e-13 (1+|x|)^n (cap 500
// sweeps), then polished by up to 3 Newton steps each; sorted by
// (real, imag). Non-convergence throws NumericalError with the residual
// reached.
std::vector<Complex> roots(const MonicPolynomial& p);

// Greedy clustering: a root joins the first cluster whose centroid is within
// cluster_tol, else opens a new one. Returns (centroids, cluster sizes).
std::pair<std::vector<Complex>, std::vector<int>> detect_multiplicity(
    const std::vector<Complex>& roots, double cluster_tol);

// Nodes = roots of monic_op(omega, n). All simple: weights solve the n x n
// Vandermonde system sum_nu w_nu x_nu^j = mu_j (j < n); reciprocal condition
// below 1e-14 throws NumericalError. Detected multiplicities delegate to
// confluent_rule. Existence errors propagate from monic_op.
QuadratureRule gauss_rule(Frequency omega, int n, Tolerances tol = {},
                          double cluster_tol = 1e-8);

// Hermite-type rule on prescribed nodes/multiplicities (sum = n): the
// n weights w_{nu,k} fit the moment equations j = 0..n-1 exactly via the
// generalized Vandermonde system d^k/dx^k x^j at the nodes; the remaining
// equations j = n..2n-1 are evaluated and reported in verify_residual rather
// than silently assumed.
QuadratureRule confluent_rule(const std::vector<Complex>& nodes,
                              const std::vector<int>& multiplicities,
                              Frequency omega);

Complex integrate(const QuadratureRule& rule, const IntegrandSpec& f);

// max over j = 0..2n-1 of |rule(x^j) - mu_j| / (1 + |mu_j|).
double exactness_check(const QuadratureRule& rule);

// Minimum pairwise distance among the roots of p_n; +infinity for n = 1.
double simplicity_report(Frequency omega, int n, Tolerances tol = {});

}  // namespace oscpoly::quadrule
