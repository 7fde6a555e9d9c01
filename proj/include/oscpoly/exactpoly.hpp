#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

#include "oscpoly/types.hpp"

namespace oscpoly::exactpoly {

using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

// Canonicalizing constructors: GMP-backed rationals keep denominator > 0 and
// gcd(|num|, den) = 1 automatically once built via division.
BigRational make_rational(const BigInt& num, const BigInt& den);

// Parses "p/q" or "p" (arbitrary-precision, optional sign); rejects q = 0 and
// malformed text.
BigRational rational_from_string(const std::string& s);

// "p/q", or just "p" when q = 1.
std::string rational_to_string(const BigRational& r);

BigInt factorial(int n);

// Polynomial in the formal variable X (standing for -i w) with big-rational
// coefficients, stored ascending; normalized so the trailing coefficient is
// nonzero unless the polynomial is zero (empty coefficient vector).
class RationalPolynomial {
 public:
  RationalPolynomial() = default;  // zero polynomial
  explicit RationalPolynomial(std::vector<BigRational> coeffs);
  static RationalPolynomial constant(const BigRational& c);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if zero
  BigRational coeff(int m) const;  // 0 outside the stored range
  const std::vector<BigRational>& coeffs() const { return c_; }

  RationalPolynomial operator+(const RationalPolynomial& o) const;
  RationalPolynomial operator-(const RationalPolynomial& o) const;
  RationalPolynomial operator*(const RationalPolynomial& o) const;
  bool operator==(const RationalPolynomial& o) const { return c_ == o.c_; }

  // Exact quotient; throws std::logic_error if the division leaves a
  // remainder (the fraction-free elimination below guarantees it never does).
  RationalPolynomial divide_exact(const RationalPolynomial& divisor) const;

  // Evaluation at a complex point (coefficients rounded to double), used by
  // the cross-representation checks against the floating-point determinants.
  Complex eval(Complex x) const;

  std::string to_string() const;  // e.g. "-4 + 2/3*X^2"

 private:
  std::vector<BigRational> c_;
  void normalize();
};

// mu^_k(X) = -2 k! [ sum_{v odd <= k} X^{v-1}/v!
//                    - t (1 + sum_{v even, 2<=v<=k} X^v/v!) ],
// the cos-factored moment with t = tan(w)/w treated as an exact rational.
RationalPolynomial hatted_moment_poly(int k, const BigRational& t);

// Exact determinant of the n x n matrix with entries mu^_{r+s} (0-based),
// by fraction-free (Bareiss) elimination over the rational-polynomial ring.
RationalPolynomial symbolic_hankel(int n, const BigRational& t);

enum class Certificate { certified, not_certified };

const char* to_string(Certificate c);

// certified iff symbolic_hankel(n, t) is not the zero polynomial: a nonzero
// polynomial with rational coefficients cannot vanish at -i w for
// transcendental w, so p_n exists for every transcendental w > 0 with
// tan(w)/w = t and cos(w) != 0.
Certificate existence_certificate(int n, const BigRational& t);

}  // namespace oscpoly::exactpoly
