#include "oscpoly/exactpoly.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace oscpoly::exactpoly {

const char* to_string(Certificate c) {
  return c == Certificate::certified ? "certified" : "not-certified";
}

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("make_rational: zero denominator");
  // Division canonicalizes (positive denominator, reduced); the two-argument
  // number constructor does not.
  return BigRational(num) / BigRational(den);
}

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

BigRational rational_from_string(const std::string& s) {
  const auto slash = s.find('/');
  const std::string p = s.substr(0, slash);
  if (!is_integer_token(p))
    throw DomainError("rational_from_string: malformed rational '" + s + "'");
  if (slash == std::string::npos) return BigRational(BigInt(p));
  const std::string q = s.substr(slash + 1);
  if (!is_integer_token(q))
    throw DomainError("rational_from_string: malformed rational '" + s + "'");
  return make_rational(BigInt(p), BigInt(q));
}

std::string rational_to_string(const BigRational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

RationalPolynomial::RationalPolynomial(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) {
  normalize();
}

RationalPolynomial RationalPolynomial::constant(const BigRational& c) {
  return RationalPolynomial(std::vector<BigRational>{c});
}

void RationalPolynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigRational RationalPolynomial::coeff(int m) const {
  if (m < 0 || m >= static_cast<int>(c_.size())) return BigRational(0);
  return c_[static_cast<size_t>(m)];
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& o) const {
  std::vector<BigRational> r(std::max(c_.size(), o.c_.size()), BigRational(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return RationalPolynomial(std::move(r));
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& o) const {
  std::vector<BigRational> r(std::max(c_.size(), o.c_.size()), BigRational(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return RationalPolynomial(std::move(r));
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& o) const {
  if (is_zero() || o.is_zero()) return RationalPolynomial();
  std::vector<BigRational> r(c_.size() + o.c_.size() - 1, BigRational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return RationalPolynomial(std::move(r));
}

RationalPolynomial RationalPolynomial::divide_exact(const RationalPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::logic_error("RationalPolynomial: division by zero polynomial");
  if (is_zero()) return RationalPolynomial();
  if (degree() < divisor.degree())
    throw std::logic_error("RationalPolynomial: inexact division (degree too low)");

  std::vector<BigRational> rem = c_;
  std::vector<BigRational> quot(c_.size() - divisor.c_.size() + 1, BigRational(0));
  const BigRational& lead = divisor.c_.back();
  for (int m = static_cast<int>(quot.size()) - 1; m >= 0; --m) {
    const BigRational q = rem[static_cast<size_t>(m) + divisor.c_.size() - 1] / lead;
    quot[static_cast<size_t>(m)] = q;
    if (q == 0) continue;
    for (size_t j = 0; j < divisor.c_.size(); ++j)
      rem[static_cast<size_t>(m) + j] -= q * divisor.c_[j];
  }
  for (const BigRational& c : rem)
    if (c != 0) throw std::logic_error("RationalPolynomial: inexact division (nonzero remainder)");
  return RationalPolynomial(std::move(quot));
}

Complex RationalPolynomial::eval(Complex x) const {
  Complex v(0.0, 0.0);
  for (size_t i = c_.size(); i-- > 0;)
    v = v * x + Complex(c_[i].convert_to<double>(), 0.0);
  return v;
}

std::string RationalPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (size_t m = 0; m < c_.size(); ++m) {
    if (c_[m] == 0) continue;
    std::string term = rational_to_string(c_[m]);
    if (!first && term[0] != '-') term = "+" + term;
    if (m >= 1) term += "*X";
    if (m >= 2) term += "^" + std::to_string(m);
    if (!first) out += " ";
    out += term;
    first = false;
  }
  return out;
}

RationalPolynomial hatted_moment_poly(int k, const BigRational& t) {
  if (k < 0) throw DomainError("hatted_moment_poly: k must be >= 0");
  const BigInt kf = factorial(k);
  std::vector<BigRational> c(static_cast<size_t>(k) + 1, BigRational(0));
  // -2 k! * X^{v-1}/v! for odd v <= k
  for (int v = 1; v <= k; v += 2)
    c[static_cast<size_t>(v) - 1] += make_rational(-2 * kf, factorial(v));
  // +2 k! t * (1 + sum over even v >= 2 of X^v/v!)
  c[0] += make_rational(2 * kf, 1) * t;
  for (int v = 2; v <= k; v += 2)
    c[static_cast<size_t>(v)] += make_rational(2 * kf, factorial(v)) * t;
  return RationalPolynomial(std::move(c));
}

RationalPolynomial symbolic_hankel(int n, const BigRational& t) {
  if (n < 1) throw DomainError("symbolic_hankel: n must be >= 1");
  std::vector<std::vector<RationalPolynomial>> M(static_cast<size_t>(n));
  for (int r = 0; r < n; ++r) {
    M[static_cast<size_t>(r)].resize(static_cast<size_t>(n));
    for (int s = 0; s < n; ++s)
      M[static_cast<size_t>(r)][static_cast<size_t>(s)] = hatted_moment_poly(r + s, t);
  }

  // Fraction-free (Bareiss) elimination: every division below is exact in the
  // polynomial ring, which sidesteps the coefficient blowup of naive
  // fractional elimination.
  RationalPolynomial prev = RationalPolynomial::constant(BigRational(1));
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    auto& Mk = M[static_cast<size_t>(k)];
    if (Mk[static_cast<size_t>(k)].is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (!M[static_cast<size_t>(i)][static_cast<size_t>(k)].is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return RationalPolynomial();  // zero column: det = 0
      std::swap(M[static_cast<size_t>(k)], M[static_cast<size_t>(swap_row)]);
      sign = -sign;
    }
    const RationalPolynomial& pivot = M[static_cast<size_t>(k)][static_cast<size_t>(k)];
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        auto& Mij = M[static_cast<size_t>(i)][static_cast<size_t>(j)];
        Mij = (pivot * Mij -
               M[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                   M[static_cast<size_t>(k)][static_cast<size_t>(j)])
                  .divide_exact(prev);
      }
      M[static_cast<size_t>(i)][static_cast<size_t>(k)] = RationalPolynomial();
    }
    prev = M[static_cast<size_t>(k)][static_cast<size_t>(k)];
  }

  RationalPolynomial det = M[static_cast<size_t>(n) - 1][static_cast<size_t>(n) - 1];
  if (sign < 0) det = RationalPolynomial() - det;
  return det;
}

Certificate existence_certificate(int n, const BigRational& t) {
  return symbolic_hankel(n, t).is_zero() ? Certificate::not_certified : Certificate::certified;
}

}  // namespace oscpoly::exactpoly
