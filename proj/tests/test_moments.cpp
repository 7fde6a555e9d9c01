#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oscpoly/moments.hpp"

using namespace oscpoly;
using namespace oscpoly::moments;

namespace {

constexpr double kPi = std::numbers::pi;

double crel(Complex a, Complex b) {
  const double scale = std::max({1e-300, std::abs(a), std::abs(b)});
  return std::abs(a - b) / scale;
}

}  // namespace

TEST_CASE("recurrence base cases and hand values") {
  CHECK(std::abs(moment_recurrence(Frequency(kPi), 0).values[0]) <= 1e-15);

  // mu_0(1) = 2 sin 1
  const auto m1 = moment_recurrence(Frequency(1.0), 0);
  CHECK(crel(m1.values[0], Complex(1.6829419696157930133, 0.0)) <= 1e-15);

  // mu_1(pi) = (2/pi) i, mu_2(pi) = -4/pi^2 (analytic antiderivatives)
  const auto mp = moment_recurrence(Frequency(kPi), 2);
  CHECK(crel(mp.values[1], Complex(0.0, 0.63661977236758134308)) <= 1e-14);
  CHECK(crel(mp.values[2], Complex(-0.40528473456935108578, 0.0)) <= 1e-14);

  CHECK(mp.method[0] == MomentMethod::recurrence);
  CHECK(mp.method[2] == MomentMethod::recurrence);
  CHECK_THROWS_AS(moment_recurrence(Frequency(0.0), 3), DomainError);
  CHECK_THROWS_AS(moment_recurrence(Frequency(1.0), -1), DomainError);
}

TEST_CASE("closed form equals the other methods") {
  CHECK(std::abs(moment_closed_form(Frequency(kPi), 0)) <= 1e-15);
  CHECK(crel(moment_closed_form(Frequency(kPi), 1), Complex(0.0, 0.63661977236758134308)) <= 1e-13);

  // mu_4(10): frozen reference and cross-method agreement
  const Complex cf = moment_closed_form(Frequency(10.0), 4);
  CHECK(crel(cf, Complex(-0.15910702463630520908, 0.0)) <= 1e-13);
  CHECK(crel(cf, moment_recurrence(Frequency(10.0), 4).values[4]) <= 1e-12);

  CHECK_THROWS_AS(moment_closed_form(Frequency(0.0), 2), DomainError);
}

TEST_CASE("series handles omega = 0 exactly and matches closed form") {
  CHECK(moment_series(Frequency(0.0), 4, 10) == Complex(0.4, 0.0));
  CHECK(moment_series(Frequency(0.0), 3, 10) == Complex(0.0, 0.0));
  CHECK(crel(moment_series(Frequency(kPi), 2, series_guard_digits(Frequency(kPi))),
             Complex(-0.40528473456935108578, 0.0)) <= 1e-12);
  CHECK(series_guard_digits(Frequency(0.0)) == 10);
  CHECK(series_guard_digits(Frequency(10.0)) == 19);
}

TEST_CASE("series keeps the vanishing component an exact zero") {
  for (double w : {0.0, 0.3, 2.0, 7.5}) {
    const int guard = series_guard_digits(Frequency(w));
    for (int k = 0; k <= 12; ++k) {
      const Complex v = moment_series(Frequency(w), k, guard);
      if (k % 2 == 0)
        CHECK(v.imag() == 0.0);
      else
        CHECK(v.real() == 0.0);
    }
  }
}

TEST_CASE("dispatcher: omega = 0 gives exact polynomial moments via the series") {
  const auto m = moments::moments(Frequency(0.0), 3);
  REQUIRE(m.values.size() == 4);
  CHECK(m.values[0] == Complex(2.0, 0.0));
  CHECK(m.values[1] == Complex(0.0, 0.0));
  CHECK(m.values[2] == Complex(2.0 / 3.0, 0.0));
  CHECK(m.values[3] == Complex(0.0, 0.0));
  for (const auto meth : m.method) CHECK(meth == MomentMethod::series);
}

TEST_CASE("dispatcher: method switches from recurrence to series at k > omega") {
  const auto m = moments::moments(Frequency(3.5), 7);
  for (int k = 0; k <= 3; ++k) CHECK(m.method[static_cast<size_t>(k)] == MomentMethod::recurrence);
  for (int k = 4; k <= 7; ++k) CHECK(m.method[static_cast<size_t>(k)] == MomentMethod::series);
}

TEST_CASE("parity and bound invariants over a frequency sweep") {
  for (double w : {0.01, 0.1, 0.9, 3.3, 17.0, 80.0, 200.0}) {
    const auto m = moments::moments(Frequency(w), 30);
    for (int k = 0; k <= 30; ++k) {
      const Complex v = m.values[static_cast<size_t>(k)];
      const double bound = 2.0 / (k + 1);
      if (k % 2 == 0)
        CHECK(std::abs(v.imag()) <= 1e-12 * bound);
      else
        CHECK(std::abs(v.real()) <= 1e-12 * bound);
      CHECK(std::abs(v) <= bound * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("cross-method agreement where each method is trusted") {
  // the recurrence and the double-precision closed form are contractive /
  // cancellation-free only for k <= omega; the guarded series covers the rest
  for (double w : {0.1, 1.0, 10.0, 100.0}) {
    const int guard = series_guard_digits(Frequency(w));
    const int kstable = std::min(20, static_cast<int>(std::floor(w)));
    const auto rec = moment_recurrence(Frequency(w), kstable);
    for (int k = 0; k <= kstable; ++k) {
      const Complex ser = moment_series(Frequency(w), k, guard);
      CHECK(crel(ser, moment_closed_form(Frequency(w), k)) <= 1e-11);
      CHECK(crel(ser, rec.values[static_cast<size_t>(k)]) <= 1e-11);
    }
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(Frequency(-1.0), DomainError);
  CHECK_THROWS_AS(Frequency(std::nan("")), DomainError);
  CHECK_THROWS_AS(moments::moments(Frequency(1.0), -1), DomainError);
  CHECK_THROWS_AS(moment_series(Frequency(1.0), -2, 10), DomainError);
  CHECK_THROWS_AS(moment_series(Frequency(1.0), 2, -1), DomainError);
}
