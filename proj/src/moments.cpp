#include "oscpoly/moments.hpp"

#include <cmath>

#include "mpfr_real.hpp"

namespace oscpoly::moments {

using detail::MpReal;

const char* to_string(MomentMethod m) {
  switch (m) {
    case MomentMethod::recurrence: return "recurrence";
    case MomentMethod::series: return "series";
    case MomentMethod::closed_form: return "closed-form";
  }
  return "?";
}

int series_guard_digits(Frequency omega) {
  return static_cast<int>(std::ceil(0.9 * omega.value())) + 10;
}

Complex moment_series(Frequency omega, int k, int guard_digits) {
  if (k < 0) throw DomainError("moment_series: k must be >= 0");
  if (guard_digits < 0) throw DomainError("moment_series: guard_digits must be >= 0");
  const double w = omega.value();

  // Only terms with k+m even survive (I_j vanishes for odd j); i^m is then
  // purely real for even k and purely imaginary for odd k, so a single real
  // extended-precision sum produces the nonzero component and the other
  // component is an exact 0.0. Successive contributing terms (m -> m+2)
  // carry i^2 = -1, i.e. alternate in sign.
  const long m0 = (k % 2 == 0) ? 0 : 1;
  const auto prec = static_cast<mpfr_prec_t>(64 + std::ceil(guard_digits * 3.321928094887362));

  MpReal term(prec), sum(prec), wsq(prec), bound(prec), thr(prec), abssum(prec);
  mpfr_set_d(wsq.get(), w, MPFR_RNDN);
  mpfr_sqr(wsq.get(), wsq.get(), MPFR_RNDN);

  // term = w^m0/m0! * 2/(k+m0+1), kept positive; sign tracked separately.
  mpfr_set_ui(term.get(), 2, MPFR_RNDN);
  mpfr_div_ui(term.get(), term.get(), static_cast<unsigned long>(k + m0 + 1), MPFR_RNDN);
  if (m0 == 1) mpfr_mul_d(term.get(), term.get(), w, MPFR_RNDN);

  mpfr_set_ui(sum.get(), 0, MPFR_RNDN);
  // |mu_k| <= 2/(k+1) floors the stopping scale so tiny results (exact zeros
  // like mu_0 at w = pi) still terminate promptly.
  mpfr_set_ui(bound.get(), 2, MPFR_RNDN);
  mpfr_div_ui(bound.get(), bound.get(), static_cast<unsigned long>(k + 1), MPFR_RNDN);

  int sign = 1;
  int consecutive_small = 0;
  const long max_sweeps = 200 + 3 * static_cast<long>(std::ceil(w));
  long m = m0;
  for (long sweep = 0; sweep < max_sweeps; ++sweep, m += 2) {
    if (sign > 0)
      mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    else
      mpfr_sub(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    sign = -sign;

    mpfr_abs(abssum.get(), sum.get(), MPFR_RNDN);
    if (mpfr_cmp(abssum.get(), bound.get()) > 0) mpfr_set(bound.get(), abssum.get(), MPFR_RNDN);

    // next term magnitude: * w^2 / ((m+1)(m+2)) * (k+m+1)/(k+m+3)
    mpfr_mul(term.get(), term.get(), wsq.get(), MPFR_RNDN);
    mpfr_div_ui(term.get(), term.get(), static_cast<unsigned long>((m + 1) * (m + 2)), MPFR_RNDN);
    mpfr_mul_ui(term.get(), term.get(), static_cast<unsigned long>(k + m + 1), MPFR_RNDN);
    mpfr_div_ui(term.get(), term.get(), static_cast<unsigned long>(k + m + 3), MPFR_RNDN);

    // stop once three consecutive terms sit below unit roundoff (at working
    // precision, with a small safety margin) times the running magnitude.
    mpfr_mul_2si(thr.get(), bound.get(), -static_cast<long>(prec - 8), MPFR_RNDN);
    if (mpfr_cmp(term.get(), thr.get()) < 0) {
      if (++consecutive_small >= 3) break;
    } else {
      consecutive_small = 0;
    }
    if (sweep + 1 == max_sweeps)
      throw NumericalError("moment_series: series did not converge (omega = " +
                           std::to_string(w) + ", k = " + std::to_string(k) + ")");
  }

  const double s = mpfr_get_d(sum.get(), MPFR_RNDN);
  return (k % 2 == 0) ? Complex(s, 0.0) : Complex(0.0, s);
}

MomentSequence moment_recurrence(Frequency omega, int kmax) {
  const double w = omega.value();
  if (w <= 0.0)
    throw DomainError("moment_recurrence: requires omega > 0; use the series path at omega = 0");
  if (kmax < 0) throw DomainError("moment_recurrence: kmax must be >= 0");

  // s_k = (1/(i w))(e^{i w} - (-1)^k e^{-i w}): 2 sin(w)/w for even k,
  // -2i cos(w)/w for odd k. With mu_{k-1} purely real/imaginary the update
  // mu_k = s_k + (i k / w) mu_{k-1} stays on one component, so the other is
  // exactly 0.0.
  const double s_even = 2.0 * std::sin(w) / w;
  const double s_odd = -2.0 * std::cos(w) / w;  // coefficient of i

  MomentSequence out{omega, {}, {}};
  out.values.reserve(static_cast<size_t>(kmax) + 1);
  out.values.emplace_back(s_even, 0.0);
  for (int k = 1; k <= kmax; ++k) {
    if (k % 2 == 1) {
      const double prev_re = out.values.back().real();
      out.values.emplace_back(0.0, s_odd + (k / w) * prev_re);
    } else {
      const double prev_im = out.values.back().imag();
      out.values.emplace_back(s_even - (k / w) * prev_im, 0.0);
    }
  }
  out.method.assign(out.values.size(), MomentMethod::recurrence);
  return out;
}

Complex moment_closed_form(Frequency omega, int k) {
  const double w = omega.value();
  if (w <= 0.0) throw DomainError("moment_closed_form: requires omega > 0");
  if (k < 0) throw DomainError("moment_closed_form: k must be >= 0");

  const Complex miw(0.0, -w);  // -i w
  const Complex iw(0.0, w);

  // e_v = (-i w)^v / v!; odd-v terms enter as e_v/(-i w) = (-i w)^{v-1}/v!.
  Complex e(1.0, 0.0);
  Complex s_odd(0.0, 0.0), s_even(0.0, 0.0);
  for (int v = 1; v <= k; ++v) {
    e *= miw / static_cast<double>(v);
    if (v % 2 == 1)
      s_odd += e / miw;
    else
      s_even += e;
  }

  // prefactor 2 (-1)^{k+1} k! / (i w)^k, accumulated as a stable product.
  Complex pref(2.0, 0.0);
  if (k % 2 == 0) pref = -pref;
  for (int v = 1; v <= k; ++v) pref *= static_cast<double>(v) / iw;

  const Complex bracket =
      std::cos(w) * s_odd - (std::sin(w) / w) * (Complex(1.0, 0.0) + s_even);
  return pref * bracket;
}

MomentSequence moments(Frequency omega, int kmax) {
  if (kmax < 0) throw DomainError("moments: kmax must be >= 0");
  const double w = omega.value();

  MomentSequence out{omega, {}, {}};
  // Recurrence while contractive (k <= w, and only for w > 0); the guarded
  // series covers the rest. The recurrence consumes mu_{k-1}, so the switch
  // point splits the sequence into a recurrence prefix and a series tail.
  const int kc = (w > 0.0) ? std::min(kmax, static_cast<int>(std::floor(w))) : -1;
  if (kc >= 0) {
    MomentSequence head = moment_recurrence(omega, kc);
    out.values = std::move(head.values);
    out.method = std::move(head.method);
  }
  const int guard = series_guard_digits(omega);
  for (int k = kc + 1; k <= kmax; ++k) {
    out.values.push_back(moment_series(omega, k, guard));
    out.method.push_back(MomentMethod::series);
  }
  return out;
}

}  // namespace oscpoly::moments
