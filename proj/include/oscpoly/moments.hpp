#pragma once

#include <vector>

#include "oscpoly/types.hpp"

namespace oscpoly::moments {

enum class MomentMethod { recurrence, series, closed_form };

const char* to_string(MomentMethod m);

// mu_0..mu_K with mu_k = integral of x^k e^{i w x} over [-1,1], plus the
// method used per entry. Even entries are real and odd entries pure
// imaginary; the recurrence and series paths keep the zero component an
// exact 0.0, never a rounded one.
struct MomentSequence {
  Frequency omega;
  std::vector<Complex> values;
  std::vector<MomentMethod> method;
};

// Forward recurrence mu_k = s_k + (i k / w) mu_{k-1} starting from
// mu_0 = 2 sin(w)/w; each step scales prior error by k/w, so it is
// contractive exactly when k <= w. Rejects w = 0.
MomentSequence moment_recurrence(Frequency omega, int kmax);

// Factorial-sum closed form (complex evaluation; no exact-parity guarantee).
// Rejects w = 0.
Complex moment_closed_form(Frequency omega, int k);

// Power series sum_m (i w)^m / m! * I_{k+m} with I_j = 2/(j+1) for even j and
// 0 for odd j, summed in extended precision with guard_digits extra decimal
// digits to absorb the e^w worst-case cancellation. Valid for every (w, k)
// including w = 0, where it terminates after one term.
Complex moment_series(Frequency omega, int k, int guard_digits);

// Guard digits used by the dispatcher: ceil(0.9 w) + 10.
int series_guard_digits(Frequency omega);

// Hybrid dispatcher: forward recurrence for k <= w (w > 0), guarded series
// otherwise. All MomentSequence invariants hold for the result.
MomentSequence moments(Frequency omega, int kmax);

}  // namespace oscpoly::moments
