#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace oscpoly {

using Complex = std::complex<double>;

// Bad arguments or unusable inputs; the CLI maps this to exit code 2.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A numerical procedure failed (non-convergence, ill-conditioned system);
// the CLI maps this to exit code 4.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Angular frequency of the weight e^{i w x} on [-1,1].
// w = 0 is admitted only as the limit case (series / Legendre paths).
class Frequency {
 public:
  explicit Frequency(double omega) : omega_(omega) {
    if (!std::isfinite(omega) || omega < 0.0)
      throw DomainError("Frequency: omega must be finite and >= 0, got " +
                        std::to_string(omega));
  }
  double value() const { return omega_; }

 private:
  double omega_;
};

}  // namespace oscpoly
