#include "oscpoly/scan.hpp"

#include <algorithm>
#include <cmath>

namespace oscpoly::cli {

namespace {

void validate(const ScanParams& p) {
  if (p.ns.empty()) throw DomainError("scan: need at least one degree n");
  for (int n : p.ns)
    if (n < 1) throw DomainError("scan: degrees must be >= 1");
  if (!(p.omega_min > 0.0) || !(p.omega_max > p.omega_min))
    throw DomainError("scan: require 0 < omega-min < omega-max");
  if (p.points < 2) throw DomainError("scan: points must be >= 2");
  if (!(p.refine_width > 0.0)) throw DomainError("scan: refine width must be > 0");
}

double grid_point(const ScanParams& p, int i) {
  return p.omega_min + (p.omega_max - p.omega_min) * i / (p.points - 1);
}

ScanRow eval_point(double omega, int n, const hankel::Tolerances& tol) {
  const hankel::ExistenceReport rep = hankel::existence(Frequency(omega), n, tol);
  return ScanRow{omega, std::abs(rep.delta), rep.verdict};
}

// Golden-section minimization of |Delta_n(omega)|^2 (real and smooth by the
// parity structure of the moments) down to an absolute bracket width.
ScanMinimum golden_refine(double lo, double hi, int n, const ScanParams& p) {
  static const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  const auto g = [&](double w) {
    const double ad = std::abs(hankel::existence(Frequency(w), n, p.tol).delta);
    return ad * ad;
  };
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double g1 = g(x1), g2 = g(x2);
  while (b - a > p.refine_width) {
    if (g1 <= g2) {
      b = x2;
      x2 = x1;
      g2 = g1;
      x1 = b - invphi * (b - a);
      g1 = g(x1);
    } else {
      a = x1;
      x1 = x2;
      g1 = g2;
      x2 = a + invphi * (b - a);
      g2 = g(x2);
    }
  }
  const double w = (a + b) / 2.0;
  return ScanMinimum{w, std::sqrt(g(w))};
}

std::vector<ScanResult> scan_impl(const ScanParams& p, bool parallel) {
  validate(p);
  std::vector<ScanResult> out;
  out.reserve(p.ns.size());
  for (int n : p.ns) {
    ScanResult res;
    res.n = n;
    res.rows.resize(static_cast<size_t>(p.points));
    if (parallel) {
#pragma omp parallel for schedule(static)
      for (int i = 0; i < p.points; ++i)
        res.rows[static_cast<size_t>(i)] = eval_point(grid_point(p, i), n, p.tol);
    } else {
      for (int i = 0; i < p.points; ++i)
        res.rows[static_cast<size_t>(i)] = eval_point(grid_point(p, i), n, p.tol);
    }

    if (p.refine) {
      for (int i = 1; i + 1 < p.points; ++i) {
        const double cur = res.rows[static_cast<size_t>(i)].abs_delta;
        const double prv = res.rows[static_cast<size_t>(i) - 1].abs_delta;
        const double nxt = res.rows[static_cast<size_t>(i) + 1].abs_delta;
        // strict on the left so a flat run yields one bracket, not many
        if (cur < prv && cur <= nxt)
          res.minima.push_back(golden_refine(res.rows[static_cast<size_t>(i) - 1].omega,
                                             res.rows[static_cast<size_t>(i) + 1].omega, n, p));
      }
      std::sort(res.minima.begin(), res.minima.end(),
                [](const ScanMinimum& l, const ScanMinimum& r) { return l.omega < r.omega; });
      // Merge refined minima that collapsed into the same point.
      const double step = (p.omega_max - p.omega_min) / (p.points - 1);
      std::vector<ScanMinimum> merged;
      for (const ScanMinimum& m : res.minima) {
        if (!merged.empty() && std::abs(m.omega - merged.back().omega) < step / 2.0) {
          if (m.abs_delta < merged.back().abs_delta) merged.back() = m;
        } else {
          merged.push_back(m);
        }
      }
      res.minima = std::move(merged);
    }
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace

std::vector<ScanResult> scan_hankel(const ScanParams& params) { return scan_impl(params, true); }

std::vector<ScanResult> scan_hankel_serial(const ScanParams& params) {
  return scan_impl(params, false);
}

}  // namespace oscpoly::cli
