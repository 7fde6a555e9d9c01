#pragma once

#include <vector>

#include "oscpoly/hankel.hpp"
#include "oscpoly/types.hpp"

namespace oscpoly::cli {

struct ScanParams {
  std::vector<int> ns;       // degrees to scan
  double omega_min = 0.0;    // 0 < omega_min < omega_max
  double omega_max = 0.0;
  int points = 0;            // >= 2, uniform grid incl. endpoints
  bool refine = false;       // golden-section refinement of local minima
  double refine_width = 1e-13;  // absolute bracket width at which to stop
  hankel::Tolerances tol;
};

struct ScanRow {
  double omega;
  double abs_delta;
  hankel::Verdict verdict;
};

struct ScanMinimum {
  double omega;
  double abs_delta;
};

// One scanned degree: rows strictly increasing in omega; minima (refined
// interior local minima of |Delta_n|, present only with refine) sorted by
// omega, each abs_delta no larger than the bracketing grid values.
struct ScanResult {
  int n;
  std::vector<ScanRow> rows;
  std::vector<ScanMinimum> minima;
};

// Pure map over the grid; grid points are independent, so the parallel
// version partitions the index range across threads and writes into
// preallocated slots. Row content is bitwise identical to the serial
// reference for any thread count.
std::vector<ScanResult> scan_hankel(const ScanParams& params);
std::vector<ScanResult> scan_hankel_serial(const ScanParams& params);

}  // namespace oscpoly::cli
