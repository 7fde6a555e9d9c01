// Compares the OpenMP scan against the serial reference on the same grid and
// verifies the outputs are bitwise identical. Usage: scan_bench [points]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "oscpoly/scan.hpp"

namespace {

template <typename F>
double timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int points = 2000;
  if (argc > 1) points = std::atoi(argv[1]);
  if (points < 2) {
    std::fprintf(stderr, "usage: scan_bench [points>=2]\n");
    return 2;
  }

  oscpoly::cli::ScanParams params;
  params.ns = {2, 4, 6};
  params.omega_min = 0.1;
  params.omega_max = 50.0;
  params.points = points;

  std::vector<oscpoly::cli::ScanResult> serial, parallel;
  const double ts = timed([&] { serial = oscpoly::cli::scan_hankel_serial(params); });
  const double tp = timed([&] { parallel = oscpoly::cli::scan_hankel(params); });

  bool identical = serial.size() == parallel.size();
  for (size_t s = 0; identical && s < serial.size(); ++s) {
    identical = serial[s].rows.size() == parallel[s].rows.size();
    for (size_t i = 0; identical && i < serial[s].rows.size(); ++i)
      identical = std::memcmp(&serial[s].rows[i].omega, &parallel[s].rows[i].omega,
                              sizeof(double)) == 0 &&
                  std::memcmp(&serial[s].rows[i].abs_delta, &parallel[s].rows[i].abs_delta,
                              sizeof(double)) == 0;
  }

  const double evals = static_cast<double>(points) * static_cast<double>(params.ns.size());
  std::printf("grid: n in {2,4,6}, omega in [%.3g, %.3g], %d points (%g evaluations/run)\n",
              params.omega_min, params.omega_max, points, evals);
  std::printf("serial:   %8.3f s  (%8.0f evals/s)\n", ts, evals / ts);
  std::printf("parallel: %8.3f s  (%8.0f evals/s)\n", tp, evals / tp);
  std::printf("speedup:  %.2fx\n", ts / tp);
  std::printf("rows bitwise identical: %s\n", identical ? "yes" : "NO");
  return identical ? 0 : 1;
}
