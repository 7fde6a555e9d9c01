#pragma once

#include <cstdio>
#include <string>

namespace oscpoly {

// 17 significant digits: lossless double round-trip and byte-stable output,
// which is what makes golden-file tests of the CLI possible.
inline std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return std::string(buf);
}

}  // namespace oscpoly
