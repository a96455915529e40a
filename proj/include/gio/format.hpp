#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

namespace gio {

/// Shortest decimal form with the given number of significant digits.
inline std::string format_sig(double v, int sig) {
  if (sig < 1) sig = 1;
  if (sig > 17) sig = 17;
  if (v == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", sig, v);
  return buf;
}

/// v rounded to the given significant digits (stable JSON emission).
inline double round_sig(double v, int sig) {
  return std::strtod(format_sig(v, sig).c_str(), nullptr);
}

}  // namespace gio
