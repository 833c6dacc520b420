#pragma once

// Small scalar routines shared by the disk and criterion code.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace wcomp {

inline std::vector<double> equispaced_angles(int n) {
  if (n < 1) {
    throw std::invalid_argument("equispaced_angles: need at least one angle");
  }
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = 2.0 * std::numbers::pi * static_cast<double>(i) / n;
  }
  return out;
}

struct ScalarMax {
  double argmax;
  double value;
};

// Golden-section search for the maximum of a unimodal f on [lo, hi].
// The returned value is the best evaluated point, never an interpolant.
template <typename F>
ScalarMax golden_section_max(F&& f, double lo, double hi, int steps) {
  constexpr double inv_phi = 0.6180339887498948482;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  ScalarMax best = fc >= fd ? ScalarMax{c, fc} : ScalarMax{d, fd};
  for (int i = 0; i < steps; ++i) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
      if (fc > best.value) best = {c, fc};
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
      if (fd > best.value) best = {d, fd};
    }
  }
  return best;
}

// Bisection for a sign change of f on [lo, hi]; stops when the bracket is
// narrower than width or cannot shrink further in double precision.
template <typename F>
double bisect(F&& f, double lo, double hi, double width) {
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (std::signbit(f_lo) == std::signbit(f_hi)) {
    throw std::invalid_argument("bisect: endpoints do not bracket a sign change");
  }
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace wcomp
