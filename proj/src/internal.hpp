#pragma once

#include <cmath>
#include <utility>

#include "mockq/errors.hpp"
#include "mockq/qseries.hpp"

namespace mockq::detail {

// Integers n (widened by two on each side) with A n^2 + B n + C < cap, A > 0.
inline std::pair<long, long> quadratic_range(GridExp A, GridExp B, GridExp C, GridExp cap) {
  const double a = static_cast<double>(A), b = static_cast<double>(B);
  const double disc = b * b - 4.0 * a * (static_cast<double>(C) - static_cast<double>(cap));
  if (disc < 0) return {0, -1};
  const double r = std::sqrt(disc);
  return {static_cast<long>(std::floor((-b - r) / (2 * a))) - 2,
          static_cast<long>(std::ceil((-b + r) / (2 * a))) + 2};
}

// Calls build(w) with growing working caps until the result reaches cap.
template <class Build>
QSeries build_to(GridExp cap, Build&& build) {
  GridExp w = cap;
  for (int attempt = 0; attempt < 12; ++attempt) {
    QSeries s = build(w);
    if (s.cap() >= cap) return truncate(std::move(s), cap);
    w += (cap - s.cap()) + kGrid;
  }
  throw OutOfPrecision("could not reach the requested cap");
}

inline long mod24(long k) {
  long r = k % 24;
  return r < 0 ? r + 24 : r;
}

// Grid integer from a rational that must be integral.
inline GridExp grid_int(const BigRational& r, const char* what) {
  if (r.get_den() != 1) throw GridViolation(std::string(what) + " is off the 1/24 grid");
  return r.get_num().get_si();
}

}  // namespace mockq::detail
