#pragma once

#include <random>

#include "mockq/cyclotomic.hpp"
#include "mockq/qseries.hpp"

namespace oracle {

inline mockq::BigRational random_rational(std::mt19937_64& rng, long span = 9, long den = 5) {
  std::uniform_int_distribution<long> n(-span, span), d(1, den);
  return mockq::make_rational(n(rng), d(rng));
}

inline mockq::Cyc24 random_cyc(std::mt19937_64& rng, double density = 0.6) {
  std::bernoulli_distribution keep(density);
  mockq::Cyc24 c;
  for (int i = 0; i < 8; ++i)
    if (keep(rng)) c[i] = random_rational(rng);
  return c;
}

inline mockq::Cyc24 random_nonzero_cyc(std::mt19937_64& rng) {
  mockq::Cyc24 c;
  while (c.is_zero()) c = random_cyc(rng);
  return c;
}

// Random series on the window [low, cap) with the given stride between
// populated exponents.
inline mockq::QSeries random_series(std::mt19937_64& rng, mockq::GridExp low, mockq::GridExp cap,
                                    mockq::GridExp stride = 1, double density = 0.7) {
  mockq::QSeries s(low, cap);
  std::bernoulli_distribution keep(density);
  for (mockq::GridExp e = low; e < cap; e += stride)
    if (keep(rng)) s.at(e) = random_cyc(rng, 0.4);
  return s;
}

}  // namespace oracle
