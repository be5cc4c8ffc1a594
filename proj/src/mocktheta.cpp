#include "mockq/mocktheta.hpp"

#include "internal.hpp"
#include "mockq/etatheta.hpp"
#include "mockq/lerch.hpp"

namespace mockq {

using detail::build_to;

namespace {

// sum_n t_n where t_0 = 1 / first and t_n = t_{n-1} q^{gap(n)} / den(n).
template <class Gap, class Den>
QSeries eulerian(GridExp cap, Gap gap, Den den) {
  QSeries sum = QSeries::zero(cap);
  QSeries term = QSeries::constant(Cyc24(1), cap);
  for (long n = 0;; ++n) {
    if (n > 0) {
      term.shift_inplace(gap(n));
      term.truncate_inplace(cap);
      if (term.low() >= cap) break;
    }
    den(term, n);
    sum += term;
  }
  return sum;
}

}  // namespace

QSeries f_eulerian(GridExp cap) {
  return eulerian(
      cap, [](long n) { return kGrid * (2 * n - 1); },
      [](QSeries& t, long n) {
        if (n == 0) return;
        t.div_one_minus({12, kGrid * n});
        t.div_one_minus({12, kGrid * n});
      });
}

QSeries omega_eulerian(GridExp cap) {
  return eulerian(
      cap, [](long n) { return kGrid * 4 * n; },
      [](QSeries& t, long n) {
        t.div_one_minus({0, kGrid * (2 * n + 1)});
        t.div_one_minus({0, kGrid * (2 * n + 1)});
      });
}

QSeries phi_eulerian(GridExp cap) {
  return eulerian(
      cap, [](long n) { return kGrid * (2 * n - 1); },
      [](QSeries& t, long n) {
        if (n > 0) t.div_one_minus({12, kGrid * 2 * n});
      });
}

QSeries f_watson(GridExp cap) {
  LerchSpec spec;
  spec.A = 36;
  spec.B = 12;
  spec.c_root = 12;
  spec.D = kGrid;
  spec.E = 0;
  return divide(lerch_expand(spec, cap), euler_E(1, cap)) * Cyc24(2);
}

namespace {

QSeries omega_lerch(long c_root, GridExp cap) {
  LerchSpec spec;
  spec.A = 72;
  spec.B = 72;
  spec.c_root = c_root;
  spec.D = 2 * kGrid;
  spec.E = kGrid;
  return divide(lerch_expand(spec, cap), euler_E(2, cap));
}

}  // namespace

QSeries omega_watson(GridExp cap) { return omega_lerch(0, cap); }

// (-1)^{3n(n+1)} = 1, so only the denominator changes sign.
QSeries omega_minus_q(GridExp cap) { return omega_lerch(12, cap); }

}  // namespace mockq
