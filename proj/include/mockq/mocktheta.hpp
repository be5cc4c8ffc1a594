#pragma once

#include "mockq/qseries.hpp"

namespace mockq {

// f(q) = sum_{n>=0} q^{n^2} / (-q;q)_n^2
QSeries f_eulerian(GridExp cap);
// omega(q) = sum_{n>=0} q^{2n(n+1)} / (q;q^2)_{n+1}^2
QSeries omega_eulerian(GridExp cap);
// phi(q) = sum_{n>=0} q^{n^2} / (-q^2;q^2)_n
QSeries phi_eulerian(GridExp cap);

// 2/E(q) sum (-1)^n q^{n(3n+1)/2} / (1 + q^n)
QSeries f_watson(GridExp cap);
// 1/E(q^2) sum (-1)^n q^{3n(n+1)} / (1 - q^{2n+1})
QSeries omega_watson(GridExp cap);
// omega(-q) straight from its own Lerch sum.
QSeries omega_minus_q(GridExp cap);

}  // namespace mockq
