#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mockq/qseries.hpp"

namespace mockq {

// E(q^m) = prod_{n>=1} (1 - q^{mn}) from the pentagonal number theorem.
// 24 m must be an integer.
QSeries euler_E(const BigRational& m, GridExp cap);
inline QSeries euler_E(long m, GridExp cap) { return euler_E(BigRational(m), cap); }

struct EtaFactor {
  BigRational multiplier;
  long exponent = 0;
};

// prod eta(m_i tau)^{r_i}
struct EtaQuotientSpec {
  std::vector<EtaFactor> factors;

  // sum m_i r_i / 24, the exponent of the q prefactor.
  BigRational prefactor() const;
  GridExp prefactor_grid() const;
  std::string str() const;
  // "eta(1)^2*eta(4)^2/eta(2)^2/eta(6)"; rational multipliers such as eta(3/2)
  // are accepted.
  static EtaQuotientSpec parse(std::string_view text);
};

// prod E(q^{m_i})^{r_i}, without the q prefactor.
QSeries e_product(const EtaQuotientSpec& spec, GridExp cap);
QSeries eta_quotient(const EtaQuotientSpec& spec, GridExp cap);

// (a; q^{step/24})_infinity
QSeries pochhammer(const Monomial& a, GridExp step, GridExp cap);
// s / (a; q^{step/24})_infinity, factor by factor.
void divide_pochhammer(QSeries& s, const Monomial& a, GridExp step);

// sum_{n in Z} sign^n zeta^{rho_root n + const_root} q^{(A n^2 + B n + C)/24},
// optionally restricted to n = residue.first mod residue.second.
struct QuadraticSum {
  bool alternating = false;
  long rho_root = 0;
  long const_root = 0;
  GridExp A = 24;
  GridExp B = 0;
  GridExp C = 0;
  std::optional<std::pair<long, long>> residue;
};
QSeries quadratic_sum(const QuadraticSum& spec, GridExp cap);

struct SeriesPair {
  QSeries lhs;
  QSeries rhs;
};

// (q^2, qz, q/z; q^2)_inf and sum (-1)^n z^n q^{n^2}.
SeriesPair jtp_product(const Monomial& z, GridExp cap);

// Theta(z, Q) = (z;Q)(Q/z;Q)(Q;Q) with Q = q^{qstep/24}.
QSeries theta_Theta(const Monomial& z, GridExp qstep, GridExp cap);
// sum q^{n^2}
QSeries theta3(GridExp cap);

struct DeltaParts {
  QSeries delta;
  QSeries P0;
  QSeries P1;
};
DeltaParts delta_P0_P1(GridExp cap);
// psi(q) = sum_{n>=0} q^{n(n+1)/2}, and the product (q^2;q^2)/(q;q^2).
QSeries psi(GridExp cap);
QSeries psi_product(GridExp cap);
// sum (-1)^n q^{n^2}, and the product E(q)/(-q;q).
QSeries phi_theta(GridExp cap);
QSeries phi_theta_product(GridExp cap);

// vartheta(a' tau + b'; m tau) = sum_{n in 1/2 + Z} Q^{n^2/2} e^{2 pi i n (v + 1/2)}.
QSeries vartheta_series(const BigRational& a_prime, const BigRational& b_prime,
                        const BigRational& m, GridExp cap);

// vartheta(1/3; 2 tau) summed directly, its closed form -sqrt(3) q^{1/4} E(q^6),
// and the constant e^{5 pi i/6}(3/2 + i sqrt(3)/2).
QSeries vartheta_onethird(GridExp cap);
QSeries vartheta_onethird_closed(GridExp cap);
Cyc24 vartheta_onethird_constant();

}  // namespace mockq
