#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "mockq/etatheta.hpp"
#include "mockq/qseries.hpp"

namespace mockq {

// sum_n s^n rho^n q^{(A n^2 + B n + C)/24} / (1 - c q^{(D n + E)/24}) with
// s = -1 when alternating, rho = zeta24^rho_root q^{rho_qpow/24} and
// c = zeta24^c_root. Exponent data is held in grid units.
struct LerchSpec {
  bool alternating = true;
  long rho_root = 0;
  GridExp rho_qpow = 0;
  GridExp A = 24;
  GridExp B = 0;
  GridExp C = 0;
  long c_root = 0;
  GridExp D = 24;
  GridExp E = 0;
  // Restrict to n = residue.first mod residue.second.
  std::optional<std::pair<long, long>> residue;

  // "sum (-1)^n zeta3^n q^(n^2+n) / (1 + q^(2n+1))"
  std::string str() const;
  static LerchSpec parse(std::string_view text);
};

QSeries lerch_expand(const LerchSpec& spec, GridExp cap);

// E(q) / ((zq;q)(q/z;q)) and (1 - z)/E(q) sum (-1)^n q^{n(n+1)/2} / (1 - z q^n).
SeriesPair crank_pair(const Monomial& z, GridExp cap);

// sum (-1)^n q^{n^2} z^n (1 - z q^{2n}) / (1 + z q^{2n}) and
// Theta(z,q^2) Theta(-zq,q^2) Theta3(q) / Theta(-z,q^2).
SeriesPair thetaid_pair(const Monomial& z, GridExp cap);
QSeries thetaid_lhs(const Monomial& z, GridExp cap);

// u = tau_coeff * tau + constant
struct EllipticArg {
  BigRational tau_coeff;
  BigRational constant;
};

// mu(u, v; m tau) as a q-series; every exponent and phase must land on the
// 1/24 grid.
QSeries mu_formal(const EllipticArg& u, const EllipticArg& v, const BigRational& tau_mult,
                  GridExp cap);

}  // namespace mockq
