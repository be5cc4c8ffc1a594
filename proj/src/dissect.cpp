#include "mockq/dissect.hpp"

#include <string>

#include "internal.hpp"
#include "mockq/errors.hpp"
#include "mockq/lerch.hpp"
#include "mockq/mocktheta.hpp"

namespace mockq {

namespace {

const char* const kE0 = "eta(6)^10*eta(4)^2*eta(1)^2/eta(12)^4/eta(3)^4/eta(2)^5";
const char* const kE1 = "eta(6)^4*eta(4)*eta(1)/eta(12)/eta(3)/eta(2)^3";
const char* const kE2 = "eta(12)^2*eta(3)^2/eta(6)^2/eta(2)";
const char* const kEta3Lhs = "eta(1)^2*eta(4)^2/eta(2)^2/eta(6)";

// a(q^3) q^k, reaching cap.
QSeries lift3(QSeries (*build)(GridExp), GridExp k, GridExp cap) {
  return shift(compose_power(build(cap / 3 + kGrid), BigRational(3)), kGrid * k);
}

QSeries lift3(const QSeries& a, GridExp k) {
  return shift(compose_power(a, BigRational(3)), kGrid * k);
}

Cyc24 zeta3(long k) { return Cyc24::zeta(8 * k); }

QSeries omega_neg(GridExp cap) { return twist_minus_q(omega_eulerian(cap)); }

}  // namespace

Triple e_quotients(GridExp cap) {
  return {e_product(EtaQuotientSpec::parse(kE0), cap), e_product(EtaQuotientSpec::parse(kE1), cap),
          e_product(EtaQuotientSpec::parse(kE2), cap)};
}

Triple Y_sums(GridExp cap) {
  Triple out;
  for (long j = 0; j < 3; ++j) {
    LerchSpec spec;
    spec.A = kGrid;
    spec.B = kGrid;
    spec.c_root = 12;
    spec.D = 2 * kGrid;
    spec.E = kGrid;
    spec.residue = std::make_pair(j, 3L);
    out[static_cast<std::size_t>(j)] = lerch_expand(spec, cap);
  }
  return out;
}

std::array<Triple, 3> Y_components(GridExp cap) {
  Triple y = Y_sums(3 * cap + 3 * kGrid);
  std::array<Triple, 3> out;
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = 0; k < 3; ++k)
      out[j][k] = truncate(dissect(y[j], 3, static_cast<long>(k)), cap);
  return out;
}

SeriesPair eta3diss_sides(GridExp cap) {
  QSeries lhs = e_product(EtaQuotientSpec::parse(kEta3Lhs), cap);
  Triple e = e_quotients(cap / 3 + kGrid);
  QSeries rhs = lift3(e[0], 0) - lift3(e[1], 1) * Cyc24(2) + lift3(e[2], 2);
  return {std::move(lhs), truncate(std::move(rhs), cap)};
}

std::array<SeriesPair, 3> eta3diss_components(GridExp cap) {
  QSeries lhs = e_product(EtaQuotientSpec::parse(kEta3Lhs), 3 * cap + 3 * kGrid);
  Triple e = e_quotients(cap);
  const Cyc24 weight[] = {Cyc24(1), Cyc24(-2), Cyc24(1)};
  std::array<SeriesPair, 3> out;
  for (std::size_t k = 0; k < 3; ++k)
    out[k] = {truncate(dissect(lhs, 3, static_cast<long>(k)), cap), e[k] * weight[k]};
  return out;
}

SeriesPair mudiss_sides(int part, GridExp cap) {
  if (part < 1 || part > 6) throw MockqError("part must be between 1 and 6");
  const QSeries E2 = euler_E(2, cap);
  if (part == 1) {
    Triple y = Y_sums(cap);
    return {y[0] - y[2], euler_E(6, cap)};
  }
  auto Y = Y_components(cap);
  Triple e = e_quotients(cap);
  switch (part) {
    case 2:
      return {Y[0][0] * Cyc24(2) - E2, e[0] * E2};
    case 3:
      return {Y[0][1], -(e[1] * E2)};
    case 4:
      return {Y[1][0] + Y[1][1] * cyc_i(), QSeries::zero(cap)};
    case 5:
      return {Y[1][2], -(omega_neg(cap) * E2)};
    default:
      return {Y[0][2] * Cyc24(2), E2 * (omega_neg(cap) + e[2])};
  }
}

Comparison verify_mudiss(int part, GridExp order) {
  auto s = mudiss_sides(part, order);
  return compare_to(s.lhs, s.rhs, order);
}

namespace {

// (1+z^2) e0(q^3) + (1-z^2) - 2q (1+z^2) e1(q^3) + q^2 (1+z^2) e2(q^3) - 3 q^2 z omega(-q^3)
QSeries bracket(GridExp cap) {
  Triple e = e_quotients(cap / 3 + kGrid);
  const Cyc24 p = Cyc24(1) + zeta3(2);
  QSeries b = lift3(e[0], 0) * p;
  b += QSeries::constant(Cyc24(1) - zeta3(2), cap);
  b -= lift3(e[1], 1) * (p * Cyc24(2));
  b += lift3(e[2], 2) * p;
  b -= lift3(omega_neg, 2, cap) * (zeta3(1) * Cyc24(3));
  return truncate(std::move(b), cap);
}

}  // namespace

SeriesPair recombination_sides(GridExp cap) {
  auto Y = Y_components(cap / 3 + kGrid);
  QSeries lhs = QSeries::zero(cap);
  for (std::size_t j = 0; j < 3; ++j)
    lhs += reassemble({Y[j][0], Y[j][1], Y[j][2]}) * zeta3(static_cast<long>(j));
  QSeries rhs = euler_E(6, cap) * bracket(cap) * Cyc24(BigRational(1, 2));
  return {truncate(std::move(lhs), cap), std::move(rhs)};
}

Cyc24 assembly_constant() {
  // -2i/sqrt3 written as (2 - 4 zeta24^4)/3, plus (2/3) zeta24^4 (1 - z^2)
  const Cyc24 c = (Cyc24(2) - Cyc24::zeta(4) * Cyc24(4)) * Cyc24(BigRational(1, 3));
  return c + Cyc24::zeta(4) * (Cyc24(1) - zeta3(2)) * Cyc24(BigRational(2, 3));
}

SeriesPair newomega_assembly_sides(GridExp cap) {
  QSeries lhs = lift3(omega_neg, 2, cap) * Cyc24(2);
  const Cyc24 c = (Cyc24(2) - Cyc24::zeta(4) * Cyc24(4)) * Cyc24(BigRational(1, 3));
  QSeries rhs = QSeries::constant(c, cap);
  rhs -= eta3diss_sides(cap).rhs * Cyc24(BigRational(2, 3));
  // (4/3) e^{pi i/3} / E(q^6) times E(q^6)/2 times the bracket
  rhs += bracket(cap) * (Cyc24::zeta(4) * Cyc24(BigRational(2, 3)));
  return {truncate(std::move(lhs), cap), std::move(rhs)};
}

Comparison verify_newomega_assembly(GridExp order) {
  auto s = newomega_assembly_sides(order);
  return compare_to(s.lhs, s.rhs, order);
}

}  // namespace mockq
