#include "mockq/etatheta.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "internal.hpp"
#include "mockq/errors.hpp"

namespace mockq {

using detail::build_to;
using detail::grid_int;
using detail::quadratic_range;

QSeries euler_E(const BigRational& m, GridExp cap) {
  if (sgn(m) <= 0) throw GridViolation("E(q^m) needs m > 0");
  const GridExp unit = grid_int(m * kGrid, "E(q^m) multiplier");
  if (cap <= 0) return QSeries(cap, cap);
  QSeries s(0, cap);
  // generalized pentagonal numbers k(3k-1)/2 for k = 0, 1, -1, 2, -2, ...
  for (GridExp k = 0;; ++k) {
    bool any = false;
    for (GridExp kk : {k, -k}) {
      if (k == 0 && kk != 0) continue;
      GridExp e = unit * (kk * (3 * kk - 1) / 2);
      if (e >= cap) continue;
      any = true;
      s.at(e) = Cyc24(k % 2 ? -1 : 1);
    }
    if (!any && k > 0) break;
  }
  return s;
}

BigRational EtaQuotientSpec::prefactor() const {
  BigRational s = 0;
  for (const auto& f : factors) s += f.multiplier * f.exponent;
  return s / kGrid;
}

GridExp EtaQuotientSpec::prefactor_grid() const {
  return grid_int(prefactor() * kGrid, "eta quotient prefactor");
}

std::string EtaQuotientSpec::str() const {
  std::string num, den;
  for (const auto& f : factors) {
    if (f.exponent == 0) continue;
    std::string t = "eta(" + f.multiplier.get_str() + ")";
    long r = std::abs(f.exponent);
    if (r != 1) t += "^" + std::to_string(r);
    if (f.exponent > 0) num += (num.empty() ? "" : "*") + t;
    else den += "/" + t;
  }
  if (num.empty()) num = "1";
  return num + den;
}

EtaQuotientSpec EtaQuotientSpec::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  std::map<BigRational, long> acc;
  std::size_t p = 0;
  int op = 1;
  if (s.rfind("1/", 0) == 0) {
    op = -1;
    p = 2;
  }
  while (p < s.size()) {
    if (s.compare(p, 4, "eta(") != 0) throw ParseError("expected eta( at: " + s.substr(p));
    p += 4;
    auto close = s.find(')', p);
    if (close == std::string::npos) throw ParseError("unclosed eta( in: " + s);
    BigRational m = parse_rational(s.substr(p, close - p));
    if (sgn(m) <= 0) throw ParseError("eta multiplier must be positive: " + s);
    p = close + 1;
    long r = 1;
    if (p < s.size() && s[p] == '^') {
      ++p;
      std::size_t st = p;
      if (p < s.size() && s[p] == '-') ++p;
      while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
      if (p == st) throw ParseError("missing exponent in: " + s);
      r = std::stol(s.substr(st, p - st));
    }
    acc[m] += op * r;
    if (p == s.size()) break;
    if (s[p] == '*') op = 1;
    else if (s[p] == '/') op = -1;
    else throw ParseError("unexpected '" + std::string(1, s[p]) + "' in: " + s);
    ++p;
    if (p == s.size()) throw ParseError("dangling operator in: " + s);
  }
  EtaQuotientSpec spec;
  for (auto& [m, r] : acc)
    if (r != 0) spec.factors.push_back({m, r});
  return spec;
}

QSeries e_product(const EtaQuotientSpec& spec, GridExp cap) {
  QSeries s = QSeries::constant(Cyc24(1), cap);
  for (const auto& f : spec.factors) {
    if (f.exponent == 0) continue;
    QSeries e = euler_E(f.multiplier, cap);
    for (long i = 0; i < std::abs(f.exponent); ++i) s = f.exponent > 0 ? s * e : divide(s, e);
  }
  return s;
}

QSeries eta_quotient(const EtaQuotientSpec& spec, GridExp cap) {
  const GridExp pre = spec.prefactor_grid();
  return shift(e_product(spec, cap - pre), pre);
}

QSeries pochhammer(const Monomial& a, GridExp step, GridExp cap) {
  if (step <= 0) throw GridViolation("pochhammer step must be positive");
  GridExp neg = 0;
  for (GridExp e = a.qpow; e < 0; e += step) neg -= e;
  QSeries s = QSeries::constant(Cyc24(1), cap + neg);
  for (GridExp e = a.qpow;; e += step) {
    if (e >= 0 && e >= s.cap() - s.low()) break;
    s.mul_one_minus({a.root, e});
  }
  return truncate(std::move(s), cap);
}

void divide_pochhammer(QSeries& s, const Monomial& a, GridExp step) {
  if (step <= 0) throw GridViolation("pochhammer step must be positive");
  for (GridExp e = a.qpow;; e += step) {
    if (e > 0 && e >= s.cap() - s.low()) break;
    s.div_one_minus({a.root, e});
  }
}

QSeries quadratic_sum(const QuadraticSum& spec, GridExp cap) {
  if (spec.A <= 0) throw GridViolation("quadratic sum needs A > 0");
  auto [n0, n1] = quadratic_range(spec.A, spec.B, spec.C, cap);
  auto keep = [&](long n) {
    if (!spec.residue) return true;
    long m = spec.residue->second;
    return ((n - spec.residue->first) % m + m) % m == 0;
  };
  GridExp low = cap;
  for (long n = n0; n <= n1; ++n) {
    if (!keep(n)) continue;
    GridExp e = spec.A * n * n + spec.B * n + spec.C;
    if (e < cap) low = std::min(low, e);
  }
  QSeries s(low, cap);
  for (long n = n0; n <= n1; ++n) {
    if (!keep(n)) continue;
    GridExp e = spec.A * n * n + spec.B * n + spec.C;
    if (e >= cap) continue;
    long root = spec.rho_root * n + spec.const_root + ((spec.alternating && (n & 1)) ? 12 : 0);
    s.at(e).add_root(root, 1);
  }
  return s;
}

SeriesPair jtp_product(const Monomial& z, GridExp cap) {
  QSeries lhs = build_to(cap, [&](GridExp w) {
    return pochhammer({0, 48}, 48, w) * pochhammer({z.root, 24 + z.qpow}, 48, w) *
           pochhammer({-z.root, 24 - z.qpow}, 48, w);
  });
  QuadraticSum sum;
  sum.alternating = true;
  sum.rho_root = z.root;
  sum.A = 24;
  sum.B = z.qpow;
  return {std::move(lhs), quadratic_sum(sum, cap)};
}

QSeries theta_Theta(const Monomial& z, GridExp qstep, GridExp cap) {
  return build_to(cap, [&](GridExp w) {
    return pochhammer(z, qstep, w) * pochhammer({-z.root, qstep - z.qpow}, qstep, w) *
           pochhammer({0, qstep}, qstep, w);
  });
}

QSeries theta3(GridExp cap) {
  QuadraticSum sum;
  sum.A = 24;
  return quadratic_sum(sum, cap);
}

DeltaParts delta_P0_P1(GridExp cap) {
  QSeries delta(0, cap);
  for (GridExp n = 0; 12 * n * (n + 1) < cap; ++n) delta.at(12 * n * (n + 1)) += Cyc24(1);
  QSeries p0 = e_product(EtaQuotientSpec::parse("eta(2)*eta(3)^2/eta(6)/eta(1)"), cap);
  QSeries p1 = e_product(EtaQuotientSpec::parse("eta(6)^2/eta(3)"), cap);
  return {std::move(delta), std::move(p0), std::move(p1)};
}

QSeries psi(GridExp cap) { return delta_P0_P1(cap).delta; }

QSeries psi_product(GridExp cap) {
  QSeries s = pochhammer({0, 48}, 48, cap);
  divide_pochhammer(s, {0, 24}, 48);
  return s;
}

QSeries phi_theta(GridExp cap) {
  QuadraticSum sum;
  sum.alternating = true;
  sum.A = 24;
  return quadratic_sum(sum, cap);
}

QSeries phi_theta_product(GridExp cap) {
  QSeries s = euler_E(1, cap);
  divide_pochhammer(s, {12, 24}, 24);
  return s;
}

QSeries vartheta_series(const BigRational& a_prime, const BigRational& b_prime,
                        const BigRational& m, GridExp cap) {
  if (sgn(m) <= 0) throw GridViolation("vartheta needs a positive tau multiplier");
  // n = k + 1/2: 24 (m n^2 / 2 + a' n) = 12 m k^2 + (12 m + 24 a') k + 3 m + 12 a'
  QuadraticSum sum;
  sum.A = grid_int(12 * m, "vartheta exponent");
  sum.B = grid_int(12 * m + 24 * a_prime, "vartheta exponent");
  sum.C = grid_int(3 * m + 12 * a_prime, "vartheta exponent");
  // e^{2 pi i n (b' + 1/2)} = zeta24^{(24 b' + 12) k + 12 b' + 6}
  sum.rho_root = grid_int(24 * b_prime + 12, "vartheta phase") % 24;
  sum.const_root = grid_int(12 * b_prime + 6, "vartheta phase") % 24;
  return quadratic_sum(sum, cap);
}

QSeries vartheta_onethird(GridExp cap) {
  return vartheta_series(BigRational(0), BigRational(1, 3), BigRational(2), cap);
}

Cyc24 vartheta_onethird_constant() {
  Cyc24 inner = Cyc24(BigRational(3, 2)) + Cyc24(BigRational(1, 2)) * cyc_i() * cyc_sqrt3();
  return Cyc24::zeta(10) * inner;
}

QSeries vartheta_onethird_closed(GridExp cap) {
  return shift(euler_E(6, cap - 6), 6) * vartheta_onethird_constant();
}

}  // namespace mockq
