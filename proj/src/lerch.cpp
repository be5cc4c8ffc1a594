#include "mockq/lerch.hpp"

#include <array>
#include <cctype>
#include <numeric>
#include <vector>

#include "internal.hpp"
#include "mockq/errors.hpp"

namespace mockq {

using detail::build_to;
using detail::grid_int;
using detail::mod24;
using detail::quadratic_range;

namespace {

// Coefficients (of n^2, n, 1) in q units.
using Poly2 = std::array<BigRational, 3>;

std::string root_power(long root, bool times_n) {
  root = mod24(root);
  long g = std::gcd(root, 24L);
  long order = 24 / g, j = root / g;
  std::string base = "zeta" + std::to_string(order);
  if (times_n) return base + (j == 1 ? "^n" : "^(" + std::to_string(j) + "n)");
  return j == 1 ? base : base + "^" + std::to_string(j);
}

std::string poly_str(const Poly2& p) {
  static const char* names[] = {"n^2", "n", ""};
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (sgn(p[i]) == 0) continue;
    BigRational mag = abs(p[i]);
    out += sgn(p[i]) < 0 ? "-" : (out.empty() ? "" : "+");
    if (i == 2) out += mag.get_str();
    else if (mag != 1) out += mag.get_str() + "*" + names[i];
    else out += names[i];
  }
  return out.empty() ? "0" : out;
}

struct Cursor {
  std::string s;
  std::size_t p = 0;

  bool eat(std::string_view t) {
    if (s.compare(p, t.size(), t) == 0) {
      p += t.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view t) {
    if (!eat(t)) throw ParseError("expected '" + std::string(t) + "' at: " + s.substr(p));
  }
  bool digit() const { return p < s.size() && std::isdigit(static_cast<unsigned char>(s[p])); }
  long integer() {
    std::size_t st = p;
    while (digit()) ++p;
    if (st == p) throw ParseError("expected integer at: " + s.substr(st));
    return std::stol(s.substr(st, p - st));
  }
  BigRational rational() {
    long n = integer();
    if (p + 1 < s.size() && s[p] == '/' && std::isdigit(static_cast<unsigned char>(s[p + 1]))) {
      ++p;
      long d = integer();
      return make_rational(n, d);
    }
    return BigRational(n);
  }
};

// zetaK, zetaK^j, zetaK^n, zetaK^(jn); returns the 24th-root exponent and
// whether it carried n.
std::pair<long, bool> parse_zeta(Cursor& c) {
  c.expect("zeta");
  long order = c.integer();
  if (order <= 0 || 24 % order != 0) throw ParseError("zeta order must divide 24");
  long unit = 24 / order;
  if (!c.eat("^")) return {unit, false};
  if (c.eat("n")) return {unit, true};
  bool paren = c.eat("(");
  long j = c.integer();
  bool with_n = c.eat("n");
  if (paren) c.expect(")");
  return {unit * j, with_n};
}

Poly2 parse_poly(Cursor& c, char close) {
  Poly2 out{BigRational(0), BigRational(0), BigRational(0)};
  bool first = true;
  while (c.p < c.s.size() && c.s[c.p] != close) {
    int sign = 1;
    if (c.eat("-")) sign = -1;
    else if (!first) c.expect("+");
    else c.eat("+");
    first = false;
    if (c.eat("(")) {
      Poly2 inner = parse_poly(c, ')');
      c.expect(")");
      BigRational div = 1;
      if (c.eat("/")) div = c.rational();
      for (int i = 0; i < 3; ++i) out[i] += sign * inner[i] / div;
      continue;
    }
    BigRational coef = 1;
    bool have_coef = false;
    if (c.digit()) {
      coef = c.rational();
      have_coef = true;
      c.eat("*");
    }
    int slot = 2;
    if (c.eat("n")) slot = c.eat("^2") ? 0 : 1;
    else if (!have_coef) throw ParseError("bad polynomial term at: " + c.s.substr(c.p));
    if (c.eat("/")) coef /= c.rational();
    out[slot] += sign * coef;
  }
  return out;
}

}  // namespace

std::string LerchSpec::str() const {
  std::string out = "sum";
  if (residue)
    out += "_{n=" + std::to_string(residue->first) + " mod " + std::to_string(residue->second) + "}";
  if (alternating) out += " (-1)^n";
  if (mod24(rho_root) != 0) out += " " + root_power(rho_root, true);
  Poly2 num{BigRational(A, kGrid), BigRational(B + rho_qpow, kGrid), BigRational(C, kGrid)};
  for (auto& x : num) x.canonicalize();
  out += " q^(" + poly_str(num) + ") / (1 ";
  long cr = mod24(c_root);
  if (cr == 12) out += "+ ";
  else out += "- " + (cr == 0 ? std::string() : root_power(cr, false) + " ");
  Poly2 den{BigRational(0), BigRational(D, kGrid), BigRational(E, kGrid)};
  for (auto& x : den) x.canonicalize();
  out += "q^(" + poly_str(den) + "))";
  return out;
}

LerchSpec LerchSpec::parse(std::string_view text) {
  Cursor c;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) c.s += ch;
  LerchSpec spec;
  spec.alternating = false;
  spec.A = 0;
  c.expect("sum");
  if (c.eat("_{n=")) {
    long r = c.integer();
    c.expect("mod");
    long m = c.integer();
    c.expect("}");
    if (m <= 0) throw ParseError("residue modulus must be positive");
    spec.residue = std::make_pair(r, m);
  }
  bool have_q = false;
  while (c.p < c.s.size() && c.s[c.p] != '/') {
    c.eat("*");
    if (c.eat("(-1)^n")) {
      spec.alternating = !spec.alternating;
    } else if (c.s.compare(c.p, 4, "zeta") == 0) {
      auto [root, with_n] = parse_zeta(c);
      if (!with_n) throw ParseError("numerator root of unity must carry ^n");
      spec.rho_root = mod24(spec.rho_root + root);
    } else if (c.eat("q^(")) {
      Poly2 p = parse_poly(c, ')');
      c.expect(")");
      spec.A = grid_int(p[0] * kGrid, "n^2 coefficient");
      spec.B = grid_int(p[1] * kGrid, "n coefficient");
      spec.C = grid_int(p[2] * kGrid, "constant exponent");
      have_q = true;
    } else {
      throw ParseError("unexpected numerator text: " + c.s.substr(c.p));
    }
  }
  if (!have_q) throw ParseError("numerator needs q^(...)");
  if (spec.A <= 0) throw ParseError("quadratic coefficient must be positive");
  c.expect("/(1");
  bool plus;
  if (c.eat("+")) plus = true;
  else {
    c.expect("-");
    plus = false;
  }
  long root = 0;
  if (c.s.compare(c.p, 4, "zeta") == 0) {
    auto [r, with_n] = parse_zeta(c);
    if (with_n) throw ParseError("denominator constant cannot carry ^n");
    root = r;
    c.eat("*");
  }
  c.expect("q^(");
  Poly2 d = parse_poly(c, ')');
  c.expect(")");
  c.expect(")");
  if (c.p != c.s.size()) throw ParseError("trailing text: " + c.s.substr(c.p));
  if (sgn(d[0]) != 0) throw ParseError("denominator exponent must be linear in n");
  spec.c_root = mod24(root + (plus ? 12 : 0));
  spec.D = grid_int(d[1] * kGrid, "denominator n coefficient");
  spec.E = grid_int(d[2] * kGrid, "denominator constant");
  return spec;
}

QSeries lerch_expand(const LerchSpec& spec, GridExp cap) {
  if (spec.A <= 0) throw GridViolation("Lerch sum needs A > 0");
  const GridExp B = spec.B + spec.rho_qpow;
  auto [n0, n1] = quadratic_range(spec.A, B, spec.C, cap);
  auto keep = [&](long n) {
    if (!spec.residue) return true;
    long m = spec.residue->second;
    return ((n - spec.residue->first) % m + m) % m == 0;
  };
  const bool c_is_one = mod24(spec.c_root) == 0;

  struct Term {
    GridExp start, step;
    long root, root_step;
    bool negate;
  };
  std::vector<Term> terms;
  std::vector<std::pair<GridExp, Cyc24>> constants;
  GridExp low = cap;
  for (long n = n0; n <= n1; ++n) {
    if (!keep(n)) continue;
    const GridExp b = spec.A * n * n + B * n + spec.C;
    if (b >= cap) continue;
    const long r = spec.rho_root * n + ((spec.alternating && (n & 1)) ? 12 : 0);
    const GridExp d = spec.D * n + spec.E;
    if (d == 0) {
      if (c_is_one)
        throw PoleError("Lerch term n = " + std::to_string(n) + " has denominator 1 - 1");
      Cyc24 v = (Cyc24(1) - Cyc24::zeta(spec.c_root)).inverse().times_root(r);
      constants.emplace_back(b, std::move(v));
      low = std::min(low, b);
    } else if (d > 0) {
      terms.push_back({b, d, r, spec.c_root, false});
      low = std::min(low, b);
    } else {
      // 1/(1 - c q^d) = -c^{-1} q^{-d} / (1 - c^{-1} q^{-d})
      GridExp s = b - d;
      if (s >= cap) continue;
      terms.push_back({s, -d, r - spec.c_root, -spec.c_root, true});
      low = std::min(low, s);
    }
  }

  QSeries out(low, cap);
  const std::size_t width = static_cast<std::size_t>(cap - low);
  std::vector<std::array<std::int64_t, 24>> counts(width);
  for (auto& row : counts) row.fill(0);
  for (const auto& t : terms) {
    long root = t.root;
    for (GridExp e = t.start; e < cap; e += t.step) {
      auto& slot = counts[static_cast<std::size_t>(e - low)][mod24(root)];
      slot += t.negate ? -1 : 1;
      root += t.root_step;
    }
  }
  for (std::size_t i = 0; i < width; ++i) {
    std::array<std::int64_t, 8> acc{};
    bool any = false;
    for (long r = 0; r < 24; ++r) {
      std::int64_t k = counts[i][r];
      if (k == 0) continue;
      any = true;
      const auto& row = Cyc24::zeta_row(r);
      for (int j = 0; j < 8; ++j) acc[j] += row[j] * k;
    }
    if (!any) continue;
    Cyc24& dst = out.at(low + static_cast<GridExp>(i));
    for (int j = 0; j < 8; ++j)
      if (acc[j] != 0) dst[j] = static_cast<long>(acc[j]);
  }
  for (auto& [e, v] : constants) out.at(e) += v;
  return out;
}

SeriesPair crank_pair(const Monomial& z, GridExp cap) {
  QSeries lhs = build_to(cap, [&](GridExp w) {
    QSeries s = euler_E(1, w);
    divide_pochhammer(s, {z.root, kGrid + z.qpow}, kGrid);
    divide_pochhammer(s, {-z.root, kGrid - z.qpow}, kGrid);
    return s;
  });
  LerchSpec spec;
  spec.alternating = true;
  spec.A = 12;
  spec.B = 12;
  spec.c_root = z.root;
  spec.D = kGrid;
  spec.E = z.qpow;
  QSeries rhs = build_to(cap, [&](GridExp w) {
    QSeries s = lerch_expand(spec, w);
    s.mul_one_minus(z);
    return divide(s, euler_E(1, w));
  });
  return {std::move(lhs), std::move(rhs)};
}

QSeries thetaid_lhs(const Monomial& z, GridExp cap) {
  // (1 - x)/(1 + x) = 2/(1 + x) - 1
  QuadraticSum plain;
  plain.alternating = true;
  plain.rho_root = z.root;
  plain.A = kGrid;
  plain.B = z.qpow;
  LerchSpec spec;
  spec.alternating = true;
  spec.rho_root = z.root;
  spec.rho_qpow = z.qpow;
  spec.A = kGrid;
  spec.c_root = z.root + 12;
  spec.D = 2 * kGrid;
  spec.E = z.qpow;
  return lerch_expand(spec, cap) * Cyc24(2) - quadratic_sum(plain, cap);
}

SeriesPair thetaid_pair(const Monomial& z, GridExp cap) {
  QSeries rhs = build_to(cap, [&](GridExp w) {
    QSeries num = theta_Theta(z, 2 * kGrid, w) *
                  theta_Theta({z.root + 12, z.qpow + kGrid}, 2 * kGrid, w) * theta3(w);
    QSeries den = theta_Theta({z.root + 12, z.qpow}, 2 * kGrid, w);
    if (num.is_zero()) return num;
    return divide(num, den);
  });
  return {thetaid_lhs(z, cap), std::move(rhs)};
}

QSeries mu_formal(const EllipticArg& u, const EllipticArg& v, const BigRational& tau_mult,
                  GridExp cap) {
  if (sgn(tau_mult) <= 0) throw GridViolation("mu needs a positive tau multiplier");
  const BigRational& m = tau_mult;
  LerchSpec spec;
  spec.alternating = true;
  // (-1)^n Q^{(n^2+n)/2} e^{2 pi i n v} / (1 - Q^n e^{2 pi i u}), Q = q^m
  spec.A = grid_int(12 * m, "mu exponent");
  spec.B = grid_int(12 * m + 24 * v.tau_coeff, "mu exponent");
  spec.C = 0;
  spec.rho_root = grid_int(24 * v.constant, "mu phase");
  spec.D = grid_int(24 * m, "mu denominator");
  spec.E = grid_int(24 * u.tau_coeff, "mu denominator");
  spec.c_root = grid_int(24 * u.constant, "mu phase");
  // e^{pi i u} = zeta24^{12 b} q^{a/2}
  const GridExp pre_q = grid_int(12 * u.tau_coeff, "mu prefactor");
  const long pre_root = grid_int(12 * u.constant, "mu prefactor");

  QSeries mu = build_to(cap, [&](GridExp w) {
    QSeries theta = vartheta_series(v.tau_coeff, v.constant, m, w);
    if (!theta.valuation()) throw ThetaVanishing("vartheta(v) vanishes to the working precision");
    QSeries num = lerch_expand(spec, w - pre_q);
    return shift(divide(num, theta), pre_q);
  });
  return mu * Cyc24::zeta(pre_root);
}

}  // namespace mockq
