#include "mockq/numeric.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <thread>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "mockq/errors.hpp"
#include "mockq/registry.hpp"

namespace mockq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;
const cplx kI{0.0, 1.0};
// Beyond this erfc underflows; the Eichler and R terms it multiplies are
// below e^{-338} there.
constexpr double kErfcCut = 26.5;

cplx e2pi(cplx w) { return std::exp(2.0 * kPi * kI * w); }

double rel(cplx lhs, cplx rhs) { return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)); }

double max_rel(const Vec3& lhs, const Vec3& rhs) {
  double r = 0;
  for (int k = 0; k < 3; ++k) r = std::max(r, rel(lhs[k], rhs[k]));
  return r;
}

double sgn(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

// Sums term(k0 + j) and term(k0 - j) outward until both fall under the floor
// once past min_span.
template <class Term>
cplx bilateral(long k0, double min_span, const NumericScene& s, const char* what, Term term) {
  cplx sum = term(k0);
  for (long j = 1;; ++j) {
    if (j > s.max_terms) throw NonConvergence(std::string(what) + ": term budget exhausted");
    cplx a = term(k0 + j);
    cplx b = term(k0 - j);
    sum += a + b;
    double bound = s.series_term_floor * std::max(1.0, std::abs(sum));
    if (j > min_span && std::abs(a) < bound && std::abs(b) < bound) return sum;
  }
}

template <class F>
cplx integrate(F f, double a, double b, const NumericScene& s, const char* what) {
  double err = 0;
  cplx r = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      f, a, b, static_cast<unsigned>(s.max_quad_refinements), s.quad_rel_tol, &err);
  if (!std::isfinite(r.real()) || !std::isfinite(r.imag()) ||
      err > 1e3 * s.quad_rel_tol * std::max(1.0, std::abs(r)))
    throw NonConvergence(std::string(what) + ": quadrature did not converge");
  return r;
}

template <class F>
cplx integrate_pieces(F f, const std::vector<double>& pts, const NumericScene& s,
                      const char* what) {
  cplx r = 0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) r += integrate(f, pts[i], pts[i + 1], s, what);
  return r;
}

// sgn(n) - E(x) for real x, without cancellation.
double sign_minus_E(double n, double x) {
  double t = std::sqrt(kPi) * x;
  double sg = sgn(n);
  if (x == 0) return sg;
  if (sgn(x) == sg) return sg * std::erfc(std::abs(t));
  return sg * (2.0 - std::erfc(std::abs(t)));
}

cplx erfc_cf(cplx w) {
  // w + (1/2)/(w + 1/(w + (3/2)/(w + ...))) by modified Lentz.
  const double tiny = 1e-300;
  cplx f = w;
  cplx C = f;
  cplx D = 0;
  for (int k = 1; k < 20000; ++k) {
    double a = 0.5 * k;
    D = w + a * D;
    if (std::abs(D) < tiny) D = tiny;
    D = 1.0 / D;
    C = w + a / C;
    if (std::abs(C) < tiny) C = tiny;
    cplx delta = C * D;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) return std::exp(-w * w) / (std::sqrt(kPi) * f);
  }
  throw NonConvergence("E: continued fraction did not converge");
}

}  // namespace

void NumericScene::validate() const {
  if (!(tau.imag() > 0)) throw MockqError("tau must lie in the upper half-plane");
  if (!(abs_tol > 0) || !(series_term_floor > 0) || !(quad_rel_tol > 0))
    throw MockqError("tolerances must be positive");
  if (max_terms < 1 || max_quad_refinements < 1) throw MockqError("term budgets must be positive");
}

NumericScene NumericScene::at(cplx t) const {
  NumericScene s = *this;
  s.tau = t;
  s.validate();
  return s;
}

cplx parse_tau(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw ParseError("empty tau");
  auto number = [&](const std::string& part) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw ParseError("bad tau: " + text);
    }
    if (used != part.size()) throw ParseError("bad tau: " + text);
    return v;
  };
  if (t.back() != 'i') return {number(t), 0.0};
  t.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;) {
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  std::string re = split == std::string::npos ? "" : t.substr(0, split);
  std::string im = split == std::string::npos ? t : t.substr(split);
  double imv;
  if (im.empty() || im == "+")
    imv = 1.0;
  else if (im == "-")
    imv = -1.0;
  else
    imv = number(im);
  return {re.empty() ? 0.0 : number(re), imv};
}

std::string format_tau(cplx tau) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g%+.6gi", tau.real(), tau.imag());
  return buf;
}

cplx eta_num(const NumericScene& s) {
  cplx q = e2pi(s.tau);
  cplx qn = q;
  cplx p = 1;
  for (int n = 1; std::abs(qn) >= s.series_term_floor; ++n) {
    if (n > s.max_terms) throw NonConvergence("eta: term budget exhausted");
    p *= 1.0 - qn;
    qn *= q;
  }
  return e2pi(s.tau / 24.0) * p;
}

cplx euler_E_num(double m, const NumericScene& s) {
  cplx qm = e2pi(m * s.tau);
  cplx qn = qm;
  cplx p = 1;
  for (int n = 1; std::abs(qn) >= s.series_term_floor; ++n) {
    if (n > s.max_terms) throw NonConvergence("E: term budget exhausted");
    p *= 1.0 - qn;
    qn *= qm;
  }
  return p;
}

cplx eta_quotient_num(const EtaQuotientSpec& spec, const NumericScene& s) {
  cplx r = 1;
  for (const auto& f : spec.factors) r *= std::pow(eta_num(s.at(f.multiplier.get_d() * s.tau)), f.exponent);
  return r;
}

cplx theta_num(cplx z, const NumericScene& s) {
  const double y = s.tau.imag();
  long k0 = std::lround(-z.imag() / y - 0.5);
  return bilateral(k0, 2, s, "theta", [&](long k) {
    double n = k + 0.5;
    return std::exp(kPi * kI * (n * n * s.tau + 2.0 * n * (z + 0.5)));
  });
}

cplx E_num(cplx z) {
  if (z.imag() == 0) return std::erf(std::sqrt(kPi) * z.real());
  if (std::abs(z) < 1.5 || std::abs(z.real()) <= std::abs(z.imag())) {
    // sum (-pi)^n z^{2n+1} / (n! (n + 1/2))
    cplx w = -kPi * z * z;
    cplx p = z;
    cplx sum = 0;
    for (int n = 0; n < 100000; ++n) {
      cplx t = p / (n + 0.5);
      sum += t;
      if (n > std::abs(w) && std::abs(t) < 1e-17 * std::abs(sum)) return sum;
      p *= w / static_cast<double>(n + 1);
    }
    throw NonConvergence("E: series did not converge");
  }
  if (z.real() < 0) return -E_num(-z);
  return 1.0 - erfc_cf(std::sqrt(kPi) * z);
}

double beta_num(double x) {
  if (x < 0) throw MockqError("beta needs x >= 0");
  return boost::math::gamma_q(0.5, kPi * x);
}

cplx R_num(cplx u, const NumericScene& s) {
  const double y = s.tau.imag();
  const double a = u.imag() / y;
  const double root = std::sqrt(2.0 * y);
  long k0 = std::lround(-a - 0.5);
  return bilateral(k0, std::abs(a) + 2, s, "R", [&](long k) -> cplx {
    double n = k + 0.5;
    double f = sign_minus_E(n, (n + a) * root);
    if (f == 0) return 0.0;
    double ph = (k % 2 == 0) ? 1.0 : -1.0;
    return f * ph * std::exp(-kPi * kI * (n * n * s.tau + 2.0 * n * u));
  });
}

cplx mu_num(cplx u, cplx v, const NumericScene& s) {
  cplx th = theta_num(v, s);
  if (std::abs(th) < 1e-14) throw ThetaVanishing("mu: theta(v) vanishes");
  const double y = s.tau.imag();
  long k0 = std::lround(-v.imag() / y);
  cplx sum = bilateral(k0, std::abs(u.imag()) / y + 3, s, "mu", [&](long n) -> cplx {
    double sg = (n % 2 == 0) ? 1.0 : -1.0;
    double dn = static_cast<double>(n);
    cplx L = dn * s.tau + u;
    if (L.imag() >= 0) {
      cplx den = 1.0 - e2pi(L);
      if (std::abs(den) < 1e-14) throw PoleError("mu: denominator vanishes");
      return sg * std::exp(kPi * kI * ((dn * dn + dn) * s.tau + 2.0 * dn * v)) / den;
    }
    cplx den = 1.0 - e2pi(-L);
    if (std::abs(den) < 1e-14) throw PoleError("mu: denominator vanishes");
    return -sg * std::exp(kPi * kI * ((dn * dn - dn) * s.tau + 2.0 * dn * v - 2.0 * u)) / den;
  });
  return std::exp(kPi * kI * u) / th * sum;
}

cplx mu_tilde_num(cplx u, cplx v, const NumericScene& s) {
  return mu_num(u, v, s) + 0.5 * kI * R_num(u - v, s);
}

double mu_tilde_modular_check(const SL2& g, cplx u, cplx v, const NumericScene& s) {
  if (g.a * g.d - g.b * g.c != 1) throw MockqError("matrix is not in SL2(Z)");
  cplx ct = static_cast<double>(g.c) * s.tau + static_cast<double>(g.d);
  if (std::abs(ct) == 0) throw MockqError("c tau + d vanishes");
  NumericScene gs = s.at((static_cast<double>(g.a) * s.tau + static_cast<double>(g.b)) / ct);
  cplx lhs = mu_tilde_num(u / ct, v / ct, gs);
  // V^{-3} sqrt(c tau + d) = (eta(tau)/eta(gamma tau))^3 (c tau + d)^2 on any branch.
  cplx factor = std::pow(eta_num(s) / eta_num(gs), 3) * ct * ct *
                std::exp(-kPi * kI * static_cast<double>(g.c) * (u - v) * (u - v) / ct);
  return rel(lhs, factor * mu_tilde_num(u, v, s));
}

cplx g_ab_num(double a, double b, const NumericScene& s) {
  long k0 = std::lround(-a);
  return bilateral(k0, 2, s, "g", [&](long k) {
    double n = a + k;
    return n * std::exp(kPi * kI * (n * n * s.tau + 2.0 * n * b));
  });
}

cplx g012_num(int idx, cplx z, const NumericScene& s) {
  const double shift = idx == 1 ? 1.0 / 6 : 1.0 / 3;
  cplx sum = bilateral(0, 2, s, "g012", [&](long k) {
    double n = k + shift;
    double ph = (idx == 0 && k % 2 != 0) ? -1.0 : 1.0;
    return ph * n * std::exp(3.0 * kPi * kI * n * n * z);
  });
  return idx == 1 ? -sum : sum;
}

cplx g012_via_gab(int idx, cplx z, const NumericScene& s) {
  NumericScene t = s.at(3.0 * z);
  switch (idx) {
    case 0:
      return std::exp(-kPi * kI / 3.0) * g_ab_num(1.0 / 3, 0.5, t);
    case 1:
      return -g_ab_num(1.0 / 6, 0.0, t);
    case 2:
      return g_ab_num(1.0 / 3, 0.0, t);
  }
  throw MockqError("g index must be 0, 1 or 2");
}

cplx eichler_integral(double a, double b, double lambda, const NumericScene& s) {
  const double y = s.tau.imag();
  const double scale = std::sqrt(2.0 * kPi * lambda * y);
  long k0 = std::lround(-a);
  return bilateral(k0, 2, s, "eichler", [&](long k) -> cplx {
    double N = a + k;
    double x = scale * std::abs(N);
    if (N == 0 || x > kErfcCut) return 0.0;
    return kI / std::sqrt(lambda) * sgn(N) *
           std::exp(2.0 * kPi * kI * N * b - kPi * kI * lambda * N * N * s.tau) * std::erfc(x);
  });
}

cplx eichler_quadrature(double a, double b, double lambda, const NumericScene& s) {
  const double y = s.tau.imag();
  const cplx start = -std::conj(s.tau);
  auto f = [&](double t) {
    return g_ab_num(a, b, s.at(lambda * (start + kI * t))) * kI / std::sqrt(2.0 * y + t);
  };
  return integrate(f, 0.0, std::numeric_limits<double>::infinity(), s, "eichler quadrature");
}

cplx mordell_j(int idx, const NumericScene& s) {
  if (idx < 1 || idx > 3) throw MockqError("j index must be 1, 2 or 3");
  const cplx tau = s.tau;
  const double y = tau.imag();
  const double X = std::sqrt(std::log(1.0 / s.series_term_floor) / (3.0 * kPi * y));
  auto ratio = [&](double x) -> cplx {
    cplx w = kPi * tau * x;
    switch (idx) {
      case 1:
        return x == 0 ? cplx(2.0 / 3) : std::sin(2.0 * w) / std::sin(3.0 * w);
      case 2:
        return std::cos(w) / std::cos(3.0 * w);
      default:
        return x == 0 ? cplx(1.0 / 3) : std::sin(w) / std::sin(3.0 * w);
    }
  };
  auto f = [&](double x) { return std::exp(3.0 * kPi * kI * tau * x * x) * ratio(x); };
  return integrate_pieces(f, {0.0, X / 4, X / 2, X}, s, "mordell");
}

cplx lerch_num(const LerchSpec& spec, const NumericScene& s) {
  if (spec.A <= 0) throw MockqError("lerch_num needs A > 0");
  const cplx tau = s.tau;
  long m = 1, r = 0;
  if (spec.residue) {
    m = spec.residue->second;
    r = spec.residue->first;
  }
  auto num_log = [&](double n) {
    double e = (static_cast<double>(spec.A) * n * n +
                static_cast<double>(spec.B + spec.rho_qpow) * n + static_cast<double>(spec.C)) /
               24.0;
    return 2.0 * kPi * kI * (static_cast<double>(spec.rho_root) * n / 24.0 + e * tau);
  };
  double nc = -static_cast<double>(spec.B + spec.rho_qpow) / (2.0 * spec.A);
  double span = spec.D != 0 ? std::abs(static_cast<double>(spec.E) / spec.D) + 3 : 3;
  long k0 = std::lround((nc - r) / m);
  return bilateral(k0, span / m + 2, s, "lerch", [&](long k) -> cplx {
    long n = r + m * k;
    double dn = static_cast<double>(n);
    double sg = (spec.alternating && n % 2 != 0) ? -1.0 : 1.0;
    cplx xl = 2.0 * kPi * kI *
              (static_cast<double>(spec.c_root) / 24.0 +
               (static_cast<double>(spec.D) * dn + static_cast<double>(spec.E)) / 24.0 * tau);
    if (xl.real() <= 0) {
      cplx den = 1.0 - std::exp(xl);
      if (std::abs(den) < 1e-14) throw PoleError("lerch: denominator vanishes");
      return sg * std::exp(num_log(dn)) / den;
    }
    cplx den = 1.0 - std::exp(-xl);
    if (std::abs(den) < 1e-14) throw PoleError("lerch: denominator vanishes");
    return -sg * std::exp(num_log(dn) - xl) / den;
  });
}

cplx f_num(cplx q, const NumericScene& s) {
  cplx sum = 0, den = 1, qn = 1;
  for (int n = 0;; ++n) {
    if (n > s.max_terms) throw NonConvergence("f: term budget exhausted");
    if (n > 0) {
      qn *= q;
      den *= (1.0 + qn) * (1.0 + qn);
    }
    cplx t = std::pow(q, n * n) / den;
    sum += t;
    if (n > 3 && std::abs(t) < s.series_term_floor * std::max(1.0, std::abs(sum))) return sum;
  }
}

cplx omega_num(cplx q, const NumericScene& s) {
  cplx sum = 0, den = 1;
  for (int n = 0;; ++n) {
    if (n > s.max_terms) throw NonConvergence("omega: term budget exhausted");
    cplx d = 1.0 - std::pow(q, 2 * n + 1);
    den *= d * d;
    cplx t = std::pow(q, 2 * n * (n + 1)) / den;
    sum += t;
    if (n > 3 && std::abs(t) < s.series_term_floor * std::max(1.0, std::abs(sum))) return sum;
  }
}

namespace {

Vec3 F_num(const NumericScene& s) {
  cplx q = e2pi(s.tau);
  cplx qh = e2pi(s.tau / 2.0);
  cplx q3 = e2pi(s.tau / 3.0);
  return {e2pi(-s.tau / 24.0) * f_num(q, s), 2.0 * q3 * omega_num(qh, s),
          2.0 * q3 * omega_num(-qh, s)};
}

Vec3 G_num(const NumericScene& s) {
  const cplx c = 2.0 * kI * kSqrt3;
  cplx i0 = std::exp(-kPi * kI / 3.0) * eichler_integral(1.0 / 3, 0.5, 3.0, s);
  cplx i1 = -eichler_integral(1.0 / 6, 0.0, 3.0, s);
  cplx i2 = eichler_integral(1.0 / 3, 0.0, 3.0, s);
  return {c * i1, c * i0, -c * i2};
}

}  // namespace

FGH FGH_num(const NumericScene& s) {
  FGH r;
  r.F = F_num(s);
  r.G = G_num(s);
  for (int k = 0; k < 3; ++k) r.H[k] = r.F[k] - r.G[k];
  return r;
}

Vec3 lemma33_vector(const NumericScene& s) {
  // On z = it the components decay like e^{-pi/(12 t)} as t -> 0; below
  // t = 0.002 that is under e^{-130}.
  Vec3 r;
  for (int k = 0; k < 3; ++k) {
    auto f = [&](double t) {
      cplx z = kI * t;
      return g012_num(k, z, s) * kI / std::sqrt(-kI * (z + s.tau));
    };
    r[k] = -2.0 * kI * kSqrt3 *
           integrate_pieces(f, {0.002, 0.05, 0.5, 2.0, std::numeric_limits<double>::infinity()}, s,
                            "theta integral");
  }
  return r;
}

Vec3 watson_remainder(const NumericScene& s) {
  Vec3 F = F_num(s);
  Vec3 Fs = F_num(s.at(-1.0 / s.tau));
  cplx st = std::sqrt(-kI * s.tau);
  return {Fs[0] / st - F[1], Fs[1] / st - F[0], Fs[2] / st + F[2]};
}

// ---------------------------------------------------------------------------
// Checks

namespace {

struct Outcome {
  double residual;
  std::string detail;
};

using CheckFn = Outcome (*)(const NumericScene&);

const std::vector<cplx>& test_points_u() {
  static const std::vector<cplx> us{{0.3, 0.2}, {-0.27, 0.35}, {0.11, -0.15}};
  return us;
}

Outcome etatrans(const NumericScene& s) {
  cplx lhs = eta_num(s.at(-1.0 / s.tau));
  return {rel(lhs, std::sqrt(-kI * s.tau) * eta_num(s)), ""};
}

Outcome rell_a(const NumericScene& s) {
  double r = 0;
  for (cplx u : test_points_u()) r = std::max(r, rel(R_num(u + 1.0, s), -R_num(u, s)));
  return {r, ""};
}

Outcome rell_b(const NumericScene& s) {
  double r = 0;
  for (cplx u : test_points_u()) {
    cplx lhs = R_num(u, s) + std::exp(-2.0 * kPi * kI * u - kPi * kI * s.tau) * R_num(u + s.tau, s);
    r = std::max(r, rel(lhs, 2.0 * std::exp(-kPi * kI * u - kPi * kI * s.tau / 4.0)));
  }
  return {r, ""};
}

Outcome rell_c(const NumericScene& s) {
  double r = 0;
  for (cplx u : test_points_u()) r = std::max(r, rel(R_num(-u, s), R_num(u, s)));
  return {r, ""};
}

const cplx kU{0.2, 0.1};
const cplx kV{0.05, 0.3};

Outcome mutwid_a(const NumericScene& s) {
  static const std::vector<std::array<long, 4>> shifts{
      {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, -1, 2, 1}, {-1, 2, 0, -3}};
  cplx base = mu_tilde_num(kU, kV, s);
  double r = 0;
  for (const auto& [k, l, m, n] : shifts) {
    cplx lhs = mu_tilde_num(kU + static_cast<double>(k) * s.tau + static_cast<double>(l),
                            kV + static_cast<double>(m) * s.tau + static_cast<double>(n), s);
    double km = static_cast<double>(k - m);
    double sg = ((k + l + m + n) % 2 == 0) ? 1.0 : -1.0;
    cplx rhs = sg * std::exp(kPi * kI * km * km * s.tau + 2.0 * kPi * kI * km * (kU - kV)) * base;
    r = std::max(r, rel(lhs, rhs));
  }
  return {r, ""};
}

Outcome mutwid_b(const NumericScene& s) {
  double rs = mu_tilde_modular_check({0, -1, 1, 0}, kU, kV, s);
  double rt = mu_tilde_modular_check({1, 1, 0, 1}, kU, kV, s);
  char buf[96];
  std::snprintf(buf, sizeof buf, "S %.2e, T %.2e", rs, rt);
  return {std::max(rs, rt), buf};
}

Outcome mutwid_c(const NumericScene& s) {
  cplx m = mu_tilde_num(kU, kV, s);
  return {std::max(rel(mu_tilde_num(-kU, -kV, s), m), rel(mu_tilde_num(kV, kU, s), m)), ""};
}

const std::vector<std::pair<double, double>>& gab_points() {
  static const std::vector<std::pair<double, double>> p{
      {0.3, 0.2}, {-1.0 / 6, 1.0 / 3}, {1.0 / 3, 0.5}, {0.45, -0.7}};
  return p;
}

template <class F>
Outcome over_gab_points(F f) {
  double r = 0;
  for (auto [a, b] : gab_points()) r = std::max(r, f(a, b));
  return {r, ""};
}

Outcome gab_i(const NumericScene& s) {
  return over_gab_points([&](double a, double b) { return rel(g_ab_num(a + 1, b, s), g_ab_num(a, b, s)); });
}

Outcome gab_ii(const NumericScene& s) {
  return over_gab_points([&](double a, double b) {
    return rel(g_ab_num(a, b + 1, s), std::exp(2.0 * kPi * kI * a) * g_ab_num(a, b, s));
  });
}

Outcome gab_iii(const NumericScene& s) {
  return over_gab_points([&](double a, double b) { return rel(g_ab_num(-a, -b, s), -g_ab_num(a, b, s)); });
}

Outcome gab_iv(const NumericScene& s) {
  NumericScene t = s.at(s.tau + 1.0);
  return over_gab_points([&](double a, double b) {
    return rel(g_ab_num(a, b, t), std::exp(-kPi * kI * a * (a + 1)) * g_ab_num(a, a + b + 0.5, s));
  });
}

Outcome gab_v(const NumericScene& s) {
  NumericScene t = s.at(-1.0 / s.tau);
  return over_gab_points([&](double a, double b) {
    cplx rhs = kI * std::exp(2.0 * kPi * kI * a * b) * std::pow(std::sqrt(-kI * s.tau), 3) *
               g_ab_num(b, -a, s);
    return rel(g_ab_num(a, b, t), rhs);
  });
}

Outcome gabints(const NumericScene& s) {
  static const std::vector<std::pair<double, double>> pts{
      {-1.0 / 6, -0.5}, {0.2, 0.1}, {-0.35, 0.7}, {0.1, -1.0 / 3}};
  double r = 0;
  for (auto [a, b] : pts) {
    cplx lhs = eichler_integral(a + 0.5, b + 0.5, 1.0, s);
    cplx rhs = -std::exp(-kPi * kI * a * a * s.tau + 2.0 * kPi * kI * a * (b + 0.5)) *
               R_num(a * s.tau - b, s);
    r = std::max(r, rel(lhs, rhs));
  }
  return {r, "path denominator sqrt(-i(z+tau))"};
}

Outcome rext(const NumericScene& s) {
  double r = 0;
  for (double b : {1.0 / 6, -1.0 / 3, 0.4}) {
    cplx lhs = R_num(-s.tau / 2.0 - b, s);
    cplx rhs = std::exp(kPi * kI * s.tau / 4.0 + kPi * kI * b) -
               std::exp(kPi * kI * s.tau / 4.0 + kPi * kI * (b + 0.5)) *
                   eichler_integral(0.0, b + 0.5, 1.0, s);
    r = std::max(r, rel(lhs, rhs));
  }
  return {r, ""};
}

Outcome lemma33(const NumericScene& s) {
  return {max_rel(watson_remainder(s), lemma33_vector(s)), "theta integrals of (g0, g1, g2)"};
}

std::string vec_name(const std::array<int, 3>& pick, const std::array<int, 3>& sign) {
  std::string out = "(";
  for (int k = 0; k < 3; ++k) {
    if (k) out += ",";
    if (sign[k] < 0) out += "-";
    out += "j" + std::to_string(pick[k] + 1);
  }
  return out + ")";
}

Outcome watson_lemma(const NumericScene& s) {
  Vec3 W = watson_remainder(s);
  cplx pre = 4.0 * kSqrt3 * std::sqrt(-kI * s.tau);
  Vec3 J{mordell_j(1, s), mordell_j(2, s), mordell_j(3, s)};
  auto residual = [&](const std::array<int, 3>& pick, const std::array<int, 3>& sign) {
    Vec3 v;
    for (int k = 0; k < 3; ++k) v[k] = pre * static_cast<double>(sign[k]) * J[pick[k]];
    return max_rel(W, v);
  };
  double best = std::numeric_limits<double>::infinity();
  std::string best_name, within;
  for (int code = 0; code < 216; ++code) {
    std::array<int, 3> pick{}, sign{};
    int c = code;
    for (int k = 0; k < 3; ++k) {
      pick[k] = c % 3;
      c /= 3;
      sign[k] = (c % 2) ? -1 : 1;
      c /= 2;
    }
    double r = residual(pick, sign);
    if (r < s.abs_tol) within += (within.empty() ? "" : " ") + vec_name(pick, sign);
    if (r < best) {
      best = r;
      best_name = vec_name(pick, sign);
    }
  }
  double c1 = residual({0, 0, 2}, {1, -1, 1});
  double c2 = residual({0, 1, 2}, {1, -1, 1});
  char buf[160];
  std::snprintf(buf, sizeof buf, "; (j1,-j1,j3) %.2e; (j1,-j2,j3) %.2e", c1, c2);
  return {best, "best assignment " + best_name + "; within tol: " +
                    (within.empty() ? std::string("none") : within) + buf};
}

Outcome s_transform(const NumericScene& s) {
  Vec3 H = FGH_num(s).H;
  Vec3 Hs = FGH_num(s.at(-1.0 / s.tau)).H;
  cplx st = std::sqrt(-kI * s.tau);
  return {max_rel({Hs[0] / st, Hs[1] / st, Hs[2] / st}, {H[1], H[0], -H[2]}), ""};
}

Outcome t_transform(const NumericScene& s) {
  Vec3 H = FGH_num(s).H;
  Vec3 H1 = FGH_num(s.at(s.tau + 1.0)).H;
  cplx z24 = std::exp(-2.0 * kPi * kI / 24.0);
  cplx z3 = std::exp(2.0 * kPi * kI / 3.0);
  return {max_rel(H1, {z24 * H[0], z3 * H[2], z3 * H[1]}), ""};
}

// Formal sides of each reading at tau against numeric evaluation of the same
// expression; the validated reading is also compared with its mu form.
struct NumericReading {
  std::string name;
  cplx rhs;
};

Outcome consistency(const std::string& id, cplx lhs_num, const std::vector<NumericReading>& readings,
                    const std::string& mu_reading, cplx mu_form, const NumericScene& s) {
  const IdentityRecord& rec = find_record(id);
  const long order = 200;
  double worst = 0;
  std::ostringstream detail;
  detail.precision(2);
  detail << std::scientific;
  bool lhs_done = false;
  for (const auto& r : rec.readings) {
    auto it = std::find_if(readings.begin(), readings.end(),
                           [&](const NumericReading& n) { return n.name == r.name; });
    if (it == readings.end()) continue;
    SeriesPair p = build_sides(rec, r, order);
    if (!lhs_done) {
      worst = std::max(worst, rel(evaluate(p.lhs, s.tau), lhs_num));
      lhs_done = true;
    }
    cplx formal_rhs = evaluate(p.rhs, s.tau);
    worst = std::max(worst, rel(formal_rhs, it->rhs));
    if (r.name == mu_reading) worst = std::max(worst, rel(formal_rhs, mu_form));
    detail << r.name << ": |lhs-rhs| " << std::abs(lhs_num - it->rhs) << "; ";
  }
  detail << "mu form (" << mu_reading << ") |lhs-rhs| " << std::abs(lhs_num - mu_form);
  return {worst, detail.str()};
}

EtaQuotientSpec eq(const char* text) { return EtaQuotientSpec::parse(text); }

LerchSpec lspec(long rho_root, GridExp A, GridExp B, long c_root, GridExp D, GridExp E) {
  LerchSpec l;
  l.rho_root = rho_root;
  l.A = A;
  l.B = B;
  l.c_root = c_root;
  l.D = D;
  l.E = E;
  return l;
}

Outcome consistency_newomega(const NumericScene& s) {
  const cplx tau = s.tau;
  const cplx c0 = -2.0 * kI / kSqrt3;
  cplx lhs = 2.0 * e2pi(2.0 * tau) * omega_num(-e2pi(3.0 * tau), s);
  cplx quot = eta_quotient_num(eq("eta(1)^2*eta(4)^2/eta(2)^2/eta(6)"), s);
  cplx lerch = e2pi(1.0 / 6) * (4.0 / 3) * lerch_num(lspec(8, 24, 24, 12, 48, 24), s) /
               euler_E_num(6, s);
  cplx mu = -4.0 / kSqrt3 * std::exp(-kPi * kI * tau / 2.0 - kPi * kI / 6.0) *
            mu_num(tau + 0.5, 1.0 / 3, s.at(2.0 * tau));
  return consistency("NEWOMEGA", lhs, {{"stated", c0 - 2.0 / 3 * quot + lerch}}, "stated",
                     c0 - 2.0 / 3 * quot + mu, s);
}

Outcome consistency_newomega2(const NumericScene& s) {
  const cplx tau = s.tau;
  const cplx c0 = -2.0 * kI / kSqrt3;
  cplx lhs = 2.0 * e2pi(2.0 * tau) * omega_num(e2pi(3.0 * tau), s);
  cplx base = c0 + 2.0 / 3 * eta_quotient_num(eq("eta(2)^4/eta(6)/eta(1)^2"), s);
  cplx lerch = e2pi(-1.0 / 6) * (4.0 / 3) * lerch_num(lspec(16, 24, 24, 8, 48, 24), s) /
               euler_E_num(6, s);
  cplx mu = 4.0 / kSqrt3 * e2pi(-tau / 4.0) * e2pi(1.0 / 6) *
            mu_num(tau - 2.0 / 3, -1.0 / 3, s.at(2.0 * tau));
  return consistency("NEWOMEGA2", lhs, {{"stated", base + lerch}, {"sign-corrected", base - lerch}},
                     "sign-corrected", base - mu, s);
}

Outcome consistency_newf(const NumericScene& s) {
  const cplx tau = s.tau;
  const cplx norm = e2pi(tau / 8.0);
  cplx lhs = f_num(e2pi(3.0 * tau), s);
  cplx quot = eta_quotient_num(eq("eta(1)^4/eta(3)/eta(2)^2"), s) / 3.0;
  cplx e3 = euler_E_num(3, s);
  auto side = [&](double sign, GridExp D) {
    return norm * quot + sign * (4.0 / 3) * lerch_num(lspec(8, 12, 12, 12, D, 0), s) / e3;
  };
  cplx mu = norm * (quot + 4.0 * kI / kSqrt3 * mu_num(-0.5, -1.0 / 3, s));
  return consistency("NEWF", lhs,
                     {{"stated", side(-1, 48)},
                      {"denominator 1+q^n", side(-1, 24)},
                      {"sign +4/3", side(1, 48)},
                      {"corrected", side(1, 24)}},
                     "corrected", mu, s);
}

const std::map<std::string, CheckFn>& check_table() {
  static const std::map<std::string, CheckFn> t{
      {"etatrans", etatrans},
      {"rellprops-a", rell_a},
      {"rellprops-b", rell_b},
      {"rellprops-c", rell_c},
      {"mutwid-a", mutwid_a},
      {"mutwid-b", mutwid_b},
      {"mutwid-c", mutwid_c},
      {"gab-i", gab_i},
      {"gab-ii", gab_ii},
      {"gab-iii", gab_iii},
      {"gab-iv", gab_iv},
      {"gab-v", gab_v},
      {"gabints", gabints},
      {"rext", rext},
      {"lemma33", lemma33},
      {"watson-lemma", watson_lemma},
      {"s-transform", s_transform},
      {"t-transform", t_transform},
      {"consistency-newomega", consistency_newomega},
      {"consistency-newomega2", consistency_newomega2},
      {"consistency-newf", consistency_newf},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "etatrans", "rellprops-a", "rellprops-b", "rellprops-c", "mutwid-a", "mutwid-b",
      "mutwid-c", "gab-i", "gab-ii", "gab-iii", "gab-iv", "gab-v", "gabints", "rext",
      "lemma33", "watson-lemma", "s-transform", "t-transform", "consistency-newomega",
      "consistency-newomega2", "consistency-newf"};
  return names;
}

double default_tolerance(const std::string& name) {
  if (name == "lemma33" || name == "watson-lemma") return 1e-6;
  if (name == "t-transform") return 1e-9;
  if (name.rfind("consistency-", 0) == 0) return 1e-7;
  return 1e-8;
}

const std::vector<cplx>& default_scenes() {
  static const std::vector<cplx> scenes{
      {0.0, 1.0}, {0.25, 1.0}, {-1.0 / 3, 0.75}, {0.5, 2.0}, {0.1, 0.6}};
  return scenes;
}

CheckResult run_check(const std::string& name, const NumericScene& s) {
  auto it = check_table().find(name);
  if (it == check_table().end()) {
    std::string all;
    for (const auto& n : check_names()) all += (all.empty() ? "" : ", ") + n;
    throw UnknownIdentity("unknown check '" + name + "'; valid checks: " + all);
  }
  s.validate();
  CheckResult r;
  r.name = name;
  r.tau = s.tau;
  r.tol = s.abs_tol;
  Outcome o = it->second(s);
  r.residual = o.residual;
  r.detail = o.detail;
  r.pass = o.residual < r.tol;
  return r;
}

std::vector<CheckResult> run_battery(const std::vector<std::string>& names,
                                     const std::vector<cplx>& scenes, double tol_override,
                                     unsigned jobs) {
  std::vector<std::pair<std::string, cplx>> tasks;
  for (const auto& n : names)
    for (cplx t : scenes) tasks.emplace_back(n, t);
  std::vector<CheckResult> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < tasks.size();) {
      NumericScene s;
      s.tau = tasks[k].second;
      s.abs_tol = tol_override > 0 ? tol_override : default_tolerance(tasks[k].first);
      try {
        out[k] = run_check(tasks[k].first, s);
      } catch (const std::exception& e) {
        out[k].name = tasks[k].first;
        out[k].tau = tasks[k].second;
        out[k].tol = s.abs_tol;
        out[k].residual = std::numeric_limits<double>::infinity();
        out[k].detail = e.what();
      }
    }
  };
  for (const auto& n : names)
    if (!check_table().count(n)) run_check(n, NumericScene{});
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace mockq
