#include "mockq/registry.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "internal.hpp"
#include "mockq/dissect.hpp"
#include "mockq/errors.hpp"
#include "mockq/lerch.hpp"
#include "mockq/mocktheta.hpp"

namespace mockq {

using detail::grid_int;

namespace {

using Build = std::function<SeriesPair(GridExp)>;

Cyc24 rat(long p, long q = 1) { return Cyc24(make_rational(p, q)); }

// -2i/sqrt3
Cyc24 minus_two_i_over_sqrt3() { return cyc_i() * cyc_sqrt3().inverse() * rat(-2); }

QSeries eta(const char* spec, GridExp cap) { return eta_quotient(EtaQuotientSpec::parse(spec), cap); }
QSeries eprod(const char* spec, GridExp cap) { return e_product(EtaQuotientSpec::parse(spec), cap); }

// a(q^k) for a built by build, reaching cap.
QSeries lift(QSeries (*build)(GridExp), const BigRational& k, GridExp cap) {
  BigRational need = BigRational(cap) / k;
  GridExp inner = grid_int(BigRational(need.get_num() / need.get_den()), "lift cap") + 2 * kGrid;
  return truncate(compose_power(build(inner), k), cap);
}

QSeries omega_neg(GridExp cap) { return twist_minus_q(omega_eulerian(cap)); }

LerchSpec lerch_spec(bool alternating, long rho_root, GridExp A, GridExp B, long c_root, GridExp D,
                     GridExp E) {
  LerchSpec s;
  s.alternating = alternating;
  s.rho_root = rho_root;
  s.A = A;
  s.B = B;
  s.c_root = c_root;
  s.D = D;
  s.E = E;
  return s;
}

QSeries mu(BigRational a, BigRational b, BigRational a2, BigRational b2, BigRational m, GridExp cap) {
  return mu_formal({a, b}, {a2, b2}, m, cap);
}

BigRational Q(long p, long q = 1) { return make_rational(p, q); }

// 2 q^2 omega(+-q^3)
QSeries two_q2_omega_q3(bool minus, GridExp cap) {
  return shift(lift(minus ? omega_neg : omega_eulerian, Q(3), cap), 48) * rat(2);
}

QSeries newomega_rhs(GridExp cap) {
  QSeries r = QSeries::constant(minus_two_i_over_sqrt3(), cap);
  r -= eta("eta(1)^2*eta(4)^2/eta(2)^2/eta(6)", cap) * rat(2, 3);
  QSeries sum = lerch_expand(lerch_spec(true, 8, 24, 24, 12, 48, 24), cap);
  r += divide(sum, euler_E(6, cap)) * (Cyc24::zeta(4) * rat(4, 3));
  return r;
}

QSeries newomega2_rhs(long sign, GridExp cap) {
  QSeries r = QSeries::constant(minus_two_i_over_sqrt3(), cap);
  r += eta("eta(2)^4/eta(6)/eta(1)^2", cap) * rat(2, 3);
  QSeries sum = lerch_expand(lerch_spec(true, 16, 24, 24, 8, 48, 24), cap);
  r += divide(sum, euler_E(6, cap)) * (Cyc24::zeta(-4) * rat(4 * sign, 3));
  return r;
}

// Raw q^{-1/8} f(q^3) and the right side with the given sign and denominator step.
SeriesPair newf_sides(long sign, GridExp D, GridExp cap) {
  QSeries lhs = shift(lift(f_eulerian, Q(3), cap + 3), -3);
  QSeries r = eta("eta(1)^4/eta(3)/eta(2)^2", cap) * rat(1, 3);
  QSeries sum = lerch_expand(lerch_spec(true, 8, 12, 12, 12, D, 0), cap + 3);
  r += shift(divide(sum, euler_E(3, cap + 3)), -3) * rat(4 * sign, 3);
  return {std::move(lhs), std::move(r)};
}

QSeries f_shifted(GridExp cap) { return shift(f_eulerian(cap + 1), -1); }

SeriesPair h2_sides(const BigRational& ua, const BigRational& va, GridExp cap) {
  QSeries lhs = shift(lift(omega_neg, Q(1, 2), cap), 8) * rat(2);
  QSeries r = eta("eta(6)^2*eta(3/2)^2/eta(3)^2/eta(1)", cap) * rat(2);
  r -= shift(mu(ua, Q(1, 2), va, Q(0), Q(3), cap + 1), -1) * rat(4);
  return {std::move(lhs), std::move(r)};
}

QSeries rln_omega_lhs(GridExp cap) {
  QSeries sum = QSeries::zero(cap);
  for (long n = 0; 144 * n * n < cap; ++n) {
    QSeries t = QSeries::monomial(Cyc24(1), 144 * n * n, cap);
    for (long k = 0; k <= n; ++k) t.div_one_minus({0, kGrid * (1 + 6 * k)});
    for (long k = 0; k < n; ++k) t.div_one_minus({0, kGrid * (5 + 6 * k)});
    sum += t;
  }
  return sum;
}

QSeries rln_f_lhs(GridExp cap) {
  QSeries sum = QSeries::zero(cap);
  for (long n = 0; kGrid * n * n < cap; ++n) {
    QSeries t = QSeries::monomial(Cyc24(n % 2 ? -1 : 1), kGrid * n * n, cap);
    for (long k = 1; k <= 2 * n; ++k) t.mul_one_minus({0, kGrid * k});
    for (long k = 1; k <= n; ++k) t.div_one_minus({0, kGrid * 6 * k});
    sum += t;
  }
  return sum;
}

QSeries theta_sum(bool alternating, GridExp cap) {
  QuadraticSum s;
  s.alternating = alternating;
  s.A = kGrid;
  return quadratic_sum(s, cap);
}

std::string zname(const Monomial& z) {
  std::ostringstream os;
  os << "z = zeta24^" << z.root << " q^(" << format_rational(make_rational(z.qpow, kGrid)) << ")";
  return os.str();
}

IdentityRecord simple(std::string id, std::string description, long order, Build build) {
  IdentityRecord r;
  r.id = std::move(id);
  r.description = std::move(description);
  r.default_order = order;
  r.readings.push_back({"stated", "", std::move(build)});
  return r;
}

std::vector<IdentityRecord> make_catalog() {
  std::vector<IdentityRecord> c;

  c.push_back(simple("NEWOMEGA",
                     "2q^2 omega(-q^3) = -2i/sqrt3 - (2/3) eta(t)^2 eta(4t)^2/(eta(2t)^2 eta(6t)) + "
                     "(4/3) e^(pi i/3)/E(q^6) sum (-1)^n zeta3^n q^(n^2+n)/(1+q^(2n+1))",
                     300, [](GridExp cap) {
                       return SeriesPair{two_q2_omega_q3(true, cap), newomega_rhs(cap)};
                     }));

  {
    IdentityRecord r;
    r.id = "NEWOMEGA2";
    r.description =
        "2q^2 omega(q^3) = -2i/sqrt3 + (2/3) eta(2t)^4/(eta(6t) eta(t)^2) + "
        "(4/3) e^(-pi i/3)/E(q^6) sum (-1)^n zeta3^(2n) q^(n^2+n)/(1-zeta3 q^(2n+1))";
    r.default_order = 300;
    r.readings.push_back({"stated", "coefficient +4/3 on the Lerch term", [](GridExp cap) {
                            return SeriesPair{two_q2_omega_q3(false, cap), newomega2_rhs(1, cap)};
                          }});
    r.readings.push_back({"sign-corrected", "coefficient -4/3 on the Lerch term", [](GridExp cap) {
                            return SeriesPair{two_q2_omega_q3(false, cap), newomega2_rhs(-1, cap)};
                          }});
    c.push_back(std::move(r));
  }

  c.push_back(simple("NEWOMEGA2_TWIST",
                     "2q^2 omega(q^3) equals the q -> -q twist of the right side of NEWOMEGA", 300,
                     [](GridExp cap) {
                       return SeriesPair{two_q2_omega_q3(false, cap),
                                         twist_minus_q(newomega_rhs(cap))};
                     }));

  c.push_back(simple("NEWOMEGA_ASSEMBLY",
                     "2q^2 omega(-q^3) rebuilt from the constant, the eta 3-dissection and the "
                     "closed forms of the Y_jk",
                     300, [](GridExp cap) { return newomega_assembly_sides(cap); }));

  c.push_back(simple("NEWOMEGA_RECOMBINATION",
                     "Y_0 + zeta3 Y_1 + zeta3^2 Y_2 = E(q^6)/2 [(1+z^2) e0(q^3) + (1-z^2) - "
                     "2q(1+z^2) e1(q^3) + q^2 (1+z^2) e2(q^3) - 3 q^2 z omega(-q^3)]",
                     300, [](GridExp cap) { return recombination_sides(cap); }));

  {
    IdentityRecord r;
    r.id = "NEWF";
    r.description =
        "q^(-1/8) f(q^3) = (1/3) eta(t)^4/(eta(3t) eta(2t)^2) - (4/3) q^(-1/8)/E(q^3) "
        "sum (-1)^n zeta3^n q^((n^2+n)/2)/(1+q^(2n)), compared after multiplying by q^(1/8)";
    r.default_order = 300;
    r.normalization = Q(1, 8);
    r.readings.push_back({"stated", "-4/3 and 1+q^(2n)",
                          [](GridExp cap) { return newf_sides(-1, 48, cap); }});
    r.readings.push_back({"denominator 1+q^n", "-4/3 and 1+q^n",
                          [](GridExp cap) { return newf_sides(-1, 24, cap); }});
    r.readings.push_back({"sign +4/3", "+4/3 and 1+q^(2n)",
                          [](GridExp cap) { return newf_sides(1, 48, cap); }});
    r.readings.push_back({"corrected", "+4/3 and 1+q^n",
                          [](GridExp cap) { return newf_sides(1, 24, cap); }});
    c.push_back(std::move(r));
  }

  c.push_back(simple("NEWF_MU",
                     "q^(-1/24) f(q) = eta(t/3)^4/(3 eta(t) eta(2t/3)^2) + (4i/sqrt3) mu(-1/2,-1/3;t/3)",
                     200, [](GridExp cap) {
                       QSeries r = eta("eta(1/3)^4/eta(1)/eta(2/3)^2", cap) * rat(1, 3);
                       r += mu(Q(0), Q(-1, 2), Q(0), Q(-1, 3), Q(1, 3), cap) *
                            (cyc_i() * cyc_sqrt3().inverse() * rat(4));
                       return SeriesPair{f_shifted(cap), std::move(r)};
                     }));

  c.push_back(simple("OMEGAWATSON",
                     "omega(q) = 1/E(q^2) sum (-1)^n q^(3n(n+1))/(1-q^(2n+1))", 500,
                     [](GridExp cap) { return SeriesPair{omega_eulerian(cap), omega_watson(cap)}; }));

  {
    IdentityRecord r;
    r.id = "FIDWAT";
    r.description = "f(q) = c/E(q) sum (-1)^n q^(n(3n+1)/2)/(1+q^n)";
    r.default_order = 500;
    r.readings.push_back({"stated", "c = 1", [](GridExp cap) {
                            return SeriesPair{f_eulerian(cap), f_watson(cap) * rat(1, 2)};
                          }});
    r.readings.push_back({"factor 2", "c = 2", [](GridExp cap) {
                            return SeriesPair{f_eulerian(cap), f_watson(cap)};
                          }});
    c.push_back(std::move(r));
  }

  c.push_back(simple("OMEGA_MINUS_Q",
                     "omega(-q) by sign twist equals its own Lerch sum with 1+q^(2n+1)", 300,
                     [](GridExp cap) { return SeriesPair{omega_neg(cap), omega_minus_q(cap)}; }));

  c.push_back(simple("OMEGA_HALF_WATSON",
                     "omega(-q^(1/2)) = 1/E(q) sum (-1)^n q^(3n(n+1)/2)/(1+q^(n+1/2))", 200,
                     [](GridExp cap) {
                       QSeries sum = lerch_expand(lerch_spec(true, 0, 36, 36, 12, 24, 12), cap);
                       return SeriesPair{lift(omega_neg, Q(1, 2), cap),
                                         divide(sum, euler_E(1, cap))};
                     }));

  c.push_back(simple("OMEGA_HALF_SPLIT",
                     "omega(-q^(1/2)) = E(q^6)^2 E(q^(3/2))^2/(E(q^3)^2 E(q)) - 2q^(-1)/E(q) "
                     "sum (-1)^n q^(3n(n+1)/2-n)/(1+q^(3n-3/2))",
                     200, [](GridExp cap) {
                       QSeries r = eprod("eta(6)^2*eta(3/2)^2/eta(3)^2/eta(1)", cap);
                       QSeries sum = lerch_expand(lerch_spec(true, 0, 36, 12, 12, 72, -36), cap + 24);
                       r -= shift(divide(sum, euler_E(1, cap + 24)), -24) * rat(2);
                       return SeriesPair{lift(omega_neg, Q(1, 2), cap), std::move(r)};
                     }));

  {
    IdentityRecord r;
    r.id = "H2_MU_REP";
    r.description =
        "2q^(1/3) omega(-q^(1/2)) = 2 eta(6t)^2 eta(3t/2)^2/(eta(3t)^2 eta(t)) - 4 q^(-1/24) mu(u,v;3t)";
    r.default_order = 200;
    r.readings.push_back({"stated", "u = 3t/2+1/2, v = t",
                          [](GridExp cap) { return h2_sides(Q(3, 2), Q(1), cap); }});
    r.readings.push_back({"derived", "u = -3t/2+1/2, v = -t",
                          [](GridExp cap) { return h2_sides(Q(-3, 2), Q(-1), cap); }});
    c.push_back(std::move(r));
  }

  c.push_back(simple("F_MU_REP",
                     "q^(-1/24) f(q) = eta(3t)^4/(eta(t) eta(6t)^2) + 4 q^(-1/6) mu(2t+1/2,t;3t)",
                     200, [](GridExp cap) {
                       QSeries r = eta("eta(3)^4/eta(1)/eta(6)^2", cap);
                       r += shift(mu(Q(2), Q(1, 2), Q(1), Q(0), Q(3), cap + 4), -4) * rat(4);
                       return SeriesPair{f_shifted(cap), std::move(r)};
                     }));

  c.push_back(simple("H1_MU_REP",
                     "2q^(1/3) omega(q^(1/2)) = 2 eta(3t)^4/(eta(t) eta(3t/2)^2) - 4i q^(-1/24) "
                     "mu(3t/2,t;3t)",
                     200, [](GridExp cap) {
                       QSeries lhs = shift(lift(omega_eulerian, Q(1, 2), cap), 8) * rat(2);
                       QSeries r = eta("eta(3)^4/eta(1)/eta(3/2)^2", cap) * rat(2);
                       r -= shift(mu(Q(3, 2), Q(0), Q(1), Q(0), Q(3), cap + 1), -1) * (cyc_i() * rat(4));
                       return SeriesPair{std::move(lhs), std::move(r)};
                     }));

  c.push_back(simple("NEWOMID",
                     "2q^(1/3) omega(q^(1/2)) = 2 eta(t/3)^4/(3 eta(t) eta(t/6)^2) - (4/sqrt3) "
                     "q^(-1/24) e^(pi i/3) mu((t-4)/6,-1/3;t/3) - 2i/sqrt3",
                     200, [](GridExp cap) {
                       QSeries lhs = shift(lift(omega_eulerian, Q(1, 2), cap), 8) * rat(2);
                       QSeries r = eta("eta(1/3)^4/eta(1)/eta(1/6)^2", cap) * rat(2, 3);
                       r -= shift(mu(Q(1, 6), Q(-2, 3), Q(0), Q(-1, 3), Q(1, 3), cap + 1), -1) *
                            (cyc_sqrt3().inverse() * Cyc24::zeta(4) * rat(4));
                       r += QSeries::constant(minus_two_i_over_sqrt3(), cap);
                       return SeriesPair{std::move(lhs), std::move(r)};
                     }));

  c.push_back(simple("NEWOMID_RESCALED",
                     "t -> 6t: 2q^2 omega(q^3) = (2/3) eta(2t)^4/(eta(6t) eta(t)^2) - (4/sqrt3) "
                     "q^(-1/4) e^(pi i/3) mu(t-2/3,-1/3;2t) - 2i/sqrt3",
                     300, [](GridExp cap) {
                       QSeries r = eta("eta(2)^4/eta(6)/eta(1)^2", cap) * rat(2, 3);
                       r -= shift(mu(Q(1), Q(-2, 3), Q(0), Q(-1, 3), Q(2), cap + 6), -6) *
                            (cyc_sqrt3().inverse() * Cyc24::zeta(4) * rat(4));
                       r += QSeries::constant(minus_two_i_over_sqrt3(), cap);
                       return SeriesPair{two_q2_omega_q3(false, cap), std::move(r)};
                     }));

  {
    IdentityRecord r;
    r.id = "RLN_OMEGA";
    r.description =
        "sum q^(6n^2)/((q;q^6)_(n+1) (q^5;q^6)_n) = (1/2)(1 + q^2 w(q^3) + psi(q)^2/E(q^6)), "
        "the third-order subscript on w read as omega";
    r.default_order = 200;
    r.flagged = true;
    auto build = [](bool minus) {
      return [minus](GridExp cap) {
        QSeries r = QSeries::constant(Cyc24(1), cap);
        r += shift(lift(minus ? omega_neg : omega_eulerian, Q(3), cap), 48);
        QSeries p = psi(cap);
        r += divide(p * p, euler_E(6, cap));
        return SeriesPair{rln_omega_lhs(cap), r * rat(1, 2)};
      };
    };
    r.readings.push_back({"omega(q^3)", "w(q^3) = omega(q^3)", build(false)});
    r.readings.push_back({"omega(-q^3)", "w(q^3) = omega(-q^3)", build(true)});
    c.push_back(std::move(r));
  }

  {
    IdentityRecord r;
    r.id = "RLN_F";
    r.description =
        "sum (-1)^n (q;q)_(2n) q^(n^2)/(q^6;q^6)_n = (3/4) f(q^3) + (1/4) phi^2(-q)/E(q^3), "
        "the third-order subscript on f read as f";
    r.default_order = 200;
    r.flagged = true;
    auto build = [](bool alternating) {
      return [alternating](GridExp cap) {
        QSeries r = lift(f_eulerian, Q(3), cap) * rat(3, 4);
        QSeries t = theta_sum(alternating, cap);
        r += divide(t * t, euler_E(3, cap)) * rat(1, 4);
        return SeriesPair{rln_f_lhs(cap), std::move(r)};
      };
    };
    r.readings.push_back({"phi(q) = sum (-1)^n q^(n^2) at -q",
                          "phi^2(-q) = (sum q^(n^2))^2", build(false)});
    r.readings.push_back({"varphi(q) = sum q^(n^2) at -q",
                          "phi^2(-q) = (sum (-1)^n q^(n^2))^2", build(true)});
    c.push_back(std::move(r));
  }

  c.push_back(simple("VARTHETA_THIRD", "vartheta(1/3;2t) = -sqrt3 q^(1/4) E(q^6)", 200,
                     [](GridExp cap) {
                       return SeriesPair{vartheta_onethird(cap), vartheta_onethird_closed(cap)};
                     }));

  c.push_back(simple("DELTA_3DISS", "Delta(q) = P0(q^3) + q P1(q^3)", 300, [](GridExp cap) {
    auto parts = delta_P0_P1(cap / 3 + kGrid);
    QSeries r = compose_power(parts.P0, Q(3)) + shift(compose_power(parts.P1, Q(3)), kGrid);
    return SeriesPair{psi(cap), truncate(std::move(r), cap)};
  }));

  c.push_back(simple("DELTA_NEG", "Delta(-q) = E(q) E(q^4)/E(q^2)", 300, [](GridExp cap) {
    return SeriesPair{twist_minus_q(psi(cap)), eprod("eta(1)*eta(4)/eta(2)", cap)};
  }));

  c.push_back(simple("ETA3DISS",
                     "E(q)^2 E(q^4)^2/(E(q^2)^2 E(q^6)) = e0(q^3) - 2q e1(q^3) + q^2 e2(q^3)", 300,
                     [](GridExp cap) { return eta3diss_sides(cap); }));
  for (int k = 0; k < 3; ++k) {
    const char* what[] = {"e0", "-2 e1", "e2"};
    c.push_back(simple("ETA3DISS_C" + std::to_string(k),
                       std::string("component ") + std::to_string(k) +
                           " of the eta 3-dissection equals " + what[k],
                       300, [k](GridExp cap) {
                         return eta3diss_components(cap)[static_cast<std::size_t>(k)];
                       }));
  }

  const char* mudiss_text[] = {
      "Y_0 - Y_2 = E(q^6)",
      "2 Y_00 - E(q^2) = e0 E(q^2)",
      "Y_01 = -e1 E(q^2)",
      "Y_10 + i Y_11 = 0, so Y_10 = Y_11 = 0",
      "Y_12 = -omega(-q) E(q^2)",
      "2 Y_02 = E(q^2) (omega(-q) + e2)",
  };
  const char* roman[] = {"I", "II", "III", "IV", "V", "VI"};
  for (int part = 1; part <= 6; ++part)
    c.push_back(simple(std::string("MUDISS_") + roman[part - 1], mudiss_text[part - 1], 300,
                       [part](GridExp cap) { return mudiss_sides(part, cap); }));

  const Monomial jtp[] = {{0, 24}, {12, 0}, {8, 24}, {0, 12}, {12, 12},
                          {6, 0},  {4, 8},  {16, -8}, {3, 0}, {12, 36}};
  for (int k = 0; k < 10; ++k) {
    std::ostringstream id;
    id << "JTP_" << std::setw(2) << std::setfill('0') << k + 1;
    Monomial z = jtp[k];
    c.push_back(simple(id.str(),
                       "(q^2;q^2)(zq;q^2)(q/z;q^2) = sum (-1)^n z^n q^(n^2), " + zname(z), 200,
                       [z](GridExp cap) { return jtp_product(z, cap); }));
  }

  struct Named {
    const char* id;
    Monomial z;
  };
  const Named crank[] = {{"CRANK_MINUS_ONE", {12, 0}},   {"CRANK_ZETA3", {8, 0}},
                         {"CRANK_I", {6, 0}},            {"CRANK_Q_HALF", {0, 12}},
                         {"CRANK_MINUS_Q", {12, 24}},    {"CRANK_ZETA3_Q_THIRD", {8, 8}}};
  for (const auto& n : crank) {
    Monomial z = n.z;
    c.push_back(simple(n.id, "E(q)/((zq;q)(q/z;q)) = (1-z)/E(q) sum (-1)^n q^(n(n+1)/2)/(1-zq^n), " + zname(z),
                       200, [z](GridExp cap) { return crank_pair(z, cap); }));
  }
  const Named thetaid[] = {{"THETAID_ONE", {0, 0}},         {"THETAID_MINUS_Q", {12, 24}},
                           {"THETAID_Q", {0, 24}},           {"THETAID_ZETA3_Q_THIRD", {8, 8}},
                           {"THETAID_MINUS_Q_HALF", {12, 12}}, {"THETAID_I", {6, 0}}};
  for (const auto& n : thetaid) {
    Monomial z = n.z;
    c.push_back(simple(n.id,
                       "sum (-1)^n q^(n^2) z^n (1-zq^(2n))/(1+zq^(2n)) = "
                       "Theta(z,q^2) Theta(-zq,q^2) Theta3(q)/Theta(-z,q^2), " + zname(z),
                       200, [z](GridExp cap) { return thetaid_pair(z, cap); }));
  }
  return c;
}

long elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - t0)
                               .count());
}

}  // namespace

const std::vector<IdentityRecord>& registry_catalog() {
  static const std::vector<IdentityRecord> catalog = make_catalog();
  return catalog;
}

const IdentityRecord& find_record(const std::string& id) {
  for (const auto& r : registry_catalog())
    if (r.id == id) return r;
  std::vector<std::string> ids;
  for (const auto& r : registry_catalog()) ids.push_back(r.id);
  std::sort(ids.begin(), ids.end());
  std::string all;
  for (const auto& i : ids) all += (all.empty() ? "" : ", ") + i;
  throw UnknownIdentity("unknown identity '" + id + "'; valid ids: " + all);
}

SeriesPair build_sides(const IdentityRecord& rec, const Reading& reading, long order) {
  const GridExp cap = kGrid * order;
  const GridExp norm = grid_int(rec.normalization * kGrid, "normalization");
  SeriesPair s = reading.build(cap - norm);
  return {truncate(shift(std::move(s.lhs), norm), cap), truncate(shift(std::move(s.rhs), norm), cap)};
}

VerifyReport verify_record(const IdentityRecord& rec, long order) {
  auto t0 = std::chrono::steady_clock::now();
  VerifyReport rep;
  rep.id = rec.id;
  rep.order = order;
  const GridExp cap = kGrid * order;
  try {
    for (const auto& reading : rec.readings) {
      SeriesPair s = build_sides(rec, reading, order);
      Comparison cmp = compare_to(s.lhs, s.rhs, cap);
      rep.tried.push_back({reading.name, cmp.equal, cmp.first_mismatch});
      if (cmp.equal) break;
    }
  } catch (const MockqError& e) {
    rep.error = e.what();
  }
  auto hit = std::find_if(rep.tried.begin(), rep.tried.end(), [](const auto& t) { return t.pass; });
  if (hit != rep.tried.end()) {
    rep.pass = true;
    rep.reading = hit->name;
  } else if (!rep.tried.empty()) {
    rep.reading = rep.tried.front().name;
    rep.first_mismatch = rep.tried.front().first_mismatch;
  }
  rep.ms = elapsed_ms(t0);
  return rep;
}

VerifyReport verify(const std::string& id, std::optional<long> order) {
  const IdentityRecord& rec = find_record(id);
  return verify_record(rec, order.value_or(rec.default_order));
}

std::vector<VerifyReport> verify_all(std::optional<long> order_override, unsigned jobs) {
  const auto& cat = registry_catalog();
  std::vector<VerifyReport> out(cat.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < cat.size();)
      out[i] = verify_record(cat[i], order_override.value_or(cat[i].default_order));
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(cat.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  std::sort(out.begin(), out.end(),
            [](const VerifyReport& a, const VerifyReport& b) { return a.id < b.id; });
  return out;
}

namespace {

nlohmann::json mismatch_json(const std::optional<Mismatch>& m) {
  if (!m) return nullptr;
  return {{"exponent_num_24", m->exponent}, {"lhs", m->lhs.str()}, {"rhs", m->rhs.str()}};
}

nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json j = {{"id", r.id},
                      {"status", r.pass ? "pass" : "fail"},
                      {"order", r.order},
                      {"first_mismatch", mismatch_json(r.first_mismatch)},
                      {"ms", r.ms},
                      {"reading", r.reading}};
  nlohmann::json tried = nlohmann::json::array();
  for (const auto& t : r.tried)
    tried.push_back({{"name", t.name},
                     {"status", t.pass ? "pass" : "fail"},
                     {"first_mismatch", mismatch_json(t.first_mismatch)}});
  j["readings"] = tried;
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

}  // namespace

std::string report_json(const VerifyReport& r) { return to_json(r).dump(2); }

std::string reports_json(const std::vector<VerifyReport>& rs) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& r : rs) a.push_back(to_json(r));
  return a.dump(2);
}

}  // namespace mockq
