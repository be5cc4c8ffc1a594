#include <doctest.h>

#include <random>

#include "mockq/errors.hpp"
#include "mockq/lerch.hpp"
#include "oracles/lerch_naive.hpp"

using mockq::BigRational;
using mockq::Cyc24;
using mockq::EllipticArg;
using mockq::GridExp;
using mockq::LerchSpec;
using mockq::Monomial;
using mockq::QSeries;

namespace {

bool equal_to(const QSeries& a, const QSeries& b, GridExp order) {
  return mockq::compare_to(a, b, order).equal;
}

LerchSpec random_spec(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> root(0, 23), small(-30, 30), coin(0, 1), res(0, 3);
  const GridExp As[] = {6, 12, 24, 36, 72};
  const GridExp Ds[] = {-48, -24, 12, 24, 48};
  LerchSpec s;
  s.alternating = coin(rng);
  s.rho_root = root(rng);
  s.rho_qpow = small(rng) / 3;
  s.A = As[root(rng) % 5];
  s.B = small(rng);
  s.C = small(rng);
  s.c_root = root(rng);
  s.D = Ds[root(rng) % 5];
  s.E = small(rng);
  if (res(rng) == 0) s.residue = std::make_pair(static_cast<long>(res(rng)), 3L);
  return s;
}

GridExp naive_low(const LerchSpec& s, long nmax) {
  GridExp low = 0;
  for (long n = -nmax; n <= nmax; ++n) {
    GridExp b = s.A * n * n + (s.B + s.rho_qpow) * n + s.C;
    GridExp d = s.D * n + s.E;
    low = std::min({low, b, d < 0 ? b - d : b});
  }
  return low;
}

}  // namespace

TEST_CASE("lerch expansion against the double loop") {
  std::mt19937_64 rng(20240601);
  const GridExp cap = 24 * 30;
  int poles = 0;
  for (int trial = 0; trial < 150; ++trial) {
    LerchSpec s = random_spec(rng);
    INFO(s.str());
    const long nmax = 40;
    bool pole = false;
    for (long n = -nmax; n <= nmax; ++n)
      if (s.D * n + s.E == 0 && s.c_root % 24 == 0 &&
          s.A * n * n + (s.B + s.rho_qpow) * n + s.C < cap)
        pole = true;
    if (pole) {
      ++poles;
      CHECK_THROWS_AS(mockq::lerch_expand(s, cap), mockq::PoleError);
      continue;
    }
    QSeries fast = mockq::lerch_expand(s, cap);
    QSeries slow = oracle::lerch_naive(s, nmax, naive_low(s, nmax), cap);
    CHECK(equal_to(fast, slow, cap));
  }
  CHECK(poles < 150);
}

TEST_CASE("lerch spec text") {
  auto s = LerchSpec::parse("sum (-1)^n zeta3^n q^(n^2+n) / (1 + q^(2n+1))");
  CHECK(s.alternating);
  CHECK(s.rho_root == 8);
  CHECK(s.A == 24);
  CHECK(s.B == 24);
  CHECK(s.c_root == 12);
  CHECK(s.D == 48);
  CHECK(s.E == 24);
  CHECK(LerchSpec::parse(s.str()).str() == s.str());

  auto half = LerchSpec::parse("sum_{n=1 mod 3} (-1)^n q^(3n^2/2+n/2) / (1 - zeta8^3 q^(n-1/3))");
  REQUIRE(half.residue);
  CHECK(half.residue->first == 1);
  CHECK(half.residue->second == 3);
  CHECK(half.A == 36);
  CHECK(half.B == 12);
  CHECK(half.c_root == 9);
  CHECK(half.E == -8);
  auto paren = LerchSpec::parse("sum zeta24^(5n) q^((n^2+n)/2) / (1 - q^(n+1/2))");
  CHECK(!paren.alternating);
  CHECK(paren.rho_root == 5);
  CHECK(paren.A == 12);
  CHECK(paren.B == 12);
  CHECK_THROWS_AS(LerchSpec::parse("sum q^(n^2) / (1 - zeta24^(5n) q^(n))"), mockq::ParseError);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    LerchSpec r = random_spec(rng);
    LerchSpec back = LerchSpec::parse(r.str());
    INFO(r.str());
    CHECK(back.str() == r.str());
    QSeries expected;
    try {
      expected = mockq::lerch_expand(r, 24 * 20);
    } catch (const mockq::PoleError&) {
      CHECK_THROWS_AS(mockq::lerch_expand(back, 24 * 20), mockq::PoleError);
      continue;
    }
    CHECK(equal_to(mockq::lerch_expand(back, 24 * 20), expected, 24 * 20));
  }

  CHECK_THROWS_AS(LerchSpec::parse("sum q^(n^2) / (1 - q^(n^2))"), mockq::ParseError);
  CHECK_THROWS_AS(LerchSpec::parse("sum zeta5^n q^(n^2) / (1 - q^(n))"), mockq::ParseError);
  CHECK_THROWS_AS(LerchSpec::parse("sum q^(n^2/48) / (1 - q^(n))"), mockq::GridViolation);
  CHECK_THROWS_AS(LerchSpec::parse("sum q^(n^2) / (1 - q^(n)) extra"), mockq::ParseError);
}

TEST_CASE("lerch canonicalisation of negative denominators") {
  // 1/(1 - c q^d) = -c^{-1} q^{-d}/(1 - c^{-1} q^{-d}) termwise
  LerchSpec s;
  s.A = 24;
  s.B = 12;
  s.c_root = 5;
  s.D = -24;
  s.E = 12;
  const GridExp cap = 24 * 40;
  QSeries direct = mockq::lerch_expand(s, cap);
  QSeries alt(direct.low(), cap);
  for (long n = -10; n <= 10; ++n) {
    GridExp b = 24 * n * n + 12 * n;
    if (b >= cap) continue;
    QSeries term = QSeries::monomial(Cyc24(n % 2 ? -1 : 1), b, cap);
    QSeries den = QSeries::constant(Cyc24(1), cap + 400);
    den -= QSeries::monomial(Cyc24::zeta(5), -24 * n + 12, cap + 400);
    alt += mockq::divide(term, den);
  }
  CHECK(equal_to(direct, alt, cap));
}

TEST_CASE("lerch poles") {
  LerchSpec s;
  s.c_root = 0;
  s.E = 0;
  CHECK_THROWS_AS(mockq::lerch_expand(s, 24 * 10), mockq::PoleError);
  s.c_root = 8;
  QSeries v = mockq::lerch_expand(s, 24 * 10);
  CHECK(!v.is_zero());
  // z = 1 in the crank generating function
  CHECK_THROWS_AS(mockq::crank_pair({0, 0}, 24 * 10), mockq::PoleError);
}

TEST_CASE("crank generating function battery") {
  const GridExp cap = 24 * 120;
  const Monomial zs[] = {{0, 36}, {12, 0}, {12, 24}, {12, 72}, {8, 12}, {12, 8}, {16, -8}, {3, 0}};
  for (const auto& z : zs) {
    INFO("z = zeta^" << z.root << " q^" << z.qpow << "/24");
    auto pr = mockq::crank_pair(z, cap);
    CHECK(equal_to(pr.lhs, pr.rhs, cap));
  }
}

TEST_CASE("theta quotient identity battery") {
  const GridExp cap = 24 * 120;
  const Monomial zs[] = {{0, 0}, {12, 24}, {0, 24}, {8, 8}, {12, 12}, {6, 0}};
  for (const auto& z : zs) {
    INFO("z = zeta^" << z.root << " q^" << z.qpow << "/24");
    auto pr = mockq::thetaid_pair(z, cap);
    CHECK(equal_to(pr.lhs, pr.rhs, cap));
  }
}

TEST_CASE("formal mu symmetries") {
  const GridExp cap = 24 * 60;
  const BigRational one(1);
  EllipticArg u{BigRational(1, 6), BigRational(1, 4)};
  EllipticArg v{BigRational(1, 3), BigRational(-1, 6)};
  QSeries uv = mockq::mu_formal(u, v, one, cap);
  QSeries vu = mockq::mu_formal(v, u, one, cap);
  CHECK(equal_to(uv, vu, cap));

  EllipticArg nu{-u.tau_coeff, -u.constant}, nv{-v.tau_coeff, -v.constant};
  CHECK(equal_to(mockq::mu_formal(nu, nv, one, cap), uv, cap));

  EllipticArg u1{u.tau_coeff, u.constant + 1};
  CHECK(equal_to(mockq::mu_formal(u1, v, one, cap), -uv, cap));

  // tau multiplier rescales like q -> q^m once the arguments are scaled too
  EllipticArg u3{3 * u.tau_coeff, u.constant}, v3{3 * v.tau_coeff, v.constant};
  QSeries scaled = mockq::mu_formal(u3, v3, BigRational(3), 3 * cap);
  CHECK(equal_to(scaled, mockq::compose_power(uv, BigRational(3)), 3 * cap));

  CHECK_THROWS_AS(mockq::mu_formal(u, {BigRational(0), BigRational(0)}, one, cap),
                  mockq::ThetaVanishing);
  CHECK_THROWS_AS(mockq::mu_formal(u, {BigRational(1, 48), BigRational(0)}, one, cap),
                  mockq::GridViolation);
}
