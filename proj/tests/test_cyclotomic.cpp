#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "mockq/cyclotomic.hpp"
#include "mockq/errors.hpp"
#include "oracles/random.hpp"

using mockq::BigRational;
using mockq::Cyc24;

namespace {

std::complex<double> zeta_c(int k) { return std::polar(1.0, 2 * M_PI * k / 24.0); }

}  // namespace

TEST_CASE("reduction rules") {
  CHECK(Cyc24::zeta(8) == Cyc24::zeta(4) - Cyc24(1));
  CHECK(Cyc24::zeta(12) == Cyc24(-1));
  CHECK(Cyc24::zeta(24) == Cyc24(1));
  CHECK(Cyc24::zeta(-1) == Cyc24::zeta(23));
  Cyc24 x = Cyc24::zeta(1);
  Cyc24 p(1);
  for (int k = 0; k < 24; ++k) {
    CHECK(p == Cyc24::zeta(k));
    p *= x;
  }
  CHECK(p == Cyc24(1));
}

TEST_CASE("small closed forms") {
  Cyc24 isqrt3 = Cyc24(2) * Cyc24::zeta(4) - Cyc24(1);
  CHECK(isqrt3 * isqrt3 == Cyc24(-3));
  CHECK(mockq::cyc_sqrt3() * mockq::cyc_sqrt3() == Cyc24(3));
  CHECK(isqrt3 == mockq::cyc_i() * mockq::cyc_sqrt3());
  Cyc24 z3 = mockq::cyc_zeta3();
  CHECK(Cyc24(1) + z3 + z3 * z3 == Cyc24());
}

TEST_CASE("inverse") {
  CHECK(Cyc24::zeta(6).inverse() == -Cyc24::zeta(6));
  CHECK(Cyc24::zeta(6) * Cyc24::zeta(6).inverse() == Cyc24(1));
  Cyc24 a = Cyc24(1) + Cyc24::zeta(8);
  CHECK(a == Cyc24::zeta(4));
  CHECK(a.inverse() == Cyc24::zeta(20));
  CHECK(Cyc24(2).inverse() == Cyc24(mockq::make_rational(1, 2)));
  CHECK_THROWS_AS(Cyc24().inverse(), mockq::DivisionByZero);
  CHECK_THROWS_AS(Cyc24(1) / Cyc24(), mockq::DivisionByZero);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 1000; ++t) {
    Cyc24 a = oracle::random_cyc(rng), b = oracle::random_cyc(rng), c = oracle::random_cyc(rng);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a * b == b * a);
    if (!a.is_zero()) REQUIRE(a * a.inverse() == Cyc24(1));
    Cyc24 acc = c;
    acc.add_product(a, b);
    REQUIRE(acc == c + a * b);
    acc.sub_product(a, b);
    REQUIRE(acc == c);
  }
}

TEST_CASE("complex embedding is a ring homomorphism") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    Cyc24 a = oracle::random_cyc(rng), b = oracle::random_cyc(rng);
    auto ca = a.to_complex(), cb = b.to_complex();
    CHECK(std::abs((a * b).to_complex() - ca * cb) < 1e-12 * (1 + std::abs(ca * cb)));
    CHECK(std::abs((a + b).to_complex() - (ca + cb)) < 1e-12 * (1 + std::abs(ca + cb)));
  }
  CHECK(std::abs(Cyc24(1).to_complex() - 1.0) < 1e-15);
  CHECK(std::abs(Cyc24::zeta(6).to_complex() - std::complex<double>(0, 1)) < 1e-15);
  Cyc24 c = (Cyc24(2) - Cyc24(4) * Cyc24::zeta(4)) * Cyc24(mockq::make_rational(1, 3));
  CHECK(std::abs(c.to_complex() - std::complex<double>(0, -2 / std::sqrt(3.0))) < 1e-12);
  for (int k = 0; k < 24; ++k) CHECK(std::abs(Cyc24::zeta(k).to_complex() - zeta_c(k)) < 1e-14);
}

TEST_CASE("high precision embedding") {
  Cyc24 c = (Cyc24(2) - Cyc24(4) * Cyc24::zeta(4)) * Cyc24(mockq::make_rational(1, 3));
  auto [re, im] = c.to_complex(256);
  mpf_class expect(3, 256);
  expect = -2 / sqrt(expect);
  mpf_class err = abs(im - expect);
  CHECK(err < mpf_class(1e-70, 256));
  CHECK(abs(re) < mpf_class(1e-70, 256));
  for (int k = 0; k < 24; ++k) {
    auto [r, i] = Cyc24::zeta(k).to_complex(128);
    CHECK(std::abs(r.get_d() - zeta_c(k).real()) < 1e-15);
    CHECK(std::abs(i.get_d() - zeta_c(k).imag()) < 1e-15);
  }
}

TEST_CASE("galois action") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    Cyc24 a = oracle::random_cyc(rng), b = oracle::random_cyc(rng);
    for (long k : {5L, 7L, 11L, 13L, 23L}) CHECK((a * b).galois(k) == a.galois(k) * b.galois(k));
    auto conj = std::conj(a.to_complex());
    CHECK(std::abs(a.galois(-1).to_complex() - conj) < 1e-12 * (1 + std::abs(conj)));
  }
  CHECK_THROWS_AS(Cyc24(1).galois(2), mockq::MockqError);
}

TEST_CASE("text round trip") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    Cyc24 a = oracle::random_cyc(rng);
    CHECK(Cyc24::parse(a.str()) == a);
  }
  CHECK(Cyc24().str() == "0");
  CHECK(Cyc24::parse("1/2 - 3*z^4 + z") ==
        Cyc24(mockq::make_rational(1, 2)) + Cyc24::zeta(1) - Cyc24(3) * Cyc24::zeta(4));
  CHECK(Cyc24::parse("z^8") == Cyc24::zeta(8));
  CHECK(Cyc24::parse("0 + 0*z + 2*z^2 + 0*z^3 + 0*z^4 + 0*z^5 + -1*z^6 + 0*z^7") ==
        mockq::cyc_sqrt3());
  CHECK_THROWS_AS(Cyc24::parse("1 + + z"), mockq::ParseError);
  CHECK_THROWS_AS(Cyc24::parse("abc"), mockq::ParseError);
}
