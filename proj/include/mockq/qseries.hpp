#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mockq/cyclotomic.hpp"

namespace mockq {

// Exponent numerator; the exponent itself is e / kGrid.
using GridExp = std::int64_t;
inline constexpr GridExp kGrid = 24;

// zeta24^root * q^(qpow / 24)
struct Monomial {
  long root = 0;
  GridExp qpow = 0;

  Monomial inverse() const { return {-root, -qpow}; }
  Monomial operator*(const Monomial& o) const { return {root + o.root, qpow + o.qpow}; }
  Cyc24 constant() const { return Cyc24::zeta(root); }
};

// Truncated Laurent series sum_{low <= e < cap} c_e q^(e/24); coefficients at
// e >= cap are unknown.
class QSeries {
 public:
  QSeries() = default;
  QSeries(GridExp low, GridExp cap);

  static QSeries zero(GridExp cap);
  static QSeries constant(const Cyc24& c, GridExp cap);
  static QSeries monomial(const Cyc24& c, GridExp e, GridExp cap);

  GridExp low() const { return low_; }
  GridExp cap() const { return cap_; }
  std::size_t size() const { return c_.size(); }

  // Throws OutOfPrecision for e >= cap; zero below low.
  const Cyc24& coeff(GridExp e) const;
  Cyc24& at(GridExp e);
  const Cyc24& at(GridExp e) const { return c_[e - low_]; }

  bool is_zero() const;
  std::optional<GridExp> valuation() const;
  std::vector<GridExp> support() const;
  bool is_rational() const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const Cyc24& k);

  // In-place multiplication / division by (1 - m), m a monomial.
  QSeries& mul_one_minus(const Monomial& m);
  QSeries& div_one_minus(const Monomial& m);

  QSeries& shift_inplace(GridExp e);
  // Restricts the window to [low, min(cap, new_cap)).
  QSeries& truncate_inplace(GridExp new_cap);

 private:
  void reshape_low(GridExp new_low);

  GridExp low_ = 0;
  GridExp cap_ = 0;
  std::vector<Cyc24> c_;
};

QSeries operator+(QSeries a, const QSeries& b);
QSeries operator-(QSeries a, const QSeries& b);
QSeries operator-(const QSeries& a);
QSeries operator*(const QSeries& a, const QSeries& b);
QSeries operator*(const Cyc24& k, QSeries a);
QSeries operator*(QSeries a, const Cyc24& k);

QSeries inverse(const QSeries& a);
QSeries divide(const QSeries& a, const QSeries& b);
QSeries shift(QSeries a, GridExp e);
QSeries truncate(QSeries a, GridExp cap);
QSeries pow(const QSeries& a, unsigned n);

// q -> q^k for rational k > 0.
QSeries compose_power(const QSeries& a, const BigRational& k);
// S_j with S_j(q^m) q^j = the part of a supported on integer exponents = j mod m.
QSeries dissect(const QSeries& a, long m, long j);
// sum_j q^j S_j(q^m); inverse of dissect on integer-exponent series.
QSeries reassemble(const std::vector<QSeries>& parts);
// q^x -> exp(2 pi i x t) q^x; t = 1/2 is q -> -q on integer exponents.
QSeries twist_tau(const QSeries& a, const BigRational& t);
QSeries twist_minus_q(const QSeries& a);
QSeries galois(const QSeries& a, long k);

struct Mismatch {
  GridExp exponent;
  Cyc24 lhs;
  Cyc24 rhs;
};

struct Comparison {
  bool equal = true;
  GridExp order = 0;
  std::optional<Mismatch> first_mismatch;
};

// Compares coefficients at every exponent below order.
Comparison compare_to(const QSeries& a, const QSeries& b, GridExp order);

std::complex<double> evaluate(const QSeries& a, std::complex<double> tau);

std::string dump(const QSeries& a);
QSeries parse_dump(std::string_view text);

}  // namespace mockq
