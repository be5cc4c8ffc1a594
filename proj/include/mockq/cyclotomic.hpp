#pragma once

#include <array>
#include <complex>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mockq {

using BigRational = mpq_class;

BigRational make_rational(long num, long den = 1);
BigRational parse_rational(std::string_view text);
std::string format_rational(const BigRational& r);

// Element of Q(zeta_24) on the power basis 1, z, ..., z^7 modulo
// Phi_24(x) = x^8 - x^4 + 1.
class Cyc24 {
 public:
  static constexpr int kDegree = 8;
  static constexpr int kOrder = 24;

  Cyc24() = default;
  Cyc24(long v) { c_[0] = v; }  // NOLINT(google-explicit-constructor)
  Cyc24(const BigRational& r) { c_[0] = r; }  // NOLINT

  static Cyc24 zeta(long k);
  // Power-basis coordinates of zeta^k, each in {-1, 0, 1}.
  static const std::array<int, kDegree>& zeta_row(long k);
  static Cyc24 from_coeffs(const std::array<BigRational, kDegree>& c);

  const BigRational& operator[](int i) const { return c_[i]; }
  BigRational& operator[](int i) { return c_[i]; }

  bool is_zero() const;
  bool is_rational() const;
  bool is_one() const;

  Cyc24 operator-() const;
  Cyc24& operator+=(const Cyc24& o);
  Cyc24& operator-=(const Cyc24& o);
  Cyc24& operator*=(const Cyc24& o);
  Cyc24& operator*=(const BigRational& r);
  Cyc24& operator/=(const Cyc24& o);

  // this += a * b, without temporaries for the common rational cases.
  void add_product(const Cyc24& a, const Cyc24& b);
  void sub_product(const Cyc24& a, const Cyc24& b);
  // this += sign * r * zeta^k
  void add_scaled_root(long k, const BigRational& r);
  void add_root(long k, long count);

  Cyc24 times_root(long k) const;
  Cyc24 inverse() const;
  // Automorphism zeta -> zeta^k, gcd(k, 24) = 1.
  Cyc24 galois(long k) const;

  std::complex<double> to_complex() const;
  // Real and imaginary parts at the given binary precision.
  std::pair<mpf_class, mpf_class> to_complex(unsigned long bits) const;

  std::string str() const;
  static Cyc24 parse(std::string_view text);

  friend bool operator==(const Cyc24& a, const Cyc24& b);

 private:
  std::array<BigRational, kDegree> c_;
};

Cyc24 operator+(Cyc24 a, const Cyc24& b);
Cyc24 operator-(Cyc24 a, const Cyc24& b);
Cyc24 operator*(const Cyc24& a, const Cyc24& b);
Cyc24 operator/(Cyc24 a, const Cyc24& b);

// Frequently used constants.
Cyc24 cyc_i();
Cyc24 cyc_sqrt3();
Cyc24 cyc_zeta3();

}  // namespace mockq
