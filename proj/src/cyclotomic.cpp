#include "mockq/cyclotomic.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "mockq/errors.hpp"

namespace mockq {

namespace {

using Poly = std::vector<BigRational>;

struct ZetaTable {
  std::array<std::array<int, 8>, 24> v{};
  ZetaTable() {
    std::array<int, 8> cur{};
    cur[0] = 1;
    for (int k = 0; k < 24; ++k) {
      v[k] = cur;
      // multiply by x, then x^8 -> x^4 - 1
      int top = cur[7];
      for (int i = 7; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      cur[4] += top;
      cur[0] -= top;
    }
  }
};

const ZetaTable& zeta_table() {
  static const ZetaTable t;
  return t;
}

inline long mod24(long k) {
  long r = k % 24;
  return r < 0 ? r + 24 : r;
}

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// r = a mod b, q = a div b.
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, BigRational(0));
  const BigRational& lead = b.back();
  while (r.size() >= b.size() && !r.empty()) {
    std::size_t shift = r.size() - b.size();
    BigRational f = r.back() / lead;
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= f * b[i];
    trim(r);
  }
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), BigRational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

void reduce_raw(std::array<BigRational, 15>& raw) {
  for (int k = 14; k >= 8; --k) {
    if (sgn(raw[k]) == 0) continue;
    raw[k - 4] += raw[k];
    raw[k - 8] -= raw[k];
    raw[k] = 0;
  }
}

}  // namespace

BigRational make_rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

BigRational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return BigRational(mpz_class(s, 10));
    mpz_class n(s.substr(0, slash), 10), d(s.substr(slash + 1), 10);
    if (d == 0) throw DivisionByZero("rational with zero denominator");
    BigRational r(n, d);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational: " + s);
  }
}

std::string format_rational(const BigRational& r) { return r.get_str(10); }

Cyc24 Cyc24::zeta(long k) {
  Cyc24 z;
  const auto& row = zeta_table().v[mod24(k)];
  for (int i = 0; i < 8; ++i)
    if (row[i] != 0) z.c_[i] = row[i];
  return z;
}

const std::array<int, 8>& Cyc24::zeta_row(long k) { return zeta_table().v[mod24(k)]; }

Cyc24 Cyc24::from_coeffs(const std::array<BigRational, kDegree>& c) {
  Cyc24 z;
  z.c_ = c;
  return z;
}

bool Cyc24::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Cyc24::is_rational() const {
  for (int i = 1; i < 8; ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

bool Cyc24::is_one() const { return is_rational() && c_[0] == 1; }

Cyc24 Cyc24::operator-() const {
  Cyc24 r;
  for (int i = 0; i < 8; ++i)
    if (sgn(c_[i]) != 0) r.c_[i] = -c_[i];
  return r;
}

Cyc24& Cyc24::operator+=(const Cyc24& o) {
  for (int i = 0; i < 8; ++i)
    if (sgn(o.c_[i]) != 0) c_[i] += o.c_[i];
  return *this;
}

Cyc24& Cyc24::operator-=(const Cyc24& o) {
  for (int i = 0; i < 8; ++i)
    if (sgn(o.c_[i]) != 0) c_[i] -= o.c_[i];
  return *this;
}

Cyc24& Cyc24::operator*=(const BigRational& r) {
  for (auto& x : c_)
    if (sgn(x) != 0) x *= r;
  return *this;
}

Cyc24& Cyc24::operator*=(const Cyc24& o) {
  Cyc24 acc;
  acc.add_product(*this, o);
  *this = std::move(acc);
  return *this;
}

Cyc24& Cyc24::operator/=(const Cyc24& o) {
  if (o.is_rational()) {
    if (sgn(o.c_[0]) == 0) throw DivisionByZero("division by zero in Q(zeta24)");
    BigRational inv = 1 / o.c_[0];
    return *this *= inv;
  }
  return *this *= o.inverse();
}

namespace {

// acc += a * b, or acc -= a * b when neg is set.
template <bool neg>
void mac(std::array<BigRational, 8>& acc, const std::array<BigRational, 8>& a,
         const std::array<BigRational, 8>& b, bool a_rat, bool b_rat) {
  thread_local BigRational tmp;
  auto apply = [&](BigRational& dst) {
    if constexpr (neg) dst -= tmp;
    else dst += tmp;
  };
  if (a_rat || b_rat) {
    const auto& s = a_rat ? a[0] : b[0];
    const auto& v = a_rat ? b : a;
    if (sgn(s) == 0) return;
    for (int j = 0; j < 8; ++j) {
      if (sgn(v[j]) == 0) continue;
      mpq_mul(tmp.get_mpq_t(), s.get_mpq_t(), v[j].get_mpq_t());
      apply(acc[j]);
    }
    return;
  }
  thread_local std::array<BigRational, 15> raw;
  for (auto& x : raw)
    if (sgn(x) != 0) x = 0;
  for (int i = 0; i < 8; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; j < 8; ++j) {
      if (sgn(b[j]) == 0) continue;
      mpq_mul(tmp.get_mpq_t(), a[i].get_mpq_t(), b[j].get_mpq_t());
      raw[i + j] += tmp;
    }
  }
  reduce_raw(raw);
  for (int i = 0; i < 8; ++i) {
    if (sgn(raw[i]) == 0) continue;
    if constexpr (neg) acc[i] -= raw[i];
    else acc[i] += raw[i];
  }
}

}  // namespace

void Cyc24::add_product(const Cyc24& a, const Cyc24& b) {
  mac<false>(c_, a.c_, b.c_, a.is_rational(), b.is_rational());
}

void Cyc24::sub_product(const Cyc24& a, const Cyc24& b) {
  mac<true>(c_, a.c_, b.c_, a.is_rational(), b.is_rational());
}

void Cyc24::add_scaled_root(long k, const BigRational& r) {
  if (sgn(r) == 0) return;
  const auto& row = zeta_table().v[mod24(k)];
  for (int i = 0; i < 8; ++i) {
    if (row[i] > 0) c_[i] += r;
    else if (row[i] < 0) c_[i] -= r;
  }
}

void Cyc24::add_root(long k, long count) {
  if (count == 0) return;
  const auto& row = zeta_table().v[mod24(k)];
  for (int i = 0; i < 8; ++i)
    if (row[i] != 0) c_[i] += row[i] * count;
}

Cyc24 Cyc24::times_root(long k) const {
  k = mod24(k);
  if (k == 0) return *this;
  if (k == 12) return -*this;
  Cyc24 out;
  out.add_product(*this, zeta(k));
  return out;
}

Cyc24 Cyc24::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta24)");
  if (is_rational()) return Cyc24(BigRational(1 / c_[0]));
  Poly r0(9, BigRational(0));
  r0[0] = 1;
  r0[4] = -1;
  r0[8] = 1;
  Poly r1(c_.begin(), c_.end());
  trim(r1);
  Poly s0, s1{BigRational(1)};
  while (r1.size() > 1) {
    Poly q, r;
    poly_divmod(r0, r1, q, r);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  BigRational scale = 1 / r1[0];
  std::array<BigRational, 15> raw;
  for (std::size_t i = 0; i < s1.size(); ++i) raw[i] = s1[i] * scale;
  reduce_raw(raw);
  Cyc24 out;
  for (int i = 0; i < 8; ++i) out.c_[i] = raw[i];
  return out;
}

Cyc24 Cyc24::galois(long k) const {
  if (std::gcd(mod24(k), 24L) != 1) throw MockqError("galois exponent must be a unit mod 24");
  Cyc24 out;
  for (int i = 0; i < 8; ++i)
    if (sgn(c_[i]) != 0) out.add_scaled_root(i * k, c_[i]);
  return out;
}

std::complex<double> Cyc24::to_complex() const {
  std::complex<double> s = 0;
  for (int i = 0; i < 8; ++i) {
    if (sgn(c_[i]) == 0) continue;
    double ang = std::numbers::pi * i / 12.0;
    s += c_[i].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return s;
}

std::pair<mpf_class, mpf_class> Cyc24::to_complex(unsigned long bits) const {
  mpf_class s2(2, bits), s3(3, bits), s6(6, bits);
  s2 = sqrt(s2);
  s3 = sqrt(s3);
  s6 = sqrt(s6);
  // cos(k pi / 12) for k = 0..6
  std::array<mpf_class, 7> cosv;
  for (auto& x : cosv) x.set_prec(bits);
  cosv[0] = 1;
  cosv[1] = (s6 + s2) / 4;
  cosv[2] = s3 / 2;
  cosv[3] = s2 / 2;
  cosv[4] = mpf_class(1, bits) / 2;
  cosv[5] = (s6 - s2) / 4;
  cosv[6] = 0;
  mpf_class re(0, bits), im(0, bits);
  for (int k = 0; k < 8; ++k) {
    if (sgn(c_[k]) == 0) continue;
    mpf_class ck(c_[k], bits);
    mpf_class cs = k <= 6 ? mpf_class(cosv[k]) : mpf_class(-cosv[12 - k]);
    mpf_class sn = mpf_class(cosv[std::abs(6 - k)]);
    re += ck * cs;
    im += ck * sn;
  }
  return {re, im};
}

std::string Cyc24::str() const {
  std::string out;
  for (int i = 0; i < 8; ++i) {
    if (sgn(c_[i]) == 0) continue;
    BigRational mag = abs(c_[i]);
    bool neg = sgn(c_[i]) < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (i == 0) {
      out += format_rational(mag);
      continue;
    }
    if (mag != 1) out += format_rational(mag) + "*";
    out += "z";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

Cyc24 Cyc24::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty Q(zeta24) literal");
  Cyc24 out;
  std::size_t p = 0;
  auto read_int = [&](std::string& dst) {
    std::size_t st = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    dst = s.substr(st, p - st);
    return p > st;
  };
  bool first = true;
  while (p < s.size()) {
    int sign = 1;
    if (s[p] == '+' || s[p] == '-') {
      sign = s[p] == '-' ? -1 : 1;
      ++p;
    } else if (!first) {
      throw ParseError("expected '+' or '-' in: " + s);
    }
    first = false;
    if (p < s.size() && s[p] == '-') {
      sign = -sign;
      ++p;
    }
    BigRational coef = 1;
    std::string num;
    if (read_int(num)) {
      coef = BigRational(mpz_class(num));
      if (p < s.size() && s[p] == '/') {
        ++p;
        std::string den;
        if (!read_int(den)) throw ParseError("bad denominator in: " + s);
        if (mpz_class(den) == 0) throw DivisionByZero("zero denominator in: " + s);
        coef = BigRational(mpz_class(num), mpz_class(den));
        coef.canonicalize();
      }
      if (p < s.size() && s[p] == '*') ++p;
    }
    long power = 0;
    if (p < s.size() && s[p] == 'z') {
      ++p;
      power = 1;
      if (p < s.size() && s[p] == '^') {
        ++p;
        bool neg = false;
        if (p < s.size() && s[p] == '-') {
          neg = true;
          ++p;
        }
        std::string e;
        if (!read_int(e)) throw ParseError("bad exponent in: " + s);
        power = std::stol(e) * (neg ? -1 : 1);
      }
    } else if (num.empty()) {
      throw ParseError("bad term in: " + s);
    }
    out.add_scaled_root(power, sign * coef);
  }
  return out;
}

bool operator==(const Cyc24& a, const Cyc24& b) {
  for (int i = 0; i < 8; ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

Cyc24 operator+(Cyc24 a, const Cyc24& b) { return a += b; }
Cyc24 operator-(Cyc24 a, const Cyc24& b) { return a -= b; }
Cyc24 operator*(const Cyc24& a, const Cyc24& b) {
  Cyc24 r;
  r.add_product(a, b);
  return r;
}
Cyc24 operator/(Cyc24 a, const Cyc24& b) { return a /= b; }

Cyc24 cyc_i() { return Cyc24::zeta(6); }
Cyc24 cyc_sqrt3() { return Cyc24::zeta(2) * Cyc24(2) - Cyc24::zeta(6); }
Cyc24 cyc_zeta3() { return Cyc24::zeta(8); }

}  // namespace mockq
