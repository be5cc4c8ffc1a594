#include "mockq/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "mockq/errors.hpp"

namespace mockq {

namespace {

const Cyc24& zero_coeff() {
  static const Cyc24 z;
  return z;
}

GridExp floor_div(GridExp a, GridExp b) {
  GridExp q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

GridExp ceil_div(GridExp a, GridExp b) { return -floor_div(-a, b); }

// ceil(e * k) for rational k
GridExp ceil_mul(GridExp e, const BigRational& k) {
  mpz_class n = mpz_class(static_cast<long>(e)) * k.get_num();
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), k.get_den_mpz_t());
  return q.get_si();
}

}  // namespace

QSeries::QSeries(GridExp low, GridExp cap) : low_(std::min(low, cap)), cap_(cap) {
  c_.resize(static_cast<std::size_t>(cap_ - low_));
}

QSeries QSeries::zero(GridExp cap) { return QSeries(std::min<GridExp>(0, cap), cap); }

QSeries QSeries::constant(const Cyc24& c, GridExp cap) { return monomial(c, 0, cap); }

QSeries QSeries::monomial(const Cyc24& c, GridExp e, GridExp cap) {
  QSeries s(std::min(e, cap), cap);
  if (e < cap) s.at(e) = c;
  return s;
}

const Cyc24& QSeries::coeff(GridExp e) const {
  if (e >= cap_)
    throw OutOfPrecision("coefficient " + std::to_string(e) + "/24 requested beyond cap " +
                         std::to_string(cap_) + "/24");
  if (e < low_) return zero_coeff();
  return c_[static_cast<std::size_t>(e - low_)];
}

Cyc24& QSeries::at(GridExp e) {
  if (e < low_ || e >= cap_)
    throw OutOfPrecision("coefficient " + std::to_string(e) + "/24 outside window");
  return c_[static_cast<std::size_t>(e - low_)];
}

bool QSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Cyc24& x) { return x.is_zero(); });
}

std::optional<GridExp> QSeries::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return low_ + static_cast<GridExp>(i);
  return std::nullopt;
}

std::vector<GridExp> QSeries::support() const {
  std::vector<GridExp> out;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) out.push_back(low_ + static_cast<GridExp>(i));
  return out;
}

bool QSeries::is_rational() const {
  return std::all_of(c_.begin(), c_.end(), [](const Cyc24& x) { return x.is_rational(); });
}

void QSeries::reshape_low(GridExp new_low) {
  if (new_low >= low_) return;
  c_.insert(c_.begin(), static_cast<std::size_t>(low_ - new_low), Cyc24());
  low_ = new_low;
}

QSeries& QSeries::truncate_inplace(GridExp new_cap) {
  if (new_cap >= cap_) return *this;
  cap_ = new_cap;
  if (low_ > cap_) {
    low_ = cap_;
    c_.clear();
  } else {
    c_.resize(static_cast<std::size_t>(cap_ - low_));
  }
  return *this;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  GridExp cap = std::min(cap_, o.cap_);
  truncate_inplace(cap);
  reshape_low(std::min({low_, o.low_, cap}));
  for (GridExp e = std::max(o.low_, low_); e < cap; ++e) {
    const Cyc24& v = o.at(e);
    if (!v.is_zero()) at(e) += v;
  }
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  GridExp cap = std::min(cap_, o.cap_);
  truncate_inplace(cap);
  reshape_low(std::min({low_, o.low_, cap}));
  for (GridExp e = std::max(o.low_, low_); e < cap; ++e) {
    const Cyc24& v = o.at(e);
    if (!v.is_zero()) at(e) -= v;
  }
  return *this;
}

QSeries& QSeries::operator*=(const Cyc24& k) {
  if (k.is_one()) return *this;
  if (k.is_rational()) {
    for (auto& x : c_)
      if (!x.is_zero()) x *= k[0];
    return *this;
  }
  for (auto& x : c_)
    if (!x.is_zero()) x *= k;
  return *this;
}

QSeries& QSeries::mul_one_minus(const Monomial& m) {
  const GridExp e = m.qpow;
  if (e == 0) return *this *= Cyc24(1) - m.constant();
  if (e > 0) {
    for (GridExp k = cap_ - 1; k >= low_ + e; --k) {
      const Cyc24& src = at(k - e);
      if (src.is_zero()) continue;
      at(k) -= src.times_root(m.root);
    }
    return *this;
  }
  QSeries out(low_ + e, cap_ + e);
  for (GridExp k = out.low_; k < out.cap_; ++k) {
    Cyc24& dst = out.at(k);
    if (k >= low_) dst = at(k);
    GridExp src = k - e;
    if (src >= low_ && src < cap_ && !at(src).is_zero()) dst -= at(src).times_root(m.root);
  }
  *this = std::move(out);
  return *this;
}

QSeries& QSeries::div_one_minus(const Monomial& m) {
  const GridExp e = m.qpow;
  if (e == 0) {
    if (((m.root % 24) + 24) % 24 == 0) throw PoleError("division by 1 - 1");
    return *this *= (Cyc24(1) - m.constant()).inverse();
  }
  if (e > 0) {
    for (GridExp k = low_ + e; k < cap_; ++k) {
      const Cyc24& src = at(k - e);
      if (src.is_zero()) continue;
      at(k) += src.times_root(m.root);
    }
    return *this;
  }
  // 1/(1 - c q^e) = -c^{-1} q^{-e} / (1 - c^{-1} q^{-e})
  shift_inplace(-e);
  *this *= -Cyc24::zeta(-m.root);
  return div_one_minus({-m.root, -e});
}

QSeries& QSeries::shift_inplace(GridExp e) {
  low_ += e;
  cap_ += e;
  return *this;
}

QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
QSeries operator-(const QSeries& a) { return a * Cyc24(-1); }
QSeries operator*(const Cyc24& k, QSeries a) { return a *= k; }
QSeries operator*(QSeries a, const Cyc24& k) { return a *= k; }

QSeries operator*(const QSeries& a, const QSeries& b) {
  const GridExp low = a.low() + b.low();
  const GridExp cap = std::min(a.cap() + b.low(), b.cap() + a.low());
  QSeries r(low, cap);
  if (cap <= low) return r;
  const auto sa = a.support();
  const auto sb = b.support();
  for (GridExp i : sa) {
    if (i + b.low() >= cap) break;
    const Cyc24& ai = a.at(i);
    for (GridExp j : sb) {
      GridExp e = i + j;
      if (e >= cap) break;
      r.at(e).add_product(ai, b.at(j));
    }
  }
  return r;
}

QSeries divide(const QSeries& a, const QSeries& b) {
  auto v = b.valuation();
  if (!v) throw NonInvertible("divisor vanishes on its whole window");
  const GridExp vb = *v;
  const GridExp ucap = b.cap() - vb;
  const Cyc24& b0 = b.at(vb);
  const bool unit_lead = b0.is_one();
  const Cyc24 b0inv = unit_lead ? Cyc24(1) : b0.inverse();
  std::vector<GridExp> tail;
  for (GridExp j : b.support())
    if (j > vb) tail.push_back(j - vb);

  const GridExp xcap = std::min(a.cap(), a.low() + ucap);
  QSeries x(a.low(), xcap);
  for (GridExp k = x.low(); k < xcap; ++k) {
    Cyc24 acc = a.coeff(k);
    for (GridExp j : tail) {
      GridExp src = k - j;
      if (src < x.low()) break;
      const Cyc24& xs = x.at(src);
      if (xs.is_zero()) continue;
      acc.sub_product(b.at(vb + j), xs);
    }
    if (!unit_lead && !acc.is_zero()) acc *= b0inv;
    x.at(k) = std::move(acc);
  }
  x.shift_inplace(-vb);
  return x;
}

QSeries inverse(const QSeries& a) {
  auto v = a.valuation();
  if (!v) throw NonInvertible("series vanishes on its whole window");
  return divide(QSeries::constant(Cyc24(1), a.cap() - *v), a);
}

QSeries shift(QSeries a, GridExp e) { return std::move(a.shift_inplace(e)); }

QSeries truncate(QSeries a, GridExp cap) { return std::move(a.truncate_inplace(cap)); }

QSeries pow(const QSeries& a, unsigned n) {
  if (n == 0) return QSeries::constant(Cyc24(1), a.cap() - a.low());
  QSeries r = a;
  for (unsigned i = 1; i < n; ++i) r = r * a;
  return r;
}

QSeries compose_power(const QSeries& a, const BigRational& k) {
  if (sgn(k) <= 0) throw GridViolation("substitution power must be positive");
  const mpz_class& p = k.get_num();
  const mpz_class& d = k.get_den();
  QSeries r(ceil_mul(a.low(), k), ceil_mul(a.cap(), k));
  for (GridExp e : a.support()) {
    mpz_class n = mpz_class(static_cast<long>(e)) * p;
    if (!mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()))
      throw GridViolation("q -> q^" + k.get_str() + " sends exponent " + std::to_string(e) +
                          "/24 off the grid");
    mpz_class t = n / d;
    r.at(t.get_si()) = a.at(e);
  }
  return r;
}

QSeries dissect(const QSeries& a, long m, long j) {
  if (m <= 0 || j < 0 || j >= m) throw GridViolation("dissection needs 0 <= j < m");
  for (GridExp e : a.support())
    if (e % kGrid != 0)
      throw GridViolation("dissection of a series with non-integer exponent " + std::to_string(e) +
                          "/24");
  const GridExp nlow = ceil_div(a.low(), kGrid);
  const GridExp ncap = ceil_div(a.cap(), kGrid);
  const GridExp tlow = ceil_div(nlow - j, m);
  const GridExp tcap = std::max(tlow, ceil_div(ncap - j, m));
  QSeries r(kGrid * tlow, kGrid * tcap);
  for (GridExp t = tlow; t < tcap; ++t) {
    GridExp n = j + m * t;
    if (n * kGrid < a.low()) continue;
    const Cyc24& v = a.at(n * kGrid);
    if (!v.is_zero()) r.at(kGrid * t) = v;
  }
  return r;
}

QSeries reassemble(const std::vector<QSeries>& parts) {
  const long m = static_cast<long>(parts.size());
  if (m == 0) throw GridViolation("nothing to reassemble");
  QSeries out;
  for (long j = 0; j < m; ++j) {
    QSeries piece = shift(compose_power(parts[j], BigRational(m)), j * kGrid);
    out = j == 0 ? std::move(piece) : out + piece;
  }
  return out;
}

QSeries twist_tau(const QSeries& a, const BigRational& t) {
  QSeries r = a;
  for (GridExp e : a.support()) {
    BigRational ph = BigRational(static_cast<long>(e)) * t;
    if (ph.get_den() != 1)
      throw GridViolation("twist phase at exponent " + std::to_string(e) +
                          "/24 is not a 24th root of unity");
    mpz_class k = ph.get_num() % 24;
    r.at(e) = a.at(e).times_root(k.get_si());
  }
  return r;
}

QSeries twist_minus_q(const QSeries& a) {
  for (GridExp e : a.support())
    if (e % kGrid != 0)
      throw GridViolation("q -> -q needs integer exponents, found " + std::to_string(e) + "/24");
  return twist_tau(a, BigRational(1, 2));
}

QSeries galois(const QSeries& a, long k) {
  QSeries r = a;
  for (GridExp e : a.support()) r.at(e) = a.at(e).galois(k);
  return r;
}

Comparison compare_to(const QSeries& a, const QSeries& b, GridExp order) {
  if (a.cap() < order || b.cap() < order)
    throw OutOfPrecision("comparison to " + std::to_string(order) + "/24 but caps are " +
                         std::to_string(a.cap()) + "/24 and " + std::to_string(b.cap()) + "/24");
  Comparison c;
  c.order = order;
  for (GridExp e = std::min(a.low(), b.low()); e < order; ++e) {
    const Cyc24& x = a.coeff(e);
    const Cyc24& y = b.coeff(e);
    if (!(x == y)) {
      c.equal = false;
      c.first_mismatch = Mismatch{e, x, y};
      break;
    }
  }
  return c;
}

std::complex<double> evaluate(const QSeries& a, std::complex<double> tau) {
  const std::complex<double> step = 2.0 * std::numbers::pi * std::complex<double>(0, 1) * tau /
                                    static_cast<double>(kGrid);
  std::complex<double> s = 0;
  for (GridExp e : a.support()) s += a.at(e).to_complex() * std::exp(step * static_cast<double>(e));
  return s;
}

std::string dump(const QSeries& a) {
  std::ostringstream os;
  os << "# low=" << a.low() << "/24 cap=" << a.cap() << "/24\n";
  for (GridExp e : a.support()) {
    os << e << "/24\t";
    const Cyc24& c = a.at(e);
    for (int i = 0; i < Cyc24::kDegree; ++i) os << (i ? " " : "") << format_rational(c[i]);
    os << '\n';
  }
  return os.str();
}

QSeries parse_dump(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  std::optional<GridExp> low, cap;
  std::vector<std::pair<GridExp, Cyc24>> rows;
  auto parse_grid = [](const std::string& tok) {
    auto slash = tok.find("/24");
    if (slash == std::string::npos) throw ParseError("expected e/24, got: " + tok);
    try {
      return static_cast<GridExp>(std::stoll(tok.substr(0, slash)));
    } catch (const std::exception&) {
      throw ParseError("bad exponent: " + tok);
    }
  };
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream hs(line.substr(1));
      std::string tok;
      while (hs >> tok) {
        if (tok.rfind("low=", 0) == 0) low = parse_grid(tok.substr(4));
        if (tok.rfind("cap=", 0) == 0) cap = parse_grid(tok.substr(4));
      }
      continue;
    }
    std::istringstream ls(line);
    std::string etok;
    ls >> etok;
    std::array<BigRational, Cyc24::kDegree> c;
    for (int i = 0; i < Cyc24::kDegree; ++i) {
      std::string tok;
      if (!(ls >> tok)) throw ParseError("coefficient line needs 8 rationals: " + line);
      c[i] = parse_rational(tok);
    }
    rows.emplace_back(parse_grid(etok), Cyc24::from_coeffs(c));
  }
  if (!low) low = rows.empty() ? 0 : rows.front().first;
  if (!cap) cap = rows.empty() ? *low : rows.back().first + 1;
  QSeries s(*low, *cap);
  for (auto& [e, c] : rows) s.at(e) = std::move(c);
  return s;
}

}  // namespace mockq
