#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

namespace oracle {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

// q^{1/24} prod_{n<=terms} (1 - q^n)
inline cplx eta_product(cplx tau, int terms = 200) {
  cplx q = std::exp(2.0 * kPi * cplx(0, 1) * tau);
  cplx p = 1, qn = 1;
  for (int n = 1; n <= terms; ++n) {
    qn *= q;
    p *= 1.0 - qn;
  }
  return std::exp(2.0 * kPi * cplx(0, 1) * tau / 24.0) * p;
}

// -i q^{1/8} zeta^{-1/2} prod (1 - q^n)(1 - zeta q^{n-1})(1 - zeta^{-1} q^n)
inline cplx theta_jtp(cplx z, cplx tau, int terms = 200) {
  const cplx I(0, 1);
  cplx q = std::exp(2.0 * kPi * I * tau);
  cplx zeta = std::exp(2.0 * kPi * I * z);
  cplx p = 1, qn = 1;
  for (int n = 1; n <= terms; ++n) {
    cplx prev = qn;
    qn *= q;
    p *= (1.0 - qn) * (1.0 - zeta * prev) * (1.0 - qn / zeta);
  }
  return -I * std::exp(2.0 * kPi * I * tau / 8.0) * std::exp(-kPi * I * z) * p;
}

// 2 int_0^z e^{-pi u^2} du along the segment, composite Simpson.
inline cplx E_simpson(cplx z, int panels = 20000) {
  auto f = [&](double t) { return std::exp(-kPi * z * z * t * t); };
  double h = 1.0 / panels;
  cplx s = f(0) + f(1);
  for (int k = 1; k < panels; ++k) s += (k % 2 ? 4.0 : 2.0) * f(k * h);
  return 2.0 * z * s * h / 3.0;
}

// Trapezoid sum for the integral over [0, inf) of an even function.
inline cplx trapezoid_even(const std::function<cplx(double)>& f, double h, double X) {
  cplx s = 0.5 * f(0);
  for (long k = 1; k * h <= X; ++k) s += f(k * h);
  return s * h;
}

}  // namespace oracle
