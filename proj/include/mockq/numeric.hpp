#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "mockq/etatheta.hpp"
#include "mockq/lerch.hpp"

namespace mockq {

using cplx = std::complex<double>;
using Vec3 = std::array<cplx, 3>;

struct NumericScene {
  cplx tau{0.0, 1.0};
  double abs_tol = 1e-8;
  double series_term_floor = 1e-18;
  double quad_rel_tol = 1e-12;
  int max_terms = 4000;
  int max_quad_refinements = 15;

  // Throws MockqError unless Im(tau) > 0 and the tolerances are positive.
  void validate() const;
  // Same tolerances at another point.
  NumericScene at(cplx t) const;
};

// Accepts "0.25+1i", "i", "-0.5+2i", "2i".
cplx parse_tau(const std::string& text);
std::string format_tau(cplx tau);

cplx eta_num(const NumericScene& s);
cplx eta_quotient_num(const EtaQuotientSpec& spec, const NumericScene& s);
// prod (1 - q^{m n}), q = e^{2 pi i tau}
cplx euler_E_num(double m, const NumericScene& s);
// sum_{n in 1/2+Z} e^{pi i n^2 tau + 2 pi i n (z + 1/2)}
cplx theta_num(cplx z, const NumericScene& s);

// E(z) = 2 int_0^z e^{-pi u^2} du and beta(x) = int_x^inf u^{-1/2} e^{-pi u} du.
cplx E_num(cplx z);
double beta_num(double x);

cplx R_num(cplx u, const NumericScene& s);
cplx mu_num(cplx u, cplx v, const NumericScene& s);
cplx mu_tilde_num(cplx u, cplx v, const NumericScene& s);

struct SL2 {
  long a, b, c, d;
};
// Relative residual of the modular transformation of mu-tilde under gamma.
double mu_tilde_modular_check(const SL2& g, cplx u, cplx v, const NumericScene& s);

// g_{a,b}(tau) = sum_{n in a+Z} n e^{pi i n^2 tau + 2 pi i n b}
cplx g_ab_num(double a, double b, const NumericScene& s);
// g_0, g_1, g_2 from their defining sums, and through g_{a,b}(3z).
cplx g012_num(int idx, cplx z, const NumericScene& s);
cplx g012_via_gab(int idx, cplx z, const NumericScene& s);

// int_{-conj(tau)}^{i inf} g_{a,b}(lambda z) / sqrt(-i(z + tau)) dz, termwise
// through erfc, and the same integral by adaptive quadrature.
cplx eichler_integral(double a, double b, double lambda, const NumericScene& s);
cplx eichler_quadrature(double a, double b, double lambda, const NumericScene& s);

// Watson's j_1, j_2, j_3 at tau.
cplx mordell_j(int idx, const NumericScene& s);

// sum evaluated from a LerchSpec at q = e^{2 pi i tau}.
cplx lerch_num(const LerchSpec& spec, const NumericScene& s);

cplx f_num(cplx q, const NumericScene& s);
cplx omega_num(cplx q, const NumericScene& s);

struct FGH {
  Vec3 F, G, H;
};
FGH FGH_num(const NumericScene& s);
// -2 i sqrt3 int_0^{i inf} (g0, g1, g2) / sqrt(-i(z + tau)) dz
Vec3 lemma33_vector(const NumericScene& s);
// F(-1/tau)/sqrt(-i tau) - M F(tau)
Vec3 watson_remainder(const NumericScene& s);

struct CheckResult {
  std::string name;
  cplx tau;
  double residual = 0;
  double tol = 0;
  bool pass = false;
  std::string detail;
};

const std::vector<std::string>& check_names();
double default_tolerance(const std::string& name);
const std::vector<cplx>& default_scenes();
// Residuals are max_k |lhs_k - rhs_k| / max(1, |lhs_k|).
CheckResult run_check(const std::string& name, const NumericScene& s);
// Checks by scenes, in the order given, spread over jobs threads.
std::vector<CheckResult> run_battery(const std::vector<std::string>& names,
                                     const std::vector<cplx>& scenes, double tol_override,
                                     unsigned jobs);

}  // namespace mockq
