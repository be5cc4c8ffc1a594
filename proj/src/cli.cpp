#include "mockq/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "mockq/errors.hpp"
#include "mockq/mocktheta.hpp"
#include "mockq/numeric.hpp"
#include "mockq/registry.hpp"

namespace mockq {

namespace {

struct Options {
  std::string id;
  long order = 0;
  std::vector<std::string> checks;
  std::string tau;
  double tol = 0;
  std::string series;
  bool json = false;
  std::string out_path;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  bool list_checks = false;
};

std::string format_mismatch(const Mismatch& m) {
  std::ostringstream os;
  os << "q^(" << m.exponent << "/24): lhs " << m.lhs.str() << " rhs " << m.rhs.str();
  return os.str();
}

std::string verify_table(const std::vector<VerifyReport>& rs) {
  std::ostringstream os;
  os << std::left << std::setw(26) << "id" << std::setw(7) << "status" << std::setw(7) << "order"
     << std::setw(9) << "ms" << "reading\n";
  for (const auto& r : rs) {
    os << std::left << std::setw(26) << r.id << std::setw(7) << (r.pass ? "pass" : "FAIL")
       << std::setw(7) << r.order << std::setw(9) << r.ms << r.reading << '\n';
    if (!r.error.empty()) os << "    error: " << r.error << '\n';
    for (const auto& t : r.tried)
      if (!t.pass && t.first_mismatch)
        os << "    " << t.name << " fails at " << format_mismatch(*t.first_mismatch) << '\n';
  }
  return os.str();
}

std::string numeric_json(const std::vector<CheckResult>& rs) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& r : rs) {
    nlohmann::json j = {{"check", r.name},
                        {"tau", format_tau(r.tau)},
                        {"status", r.pass ? "pass" : "fail"},
                        {"tol", r.tol},
                        {"detail", r.detail}};
    j["residual"] = std::isfinite(r.residual) ? nlohmann::json(r.residual) : nlohmann::json(nullptr);
    a.push_back(std::move(j));
  }
  return a.dump(2) + "\n";
}

std::string numeric_table(const std::vector<CheckResult>& rs) {
  std::ostringstream os;
  os << std::left << std::setw(24) << "check" << std::setw(18) << "tau" << std::setw(7) << "status"
     << std::setw(12) << "residual" << "tol\n";
  for (const auto& r : rs) {
    char res[32], tol[32];
    std::snprintf(res, sizeof res, "%.3e", r.residual);
    std::snprintf(tol, sizeof tol, "%.0e", r.tol);
    os << std::left << std::setw(24) << r.name << std::setw(18) << format_tau(r.tau) << std::setw(7)
       << (r.pass ? "pass" : "FAIL") << std::setw(12) << res << tol << '\n';
    if (!r.detail.empty()) os << "    " << r.detail << '\n';
  }
  return os.str();
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_path);
  if (!f) throw MockqError("cannot write " + o.out_path);
  f << text;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyReport r = o.order > 0 ? verify(o.id, o.order) : verify(o.id);
  emit(o, o.json ? reports_json({r}) : verify_table({r}), out);
  return r.pass ? 0 : 1;
}

int cmd_verify_all(const Options& o, std::ostream& out) {
  std::optional<long> order;
  if (o.order > 0) order = o.order;
  auto rs = verify_all(order, o.jobs);
  emit(o, o.json ? reports_json(rs) : verify_table(rs), out);
  return std::all_of(rs.begin(), rs.end(), [](const VerifyReport& r) { return r.pass; }) ? 0 : 1;
}

int cmd_numeric(const Options& o, std::ostream& out) {
  std::vector<std::string> names = o.checks;
  if (names.empty() || (names.size() == 1 && names[0] == "all")) names = check_names();
  for (const auto& n : names)
    if (std::find(check_names().begin(), check_names().end(), n) == check_names().end())
      run_check(n, NumericScene{});
  std::vector<CheckResult> rs;
  if (!o.tau.empty()) {
    cplx tau = parse_tau(o.tau);
    NumericScene probe;
    probe.tau = tau;
    probe.validate();
    rs = run_battery(names, {tau}, o.tol, o.jobs);
  } else {
    std::vector<std::string> scene_checks, fixed_checks;
    for (const auto& n : names) (n.rfind("consistency-", 0) == 0 ? fixed_checks : scene_checks).push_back(n);
    rs = run_battery(scene_checks, default_scenes(), o.tol, o.jobs);
    auto more = run_battery(fixed_checks, {cplx(0.05, 0.8)}, o.tol, o.jobs);
    rs.insert(rs.end(), more.begin(), more.end());
  }
  emit(o, o.json ? numeric_json(rs) : numeric_table(rs), out);
  return std::all_of(rs.begin(), rs.end(), [](const CheckResult& r) { return r.pass; }) ? 0 : 1;
}

int cmd_coeffs(const Options& o, std::ostream& out) {
  const GridExp cap = kGrid * (o.order > 0 ? o.order : 100);
  QSeries s;
  if (o.series == "f")
    s = f_eulerian(cap);
  else if (o.series == "omega")
    s = omega_eulerian(cap);
  else if (o.series == "phi")
    s = phi_eulerian(cap);
  else
    throw MockqError("unknown series '" + o.series + "'; expected f, omega or phi");
  emit(o, dump(s), out);
  return 0;
}

int cmd_list(const Options& o, std::ostream& out) {
  std::ostringstream os;
  if (o.list_checks) {
    for (const auto& n : check_names()) os << n << "\ttol " << default_tolerance(n) << '\n';
  } else {
    std::vector<const IdentityRecord*> recs;
    for (const auto& r : registry_catalog()) recs.push_back(&r);
    std::sort(recs.begin(), recs.end(), [](auto* a, auto* b) { return a->id < b->id; });
    for (const auto* r : recs)
      os << r->id << "\torder " << r->default_order << (r->flagged ? "\tflagged" : "") << '\t'
         << r->description << '\n';
  }
  emit(o, os.str(), out);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact and numeric verification of mock theta function identities", "mockq"};
  app.require_subcommand(1);

  auto add_output = [&](CLI::App* c) {
    c->add_flag("--json", o.json, "Emit JSON");
    c->add_option("--out", o.out_path, "Write the report to this path");
  };
  auto add_jobs = [&](CLI::App* c) {
    c->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  };

  auto* verify_cmd = app.add_subcommand("verify", "Verify one identity");
  verify_cmd->add_option("--id", o.id, "Identity id")->required();
  verify_cmd->add_option("--order", o.order, "Compare coefficients of q^e for e < order")
      ->check(CLI::PositiveNumber);
  add_output(verify_cmd);

  auto* all_cmd = app.add_subcommand("verify-all", "Verify every identity, sorted by id");
  all_cmd->add_option("--order", o.order, "Override every default order")->check(CLI::PositiveNumber);
  add_output(all_cmd);
  add_jobs(all_cmd);

  auto* num_cmd = app.add_subcommand("numeric", "Numeric transformation checks");
  num_cmd->add_option("--check", o.checks, "Check name, repeatable, or 'all'");
  num_cmd->add_option("--tau", o.tau, "Point in the upper half-plane, e.g. 0.25+1i");
  num_cmd->add_option("--tol", o.tol, "Tolerance override")->check(CLI::PositiveNumber);
  add_output(num_cmd);
  add_jobs(num_cmd);

  auto* coeffs_cmd = app.add_subcommand("coeffs", "Dump Eulerian coefficients");
  coeffs_cmd->add_option("--series", o.series, "f, omega or phi")->required();
  coeffs_cmd->add_option("--order", o.order, "Coefficients of q^e for e < order")
      ->check(CLI::PositiveNumber);
  add_output(coeffs_cmd);

  auto* list_cmd = app.add_subcommand("list", "List identities or numeric checks");
  list_cmd->add_flag("--checks", o.list_checks, "List numeric checks instead");
  add_output(list_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify_cmd) return cmd_verify(o, out);
    if (*all_cmd) return cmd_verify_all(o, out);
    if (*num_cmd) return cmd_numeric(o, out);
    if (*coeffs_cmd) return cmd_coeffs(o, out);
    return cmd_list(o, out);
  } catch (const NonConvergence& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const MockqError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace mockq
