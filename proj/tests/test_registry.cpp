#include <doctest.h>

#include <algorithm>
#include <set>

#include "mockq/errors.hpp"
#include "mockq/registry.hpp"

using mockq::GridExp;
using mockq::IdentityRecord;
using mockq::QSeries;

TEST_CASE("catalog shape") {
  const auto& cat = mockq::registry_catalog();
  CHECK(cat.size() >= 18);
  std::set<std::string> ids;
  for (const auto& r : cat) {
    CHECK(ids.insert(r.id).second);
    CHECK(r.default_order >= 200);
    CHECK(!r.readings.empty());
    CHECK(mockq::BigRational(r.normalization * 24).get_den() == 1);
  }
  for (const char* id : {"NEWOMEGA", "NEWOMEGA2", "NEWF", "OMEGAWATSON", "FIDWAT", "ETA3DISS",
                         "MUDISS_I", "MUDISS_VI", "OMEGA_HALF_SPLIT", "H2_MU_REP", "F_MU_REP",
                         "NEWOMID", "RLN_OMEGA", "RLN_F", "VARTHETA_THIRD", "JTP_10"})
    CHECK(ids.count(id) == 1);
  CHECK_THROWS_AS(mockq::find_record("NOPE"), mockq::UnknownIdentity);
  CHECK_THROWS_AS(mockq::verify("NOPE"), mockq::UnknownIdentity);
}

TEST_CASE("verify reports") {
  auto r = mockq::verify("MUDISS_IV", 120);
  CHECK(r.pass);
  CHECK(r.order == 120);
  CHECK(!r.first_mismatch);
  CHECK(r.reading == "stated");

  auto n2 = mockq::verify("NEWOMEGA2", 60);
  CHECK(n2.pass);
  REQUIRE(n2.tried.size() == 2);
  CHECK(!n2.tried[0].pass);
  CHECK(n2.tried[0].first_mismatch);
  CHECK(n2.reading == "sign-corrected");

  auto nf = mockq::verify("NEWF", 60);
  CHECK(nf.pass);
  CHECK(nf.reading == "corrected");
  CHECK(!nf.tried.front().pass);

  auto js = mockq::report_json(n2);
  CHECK(js.find("\"status\": \"pass\"") != std::string::npos);
  CHECK(js.find("\"first_mismatch\": null") != std::string::npos);
}

TEST_CASE("a perturbed builder fails with the first mismatch") {
  IdentityRecord rec = mockq::find_record("OMEGAWATSON");
  auto inner = rec.readings[0].build;
  rec.readings[0].build = [inner](GridExp cap) {
    auto s = inner(cap);
    s.rhs.at(24 * 17) += mockq::Cyc24(1);
    return s;
  };
  auto r = mockq::verify_record(rec, 40);
  CHECK(!r.pass);
  REQUIRE(r.first_mismatch);
  CHECK(r.first_mismatch->exponent == 24 * 17);
  CHECK(r.first_mismatch->rhs == r.first_mismatch->lhs + mockq::Cyc24(1));
  auto js = mockq::report_json(r);
  CHECK(js.find("\"exponent_num_24\": 408") != std::string::npos);
}

TEST_CASE("verify_all is independent of the job count") {
  auto one = mockq::verify_all(24L, 1);
  auto three = mockq::verify_all(24L, 3);
  REQUIRE(one.size() == three.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    INFO(one[i].id << " " << one[i].error);
    CHECK(one[i].id == three[i].id);
    CHECK(one[i].pass == three[i].pass);
    CHECK(one[i].reading == three[i].reading);
    CHECK(one[i].error.empty());
  }
  CHECK(std::is_sorted(one.begin(), one.end(),
                       [](const auto& a, const auto& b) { return a.id < b.id; }));
}
