#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mockq/etatheta.hpp"
#include "mockq/qseries.hpp"

namespace mockq {

// One way of reading an identity. Builders return both sides before the
// normalization shift, reaching at least the requested cap.
struct Reading {
  std::string name;
  std::string note;
  std::function<SeriesPair(GridExp cap)> build;
};

struct IdentityRecord {
  std::string id;
  std::string description;
  long default_order = 200;
  // Both sides are multiplied by q^normalization before comparing.
  BigRational normalization = 0;
  // The first reading is the identity as stated; later ones are alternatives
  // tried in order when it fails.
  std::vector<Reading> readings;
  bool flagged = false;
};

struct ReadingOutcome {
  std::string name;
  bool pass = false;
  std::optional<Mismatch> first_mismatch;
};

struct VerifyReport {
  std::string id;
  bool pass = false;
  long order = 0;
  std::optional<Mismatch> first_mismatch;
  long ms = 0;
  // Reading that validated, or the stated one when none did.
  std::string reading;
  std::vector<ReadingOutcome> tried;
  std::string error;
};

const std::vector<IdentityRecord>& registry_catalog();
const IdentityRecord& find_record(const std::string& id);

// Checks coefficients of q^e for e < order (integer order).
VerifyReport verify_record(const IdentityRecord& rec, long order);
VerifyReport verify(const std::string& id, std::optional<long> order = std::nullopt);
// Reports come back sorted by id whatever the job count.
std::vector<VerifyReport> verify_all(std::optional<long> order_override = std::nullopt,
                                     unsigned jobs = 1);

// SeriesPair for a reading, already normalized and truncated to order.
SeriesPair build_sides(const IdentityRecord& rec, const Reading& reading, long order);

std::string report_json(const VerifyReport& r);
std::string reports_json(const std::vector<VerifyReport>& rs);

}  // namespace mockq
