#pragma once

#include "quantakit/fixtures.hpp"
#include "quantakit/girard.hpp"

namespace quantakit {

struct SuiteResult {
  std::string id;            // anchor id, e.g. "eq.ka-si"
  long long instances = 0;   // instances checked
  bool pass = true;
  std::string counterexample;  // empty iff pass
  std::vector<std::string> notes;
};

struct LawOptions {
  uint64_t seed = 1;
  Guards guards;
  std::string suite_filter;  // empty = all; otherwise id prefix match
  std::string input_label;   // "TWO", "bundle", ...
};

struct LawReport {
  std::vector<SuiteResult> suites;  // sorted by id
  bool pass = true;
};

/// Extra named fixtures supplied alongside a quantaloid (from a bundle).
struct ExtraFixtures {
  std::vector<CatPtr> categories;
  std::vector<QDistributor> distributors;
  std::vector<InteriorSpace> interiors;
};

/// Runs every registered law suite over the quantaloid plus generated
/// fixtures. Deterministic given the seed; suites are reported in sorted
/// id order.
LawReport run_laws(const QPtr& Q, const ExtraFixtures* extra, const LawOptions& opts);

std::vector<std::string> suite_ids();

}  // namespace quantakit
