#pragma once

// The acceptance checklist: every criterion recomputed from scratch, one result each.

#include <iosfwd>
#include <string>
#include <vector>

#include "grhcheck/parallel.hpp"
#include "grhcheck/report.hpp"

namespace grhcheck {

struct CriterionResult {
  int number = 0;
  std::string anchor;  // interface id of the result being re-enacted
  std::string title;
  double measured = 0.0;
  double threshold = 0.0;
  double margin = 0.0;  // positive when satisfied
  bool passed = false;
  std::string detail;
  double seconds = 0.0;  // wall time; never written to tables
};

struct ReproduceOptions {
  unsigned workers = 1;
  bool extended = false;  // progression scan up to q = 20000 instead of 2000
  std::ostream* log = nullptr;  // progress lines
};

/// Criteria 1-11.
std::vector<CriterionResult> run_criteria(const ReproduceOptions& opts);
/// Criterion 12: compares the CSV of a run with max(2, opts.workers) workers against a rerun with
/// one worker. `reference` is the CSV of a multi-worker run already made; empty means run it here.
CriterionResult check_determinism(const ReproduceOptions& opts, const std::string& reference = {});

Table criteria_table(const std::vector<CriterionResult>& results);
std::string criteria_csv(const std::vector<CriterionResult>& results);

}  // namespace grhcheck
