#pragma once

#include <functional>
#include <string>
#include <vector>

namespace lenskit {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct SweepOptions {
  unsigned depth = 8;      // criteria 1, 2, 3, 6; 4 and 8 are capped at 6 and 5
  unsigned farey_den = 20; // criterion 7
  unsigned bpq_max = 30;   // criterion 9
};

using CriterionFn = std::function<CriterionResult(const SweepOptions&)>;

// the nine acceptance checks, in order
const std::vector<CriterionFn>& acceptance_criteria();
std::vector<CriterionResult> run_acceptance(const SweepOptions& opts = {});
std::string summary_line(const CriterionResult& r);

}  // namespace lenskit
