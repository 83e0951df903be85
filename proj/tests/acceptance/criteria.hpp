#pragma once

#include <functional>
#include <string>
#include <vector>

namespace zakframe::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct Criterion {
  int id;
  std::string name;
  std::function<CriterionResult()> run;
};

const std::vector<Criterion>& criteria();

/// Runs every criterion (or only `only` when nonzero) and reports each line
/// through `line` as it finishes.
std::vector<CriterionResult> run_all(const std::function<void(const CriterionResult&)>& line, int only = 0);

std::string format(const CriterionResult& r);

}  // namespace zakframe::acceptance
