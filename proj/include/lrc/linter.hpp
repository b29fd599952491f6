// Mechanical checks of rule schemas against the syntactically decidable
// analyticity conditions; the proof-transformation families are reported
// as manual.
#pragma once

#include <string>
#include <vector>

#include "lrc/calculus.hpp"

namespace lrc {

enum class LintStatus { Pass, Fail, Manual };
const char* lint_status_name(LintStatus s);

struct ConditionResult {
  std::string id;  // C1, C2, C2', C3, C4, C6'/C7', C9, C10, C5-family, C8-family
  LintStatus status = LintStatus::Pass;
  std::string diagnostic;
};

// Condition ids in report order.
const std::vector<std::string>& lint_condition_ids();

std::vector<ConditionResult> lint_rule(const RuleSchema& r);

// True when no checkable condition fails.
bool lint_passes(const std::vector<ConditionResult>& results);

// One row per rule, one column per condition.
std::string lint_matrix(const RuleSet& rules);

}  // namespace lrc
