#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "secmin/exec.hpp"

namespace secmin {

enum class CriterionStatus { pass, fail, report };

const char* to_string(CriterionStatus s);

struct CriterionResult {
  std::string id;     // "AC1" .. "AC11"
  std::string title;
  CriterionStatus status = CriterionStatus::fail;
  std::string detail;               // one-line summary
  std::vector<std::string> info;    // extra report lines, not asserted
  double elapsed_ms = 0;
};

struct AcceptanceOptions {
  Exec exec = Exec::parallel;
  std::uint64_t seed = 20240917;
  /// Run only these ids (empty: all).
  std::vector<std::string> only;
};

/// Runs the acceptance criteria in order, calling `on_result` after each.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace secmin
