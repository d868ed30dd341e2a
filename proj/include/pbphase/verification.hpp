#pragma once

#include <string>
#include <vector>

namespace pbphase {

enum class CheckStatus { pass, fail, flagged };

std::string status_name(CheckStatus s);

struct CheckRecord {
  std::string check_id;
  std::string paper_anchor;  // identity being checked, in formula form
  double max_deviation = 0.0;
  double tolerance = 0.0;
  CheckStatus status = CheckStatus::pass;
  std::string detail;  // optional observed value, e.g. a cycle factor
};

// pass iff deviation <= tolerance, otherwise fail.
CheckRecord make_check(std::string id, std::string anchor, double deviation,
                       double tolerance, std::string detail = {});

// pass iff deviation <= tolerance, otherwise flagged (expected discrepancy).
CheckRecord make_flagged_check(std::string id, std::string anchor,
                               double deviation, double tolerance,
                               std::string detail = {});

bool any_failed(const std::vector<CheckRecord>& records);

}  // namespace pbphase
