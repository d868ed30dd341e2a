#include "pbphase/verification.hpp"

#include <algorithm>

namespace pbphase {

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::flagged: return "flagged";
  }
  return "fail";
}

CheckRecord make_check(std::string id, std::string anchor, double deviation,
                       double tolerance, std::string detail) {
  const bool ok = deviation <= tolerance;
  return {std::move(id), std::move(anchor), deviation, tolerance,
          ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)};
}

CheckRecord make_flagged_check(std::string id, std::string anchor,
                               double deviation, double tolerance,
                               std::string detail) {
  CheckRecord r = make_check(std::move(id), std::move(anchor), deviation,
                             tolerance, std::move(detail));
  if (r.status == CheckStatus::fail) r.status = CheckStatus::flagged;
  return r;
}

bool any_failed(const std::vector<CheckRecord>& records) {
  return std::any_of(records.begin(), records.end(), [](const CheckRecord& r) {
    return r.status == CheckStatus::fail;
  });
}

}  // namespace pbphase
