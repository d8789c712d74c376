#include "xxzlbf/verify.hpp"

#include <algorithm>

namespace xxz {

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

}  // namespace xxz
