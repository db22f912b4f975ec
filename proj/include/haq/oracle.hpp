// Exponential reference implementations. Every polynomial solver in this
// repository is cross-checked against these at desk scale.
#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "haq/weighted.hpp"

namespace haq {

class guard_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Desk-scale guards; configuration values, not hard-coded limits.
struct OracleLimits {
  int max_applicants = 8;
  int max_projects = 6;
  bool unbounded = false;
};

// Emits every feasible matching exactly once, including the empty one, in a
// deterministic order (applicants in instance order; per applicant the
// unmatched option first, then the preference list). The visitor returns
// false to stop early. Throws guard_error when the instance exceeds the
// limits and `unbounded` is not set.
void enumerate_feasible_matchings(
    const Instance& inst, const OracleLimits& limits,
    const std::function<bool(const Matching&)>& visit);

std::vector<Matching> all_feasible_matchings(const Instance& inst,
                                             const OracleLimits& limits = {});

enum class VerifyMode { kPopular, kPareto };

// A feasible matching more popular than / dominating m, or nullopt. The
// witness is the first found in enumeration order.
std::optional<Matching> oracle_verify(const Instance& inst, const Matching& m,
                                      VerifyMode mode,
                                      const OracleLimits& limits = {});

enum class ExistsMode { kPopular, kPerfectPareto };

// A popular / perfect Pareto optimal matching, or nullopt.
std::optional<Matching> oracle_exists(const Instance& inst, ExistsMode mode,
                                      const OracleLimits& limits = {});

// Maximum total weight over all feasible matchings plus one maximizer (the
// first in enumeration order). The empty matching keeps 0 always admissible.
std::pair<Weight, Matching> oracle_max_weight(const WeightedInstance& winst,
                                              const OracleLimits& limits = {});

}  // namespace haq
