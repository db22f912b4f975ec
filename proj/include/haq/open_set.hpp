// Fixed-open-set solvers on top of the flow engine, and the 2^{m_quota}
// sweep that makes the weighted problems fixed parameter tractable.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "haq/flow.hpp"
#include "haq/gadgets.hpp"
#include "haq/weighted.hpp"

namespace haq {

struct OpenSet {
  std::vector<int> projects;  // sorted, unique

  static OpenSet of(const Instance& inst,
                    const std::vector<std::string>& ids);
  static OpenSet of_indices(const Instance& inst, std::vector<int> indices);
  bool contains(int p) const;
};

// A feasible matching dominating m that opens exactly the given projects,
// or nullopt. One feasible-flow instance per designated improving
// applicant, in instance order; first feasible flow wins.
std::optional<Matching> dominating_with_open_set(const Instance& inst,
                                                 const Matching& m,
                                                 const OpenSet& open);

// Maximum-weight feasible matching opening exactly the given projects, via
// one max-cost circulation; nullopt when no such matching exists.
std::optional<std::pair<Weight, Matching>> max_weight_with_open_set(
    const WeightedInstance& winst, const OpenSet& open);

struct FptLimits {
  int max_quota_projects = 20;  // 2^{m_quota} sweep guard
};

struct FptStats {
  long long subproblems = 0;  // circulation solves performed
};

// Global maximum weight matching: sweeps all subsets of the projects with
// lower quota > 1 (forced open with their demands), leaving unit-lower-quota
// projects free to open or close.
std::pair<Weight, Matching> max_weight_fpt(const WeightedInstance& winst,
                                           const FptLimits& limits = {},
                                           FptStats* stats = nullptr);

// Same contracts as solve_lq2, valid for any l_max, via max_weight_fpt.
std::optional<Matching> solve_fpt(const Instance& inst, SolveMode mode,
                                  const std::optional<Matching>& m = {},
                                  const FptLimits& limits = {});

}  // namespace haq
