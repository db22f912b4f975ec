// The lower-quota-2 machinery: last-resort augmentation, Cornuejols-style
// degree gadgets, neighboring-type improvement search, and the solvers
// built on it.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "haq/general_matching.hpp"
#include "haq/weighted.hpp"

namespace haq {

// Appends one private quota-1/1 project per applicant, connected by a
// weight-0 edge. Every matching of the output is effectively perfect on
// applicants; maximum achievable weight is unchanged.
WeightedInstance add_last_resorts(const WeightedInstance& winst);

// Per-project degree constraint inside one search case. A toggle lets an
// l_p = 2 project sit at 0 or 2 assignees; otherwise the degree is fixed.
struct DegreeConstraint {
  enum class Kind { kToggle, kFixed };
  Kind kind = Kind::kFixed;
  int fixed_degree = 0;
};

// One neighboring-type case: the base case toggles only, case 2a one
// interval-distance-2 project move, case 2b two unit moves.
struct NeighboringCase {
  std::string description;
  std::vector<DegreeConstraint> constraints;  // per project
};

// Gadget expansion of a constrained quota instance. Perfect matchings of
// `graph` correspond to matchings of the quota instance obeying the case
// constraints, with equal weight.
struct GadgetGraph {
  GeneralGraph graph;
  // Applicant a is vertex a. backmap[(a copy-vertex v)] records which
  // (applicant, project) incidence an applicant-copy edge encodes.
  std::vector<std::pair<int, int>> copy_owner;  // copy vertex -> (a, p)
  int applicant_count = 0;
};

// All cases the improvement search enumerates for matching m (which must
// leave every applicant matched; callers get this via add_last_resorts).
// Exposed so tests can check the gadget bijection case by case.
std::vector<NeighboringCase> neighboring_cases(const WeightedInstance& winst,
                                               const Matching& m);

// nullopt when the constrained instance cannot realize the case at all
// (target degree above the project's adjacency).
std::optional<GadgetGraph> build_gadget_graph(const WeightedInstance& winst,
                                              const NeighboringCase& ncase);

// A feasible matching strictly heavier than m if one exists among all
// neighboring types, else nullopt (then m is a global maximum). Accepts any
// feasible m; last resorts are handled internally. Throws when l_max > 2.
std::optional<Matching> find_heavier_neighboring(const WeightedInstance& winst,
                                                 const Matching& m);

// Global maximum weight matching for l_max <= 2, by iterating the
// neighboring-type improvement from the empty matching.
std::pair<Weight, Matching> max_weight_lq2(const WeightedInstance& winst);

enum class SolveMode { kPopv, kPov, kPerpo };

// popv/pov: witness more-popular/dominating matching, or nullopt, via the
// Lemma-2 weight reductions. perpo: a perfect Pareto optimal matching or
// nullopt, via maximum-cardinality start plus domination improvements.
std::optional<Matching> solve_lq2(const Instance& inst, SolveMode mode,
                                  const std::optional<Matching>& m = {});

}  // namespace haq
