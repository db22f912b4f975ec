// Instance builders: the paper's gadget constructions as generators, a tiny
// X3C solver for end-to-end equivalence tests, and a seeded fuzz generator.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "haq/instance.hpp"

namespace haq {

// Exact cover by 3-sets. Sets are index triples into `elements`; duplicate
// sets are allowed (the reductions treat them as distinct projects).
struct X3CInstance {
  std::vector<std::string> elements;
  std::vector<std::array<int, 3>> sets;

  int occurrences(int element) const;
};

// Element count divisible by 3, sets with three distinct known members.
void validate_x3c(const X3CInstance& x);

// Pads so that every element lies in exactly three sets and the element
// count over 3 is odd, preserving cover existence in both directions.
// Fresh identifiers carry a '+' prefix. Throws when an element appears in
// more than three sets.
X3CInstance normalize_x3c(const X3CInstance& x);

bool x3c_normalized(const X3CInstance& x);

// Exhaustive search; returns indices of a partitioning subfamily or nullopt.
std::optional<std::vector<int>> solve_x3c(const X3CInstance& x,
                                          int max_sets_guard = 26);

// Checks that `cover` is disjoint and covers every element.
bool check_x3c_cover(const X3CInstance& x, const std::vector<int>& cover);

enum class CondorcetVariant { kUnit, kLq3 };

// unit: three applicants, three quota-1/1 projects, identical lists.
// lq3: three applicants, three quota-3/3 projects, cyclically shifted lists.
// Neither admits a popular matching.
Instance gen_condorcet(CondorcetVariant variant);

// Popularity-verification hardness instance; requires a normalized input.
// The returned matching M(d_i) = {b_i, y_i, z_i} is unpopular iff the X3C
// instance has an exact cover.
std::pair<Instance, Matching> gen_popv_x3c(const X3CInstance& x);

// Perfect-Pareto hardness instance; requires every element in at most three
// sets. A perfect (Pareto optimal) matching exists iff a cover exists.
Instance gen_perpo_x3c(const X3CInstance& x);

// Popular-matching coNP-hardness instance; requires a normalized input.
// A popular matching exists iff the X3C instance has no exact cover.
Instance gen_pop_x3c(const X3CInstance& x);

// Non-bipartite popular matching instance: vertices with strict preference
// lists over their neighbors.
struct RoommatesInstance {
  std::vector<std::string> vertices;
  std::vector<std::vector<int>> prefs;  // neighbor indices, best first
};

// Adjacency must be symmetric: u lists v iff v lists u.
void validate_roommates(const RoommatesInstance& r);

// One applicant per vertex, one quota-2/2 project per edge; ranks are
// preserved, so matchings correspond bijectively with equal ranks.
Instance gen_pop_from_roommates(const RoommatesInstance& r);

struct RandomSpec {
  unsigned long long seed = 0;
  int applicants = 1;
  int projects = 1;
  int quota_max = 1;
  int list_min = 0;
  int list_max = 1;
};

// Deterministic function of the seed.
Instance gen_random(const RandomSpec& spec);

}  // namespace haq
