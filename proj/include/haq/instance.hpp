// Core data model: applicants with strict preference lists, projects with
// lower/upper quotas, and matchings with open/closed project semantics.
#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace haq {

using Weight = long long;

// Sentinel for "applicant keeps no project". Never a pseudo-project, so
// project loads count real assignments only.
inline constexpr int kUnmatched = -1;

struct ProjectRecord {
  std::string id;
  int lower = 1;
  int upper = 1;
};

// Immutable after construction; safe to share across threads.
class Instance {
 public:
  Instance() = default;
  // Throws std::invalid_argument on any invariant violation: duplicate
  // identifiers, lower > upper or lower < 1, unknown project in a
  // preference list, duplicate entry within one list.
  Instance(std::vector<std::string> applicant_ids,
           std::vector<ProjectRecord> projects,
           std::vector<std::vector<std::string>> pref_ids);

  int applicant_count() const { return static_cast<int>(applicants_.size()); }
  int project_count() const { return static_cast<int>(projects_.size()); }

  const std::string& applicant_id(int a) const { return applicants_[a]; }
  const ProjectRecord& project(int p) const { return projects_[p]; }
  const std::vector<ProjectRecord>& projects() const { return projects_; }

  // -1 when the identifier is unknown.
  int applicant_index(const std::string& id) const;
  int project_index(const std::string& id) const;

  // Acceptable projects of applicant a, best first.
  const std::vector<int>& prefs(int a) const { return prefs_[a]; }
  // 0-based position of p in a's list, -1 if unacceptable.
  int rank_in_list(int a, int p) const { return rank_table_[a][p]; }
  bool accepts(int a, int p) const { return rank_table_[a][p] >= 0; }
  // Applicants listing project p, in applicant order.
  const std::vector<int>& adjacent_applicants(int p) const {
    return adj_applicants_[p];
  }

  int lmax() const;
  int umax() const;

 private:
  std::vector<std::string> applicants_;
  std::vector<ProjectRecord> projects_;
  std::vector<std::vector<int>> prefs_;
  std::vector<std::vector<int>> rank_table_;      // applicant x project
  std::vector<std::vector<int>> adj_applicants_;  // project -> applicants
  std::unordered_map<std::string, int> applicant_lookup_;
  std::unordered_map<std::string, int> project_lookup_;
};

// Re-runs the construction-time invariant checks.
void validate_instance(const Instance& inst);

// Partial assignment applicant -> project-or-unmatched. May violate quota
// feasibility (is_feasible reports that); identifiers always resolve.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<int> assignment)
      : assign_(std::move(assignment)) {}

  static Matching empty(const Instance& inst);
  // Throws on unknown identifiers or a duplicated applicant.
  static Matching from_pairs(
      const Instance& inst,
      const std::vector<std::pair<std::string, std::string>>& pairs);

  int at(int a) const { return assign_[a]; }
  int size() const { return static_cast<int>(assign_.size()); }
  bool matched(int a) const { return assign_[a] != kUnmatched; }
  int matched_count() const;

  std::vector<int>& raw() { return assign_; }
  const std::vector<int>& raw() const { return assign_; }

  // Per-project assignee counts.
  std::vector<int> project_load(const Instance& inst) const;

  bool operator==(const Matching&) const = default;

 private:
  std::vector<int> assign_;
};

// True iff every assignment is acceptable and every project is closed or
// within its quota interval. Throws on size mismatch / out-of-range indices.
bool is_feasible(const Instance& inst, const Matching& m);

// 1-based position in a's list; kUnmatched maps to |N_a| + 1 (strictly
// last). Throws if x is a project unacceptable to a.
int rank_of(const Instance& inst, int a, int x);

// (#applicants preferring m2) - (#applicants preferring m1). Positive means
// m2 is more popular. Throws if either matching is infeasible.
int popularity_margin(const Instance& inst, const Matching& m2,
                      const Matching& m1);

// True iff no applicant is worse in m2 and at least one is strictly better.
bool dominates(const Instance& inst, const Matching& m2, const Matching& m1);

}  // namespace haq
