#include "haq/instance.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace haq {

namespace {

void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

Instance::Instance(std::vector<std::string> applicant_ids,
                   std::vector<ProjectRecord> projects,
                   std::vector<std::vector<std::string>> pref_ids)
    : applicants_(std::move(applicant_ids)), projects_(std::move(projects)) {
  if (pref_ids.size() != applicants_.size())
    fail("preference list count does not match applicant count");

  for (int a = 0; a < applicant_count(); ++a) {
    if (applicants_[a].empty()) fail("empty applicant identifier");
    if (!applicant_lookup_.emplace(applicants_[a], a).second)
      fail("duplicate applicant identifier: " + applicants_[a]);
  }
  for (int p = 0; p < project_count(); ++p) {
    const ProjectRecord& rec = projects_[p];
    if (rec.id.empty()) fail("empty project identifier");
    if (!project_lookup_.emplace(rec.id, p).second)
      fail("duplicate project identifier: " + rec.id);
    if (rec.lower < 1)
      fail("project " + rec.id + ": lower quota must be at least 1");
    if (rec.lower > rec.upper)
      fail("project " + rec.id + ": lower quota exceeds upper quota");
  }

  prefs_.assign(applicant_count(), {});
  rank_table_.assign(applicant_count(),
                     std::vector<int>(project_count(), -1));
  adj_applicants_.assign(project_count(), {});
  for (int a = 0; a < applicant_count(); ++a) {
    prefs_[a].reserve(pref_ids[a].size());
    for (const std::string& pid : pref_ids[a]) {
      auto it = project_lookup_.find(pid);
      if (it == project_lookup_.end())
        fail("applicant " + applicants_[a] + " lists unknown project " + pid);
      int p = it->second;
      if (rank_table_[a][p] >= 0)
        fail("applicant " + applicants_[a] + " lists project " + pid +
             " twice");
      rank_table_[a][p] = static_cast<int>(prefs_[a].size());
      prefs_[a].push_back(p);
      adj_applicants_[p].push_back(a);
    }
  }
}

int Instance::applicant_index(const std::string& id) const {
  auto it = applicant_lookup_.find(id);
  return it == applicant_lookup_.end() ? -1 : it->second;
}

int Instance::project_index(const std::string& id) const {
  auto it = project_lookup_.find(id);
  return it == project_lookup_.end() ? -1 : it->second;
}

int Instance::lmax() const {
  int r = 0;
  for (const auto& p : projects_) r = std::max(r, p.lower);
  return r;
}

int Instance::umax() const {
  int r = 0;
  for (const auto& p : projects_) r = std::max(r, p.upper);
  return r;
}

void validate_instance(const Instance& inst) {
  // The constructor is the single source of the invariants; rebuilding
  // re-runs every check.
  std::vector<std::string> applicants;
  std::vector<std::vector<std::string>> prefs;
  for (int a = 0; a < inst.applicant_count(); ++a) {
    applicants.push_back(inst.applicant_id(a));
    std::vector<std::string> row;
    for (int p : inst.prefs(a)) row.push_back(inst.project(p).id);
    prefs.push_back(std::move(row));
  }
  Instance rebuilt(std::move(applicants), inst.projects(), std::move(prefs));
  (void)rebuilt;
}

Matching Matching::empty(const Instance& inst) {
  return Matching(std::vector<int>(inst.applicant_count(), kUnmatched));
}

Matching Matching::from_pairs(
    const Instance& inst,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<int> assign(inst.applicant_count(), kUnmatched);
  for (const auto& [aid, pid] : pairs) {
    int a = inst.applicant_index(aid);
    if (a < 0) fail("unknown applicant identifier: " + aid);
    int p = inst.project_index(pid);
    if (p < 0) fail("unknown project identifier: " + pid);
    if (assign[a] != kUnmatched)
      fail("applicant " + aid + " assigned more than once");
    assign[a] = p;
  }
  return Matching(std::move(assign));
}

int Matching::matched_count() const {
  int c = 0;
  for (int x : assign_)
    if (x != kUnmatched) ++c;
  return c;
}

std::vector<int> Matching::project_load(const Instance& inst) const {
  std::vector<int> load(inst.project_count(), 0);
  for (int a = 0; a < size(); ++a)
    if (assign_[a] != kUnmatched) ++load[assign_[a]];
  return load;
}

bool is_feasible(const Instance& inst, const Matching& m) {
  if (m.size() != inst.applicant_count())
    fail("matching size does not match applicant count");
  std::vector<int> load(inst.project_count(), 0);
  for (int a = 0; a < m.size(); ++a) {
    int p = m.at(a);
    if (p == kUnmatched) continue;
    if (p < 0 || p >= inst.project_count())
      fail("matching references unknown project index");
    if (!inst.accepts(a, p)) return false;
    ++load[p];
  }
  for (int p = 0; p < inst.project_count(); ++p) {
    if (load[p] == 0) continue;
    if (load[p] < inst.project(p).lower || load[p] > inst.project(p).upper)
      return false;
  }
  return true;
}

int rank_of(const Instance& inst, int a, int x) {
  if (x == kUnmatched) return static_cast<int>(inst.prefs(a).size()) + 1;
  int r = inst.rank_in_list(a, x);
  if (r < 0)
    fail("project " + inst.project(x).id + " is unacceptable to applicant " +
         inst.applicant_id(a));
  return r + 1;
}

int popularity_margin(const Instance& inst, const Matching& m2,
                      const Matching& m1) {
  if (!is_feasible(inst, m2) || !is_feasible(inst, m1))
    fail("popularity_margin requires feasible matchings");
  int margin = 0;
  for (int a = 0; a < inst.applicant_count(); ++a) {
    int r2 = rank_of(inst, a, m2.at(a));
    int r1 = rank_of(inst, a, m1.at(a));
    if (r2 < r1)
      ++margin;
    else if (r1 < r2)
      --margin;
  }
  return margin;
}

bool dominates(const Instance& inst, const Matching& m2, const Matching& m1) {
  if (!is_feasible(inst, m2) || !is_feasible(inst, m1))
    fail("dominates requires feasible matchings");
  bool better = false;
  for (int a = 0; a < inst.applicant_count(); ++a) {
    int r2 = rank_of(inst, a, m2.at(a));
    int r1 = rank_of(inst, a, m1.at(a));
    if (r2 > r1) return false;
    if (r2 < r1) better = true;
  }
  return better;
}

}  // namespace haq
