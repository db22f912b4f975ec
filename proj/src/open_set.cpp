#include "haq/open_set.hpp"

#include <algorithm>
#include <stdexcept>

#include "haq/oracle.hpp"

namespace haq {

OpenSet OpenSet::of(const Instance& inst, const std::vector<std::string>& ids) {
  std::vector<int> idx;
  for (const std::string& id : ids) {
    int p = inst.project_index(id);
    if (p < 0) throw std::invalid_argument("unknown project in open set: " + id);
    idx.push_back(p);
  }
  return of_indices(inst, std::move(idx));
}

OpenSet OpenSet::of_indices(const Instance& inst, std::vector<int> indices) {
  for (int p : indices)
    if (p < 0 || p >= inst.project_count())
      throw std::invalid_argument("open set project index out of range");
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return OpenSet{std::move(indices)};
}

bool OpenSet::contains(int p) const {
  return std::binary_search(projects.begin(), projects.end(), p);
}

std::optional<Matching> dominating_with_open_set(const Instance& inst,
                                                 const Matching& m,
                                                 const OpenSet& open) {
  if (!is_feasible(inst, m))
    throw std::invalid_argument(
        "dominating_with_open_set requires a feasible matching");
  const int n = inst.applicant_count();
  const int k = static_cast<int>(open.projects.size());

  for (int designated = 0; designated < n; ++designated) {
    // Node layout: applicants, open projects, p_bottom, s, t.
    const int node_pbot = n + k;
    const int node_s = node_pbot + 1;
    const int node_t = node_s + 1;
    FlowNetwork net(node_t + 1);
    std::vector<std::pair<int, int>> applicant_arcs;  // (arc index, project)

    std::vector<int> open_pos(inst.project_count(), -1);
    for (int i = 0; i < k; ++i) open_pos[open.projects[i]] = i;

    bool designated_has_option = false;
    for (int a = 0; a < n; ++a) {
      net.add_arc({node_s, a, 1, 1, 0, false});
      const int cur_rank = rank_of(inst, a, m.at(a));
      for (int p : inst.prefs(a)) {
        if (open_pos[p] < 0) continue;
        bool strictly_better = rank_of(inst, a, p) < cur_rank;
        bool keep_current = a != designated && m.at(a) == p;
        if (!strictly_better && !keep_current) continue;
        if (a == designated) designated_has_option = true;
        int arc = net.add_arc({a, n + open_pos[p], 0, 1, 0, false});
        applicant_arcs.emplace_back(arc, p);
      }
      if (a != designated && !m.matched(a))
        net.add_arc({a, node_pbot, 0, 1, 0, false});
    }
    if (!designated_has_option) continue;
    for (int i = 0; i < k; ++i) {
      const ProjectRecord& rec = inst.project(open.projects[i]);
      net.add_arc({n + i, node_t, rec.lower, rec.upper, 0, false});
    }
    net.add_arc({node_pbot, node_t, 0, 0, 0, true});

    std::optional<std::vector<long long>> flow =
        feasible_flow(net, node_s, node_t);
    if (!flow) continue;

    std::vector<int> assign(n, kUnmatched);
    for (auto [arc, p] : applicant_arcs)
      if ((*flow)[arc] > 0) assign[net.arcs()[arc].tail] = p;
    return Matching(std::move(assign));
  }
  return std::nullopt;
}

namespace {

std::optional<std::pair<Weight, Matching>> circulation_solve(
    const WeightedInstance& winst, const std::vector<int>& open_projects,
    const std::vector<bool>& forced) {
  const Instance& inst = winst.base();
  const int n = inst.applicant_count();
  const int k = static_cast<int>(open_projects.size());
  const int node_pbot = n + k;
  const int node_s = node_pbot + 1;
  FlowNetwork net(node_s + 1);

  std::vector<int> open_pos(inst.project_count(), -1);
  for (int i = 0; i < k; ++i) open_pos[open_projects[i]] = i;

  std::vector<std::pair<int, int>> applicant_arcs;
  for (int a = 0; a < n; ++a) {
    for (int p : inst.prefs(a)) {
      if (open_pos[p] < 0) continue;
      int arc = net.add_arc({a, n + open_pos[p], 0, 1,
                             winst.edge_weight(a, p), false});
      applicant_arcs.emplace_back(arc, p);
    }
    net.add_arc({a, node_pbot, 0, 1, 0, false});
    net.add_arc({node_s, a, 1, 1, 0, false});
  }
  for (int i = 0; i < k; ++i) {
    const ProjectRecord& rec = inst.project(open_projects[i]);
    net.add_arc({n + i, node_s,
                 forced[open_projects[i]] ? rec.lower : 0,
                 rec.upper, 0, false});
  }
  net.add_arc({node_pbot, node_s, 0, n, 0, false});

  std::optional<CirculationResult> res = max_cost_circulation(net);
  if (!res) return std::nullopt;

  std::vector<int> assign(n, kUnmatched);
  for (auto [arc, p] : applicant_arcs)
    if (res->flow[arc] > 0) assign[net.arcs()[arc].tail] = p;
  return std::make_pair(res->cost, Matching(std::move(assign)));
}

}  // namespace

std::optional<std::pair<Weight, Matching>> max_weight_with_open_set(
    const WeightedInstance& winst, const OpenSet& open) {
  const Instance& inst = winst.base();
  std::vector<bool> forced(inst.project_count(), false);
  for (int p : open.projects) forced[p] = true;
  std::optional<std::pair<Weight, Matching>> res =
      circulation_solve(winst, open.projects, forced);
  if (!res) return std::nullopt;
  // "Exactly open" can still fail for unit lower quotas when a project got
  // no assignee; the circulation demand of l_p >= 1 rules that out already.
  return res;
}

std::pair<Weight, Matching> max_weight_fpt(const WeightedInstance& winst,
                                           const FptLimits& limits,
                                           FptStats* stats) {
  const Instance& inst = winst.base();
  std::vector<int> quota_projects;
  std::vector<int> free_projects;
  for (int p = 0; p < inst.project_count(); ++p) {
    if (inst.project(p).lower > 1)
      quota_projects.push_back(p);
    else
      free_projects.push_back(p);
  }
  const int mq = static_cast<int>(quota_projects.size());
  if (mq > limits.max_quota_projects)
    throw guard_error("max_weight_fpt: 2^{m_quota} sweep guard exceeded (" +
                      std::to_string(mq) + " quota projects)");

  Weight best_weight = -1;
  Matching best;
  for (unsigned long long mask = 0; mask < (1ULL << mq); ++mask) {
    std::vector<int> open_projects = free_projects;
    std::vector<bool> forced(inst.project_count(), false);
    for (int i = 0; i < mq; ++i) {
      if (mask & (1ULL << i)) {
        open_projects.push_back(quota_projects[i]);
        forced[quota_projects[i]] = true;
      }
    }
    std::sort(open_projects.begin(), open_projects.end());
    if (stats) ++stats->subproblems;
    std::optional<std::pair<Weight, Matching>> res =
        circulation_solve(winst, open_projects, forced);
    if (res && res->first > best_weight) {
      best_weight = res->first;
      best = std::move(res->second);
    }
  }
  if (best_weight < 0) {
    // No subproblem was feasible; cannot happen since the empty quota
    // subset with all applicants unmatched is always a circulation.
    throw std::logic_error("max_weight_fpt found no feasible subproblem");
  }
  return {best_weight, best};
}

std::optional<Matching> solve_fpt(const Instance& inst, SolveMode mode,
                                  const std::optional<Matching>& m,
                                  const FptLimits& limits) {
  if (mode == SolveMode::kPopv || mode == SolveMode::kPov) {
    if (!m)
      throw std::invalid_argument(
          "verification mode requires an input matching");
    ThresholdedReduction red = reduce_verify(
        inst, *m,
        mode == SolveMode::kPopv ? ReduceMode::kPopv : ReduceMode::kPov);
    auto [weight, matching] = max_weight_fpt(red.winst, limits);
    if (weight > red.threshold) return matching;
    return std::nullopt;
  }
  auto [weight, matching] = max_weight_fpt(reduce_perpo(inst), limits);
  if (matching.matched_count() < inst.applicant_count()) return std::nullopt;
  return matching;
}

}  // namespace haq
