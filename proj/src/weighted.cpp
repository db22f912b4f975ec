#include "haq/weighted.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace haq {

WeightedInstance::WeightedInstance(Instance base,
                                   std::vector<std::vector<Weight>> weights)
    : base_(std::move(base)), weights_(std::move(weights)) {
  if (static_cast<int>(weights_.size()) != base_.applicant_count())
    throw std::invalid_argument("weight rows do not match applicant count");
  for (int a = 0; a < base_.applicant_count(); ++a) {
    if (weights_[a].size() != base_.prefs(a).size())
      throw std::invalid_argument("weight row does not match list length");
    for (Weight w : weights_[a]) {
      if (w < 0) throw std::invalid_argument("negative edge weight");
      max_weight_ = std::max(max_weight_, w);
    }
  }
}

WeightedInstance WeightedInstance::uniform(Instance base, Weight w) {
  std::vector<std::vector<Weight>> weights;
  weights.reserve(base.applicant_count());
  for (int a = 0; a < base.applicant_count(); ++a)
    weights.emplace_back(base.prefs(a).size(), w);
  return WeightedInstance(std::move(base), std::move(weights));
}

Weight WeightedInstance::edge_weight(int a, int p) const {
  int pos = base_.rank_in_list(a, p);
  if (pos < 0)
    throw std::invalid_argument("edge_weight queried for a non-edge");
  return weights_[a][pos];
}

Weight matching_weight(const WeightedInstance& winst, const Matching& m) {
  Weight total = 0;
  for (int a = 0; a < m.size(); ++a)
    if (m.at(a) != kUnmatched) total += winst.edge_weight(a, m.at(a));
  return total;
}

WeightedInstance reduce_perpo(const Instance& inst) {
  const Weight mn = static_cast<Weight>(inst.project_count()) *
                    static_cast<Weight>(inst.applicant_count());
  std::vector<std::vector<Weight>> weights(inst.applicant_count());
  for (int a = 0; a < inst.applicant_count(); ++a) {
    const Weight k = static_cast<Weight>(inst.prefs(a).size());
    for (Weight i = 1; i <= k; ++i) weights[a].push_back((k - i) + mn);
  }
  return WeightedInstance(inst, std::move(weights));
}

ThresholdedReduction reduce_verify(const Instance& inst, const Matching& m,
                                   ReduceMode mode) {
  if (!is_feasible(inst, m))
    throw std::invalid_argument("reduce_verify requires a feasible matching");
  const Weight n = inst.applicant_count();
  const Weight matched = m.matched_count();
  std::vector<std::vector<Weight>> weights(inst.applicant_count());
  for (int a = 0; a < inst.applicant_count(); ++a) {
    const auto& list = inst.prefs(a);
    weights[a].reserve(list.size());
    if (!m.matched(a)) {
      weights[a].assign(list.size(), 1);
      continue;
    }
    const int cur = inst.rank_in_list(a, m.at(a));
    for (size_t pos = 0; pos < list.size(); ++pos) {
      int cmp = static_cast<int>(pos) < cur ? 1 : (static_cast<int>(pos) == cur ? 0 : -1);
      Weight w;
      if (mode == ReduceMode::kPopv)
        w = cmp > 0 ? 2 : (cmp == 0 ? 1 : 0);
      else
        w = cmp > 0 ? n + 1 : (cmp == 0 ? n : 0);
      weights[a].push_back(w);
    }
  }
  Weight threshold =
      mode == ReduceMode::kPopv ? matched : n * matched;
  return ThresholdedReduction{
      WeightedInstance(inst, std::move(weights)), threshold, mode};
}

WeightedInstance kernelize(const WeightedInstance& winst,
                           const KernelLimits& limits) {
  const Instance& inst = winst.base();
  const int n = inst.applicant_count();
  const int m = inst.project_count();
  const Weight w_max = winst.max_weight();

  if (n > limits.max_applicants)
    throw std::invalid_argument("kernelize: applicant count exceeds guard");

  // Already small enough to be its own kernel.
  if (static_cast<Weight>(m) <= w_max * (Weight{1} << n)) return winst;

  std::vector<bool> marked(m, false);
  // Subsets in increasing-size order, markers assigned in instance order.
  std::vector<int> order(1 << n);
  for (int mask = 0; mask < (1 << n); ++mask) order[mask] = mask;
  std::stable_sort(order.begin(), order.end(), [](int a, int b) {
    return __builtin_popcount(a) < __builtin_popcount(b);
  });

  for (int mask : order) {
    if (mask == 0) continue;
    const int size = __builtin_popcount(mask);
    std::map<Weight, int> marks_used;
    for (int p = 0; p < m; ++p) {
      if (inst.project(p).lower > size || inst.project(p).upper < size)
        continue;
      Weight sum = 0;
      bool all_adjacent = true;
      for (int a = 0; a < n && all_adjacent; ++a) {
        if (!(mask & (1 << a))) continue;
        if (!inst.accepts(a, p))
          all_adjacent = false;
        else
          sum += winst.edge_weight(a, p);
      }
      if (!all_adjacent) continue;
      int& used = marks_used[sum];
      if (used < n) {
        marked[p] = true;
        ++used;
      }
    }
  }

  std::vector<int> keep;
  for (int p = 0; p < m; ++p)
    if (marked[p]) keep.push_back(p);

  std::vector<ProjectRecord> projects;
  std::vector<int> remap(m, -1);
  for (int p : keep) {
    remap[p] = static_cast<int>(projects.size());
    projects.push_back(inst.project(p));
  }
  std::vector<std::string> applicants;
  std::vector<std::vector<std::string>> prefs(n);
  std::vector<std::vector<Weight>> weights(n);
  for (int a = 0; a < n; ++a) {
    applicants.push_back(inst.applicant_id(a));
    const auto& list = inst.prefs(a);
    for (size_t pos = 0; pos < list.size(); ++pos) {
      if (remap[list[pos]] < 0) continue;
      prefs[a].push_back(inst.project(list[pos]).id);
      weights[a].push_back(winst.weight_at(a, static_cast<int>(pos)));
    }
  }
  return WeightedInstance(
      Instance(std::move(applicants), std::move(projects), std::move(prefs)),
      std::move(weights));
}

}  // namespace haq
