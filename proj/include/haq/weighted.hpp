// Weighted bipartite instances and the reductions that turn Pareto/popularity
// questions into maximum-weight matching questions.
#pragma once

#include <optional>
#include <vector>

#include "haq/instance.hpp"

namespace haq {

// The bipartite graph and quotas of an Instance with nonnegative integer
// edge weights; preference order is irrelevant here, only adjacency.
class WeightedInstance {
 public:
  WeightedInstance() = default;
  // weights[a] is aligned with base.prefs(a). Throws on shape mismatch or a
  // negative weight.
  WeightedInstance(Instance base, std::vector<std::vector<Weight>> weights);
  static WeightedInstance uniform(Instance base, Weight w);

  const Instance& base() const { return base_; }
  Weight weight_at(int a, int pref_pos) const { return weights_[a][pref_pos]; }
  // Throws if (a, p) is not an edge.
  Weight edge_weight(int a, int p) const;
  const std::vector<std::vector<Weight>>& weights() const { return weights_; }
  // Maximum edge weight W (0 when there are no edges).
  Weight max_weight() const { return max_weight_; }

 private:
  Instance base_;
  std::vector<std::vector<Weight>> weights_;
  Weight max_weight_ = 0;
};

Weight matching_weight(const WeightedInstance& winst, const Matching& m);

enum class ReduceMode { kPopv, kPov };

struct ThresholdedReduction {
  WeightedInstance winst;
  Weight threshold = 0;
  ReduceMode source = ReduceMode::kPopv;
};

// Edge (a, i-th choice) gets weight (k - i) + m*n where k = |N_a|. Every
// maximum weight matching of the result is a maximum-cardinality Pareto
// optimal matching of inst.
WeightedInstance reduce_perpo(const Instance& inst);

// popv: weights 2/1/0 by vote against M(a), 1 on unmatched applicants'
// edges, threshold n - |U(M)|. pov: weights n+1/n/0 and 1, threshold
// n*(n - |U(M)|). A matching beats the threshold iff it is more popular
// than / dominates M.
ThresholdedReduction reduce_verify(const Instance& inst, const Matching& m,
                                   ReduceMode mode);

struct KernelLimits {
  int max_applicants = 16;  // 2^n subset sweep guard
};

// Unary-weight kernelization: for every applicant subset A' and achievable
// per-subset weight w', at most n fully-adjacent quota-compatible projects
// are kept. Preserves the maximum achievable matching weight. The output
// has at most n * 2^n * (n*W + 1) projects.
WeightedInstance kernelize(const WeightedInstance& winst,
                           const KernelLimits& limits = {});

}  // namespace haq
