// Maximum-weight perfect matching on general graphs via the blossom
// (odd-set shrinking) framework.
#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "haq/instance.hpp"

namespace haq {

// Undirected weighted graph. No self-loops; parallel edges collapse to the
// maximum weight.
class GeneralGraph {
 public:
  GeneralGraph() = default;
  explicit GeneralGraph(int vertex_count) : vertex_count_(vertex_count) {}

  int vertex_count() const { return vertex_count_; }
  // Throws on self-loops or out-of-range endpoints.
  void add_edge(int u, int v, Weight w);
  const std::vector<std::tuple<int, int, Weight>>& edges() const {
    return edges_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<std::tuple<int, int, Weight>> edges_;
  std::vector<std::vector<int>> edge_lookup_;  // adjacency -> edge index
};

struct PerfectMatchingResult {
  Weight weight = 0;
  // Matched pairs (u, v) with u < v, covering every vertex exactly once.
  std::vector<std::pair<int, int>> edges;
};

// A perfect matching of maximum total weight, or nullopt when the graph has
// no perfect matching. Deterministic weight; exact integer arithmetic.
std::optional<PerfectMatchingResult> max_weight_perfect_matching(
    const GeneralGraph& g);

// Maximum-weight matching with as many edges as possible (max-cardinality
// among maximum-weight is *not* implied; cardinality is maximised first).
// Returns mate[v] = partner vertex or -1. Exposed for reuse and tests.
std::vector<int> max_cardinality_max_weight_mates(const GeneralGraph& g);

}  // namespace haq
