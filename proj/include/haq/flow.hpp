// Feasible flow with arc demands and max-cost circulation.
#pragma once

#include <optional>
#include <vector>

#include "haq/instance.hpp"

namespace haq {

struct Arc {
  int tail = 0;
  int head = 0;
  long long demand = 0;
  long long capacity = 0;
  long long cost = 0;
  bool unbounded = false;  // capacity ignored; materialized internally
};

class FlowNetwork {
 public:
  FlowNetwork() = default;
  explicit FlowNetwork(int node_count) : node_count_(node_count) {}

  int node_count() const { return node_count_; }
  // Throws on negative demand, demand > capacity, an unbounded arc carrying
  // a demand, or out-of-range endpoints.
  int add_arc(Arc arc);
  const std::vector<Arc>& arcs() const { return arcs_; }

 private:
  int node_count_ = 0;
  std::vector<Arc> arcs_;
};

// Integral s-t flow with D(e) <= f(e) <= C(e) and conservation at every
// other node, or nullopt. Flows indexed like net.arcs().
std::optional<std::vector<long long>> feasible_flow(const FlowNetwork& net,
                                                    int source, int sink);

struct CirculationResult {
  std::vector<long long> flow;
  long long cost = 0;
};

// Integral circulation within [D, C] maximizing total cost, conservation at
// every node; nullopt when the demands are infeasible.
std::optional<CirculationResult> max_cost_circulation(const FlowNetwork& net);

}  // namespace haq
