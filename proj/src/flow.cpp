#include "haq/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace haq {

int FlowNetwork::add_arc(Arc arc) {
  if (arc.tail < 0 || arc.tail >= node_count_ || arc.head < 0 ||
      arc.head >= node_count_)
    throw std::invalid_argument("arc endpoint out of range");
  if (arc.demand < 0) throw std::invalid_argument("negative arc demand");
  if (arc.unbounded) {
    if (arc.demand != 0)
      throw std::invalid_argument("unbounded arc with nonzero demand");
  } else if (arc.demand > arc.capacity) {
    throw std::invalid_argument("arc demand exceeds capacity");
  }
  arcs_.push_back(arc);
  return static_cast<int>(arcs_.size()) - 1;
}

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

// Residual-graph workhorse shared by both operations. Plain BFS augmenting
// max-flow plus Bellman-Ford negative-cycle canceling; desk scale.
struct Residual {
  struct Edge {
    int to;
    long long cap;
    long long cost;
    int rev;  // index of reverse edge in graph[to]
  };
  std::vector<std::vector<Edge>> graph;

  explicit Residual(int n) : graph(n) {}

  // Returns (node, index) handle of the forward edge.
  std::pair<int, int> add(int from, int to, long long cap, long long cost) {
    graph[from].push_back({to, cap, cost, static_cast<int>(graph[to].size())});
    graph[to].push_back(
        {from, 0, -cost, static_cast<int>(graph[from].size()) - 1});
    return {from, static_cast<int>(graph[from].size()) - 1};
  }

  long long max_flow(int s, int t) {
    long long total = 0;
    const int n = static_cast<int>(graph.size());
    while (true) {
      std::vector<std::pair<int, int>> parent(n, {-1, -1});
      std::vector<bool> seen(n, false);
      std::queue<int> q;
      q.push(s);
      seen[s] = true;
      while (!q.empty() && !seen[t]) {
        int u = q.front();
        q.pop();
        for (int i = 0; i < static_cast<int>(graph[u].size()); ++i) {
          const Edge& e = graph[u][i];
          if (e.cap <= 0 || seen[e.to]) continue;
          seen[e.to] = true;
          parent[e.to] = {u, i};
          q.push(e.to);
        }
      }
      if (!seen[t]) break;
      long long push = kInf;
      for (int v = t; v != s;) {
        auto [u, i] = parent[v];
        push = std::min(push, graph[u][i].cap);
        v = u;
      }
      for (int v = t; v != s;) {
        auto [u, i] = parent[v];
        graph[u][i].cap -= push;
        graph[graph[u][i].to][graph[u][i].rev].cap += push;
        v = u;
      }
      total += push;
    }
    return total;
  }

  // Cancels one negative-cost residual cycle; false when none remain.
  bool cancel_negative_cycle() {
    const int n = static_cast<int>(graph.size());
    std::vector<long long> dist(n, 0);
    std::vector<std::pair<int, int>> pred(n, {-1, -1});
    int cycle_node = -1;
    for (int iter = 0; iter < n; ++iter) {
      cycle_node = -1;
      for (int u = 0; u < n; ++u) {
        for (int i = 0; i < static_cast<int>(graph[u].size()); ++i) {
          const Edge& e = graph[u][i];
          if (e.cap <= 0) continue;
          if (dist[u] + e.cost < dist[e.to]) {
            dist[e.to] = dist[u] + e.cost;
            pred[e.to] = {u, i};
            cycle_node = e.to;
          }
        }
      }
      if (cycle_node == -1) return false;
    }
    // Walk predecessors n times to land inside the cycle.
    int v = cycle_node;
    for (int i = 0; i < n; ++i) v = pred[v].first;
    long long push = kInf;
    int u = v;
    do {
      auto [pu, pi] = pred[u];
      push = std::min(push, graph[pu][pi].cap);
      u = pu;
    } while (u != v);
    u = v;
    do {
      auto [pu, pi] = pred[u];
      graph[pu][pi].cap -= push;
      graph[graph[pu][pi].to][graph[pu][pi].rev].cap += push;
      u = pu;
    } while (u != v);
    return true;
  }
};

long long materialized_capacity(const FlowNetwork& net) {
  long long total = 0;
  for (const Arc& a : net.arcs()) {
    if (!a.unbounded) total += a.capacity;
    total += a.demand;
  }
  return std::max<long long>(total, 1);
}

}  // namespace

std::optional<std::vector<long long>> feasible_flow(const FlowNetwork& net,
                                                    int source, int sink) {
  if (source < 0 || source >= net.node_count() || sink < 0 ||
      sink >= net.node_count() || source == sink)
    throw std::invalid_argument("bad source/sink");
  const long long big = materialized_capacity(net);
  const int n = net.node_count();
  const int super_s = n, super_t = n + 1;
  Residual res(n + 2);

  std::vector<std::pair<int, int>> handles;
  std::vector<long long> excess(n, 0);
  for (const Arc& a : net.arcs()) {
    long long cap = a.unbounded ? big : a.capacity;
    handles.push_back(res.add(a.tail, a.head, cap - a.demand, 0));
    excess[a.head] += a.demand;
    excess[a.tail] -= a.demand;
  }
  // Turn the s-t flow problem into a circulation.
  res.add(sink, source, big, 0);

  long long need = 0;
  for (int v = 0; v < n; ++v) {
    if (excess[v] > 0) {
      res.add(super_s, v, excess[v], 0);
      need += excess[v];
    } else if (excess[v] < 0) {
      res.add(v, super_t, -excess[v], 0);
    }
  }
  if (res.max_flow(super_s, super_t) != need) return std::nullopt;

  std::vector<long long> flow(net.arcs().size());
  for (size_t k = 0; k < net.arcs().size(); ++k) {
    auto [u, i] = handles[k];
    const auto& e = res.graph[u][i];
    long long used = res.graph[e.to][e.rev].cap;  // residual of reverse
    flow[k] = net.arcs()[k].demand + used;
  }
  return flow;
}

std::optional<CirculationResult> max_cost_circulation(const FlowNetwork& net) {
  const long long big = materialized_capacity(net);
  const int n = net.node_count();
  const int super_s = n, super_t = n + 1;
  Residual res(n + 2);

  std::vector<std::pair<int, int>> handles;
  std::vector<long long> excess(n, 0);
  for (const Arc& a : net.arcs()) {
    long long cap = a.unbounded ? big : a.capacity;
    // Negated costs: max-cost becomes min-cost.
    handles.push_back(res.add(a.tail, a.head, cap - a.demand, -a.cost));
    excess[a.head] += a.demand;
    excess[a.tail] -= a.demand;
  }
  long long need = 0;
  for (int v = 0; v < n; ++v) {
    if (excess[v] > 0) {
      res.add(super_s, v, excess[v], 0);
      need += excess[v];
    } else if (excess[v] < 0) {
      res.add(v, super_t, -excess[v], 0);
    }
  }
  if (res.max_flow(super_s, super_t) != need) return std::nullopt;
  while (res.cancel_negative_cycle()) {
  }

  CirculationResult result;
  result.flow.resize(net.arcs().size());
  for (size_t k = 0; k < net.arcs().size(); ++k) {
    auto [u, i] = handles[k];
    const auto& e = res.graph[u][i];
    long long used = res.graph[e.to][e.rev].cap;
    result.flow[k] = net.arcs()[k].demand + used;
    result.cost += result.flow[k] * net.arcs()[k].cost;
  }
  return result;
}

}  // namespace haq
