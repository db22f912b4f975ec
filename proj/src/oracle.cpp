#include "haq/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace haq {

namespace {

void check_guard(const Instance& inst, const OracleLimits& limits) {
  if (limits.unbounded) return;
  if (inst.applicant_count() > limits.max_applicants ||
      inst.project_count() > limits.max_projects)
    throw guard_error(
        "oracle guard exceeded (n=" + std::to_string(inst.applicant_count()) +
        ", m=" + std::to_string(inst.project_count()) +
        "); raise the limits to override");
}

struct Enumerator {
  const Instance& inst;
  const std::function<bool(const Matching&)>& visit;
  std::vector<int> assign;
  std::vector<int> load;
  // remaining[p]: applicants not yet placed that list p. Used for the sound
  // prune: an already-touched project that can no longer reach its lower
  // quota kills the whole subtree.
  std::vector<int> remaining;
  bool stopped = false;

  bool leaf_feasible() const {
    for (int p = 0; p < inst.project_count(); ++p)
      if (load[p] != 0 && load[p] < inst.project(p).lower) return false;
    return true;
  }

  void recurse(int a) {
    if (stopped) return;
    if (a == inst.applicant_count()) {
      if (leaf_feasible() && !visit(Matching(assign))) stopped = true;
      return;
    }
    for (int p : inst.prefs(a)) --remaining[p];

    // Option 1: leave a unmatched.
    if (viable()) recurse(a + 1);
    // Option 2: each acceptable project in preference order.
    for (int p : inst.prefs(a)) {
      if (stopped) break;
      if (load[p] == inst.project(p).upper) continue;
      ++load[p];
      assign[a] = p;
      if (viable()) recurse(a + 1);
      assign[a] = kUnmatched;
      --load[p];
    }

    for (int p : inst.prefs(a)) ++remaining[p];
  }

  // No completion of the current partial assignment can fix a project that
  // is already open but can never reach its lower quota.
  bool viable() const {
    for (int p = 0; p < inst.project_count(); ++p)
      if (load[p] != 0 && load[p] + remaining[p] < inst.project(p).lower)
        return false;
    return true;
  }
};

}  // namespace

void enumerate_feasible_matchings(
    const Instance& inst, const OracleLimits& limits,
    const std::function<bool(const Matching&)>& visit) {
  check_guard(inst, limits);
  Enumerator e{inst, visit};
  e.assign.assign(inst.applicant_count(), kUnmatched);
  e.load.assign(inst.project_count(), 0);
  e.remaining.assign(inst.project_count(), 0);
  for (int p = 0; p < inst.project_count(); ++p)
    e.remaining[p] = static_cast<int>(inst.adjacent_applicants(p).size());
  e.recurse(0);
}

std::vector<Matching> all_feasible_matchings(const Instance& inst,
                                             const OracleLimits& limits) {
  std::vector<Matching> out;
  enumerate_feasible_matchings(inst, limits, [&](const Matching& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::optional<Matching> oracle_verify(const Instance& inst, const Matching& m,
                                      VerifyMode mode,
                                      const OracleLimits& limits) {
  if (!is_feasible(inst, m))
    throw std::invalid_argument("oracle_verify requires a feasible matching");
  std::optional<Matching> witness;
  enumerate_feasible_matchings(inst, limits, [&](const Matching& cand) {
    bool beats = mode == VerifyMode::kPopular
                     ? popularity_margin(inst, cand, m) >= 1
                     : dominates(inst, cand, m);
    if (beats) {
      witness = cand;
      return false;
    }
    return true;
  });
  return witness;
}

namespace {

// Rank vectors make the popularity tournament O(n) per pair.
std::vector<int> rank_vector(const Instance& inst, const Matching& m) {
  std::vector<int> r(inst.applicant_count());
  for (int a = 0; a < inst.applicant_count(); ++a)
    r[a] = rank_of(inst, a, m.at(a));
  return r;
}

int margin_from_ranks(const std::vector<int>& r2, const std::vector<int>& r1) {
  int margin = 0;
  for (size_t a = 0; a < r2.size(); ++a) {
    if (r2[a] < r1[a])
      ++margin;
    else if (r1[a] < r2[a])
      --margin;
  }
  return margin;
}

}  // namespace

std::optional<Matching> oracle_exists(const Instance& inst, ExistsMode mode,
                                      const OracleLimits& limits) {
  std::vector<Matching> all = all_feasible_matchings(inst, limits);

  if (mode == ExistsMode::kPerfectPareto) {
    for (const Matching& m : all) {
      if (m.matched_count() != inst.applicant_count()) continue;
      bool dominated = false;
      for (const Matching& other : all)
        if (dominates(inst, other, m)) {
          dominated = true;
          break;
        }
      if (!dominated) return m;
    }
    return std::nullopt;
  }

  std::vector<std::vector<int>> ranks;
  ranks.reserve(all.size());
  std::vector<long long> rank_sum;
  for (const Matching& m : all) {
    ranks.push_back(rank_vector(inst, m));
    rank_sum.push_back(
        std::accumulate(ranks.back().begin(), ranks.back().end(), 0LL));
  }
  // Scanning candidates with small total rank first finds beaters quickly;
  // the returned matching is still deterministic (stable order).
  std::vector<int> order(all.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return rank_sum[a] < rank_sum[b]; });
  for (int i : order) {
    bool beaten = false;
    for (int j : order)
      if (margin_from_ranks(ranks[j], ranks[i]) >= 1) {
        beaten = true;
        break;
      }
    if (!beaten) return all[i];
  }
  return std::nullopt;
}

std::pair<Weight, Matching> oracle_max_weight(const WeightedInstance& winst,
                                              const OracleLimits& limits) {
  Weight best = -1;
  Matching best_matching;
  enumerate_feasible_matchings(
      winst.base(), limits, [&](const Matching& m) {
        Weight w = matching_weight(winst, m);
        if (w > best) {
          best = w;
          best_matching = m;
        }
        return true;
      });
  return {best, best_matching};
}

}  // namespace haq
