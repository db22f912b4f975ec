#include "haq/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace haq {

int X3CInstance::occurrences(int element) const {
  int c = 0;
  for (const auto& t : sets)
    for (int e : t)
      if (e == element) ++c;
  return c;
}

void validate_x3c(const X3CInstance& x) {
  if (x.elements.size() % 3 != 0)
    throw std::invalid_argument("x3c element count must be divisible by 3");
  for (const auto& t : x.sets) {
    for (int e : t)
      if (e < 0 || e >= static_cast<int>(x.elements.size()))
        throw std::invalid_argument("x3c set references unknown element");
    if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
      throw std::invalid_argument("x3c set members must be distinct");
  }
}

bool x3c_normalized(const X3CInstance& x) {
  for (int e = 0; e < static_cast<int>(x.elements.size()); ++e)
    if (x.occurrences(e) != 3) return false;
  return (x.elements.size() / 3) % 2 == 1;
}

X3CInstance normalize_x3c(const X3CInstance& x) {
  validate_x3c(x);
  X3CInstance out = x;

  // Deficiency slots: one per missing occurrence. Their total is always a
  // multiple of three (3|X| - 3|T|).
  std::vector<int> slots;
  for (int e = 0; e < static_cast<int>(out.elements.size()); ++e) {
    int occ = out.occurrences(e);
    if (occ > 3)
      throw std::invalid_argument("element " + out.elements[e] +
                                  " appears in more than three sets");
    for (int i = occ; i < 3; ++i) slots.push_back(e);
  }
  if (slots.size() % 3 != 0)
    throw std::logic_error("x3c deficiency not divisible by three");

  int gadget = 0;
  auto fresh = [&](const std::string& tag) {
    out.elements.push_back("+" + tag + std::to_string(gadget));
    return static_cast<int>(out.elements.size()) - 1;
  };

  // For each slot triple (x, y, z): fresh f1, f2, f3 and sets {x,f1,f2},
  // {y,f2,f3}, {z,f3,f1}, {f1,f2,f3}. Any cover using a booster set strands
  // a fresh element, so every cover takes the pure set; existence is
  // preserved exactly and all four fresh occurrences land on 3.
  for (size_t i = 0; i < slots.size(); i += 3) {
    int f1 = fresh("f"), f2 = fresh("f"), f3 = fresh("f");
    ++gadget;
    out.sets.push_back({slots[i], f1, f2});
    out.sets.push_back({slots[i + 1], f2, f3});
    out.sets.push_back({slots[i + 2], f3, f1});
    out.sets.push_back({f1, f2, f3});
  }

  // Parity block: three fresh elements covered by three copies of the same
  // set. Flips the parity of |X|/3 without affecting cover existence.
  if ((out.elements.size() / 3) % 2 == 0) {
    int g1 = fresh("g"), g2 = fresh("g"), g3 = fresh("g");
    ++gadget;
    for (int c = 0; c < 3; ++c) out.sets.push_back({g1, g2, g3});
  }
  return out;
}

bool check_x3c_cover(const X3CInstance& x, const std::vector<int>& cover) {
  std::vector<int> hit(x.elements.size(), 0);
  for (int idx : cover) {
    if (idx < 0 || idx >= static_cast<int>(x.sets.size())) return false;
    for (int e : x.sets[idx]) ++hit[e];
  }
  return std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; });
}

namespace {

bool x3c_search(const X3CInstance& x, std::vector<int>& covered,
                std::vector<int>& chosen) {
  int next = -1;
  for (int e = 0; e < static_cast<int>(x.elements.size()); ++e)
    if (!covered[e]) {
      next = e;
      break;
    }
  if (next < 0) return true;
  for (int idx = 0; idx < static_cast<int>(x.sets.size()); ++idx) {
    const auto& t = x.sets[idx];
    if (std::find(t.begin(), t.end(), next) == t.end()) continue;
    if (covered[t[0]] || covered[t[1]] || covered[t[2]]) continue;
    for (int e : t) covered[e] = 1;
    chosen.push_back(idx);
    if (x3c_search(x, covered, chosen)) return true;
    chosen.pop_back();
    for (int e : t) covered[e] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> solve_x3c(const X3CInstance& x,
                                          int max_sets_guard) {
  validate_x3c(x);
  if (static_cast<int>(x.sets.size()) > max_sets_guard)
    throw std::invalid_argument("solve_x3c guard exceeded");
  if (x.elements.empty()) return std::vector<int>{};
  std::vector<int> covered(x.elements.size(), 0);
  std::vector<int> chosen;
  if (x3c_search(x, covered, chosen)) return chosen;
  return std::nullopt;
}

Instance gen_condorcet(CondorcetVariant variant) {
  std::vector<std::string> applicants = {"a1", "a2", "a3"};
  int quota = variant == CondorcetVariant::kUnit ? 1 : 3;
  std::vector<ProjectRecord> projects = {
      {"p1", quota, quota}, {"p2", quota, quota}, {"p3", quota, quota}};
  std::vector<std::vector<std::string>> prefs;
  if (variant == CondorcetVariant::kUnit) {
    prefs = {{"p1", "p2", "p3"}, {"p1", "p2", "p3"}, {"p1", "p2", "p3"}};
  } else {
    prefs = {{"p1", "p2", "p3"}, {"p2", "p3", "p1"}, {"p3", "p1", "p2"}};
  }
  return Instance(std::move(applicants), std::move(projects), std::move(prefs));
}

namespace {

// The three sets containing each element, ascending set index. Throws when
// an element is not in exactly three sets.
std::vector<std::array<int, 3>> element_sets_exact3(const X3CInstance& x) {
  std::vector<std::vector<int>> in_sets(x.elements.size());
  for (int idx = 0; idx < static_cast<int>(x.sets.size()); ++idx)
    for (int e : x.sets[idx]) in_sets[e].push_back(idx);
  std::vector<std::array<int, 3>> out(x.elements.size());
  for (size_t e = 0; e < x.elements.size(); ++e) {
    if (in_sets[e].size() != 3)
      throw std::invalid_argument("gen_*_x3c requires a normalized instance");
    out[e] = {in_sets[e][0], in_sets[e][1], in_sets[e][2]};
  }
  return out;
}

}  // namespace

std::pair<Instance, Matching> gen_popv_x3c(const X3CInstance& x) {
  validate_x3c(x);
  if (!x3c_normalized(x))
    throw std::invalid_argument("gen_popv_x3c requires a normalized instance");
  const int nelem = static_cast<int>(x.elements.size());  // 3m, m odd
  const int nsets = static_cast<int>(x.sets.size());
  auto tri = element_sets_exact3(x);

  std::vector<std::string> applicants;
  std::vector<ProjectRecord> projects;
  std::vector<std::vector<std::string>> prefs;

  auto b_id = [](int i) { return "b" + std::to_string(i + 1); };
  auto y_id = [](int i) { return "y" + std::to_string(i + 1); };
  auto z_id = [](int i) { return "z" + std::to_string(i + 1); };
  auto c_id = [](int j) { return "c" + std::to_string(j + 1); };
  auto d_id = [](int i) { return "d" + std::to_string(i + 1); };
  auto e_id = [](int i) { return "e" + std::to_string(i + 1); };

  for (int j = 0; j < nsets; ++j) projects.push_back({c_id(j), 3, 3});
  for (int i = 0; i < nelem; ++i) projects.push_back({d_id(i), 3, 3});
  for (int i = 0; i < nelem; ++i) projects.push_back({e_id(i), 2, 2});

  // Indices are cyclic: e_{i-1} of i = 1 is e_{3m}.
  auto prev = [&](int i) { return (i + nelem - 1) % nelem; };

  for (int i = 0; i < nelem; ++i) {
    applicants.push_back(b_id(i));
    prefs.push_back(
        {c_id(tri[i][0]), c_id(tri[i][1]), c_id(tri[i][2]), d_id(i)});
  }
  for (int i = 0; i < nelem; ++i) {
    applicants.push_back(y_id(i));
    if ((i + 1) % 2 == 1)
      prefs.push_back({e_id(i), d_id(i)});
    else
      prefs.push_back({d_id(i), e_id(i)});
  }
  for (int i = 0; i < nelem; ++i) {
    applicants.push_back(z_id(i));
    prefs.push_back({d_id(i), e_id(prev(i))});
  }

  Instance inst(std::move(applicants), std::move(projects), std::move(prefs));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < nelem; ++i) {
    pairs.emplace_back(b_id(i), d_id(i));
    pairs.emplace_back(y_id(i), d_id(i));
    pairs.emplace_back(z_id(i), d_id(i));
  }
  Matching m = Matching::from_pairs(inst, pairs);
  return {std::move(inst), std::move(m)};
}

Instance gen_perpo_x3c(const X3CInstance& x) {
  validate_x3c(x);
  std::vector<std::string> applicants;
  std::vector<ProjectRecord> projects;
  std::vector<std::vector<std::string>> prefs;
  auto p_id = [](int j) { return "t" + std::to_string(j + 1); };
  for (int j = 0; j < static_cast<int>(x.sets.size()); ++j)
    projects.push_back({p_id(j), 3, 3});
  for (int e = 0; e < static_cast<int>(x.elements.size()); ++e) {
    applicants.push_back("a:" + x.elements[e]);
    std::vector<std::string> row;
    for (int j = 0; j < static_cast<int>(x.sets.size()); ++j) {
      const auto& t = x.sets[j];
      if (std::find(t.begin(), t.end(), e) != t.end()) row.push_back(p_id(j));
    }
    if (row.size() > 3)
      throw std::invalid_argument(
          "gen_perpo_x3c requires at most three occurrences per element");
    prefs.push_back(std::move(row));
  }
  return Instance(std::move(applicants), std::move(projects),
                  std::move(prefs));
}

Instance gen_pop_x3c(const X3CInstance& x) {
  validate_x3c(x);
  if (!x3c_normalized(x))
    throw std::invalid_argument("gen_pop_x3c requires a normalized instance");
  const int nelem = static_cast<int>(x.elements.size());
  const int nsets = static_cast<int>(x.sets.size());
  auto tri = element_sets_exact3(x);

  std::vector<std::string> applicants;
  std::vector<ProjectRecord> projects;
  std::vector<std::vector<std::string>> prefs;

  auto c_id = [](int j, int v) {
    static const char* mark[3] = {"c", "c'", "c''"};
    return std::string(mark[v]) + std::to_string(j + 1);
  };
  auto d_id = [](int i) { return "d" + std::to_string(i + 1); };
  auto e_id = [](int i) { return "e" + std::to_string(i + 1); };

  for (int v = 0; v < 3; ++v)
    for (int j = 0; j < nsets; ++j) projects.push_back({c_id(j, v), 3, 3});
  for (int i = 0; i < nelem; ++i) projects.push_back({d_id(i), 3, 3});
  for (int i = 0; i < nelem; ++i) projects.push_back({e_id(i), 2, 2});

  auto prev = [&](int i) { return (i + nelem - 1) % nelem; };

  // Rank of element i within set j (by element index), 0..2.
  auto rank_in_set = [&](int j, int i) {
    std::array<int, 3> t = x.sets[j];
    std::sort(t.begin(), t.end());
    for (int r = 0; r < 3; ++r)
      if (t[r] == i) return r;
    throw std::logic_error("element not in its set");
  };
  // The cyclic block C(T_j, x_i): smallest element starts at c, second at
  // c', third at c''.
  auto block = [&](int j, int i) {
    int r = rank_in_set(j, i);
    return std::vector<std::string>{c_id(j, r % 3), c_id(j, (r + 1) % 3),
                                    c_id(j, (r + 2) % 3)};
  };

  for (int i = 0; i < nelem; ++i) {
    applicants.push_back("b" + std::to_string(i + 1));
    std::vector<std::string> row;
    for (int which = 0; which < 3; ++which)
      for (std::string& s : block(tri[i][which], i)) row.push_back(s);
    row.push_back(d_id(i));
    prefs.push_back(std::move(row));
  }
  for (int i = 0; i < nelem; ++i) {
    applicants.push_back("y" + std::to_string(i + 1));
    if ((i + 1) % 2 == 1)
      prefs.push_back({e_id(i), d_id(i)});
    else
      prefs.push_back({d_id(i), e_id(i)});
  }
  for (int i = 0; i < nelem; ++i) {
    applicants.push_back("z" + std::to_string(i + 1));
    prefs.push_back({d_id(i), e_id(prev(i))});
  }
  return Instance(std::move(applicants), std::move(projects),
                  std::move(prefs));
}

void validate_roommates(const RoommatesInstance& r) {
  const int n = static_cast<int>(r.vertices.size());
  if (static_cast<int>(r.prefs.size()) != n)
    throw std::invalid_argument("roommates preference rows mismatch");
  for (int v = 0; v < n; ++v) {
    std::vector<bool> seen(n, false);
    for (int u : r.prefs[v]) {
      if (u < 0 || u >= n || u == v)
        throw std::invalid_argument("roommates preference out of range");
      if (seen[u])
        throw std::invalid_argument("roommates duplicate preference entry");
      seen[u] = true;
    }
    for (int u : r.prefs[v]) {
      const auto& back = r.prefs[u];
      if (std::find(back.begin(), back.end(), v) == back.end())
        throw std::invalid_argument("roommates adjacency not symmetric");
    }
  }
}

Instance gen_pop_from_roommates(const RoommatesInstance& r) {
  validate_roommates(r);
  const int n = static_cast<int>(r.vertices.size());
  auto edge_id = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    return "p{" + r.vertices[u] + "," + r.vertices[v] + "}";
  };
  std::vector<ProjectRecord> projects;
  std::vector<bool> have(n * n, false);
  for (int v = 0; v < n; ++v)
    for (int u : r.prefs[v]) {
      int lo = std::min(u, v), hi = std::max(u, v);
      if (have[lo * n + hi]) continue;
      have[lo * n + hi] = true;
      projects.push_back({edge_id(u, v), 2, 2});
    }
  std::vector<std::string> applicants;
  std::vector<std::vector<std::string>> prefs;
  for (int v = 0; v < n; ++v) {
    applicants.push_back("a:" + r.vertices[v]);
    std::vector<std::string> row;
    for (int u : r.prefs[v]) row.push_back(edge_id(u, v));
    prefs.push_back(std::move(row));
  }
  return Instance(std::move(applicants), std::move(projects),
                  std::move(prefs));
}

Instance gen_random(const RandomSpec& spec) {
  if (spec.applicants < 0 || spec.projects < 0 || spec.quota_max < 1 ||
      spec.list_min < 0 || spec.list_max < spec.list_min)
    throw std::invalid_argument("gen_random: bad parameters");
  if (spec.list_min > spec.projects)
    throw std::invalid_argument(
        "gen_random: minimum list length exceeds project count");

  std::mt19937_64 rng(spec.seed);
  auto uniform = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % (hi - lo + 1));
  };

  std::vector<std::string> applicants;
  std::vector<ProjectRecord> projects;
  std::vector<std::vector<std::string>> prefs;
  for (int p = 0; p < spec.projects; ++p) {
    int lower = uniform(1, spec.quota_max);
    int upper = uniform(lower, spec.quota_max);
    projects.push_back({"p" + std::to_string(p + 1), lower, upper});
  }
  for (int a = 0; a < spec.applicants; ++a) {
    applicants.push_back("a" + std::to_string(a + 1));
    int len = uniform(spec.list_min, std::min(spec.list_max, spec.projects));
    std::vector<int> pool(spec.projects);
    for (int p = 0; p < spec.projects; ++p) pool[p] = p;
    std::vector<std::string> row;
    for (int i = 0; i < len; ++i) {
      int pick = uniform(i, spec.projects - 1);
      std::swap(pool[i], pool[pick]);
      row.push_back(projects[pool[i]].id);
    }
    prefs.push_back(std::move(row));
  }
  return Instance(std::move(applicants), std::move(projects),
                  std::move(prefs));
}

}  // namespace haq
