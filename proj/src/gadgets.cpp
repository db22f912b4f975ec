#include "haq/gadgets.hpp"

#include <cassert>
#include <stdexcept>

namespace haq {

namespace {

void require_lq2(const Instance& inst) {
  if (inst.lmax() > 2)
    throw std::invalid_argument("solver requires maximum lower quota 2");
}

std::string fresh_project_id(const Instance& inst, const std::string& want) {
  std::string id = want;
  while (inst.project_index(id) >= 0) id += "'";
  return id;
}

}  // namespace

WeightedInstance add_last_resorts(const WeightedInstance& winst) {
  const Instance& inst = winst.base();
  std::vector<std::string> applicants;
  std::vector<ProjectRecord> projects = inst.projects();
  std::vector<std::vector<std::string>> prefs(inst.applicant_count());
  std::vector<std::vector<Weight>> weights = winst.weights();
  for (int a = 0; a < inst.applicant_count(); ++a) {
    applicants.push_back(inst.applicant_id(a));
    for (int p : inst.prefs(a)) prefs[a].push_back(inst.project(p).id);
    std::string id = fresh_project_id(inst, "~lr:" + inst.applicant_id(a));
    projects.push_back(ProjectRecord{id, 1, 1});
    prefs[a].push_back(id);
    weights[a].push_back(0);
  }
  return WeightedInstance(
      Instance(std::move(applicants), std::move(projects), std::move(prefs)),
      std::move(weights));
}

std::vector<NeighboringCase> neighboring_cases(const WeightedInstance& winst,
                                               const Matching& m) {
  const Instance& inst = winst.base();
  require_lq2(inst);
  const int mproj = inst.project_count();
  std::vector<int> load = m.project_load(inst);

  // A project with lower quota 2 currently at 0 or 2 sits in the free
  // degree interval [0, 2]; every other degree is pinned.
  auto in_free_interval = [&](int p) {
    return inst.project(p).lower == 2 && (load[p] == 0 || load[p] == 2);
  };

  std::vector<DegreeConstraint> base(mproj);
  for (int p = 0; p < mproj; ++p) {
    int k = static_cast<int>(inst.adjacent_applicants(p).size());
    if (in_free_interval(p) && k >= 2)
      base[p] = {DegreeConstraint::Kind::kToggle, 0};
    else
      base[p] = {DegreeConstraint::Kind::kFixed, load[p]};
  }

  std::vector<NeighboringCase> cases;
  cases.push_back({"base", base});

  // Case 2a: one project moves to a degree interval at distance two.
  for (int p = 0; p < mproj; ++p) {
    const ProjectRecord& rec = inst.project(p);
    std::vector<DegreeConstraint> targets;
    if (in_free_interval(p)) {
      if (rec.upper >= 4) targets.push_back({DegreeConstraint::Kind::kFixed, 4});
    } else {
      int d = load[p];
      if (d + 2 <= rec.upper)
        targets.push_back({DegreeConstraint::Kind::kFixed, d + 2});
      if (rec.lower == 2) {
        if (d - 2 >= 3)
          targets.push_back({DegreeConstraint::Kind::kFixed, d - 2});
        else if (d - 2 == 2)
          targets.push_back({DegreeConstraint::Kind::kToggle, 0});
      } else if (d - 2 >= 0) {
        targets.push_back({DegreeConstraint::Kind::kFixed, d - 2});
      }
    }
    for (const DegreeConstraint& t : targets) {
      NeighboringCase c{"2a:" + inst.project(p).id, base};
      c.constraints[p] = t;
      cases.push_back(std::move(c));
    }
  }

  // Case 2b: two distinct projects each take a unit step to the adjacent
  // interval. Applicant matched/unmatched flips are unit steps at their
  // private last-resort projects.
  struct Site {
    int project;
    DegreeConstraint target;
  };
  std::vector<Site> sites;
  for (int p = 0; p < mproj; ++p) {
    const ProjectRecord& rec = inst.project(p);
    if (in_free_interval(p)) {
      if (rec.upper >= 3)
        sites.push_back({p, {DegreeConstraint::Kind::kFixed, 3}});
      continue;
    }
    int d = load[p];
    if (d + 1 <= rec.upper && !(rec.lower == 2 && d + 1 == 1))
      sites.push_back({p, {DegreeConstraint::Kind::kFixed, d + 1}});
    if (rec.lower == 2) {
      if (d - 1 == 2)
        sites.push_back({p, {DegreeConstraint::Kind::kToggle, 0}});
      else if (d - 1 >= 3)
        sites.push_back({p, {DegreeConstraint::Kind::kFixed, d - 1}});
    } else if (d - 1 >= 0) {
      sites.push_back({p, {DegreeConstraint::Kind::kFixed, d - 1}});
    }
  }
  for (size_t i = 0; i < sites.size(); ++i) {
    for (size_t j = i + 1; j < sites.size(); ++j) {
      if (sites[i].project == sites[j].project) continue;
      NeighboringCase c{"2b:" + inst.project(sites[i].project).id + "," +
                            inst.project(sites[j].project).id,
                        base};
      c.constraints[sites[i].project] = sites[i].target;
      c.constraints[sites[j].project] = sites[j].target;
      cases.push_back(std::move(c));
    }
  }
  return cases;
}

std::optional<GadgetGraph> build_gadget_graph(const WeightedInstance& winst,
                                              const NeighboringCase& ncase) {
  const Instance& inst = winst.base();
  const int n = inst.applicant_count();

  // Count vertices first: applicants, then per project its copies and stubs.
  int total = n;
  std::vector<int> copy_start(inst.project_count());
  std::vector<int> stub_start(inst.project_count());
  std::vector<int> stub_count(inst.project_count());
  for (int p = 0; p < inst.project_count(); ++p) {
    int k = static_cast<int>(inst.adjacent_applicants(p).size());
    const DegreeConstraint& dc = ncase.constraints[p];
    int stubs;
    if (dc.kind == DegreeConstraint::Kind::kToggle) {
      if (k < 2) return std::nullopt;
      stubs = k;
    } else {
      if (dc.fixed_degree < 0 || dc.fixed_degree > k) return std::nullopt;
      stubs = k - dc.fixed_degree;
    }
    copy_start[p] = total;
    total += k;
    stub_start[p] = total;
    stub_count[p] = stubs;
    total += stubs;
  }

  GadgetGraph gg;
  gg.graph = GeneralGraph(total);
  gg.applicant_count = n;
  gg.copy_owner.assign(total, {-1, -1});

  for (int p = 0; p < inst.project_count(); ++p) {
    const auto& adj = inst.adjacent_applicants(p);
    const int k = static_cast<int>(adj.size());
    for (int i = 0; i < k; ++i) {
      int copy = copy_start[p] + i;
      int a = adj[i];
      gg.copy_owner[copy] = {a, p};
      gg.graph.add_edge(a, copy, winst.edge_weight(a, p));
      for (int s = 0; s < stub_count[p]; ++s)
        gg.graph.add_edge(copy, stub_start[p] + s, 0);
    }
    if (ncase.constraints[p].kind == DegreeConstraint::Kind::kToggle)
      gg.graph.add_edge(stub_start[p], stub_start[p] + 1, 0);
  }
  return gg;
}

std::optional<Matching> find_heavier_neighboring(const WeightedInstance& winst,
                                                 const Matching& m) {
  const Instance& inst = winst.base();
  require_lq2(inst);
  if (!is_feasible(inst, m))
    throw std::invalid_argument(
        "find_heavier_neighboring requires a feasible matching");

  const WeightedInstance aug = add_last_resorts(winst);
  Matching canonical = m;
  for (int a = 0; a < inst.applicant_count(); ++a)
    if (!canonical.matched(a))
      canonical.raw()[a] = inst.project_count() + a;  // private last resort
  const Weight current = matching_weight(aug, canonical);

  for (const NeighboringCase& ncase : neighboring_cases(aug, canonical)) {
    std::optional<GadgetGraph> gg = build_gadget_graph(aug, ncase);
    if (!gg) continue;
    std::optional<PerfectMatchingResult> pm =
        max_weight_perfect_matching(gg->graph);
    if (!pm || pm->weight <= current) continue;

    std::vector<int> assign(inst.applicant_count(), kUnmatched);
    for (auto [u, v] : pm->edges) {
      if (u >= gg->applicant_count && v >= gg->applicant_count) continue;
      int a = std::min(u, v);
      int copy = std::max(u, v);
      auto [owner, p] = gg->copy_owner[copy];
      assert(owner == a);
      if (p < inst.project_count()) assign[a] = p;  // drop last resorts
    }
    Matching better((std::move(assign)));
    assert(is_feasible(inst, better));
    assert(matching_weight(winst, better) == pm->weight);
    return better;
  }
  return std::nullopt;
}

std::pair<Weight, Matching> max_weight_lq2(const WeightedInstance& winst) {
  require_lq2(winst.base());
  Matching current = Matching::empty(winst.base());
  while (true) {
    std::optional<Matching> next = find_heavier_neighboring(winst, current);
    if (!next) break;
    current = std::move(*next);
  }
  return {matching_weight(winst, current), current};
}

std::optional<Matching> solve_lq2(const Instance& inst, SolveMode mode,
                                  const std::optional<Matching>& m) {
  require_lq2(inst);
  if (mode == SolveMode::kPopv || mode == SolveMode::kPov) {
    if (!m)
      throw std::invalid_argument(
          "verification mode requires an input matching");
    ThresholdedReduction red = reduce_verify(
        inst, *m, mode == SolveMode::kPopv ? ReduceMode::kPopv : ReduceMode::kPov);
    // w(M) equals the threshold, so any heavier neighboring matching
    // already beats it and is itself a witness.
    return find_heavier_neighboring(red.winst, *m);
  }

  // perpo: maximum-cardinality start, then domination improvements.
  auto [cardinality, current] =
      max_weight_lq2(WeightedInstance::uniform(inst, 1));
  if (cardinality < inst.applicant_count()) return std::nullopt;
  while (true) {
    std::optional<Matching> next = solve_lq2(inst, SolveMode::kPov, current);
    if (!next) break;
    current = std::move(*next);
  }
  return current;
}

}  // namespace haq
