#include "haq/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "haq/generators.hpp"
#include "haq/io.hpp"
#include "haq/open_set.hpp"
#include "haq/oracle.hpp"

namespace haq {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct Params {
  OracleLimits oracle;
  FptLimits fpt;
  KernelLimits kernel;
};

Params parse_params(const std::vector<std::string>& kv) {
  if (kv.size() % 2 != 0)
    throw std::runtime_error("--param expects key/value pairs");
  Params params;
  for (size_t i = 0; i < kv.size(); i += 2) {
    const std::string& key = kv[i];
    int value = std::stoi(kv[i + 1]);
    if (key == "oracle-guard") {
      params.oracle.max_applicants = value;
      params.oracle.max_projects = value;
    } else if (key == "mquota-guard") {
      params.fpt.max_quota_projects = value;
    } else if (key == "kernel-guard") {
      params.kernel.max_applicants = value;
    } else {
      throw std::runtime_error("unknown --param key: " + key);
    }
  }
  return params;
}

X3CInstance x3c_from_flag(const std::string& sets_flag) {
  X3CInstance x;
  std::map<std::string, int> index;
  for (const std::string& group : split(sets_flag, ';')) {
    std::vector<std::string> members = split(group, ',');
    if (members.size() != 3)
      throw std::runtime_error("--sets: each set needs exactly 3 members");
    std::array<int, 3> t{};
    for (int i = 0; i < 3; ++i) {
      auto [it, fresh] =
          index.emplace(members[i], static_cast<int>(x.elements.size()));
      if (fresh) x.elements.push_back(members[i]);
      t[i] = it->second;
    }
    x.sets.push_back(t);
  }
  validate_x3c(x);
  return x;
}

RoommatesInstance roommates_from_flag(const std::string& prefs_flag) {
  RoommatesInstance r;
  std::map<std::string, int> index;
  std::vector<std::vector<std::string>> raw;
  for (const std::string& group : split(prefs_flag, ';')) {
    size_t colon = group.find(':');
    if (colon == std::string::npos)
      throw std::runtime_error("--prefs: expected vertex:neighbor,...");
    std::string v = group.substr(0, colon);
    if (index.count(v)) throw std::runtime_error("--prefs: duplicate vertex");
    index[v] = static_cast<int>(r.vertices.size());
    r.vertices.push_back(v);
    raw.push_back(split(group.substr(colon + 1), ','));
  }
  for (const auto& row : raw) {
    std::vector<int> prefs;
    for (const std::string& u : row) {
      auto it = index.find(u);
      if (it == index.end())
        throw std::runtime_error("--prefs: unknown vertex " + u);
      prefs.push_back(it->second);
    }
    r.prefs.push_back(std::move(prefs));
  }
  validate_roommates(r);
  return r;
}

int emit_matching_or_none(const Instance& inst,
                          const std::optional<Matching>& m,
                          std::ostream& out) {
  if (!m) {
    out << "NONE\n";
    return 1;
  }
  out << serialize_matching(inst, *m);
  return 0;
}

enum class Method { kAuto, kOracle, kLq2, kFpt, kFlow };

Method parse_method(const std::string& name) {
  if (name == "auto") return Method::kAuto;
  if (name == "oracle") return Method::kOracle;
  if (name == "lq2") return Method::kLq2;
  if (name == "fpt") return Method::kFpt;
  if (name == "flow") return Method::kFlow;
  throw std::runtime_error("unknown method: " + name);
}

Method resolve_auto(Method m, const Instance& inst) {
  if (m != Method::kAuto) return m;
  return inst.lmax() <= 2 ? Method::kLq2 : Method::kFpt;
}

SolveMode verify_mode(const std::string& kind) {
  return kind == "popular" ? SolveMode::kPopv : SolveMode::kPov;
}

// A Pareto optimal matching always exists: improve from empty until no
// matching dominates.
Matching pareto_improve(const Instance& inst, Method method,
                        const Params& params) {
  Matching current = Matching::empty(inst);
  while (true) {
    std::optional<Matching> next;
    if (method == Method::kLq2)
      next = solve_lq2(inst, SolveMode::kPov, current);
    else if (method == Method::kFpt)
      next = solve_fpt(inst, SolveMode::kPov, current, params.fpt);
    else
      next = oracle_verify(inst, current, VerifyMode::kPareto, params.oracle);
    if (!next) return current;
    current = std::move(*next);
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"house allocation with lower and upper quotas"};
  app.require_subcommand(1);

  std::string instance_path, matching_path, method_name = "auto";
  std::string open_flag;
  std::vector<std::string> param_flag;

  auto add_common = [&](CLI::App* cmd, bool with_matching) {
    cmd->add_option("-i,--instance", instance_path, "instance file")
        ->required();
    if (with_matching)
      cmd->add_option("-m,--matching", matching_path, "matching file")
          ->required();
    cmd->add_option("--method", method_name,
                    "auto|oracle|lq2|fpt|flow (default auto)");
    cmd->add_option("--open", open_flag,
                    "comma-separated projects for the fixed-open-set solvers");
    cmd->add_option("--param", param_flag,
                    "guard settings: oracle-guard, mquota-guard, kernel-guard")
        ->expected(-1);
  };

  CLI::App* validate = app.add_subcommand("validate", "check an instance file");
  validate->add_option("-i,--instance", instance_path)->required();

  std::string solve_kind;
  CLI::App* solve = app.add_subcommand("solve", "find a matching");
  solve->add_option("kind", solve_kind, "perpo|pareto")
      ->required()
      ->check(CLI::IsMember({"perpo", "pareto"}));
  add_common(solve, false);

  std::string verify_kind;
  CLI::App* verify =
      app.add_subcommand("verify", "find a witness beating a matching");
  verify->add_option("kind", verify_kind, "popular|pareto")
      ->required()
      ->check(CLI::IsMember({"popular", "pareto"}));
  add_common(verify, true);

  std::string exists_kind;
  CLI::App* exists =
      app.add_subcommand("exists", "oracle existence check");
  exists->add_option("kind", exists_kind, "popular|perfect-pareto")
      ->required()
      ->check(CLI::IsMember({"popular", "perfect-pareto"}));
  add_common(exists, false);

  CLI::App* maxweight =
      app.add_subcommand("maxweight", "maximum weight matching");
  add_common(maxweight, false);

  std::string gen_kind, gen_variant, gen_sets, gen_prefs, emit_matching_path;
  RandomSpec random_spec;
  CLI::App* gen = app.add_subcommand("gen", "instance generators");
  gen->add_option("kind", gen_kind,
                  "condorcet|x3c-popv|x3c-perpo|x3c-pop|roommates|random")
      ->required()
      ->check(CLI::IsMember({"condorcet", "x3c-popv", "x3c-perpo", "x3c-pop",
                             "roommates", "random"}));
  gen->add_option("--variant", gen_variant, "condorcet: unit|lq3");
  gen->add_option("--sets", gen_sets, "x3c sets, e.g. '1,2,3;3,4,5'");
  gen->add_option("--prefs", gen_prefs,
                  "roommates lists, e.g. 'u:v,w;v:w,u;w:u,v'");
  gen->add_option("--emit-matching", emit_matching_path,
                  "x3c-popv: write the distinguished matching here");
  gen->add_option("--seed", random_spec.seed, "random: seed");
  gen->add_option("--n", random_spec.applicants, "random: applicants");
  gen->add_option("--m", random_spec.projects, "random: projects");
  gen->add_option("--quota-max", random_spec.quota_max, "random: max quota");
  gen->add_option("--list-min", random_spec.list_min, "random: min list");
  gen->add_option("--list-max", random_spec.list_max, "random: max list");

  std::vector<std::string> argv_copy = args;
  std::vector<const char*> argv;
  argv.push_back("haq");
  for (const std::string& a : argv_copy) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends.
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Params params = parse_params(param_flag);

    if (gen->parsed()) {
      Instance inst;
      if (gen_kind == "condorcet") {
        if (gen_variant != "unit" && gen_variant != "lq3")
          throw std::runtime_error("gen condorcet requires --variant unit|lq3");
        inst = gen_condorcet(gen_variant == "unit" ? CondorcetVariant::kUnit
                                                   : CondorcetVariant::kLq3);
      } else if (gen_kind == "random") {
        inst = gen_random(random_spec);
      } else if (gen_kind == "roommates") {
        if (gen_prefs.empty())
          throw std::runtime_error("gen roommates requires --prefs");
        inst = gen_pop_from_roommates(roommates_from_flag(gen_prefs));
      } else {
        if (gen_sets.empty())
          throw std::runtime_error("gen " + gen_kind + " requires --sets");
        X3CInstance x = x3c_from_flag(gen_sets);
        if (gen_kind == "x3c-perpo") {
          inst = gen_perpo_x3c(x);
        } else {
          X3CInstance norm = normalize_x3c(x);
          if (gen_kind == "x3c-pop") {
            inst = gen_pop_x3c(norm);
          } else {
            auto [popv_inst, m] = gen_popv_x3c(norm);
            if (!emit_matching_path.empty()) {
              std::ofstream mf(emit_matching_path);
              if (!mf)
                throw std::runtime_error("cannot write " + emit_matching_path);
              mf << serialize_matching(popv_inst, m);
            }
            inst = std::move(popv_inst);
          }
        }
      }
      out << serialize_instance(inst);
      return 0;
    }

    ParsedInstance parsed = parse_instance(slurp(instance_path));
    const Instance& inst = parsed.instance;

    if (validate->parsed()) {
      validate_instance(inst);
      return 0;
    }

    std::optional<OpenSet> open;
    if (!open_flag.empty())
      open = OpenSet::of(inst, split(open_flag, ','));

    if (exists->parsed()) {
      std::optional<Matching> m = oracle_exists(
          inst,
          exists_kind == "popular" ? ExistsMode::kPopular
                                   : ExistsMode::kPerfectPareto,
          params.oracle);
      return emit_matching_or_none(inst, m, out);
    }

    if (maxweight->parsed()) {
      WeightedInstance winst =
          parsed.weighted ? *parsed.weighted
                          : WeightedInstance::uniform(inst, 0);
      Method method = parse_method(method_name);
      if (open) {
        auto res = max_weight_with_open_set(winst, *open);
        if (!res) {
          out << "NONE\n";
          return 1;
        }
        out << "weight " << res->first << "\n"
            << serialize_matching(inst, res->second);
        return 0;
      }
      method = resolve_auto(method, inst);
      Weight w;
      Matching m;
      if (method == Method::kOracle) {
        std::tie(w, m) = oracle_max_weight(winst, params.oracle);
      } else if (method == Method::kLq2) {
        std::tie(w, m) = max_weight_lq2(winst);
      } else if (method == Method::kFpt) {
        std::tie(w, m) = max_weight_fpt(winst, params.fpt);
      } else {
        throw std::runtime_error("maxweight without --open needs oracle|lq2|fpt");
      }
      out << "weight " << w << "\n" << serialize_matching(inst, m);
      return 0;
    }

    if (verify->parsed()) {
      Matching m = parse_matching(slurp(matching_path), inst);
      Method method = parse_method(method_name);
      if (method == Method::kFlow || (open && method == Method::kAuto)) {
        if (verify_kind != "pareto")
          throw std::runtime_error(
              "the fixed-open-set solver verifies pareto only");
        if (!open)
          throw std::runtime_error("--method flow requires --open");
        return emit_matching_or_none(
            inst, dominating_with_open_set(inst, m, *open), out);
      }
      if (open)
        throw std::runtime_error("--open requires --method flow");
      method = resolve_auto(method, inst);
      std::optional<Matching> witness;
      if (method == Method::kOracle)
        witness = oracle_verify(inst, m,
                                verify_kind == "popular" ? VerifyMode::kPopular
                                                         : VerifyMode::kPareto,
                                params.oracle);
      else if (method == Method::kLq2)
        witness = solve_lq2(inst, verify_mode(verify_kind), m);
      else
        witness = solve_fpt(inst, verify_mode(verify_kind), m, params.fpt);
      return emit_matching_or_none(inst, witness, out);
    }

    if (solve->parsed()) {
      Method method = resolve_auto(parse_method(method_name), inst);
      if (method == Method::kFlow)
        throw std::runtime_error("solve does not take --method flow");
      if (solve_kind == "pareto") {
        Matching m = pareto_improve(inst, method, params);
        out << serialize_matching(inst, m);
        return 0;
      }
      std::optional<Matching> m;
      if (method == Method::kOracle)
        m = oracle_exists(inst, ExistsMode::kPerfectPareto, params.oracle);
      else if (method == Method::kLq2)
        m = solve_lq2(inst, SolveMode::kPerpo);
      else
        m = solve_fpt(inst, SolveMode::kPerpo, {}, params.fpt);
      return emit_matching_or_none(inst, m, out);
    }

    err << "error: no subcommand\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace haq
