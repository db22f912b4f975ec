#include "haq/io.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace haq {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::string clean = line.substr(0, line.find('#'));
  std::istringstream in(clean);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

long long parse_int(const std::string& tok, int line) {
  try {
    size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    throw parse_error(line, "expected an integer, got '" + tok + "'");
  }
}

}  // namespace

ParsedInstance parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  int declared_applicants = -1, declared_projects = -1;
  std::vector<ProjectRecord> projects;
  std::vector<std::string> applicants;
  std::vector<std::vector<std::string>> prefs;
  std::map<std::string, int> seen_pref;
  std::map<std::string, int> seen_project;
  struct WeightLine {
    std::string a, p;
    Weight w;
    int line;
  };
  std::vector<WeightLine> weight_lines;

  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> tok = tokenize(line);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    if (kw == "applicants") {
      if (tok.size() != 2) throw parse_error(lineno, "applicants <n>");
      if (declared_applicants >= 0)
        throw parse_error(lineno, "duplicate applicants declaration");
      declared_applicants = static_cast<int>(parse_int(tok[1], lineno));
      if (declared_applicants < 0)
        throw parse_error(lineno, "negative applicant count");
    } else if (kw == "projects") {
      if (tok.size() != 2) throw parse_error(lineno, "projects <m>");
      if (declared_projects >= 0)
        throw parse_error(lineno, "duplicate projects declaration");
      declared_projects = static_cast<int>(parse_int(tok[1], lineno));
      if (declared_projects < 0)
        throw parse_error(lineno, "negative project count");
    } else if (kw == "project") {
      if (tok.size() != 4)
        throw parse_error(lineno, "project <id> <lower> <upper>");
      if (seen_project.count(tok[1]))
        throw parse_error(lineno, "duplicate project declaration: " + tok[1]);
      seen_project[tok[1]] = lineno;
      int lower = static_cast<int>(parse_int(tok[2], lineno));
      int upper = static_cast<int>(parse_int(tok[3], lineno));
      // Opening with zero assignees is indistinguishable from closed.
      if (lower == 0) lower = 1;
      if (lower < 0 || upper < lower)
        throw parse_error(lineno, "project " + tok[1] + ": invalid quotas");
      projects.push_back({tok[1], lower, upper});
    } else if (kw == "pref") {
      if (tok.size() < 2 || tok[1].back() != ':')
        throw parse_error(lineno, "pref <applicant-id>: <proj-id> ...");
      std::string aid = tok[1].substr(0, tok[1].size() - 1);
      if (aid.empty()) throw parse_error(lineno, "empty applicant identifier");
      if (seen_pref.count(aid))
        throw parse_error(lineno, "duplicate preference list for " + aid);
      seen_pref[aid] = lineno;
      applicants.push_back(aid);
      prefs.emplace_back(tok.begin() + 2, tok.end());
    } else if (kw == "weight") {
      if (tok.size() != 4)
        throw parse_error(lineno, "weight <applicant-id> <proj-id> <w>");
      weight_lines.push_back(
          {tok[1], tok[2], parse_int(tok[3], lineno), lineno});
    } else {
      throw parse_error(lineno, "unknown keyword '" + kw + "'");
    }
  }

  if (declared_applicants >= 0 &&
      declared_applicants != static_cast<int>(applicants.size()))
    throw parse_error(lineno,
                      "applicants declared " +
                          std::to_string(declared_applicants) + ", found " +
                          std::to_string(applicants.size()));
  if (declared_projects >= 0 &&
      declared_projects != static_cast<int>(projects.size()))
    throw parse_error(lineno, "projects declared " +
                                  std::to_string(declared_projects) +
                                  ", found " + std::to_string(projects.size()));

  ParsedInstance out;
  try {
    out.instance = Instance(applicants, projects, prefs);
  } catch (const std::invalid_argument& e) {
    throw parse_error(lineno, e.what());
  }

  if (!weight_lines.empty()) {
    std::vector<std::vector<Weight>> w(out.instance.applicant_count());
    for (int a = 0; a < out.instance.applicant_count(); ++a)
      w[a].assign(out.instance.prefs(a).size(), 0);
    for (const WeightLine& wl : weight_lines) {
      int a = out.instance.applicant_index(wl.a);
      if (a < 0) throw parse_error(wl.line, "unknown applicant " + wl.a);
      int p = out.instance.project_index(wl.p);
      if (p < 0) throw parse_error(wl.line, "unknown project " + wl.p);
      int pos = out.instance.rank_in_list(a, p);
      if (pos < 0)
        throw parse_error(wl.line,
                          "weight on non-edge " + wl.a + " " + wl.p);
      if (wl.w < 0) throw parse_error(wl.line, "negative weight");
      w[a][pos] = wl.w;
    }
    out.weighted = WeightedInstance(out.instance, std::move(w));
  }
  return out;
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "applicants " << inst.applicant_count() << "\n";
  out << "projects " << inst.project_count() << "\n";
  for (int p = 0; p < inst.project_count(); ++p) {
    const ProjectRecord& rec = inst.project(p);
    out << "project " << rec.id << " " << rec.lower << " " << rec.upper
        << "\n";
  }
  for (int a = 0; a < inst.applicant_count(); ++a) {
    out << "pref " << inst.applicant_id(a) << ":";
    for (int p : inst.prefs(a)) out << " " << inst.project(p).id;
    out << "\n";
  }
  return out.str();
}

std::string serialize_weighted(const WeightedInstance& winst) {
  std::ostringstream out;
  out << serialize_instance(winst.base());
  const Instance& inst = winst.base();
  for (int a = 0; a < inst.applicant_count(); ++a)
    for (size_t pos = 0; pos < inst.prefs(a).size(); ++pos)
      out << "weight " << inst.applicant_id(a) << " "
          << inst.project(inst.prefs(a)[pos]).id << " "
          << winst.weight_at(a, static_cast<int>(pos)) << "\n";
  return out.str();
}

Matching parse_matching(const std::string& text, const Instance& inst) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::vector<std::pair<std::string, std::string>> pairs;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> tok = tokenize(line);
    if (tok.empty()) continue;
    if (tok[0] != "match" || tok.size() != 3)
      throw parse_error(lineno, "match <applicant-id> <proj-id>");
    pairs.emplace_back(tok[1], tok[2]);
  }
  try {
    return Matching::from_pairs(inst, pairs);
  } catch (const std::invalid_argument& e) {
    throw parse_error(lineno, e.what());
  }
}

std::string serialize_matching(const Instance& inst, const Matching& m) {
  std::ostringstream out;
  for (int a = 0; a < m.size(); ++a)
    if (m.matched(a))
      out << "match " << inst.applicant_id(a) << " "
          << inst.project(m.at(a)).id << "\n";
  return out.str();
}

}  // namespace haq
