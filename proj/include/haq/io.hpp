// The line-oriented instance/matching file formats; the only I/O boundary.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "haq/weighted.hpp"

namespace haq {

class parse_error : public std::runtime_error {
 public:
  parse_error(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct ParsedInstance {
  Instance instance;
  // Present when the file carries `weight` lines; unlisted edges weigh 0.
  std::optional<WeightedInstance> weighted;
};

// Format (UTF-8, '#' comments):
//   applicants <n>
//   projects <m>
//   project <id> <lower> <upper>         (m lines; lower 0 normalizes to 1)
//   pref <applicant-id>: <proj-id> ...   (n lines, best first, may be empty)
//   weight <applicant-id> <proj-id> <w>  (optional)
ParsedInstance parse_instance(const std::string& text);

std::string serialize_instance(const Instance& inst);
std::string serialize_weighted(const WeightedInstance& winst);

// Format: `match <applicant-id> <proj-id>` per matched applicant.
Matching parse_matching(const std::string& text, const Instance& inst);
std::string serialize_matching(const Instance& inst, const Matching& m);

}  // namespace haq
