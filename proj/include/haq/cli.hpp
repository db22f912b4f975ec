// Command surface. Exit codes: 0 = yes/witness, 1 = no, 2 = error.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace haq {

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace haq
