#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shiftsym {

// Exit codes: 0 ok, 1 verification or recognition failure, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace shiftsym
