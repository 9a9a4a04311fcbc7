#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tabij {

// Exit codes: 0 success, 1 domain/validation failure, 2 usage or I/O error.
int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace tabij
