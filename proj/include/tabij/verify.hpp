#pragma once

#include <iosfwd>

#include "tabij/ew.hpp"

namespace tabij {

// Exhaustively cross-checks one size: family counts, both mask routes, both
// big-phi presentations, and every round trip. Prints a report line per check
// plus the first counterexample on failure. Returns true when all checks pass.
bool verify_size(int m, int n, Guard guard, std::ostream& out);

// Size-independent checks against compiled-in golden fixtures (the worked
// examples every map must reproduce bit- and label-exactly).
bool verify_goldens(std::ostream& out);

}  // namespace tabij
