#pragma once

#include "tabij/polyomino.hpp"

namespace tabij {

// Tableau -> labelled ribbon: sort to staircase form, then trace the 1/0 boundary.
LabelledRibbon phi(const EWTableau& t);

// Inverse of phi: refill left of the ribbon, then restore canonical line order.
EWTableau psi(const LabelledRibbon& d);

// Marked tableau -> labelled polyomino, as expand(phi(T), eta - a - 1).
LabelledPara big_phi(const MarkedEWTableau& t);

// Same map built directly from per-line run starts (cornersupport counts + mark
// position), without going through phi/expand. Agrees with big_phi everywhere.
LabelledPara big_phi_direct(const MarkedEWTableau& t);

MarkedEWTableau big_phi_inverse(const LabelledPara& d);

}  // namespace tabij
