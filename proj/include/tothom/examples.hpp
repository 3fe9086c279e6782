#pragma once

#include "tothom/obstruct.hpp"

namespace tothom {

/// Three-column pair of bicomplexes with columnwise quasi-isomorphisms and
/// valid stage-1 witnesses whose bracket T(2,0) is nonzero modulo
/// indeterminacy; the total homologies differ (Q in degrees 1 and 2 vs 0).
HomotopySimplicialMap surrogate_counterexample();

/// Four-column pair whose order-2 brackets all vanish but whose order-3
/// bracket T(3,0) is nonzero with zero indeterminacy.
HomotopySimplicialMap obstructed_triple();

/// Four-term twisted complex with zero internal differentials whose
/// totalization tower stops at phi_3.
HomotopyChainObject planted_obstructed_tower();

}  // namespace tothom
