#ifndef MORSEKIT_FIELD_HPP
#define MORSEKIT_FIELD_HPP

#include <utility>
#include <vector>

#include "morsekit/complex.hpp"

namespace mtk {

// An acyclic matching on the Hasse diagram of a complex. Unmatched cells
// are the critical cells. Construct through validateField only.
struct DiscreteVectorField {
  const SimplicialComplex* host = nullptr;
  std::vector<std::pair<CellId, CellId>> pairs;  // (lower, upper), sorted
  std::vector<CellId> pairUp;    // per cell: matched coface, or -1
  std::vector<CellId> pairDown;  // per cell: matched face, or -1

  bool isCritical(CellId c) const {
    return pairUp[c] == -1 && pairDown[c] == -1;
  }
};

// Checks the matching and acyclicity invariants. Throws NotIncidenceError,
// NotAMatchingError, or ClosedVPathError (carrying a shortest closed
// V-path found as certificate).
DiscreteVectorField validateField(
    const SimplicialComplex& k,
    const std::vector<std::pair<CellId, CellId>>& pairs);

struct CriticalReport {
  std::vector<std::vector<CellId>> perDim;
  std::vector<int> counts;  // m_0, m_1, ...
  int total = 0;
};

CriticalReport criticalReport(const DiscreteVectorField& v);

// True when adding (sigma, tau) to the matching keeps the per-level
// modified Hasse digraph acyclic. Both cells must be unmatched. Used by
// incremental searches; validateField re-checks from scratch.
bool pairKeepsAcyclic(const DiscreteVectorField& v, CellId sigma, CellId tau);

}  // namespace mtk

#endif
