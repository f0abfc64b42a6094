#ifndef MORSEKIT_NORMALIZE_HPP
#define MORSEKIT_NORMALIZE_HPP

#include <vector>

#include "morsekit/field.hpp"

namespace mtk {

// The pointwise-least nonnegative integer Morse function inducing a given
// field: equal on matched pairs, strictly increasing across unmatched
// immediate incidences.
struct NormalizedFunction {
  std::vector<long long> values;  // per cell
  const SimplicialComplex* host = nullptr;
};

// Least solution of the incidence constraint system, by longest weighted
// path on the pair-contracted Hasse digraph.
NormalizedFunction normalize(const DiscreteVectorField& v);

struct NkfValue {
  long long value = 0;
  // critical cell and its signed contribution (-1)^dim * h
  std::vector<std::pair<CellId, long long>> criticalContributions;
};

// Alternating sum of the normalization. Computed over all cells and over
// critical cells only; the two must agree.
NkfValue nkf(const DiscreteVectorField& v);

// Definitional oracle: pointwise minimum over every integer function with
// values in [0, bound] whose comparison profile realizes v. Only for
// complexes with at most 10 cells.
NormalizedFunction bruteForceNormalize(const DiscreteVectorField& v,
                                       int bound);

}  // namespace mtk

#endif
