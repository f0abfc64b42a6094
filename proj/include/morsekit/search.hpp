#ifndef MORSEKIT_SEARCH_HPP
#define MORSEKIT_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "morsekit/field.hpp"

namespace mtk {

inline constexpr std::uint64_t kDefaultNodeBudget = 2000000000;

struct SearchStats {
  std::uint64_t nodes = 0;
  bool truncated = false;
};

struct CollapseResult {
  bool collapsible = false;
  // elementary collapses (free face, unique coface), in order
  std::vector<std::pair<CellId, CellId>> sequence;
  std::string obstruction;  // set when provably non-collapsible at the root
  bool exact = true;        // false when the node budget truncated the search
  SearchStats stats;
};

// Free-face backtracking with memoization on visited subcomplexes.
CollapseResult isCollapsible(const SimplicialComplex& k,
                             std::uint64_t nodeCap = kDefaultNodeBudget);

// Gradient field pairing each collapse step; exactly one critical cell,
// a vertex, with vanishing alternating invariant.
DiscreteVectorField prop3Witness(const SimplicialComplex& k,
                                 const CollapseResult& collapse);

struct OptimalityResult {
  std::vector<int> criticalVector;  // of the reported witness
  int total = 0;
  bool exact = true;
  // pair lists of fields attaining the minimum, up to the cap,
  // lexicographically smallest first
  std::vector<std::vector<std::pair<CellId, CellId>>> witnesses;
  std::uint64_t witnessCount = 0;  // all optima found (exact => all there are)
  SearchStats stats;
};

// Exact minimum number of critical cells over all gradient fields, by
// branch-and-bound over acyclic matchings with weak-Morse and Euler
// pruning.
OptimalityResult minCriticalCells(const SimplicialComplex& k,
                                  std::uint64_t nodeCap = kDefaultNodeBudget,
                                  std::size_t witnessCap = 64);

struct NKResult {
  long long value = 0;  // min |N(K,f)| over enumerated optimal fields
  std::vector<std::pair<CellId, CellId>> witness;  // attaining field
  std::vector<int> criticalVector;                 // of the witness
  bool exact = true;
  std::uint64_t fieldsEnumerated = 0;
  SearchStats stats;
};

// min over optimal fields of |alternating sum of the normalization|.
// Equivalent functions share their normalization, so enumerating fields
// instead of functions loses nothing. `jobs` parallelizes the per-field
// evaluation in fixed-size batches; results are schedule-independent.
NKResult nk(const SimplicialComplex& k,
            std::uint64_t nodeCap = kDefaultNodeBudget, int jobs = 1);

struct NkGraphResult {
  NKResult result;
  bool isTree = false;
};

// nk specialized to 1-dimensional complexes; cross-checks the value
// against the tree verdict.
NkGraphResult nkGraph(const SimplicialComplex& g,
                      std::uint64_t nodeCap = kDefaultNodeBudget);

struct PlProbeResult {
  std::vector<NKResult> perDepth;  // nk(sd^j K), j = 0..depth
  long long best = 0;
  int bestDepth = 0;
  bool exact = true;
};

// Upper bound on the subdivision-minimal invariant over barycentric
// subdivisions only, up to the given depth (at most 2).
PlProbeResult plProbe(const SimplicialComplex& k, int depth,
                      std::uint64_t nodeCap = kDefaultNodeBudget,
                      int jobs = 1);

}  // namespace mtk

#endif
