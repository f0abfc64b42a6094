#ifndef MORSEKIT_ANALYSIS_HPP
#define MORSEKIT_ANALYSIS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "morsekit/field.hpp"
#include "morsekit/homology.hpp"

namespace mtk {

// Alternating sequence sigma_0, tau_0, sigma_1, ..., sigma_r: each
// (sigma_i, tau_i) matched, sigma_{i+1} a different face of tau_i.
struct GradientPath {
  std::vector<CellId> cells;
};

// All V-paths from `start` to `end` (equal dimension), including the
// trivial path when start == end. Diagnostic enumeration; throws
// InputError past `cap` paths.
std::vector<GradientPath> gradientPaths(const DiscreteVectorField& v,
                                        CellId start, CellId end,
                                        std::size_t cap = 1000000);

// Chain complex spanned by critical cells, with boundary entries the
// signed counts of gradient paths.
struct MorseChainComplex {
  std::vector<std::vector<CellId>> basis;  // critical cells per dimension
  std::vector<IntMatrix> boundary;         // boundary[q]: M_q -> M_{q-1}
};

MorseChainComplex morseBoundary(const DiscreteVectorField& v);

// Rational Betti numbers of the Morse complex equal those of the host.
bool morseHomologyCheck(const DiscreteVectorField& v);

// Bipartite graph of the collapsibility obstruction: A = critical edges,
// B = critical 2-cells, {e, s} in E iff some gradient path runs from an
// immediate face of s to e.
struct CriticalIncidenceGraph {
  std::vector<CellId> sideA;  // critical edges, id order
  std::vector<CellId> sideB;  // critical 2-cells, id order
  std::vector<std::pair<int, int>> edges;  // (index in A, index in B)
};

CriticalIncidenceGraph criticalIncidenceGraph(const DiscreteVectorField& v);

// Maximum bipartite matching by augmenting paths; matched[b] = index in A
// or -1. Generic helper, also used on its own.
std::vector<int> maxBipartiteMatching(int sizeA, int sizeB,
                                      const std::vector<std::pair<int, int>>& edges);

struct MatchingCertificate {
  bool complete = false;  // saturates both sides of a balanced graph
  std::vector<std::pair<int, int>> matching;  // (A index, B index)
  // Hall violator on the B side when not complete: |S| > |N(S)|
  std::vector<int> violator;      // indices into B
  std::vector<int> neighborhood;  // N(S), indices into A
};

MatchingCertificate hallMatching(const CriticalIncidenceGraph& g);

// Replay of the main collapsibility argument on one field: a complete
// matching (e_i, sigma_i) with h(e_i) < h(sigma_i), summing to the
// field's positive alternating invariant.
struct GapCertificate {
  enum class Status {
    Certified,         // matching with strictly positive gaps
    NoObstruction,     // single critical cell: the complex collapses
    HallViolation,     // would contradict H_2 = 0; violator attached
  };
  struct GapPair {
    CellId edge;
    CellId triangle;
    long long hEdge;
    long long hTriangle;
  };
  Status status = Status::Certified;
  std::vector<GapPair> pairs;
  long long nkfValue = 0;
  MatchingCertificate hall;  // populated on HallViolation
};

// Preconditions: host connected, dim <= 2, relaxed hypotheses hold,
// one critical vertex and equally many critical edges and 2-cells.
GapCertificate theoremGapCertificate(const DiscreteVectorField& v);

}  // namespace mtk

#endif
