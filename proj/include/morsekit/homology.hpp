#ifndef MORSEKIT_HOMOLOGY_HPP
#define MORSEKIT_HOMOLOGY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "morsekit/complex.hpp"

namespace mtk {

using Int = boost::multiprecision::cpp_int;

// Dense integer matrix; entries grow during elimination, so they are
// arbitrary-precision.
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c) {}
  Int& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
  const Int& at(int r, int c) const { return a[std::size_t(r) * cols + c]; }
};

// Boundary matrix of K in dimension k: rows (k-1)-cells, columns k-cells,
// entries the oriented incidence signs. 1 <= k <= dim K.
IntMatrix boundaryMatrix(const SimplicialComplex& k, int dim);

// Nonzero diagonal of the Smith normal form, as positive invariant
// factors d_1 | d_2 | ... . Pivot rule: smallest absolute nonzero entry,
// ties by (row, column).
std::vector<Int> smithInvariantFactors(IntMatrix m);

struct HomologyProfile {
  std::vector<long long> bettiUnreduced;
  std::vector<long long> bettiReduced;
  std::vector<std::vector<Int>> torsion;  // per dimension, factors > 1
  long long euler = 0;
  bool acyclic = false;  // all reduced groups vanish over the integers
};

HomologyProfile homology(const SimplicialComplex& k);
bool isAcyclic(const SimplicialComplex& k);

// Connected, chi = 1 and H_2 = 0 over the integers. Throws InputError
// when dim K > 2.
bool relaxedHypothesesHold(const SimplicialComplex& k);

// Rational Betti numbers of an arbitrary bounded chain complex given by
// per-dimension ranks and boundary matrices d[k]: C_k -> C_{k-1}
// (d[0] unused).
std::vector<long long> rationalBetti(const std::vector<int>& ranks,
                                     const std::vector<IntMatrix>& d);

}  // namespace mtk

#endif
