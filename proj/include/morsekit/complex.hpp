#ifndef MORSEKIT_COMPLEX_HPP
#define MORSEKIT_COMPLEX_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "morsekit/error.hpp"

namespace mtk {

// Index of a cell inside its complex. Cells are numbered in
// (dimension, lexicographic vertex list) order, so ids are a
// deterministic total order used everywhere for tie-breaking.
using CellId = int;

// An oriented immediate incidence: `cell` together with the sign of the
// partner in the boundary formula, (-1)^i for the i-th omitted vertex.
struct Incidence {
  CellId cell;
  int sign;
};

// A finite simplicial complex with full immediate face/coface incidence.
// Immutable after construction; safe to share across threads.
class SimplicialComplex {
public:
  // Downward closure of a facet list. Throws InputError on an empty list,
  // an empty facet, or a duplicate vertex within a facet.
  static SimplicialComplex fromMaximal(
      const std::vector<std::vector<std::string>>& facets);

  int dim() const { return dim_; }
  int cellCount() const { return static_cast<int>(cells_.size()); }

  const std::vector<std::string>& vertices(CellId c) const {
    return cells_[c];
  }
  int cellDim(CellId c) const {
    return static_cast<int>(cells_[c].size()) - 1;
  }
  // "a b c" -- vertex labels joined by single spaces.
  std::string cellName(CellId c) const;

  // Id of the cell with the given sorted vertex list, or -1.
  CellId findCell(const std::vector<std::string>& verts) const;

  const std::vector<Incidence>& faces(CellId c) const { return faces_[c]; }
  const std::vector<Incidence>& cofaces(CellId c) const {
    return cofaces_[c];
  }

  const std::vector<CellId>& cellsOfDim(int k) const { return byDim_[k]; }
  const std::vector<int>& fVector() const { return fvec_; }
  long long eulerCharacteristic() const;
  bool connected() const;

  // Sign of sigma in the boundary of tau, or 0 if sigma is not an
  // immediate face of tau.
  int incidenceSign(CellId sigma, CellId tau) const;

  // Barycentric subdivision: one vertex "b(<cell>)" per cell of this
  // complex, one simplex per chain of cells strictly ordered by the face
  // relation.
  SimplicialComplex barycentricSubdivision() const;

  // Maximal cells (no cofaces), in id order.
  std::vector<CellId> maximalCells() const;

private:
  SimplicialComplex() = default;

  std::vector<std::vector<std::string>> cells_;  // sorted (dim, lex)
  std::vector<std::vector<Incidence>> faces_;
  std::vector<std::vector<Incidence>> cofaces_;
  std::vector<std::vector<CellId>> byDim_;
  std::vector<int> fvec_;
  std::map<std::vector<std::string>, CellId> index_;
  int dim_ = -1;
  mutable int connected_ = -1;  // lazy tri-state cache
};

// Cone with a fresh apex vertex: every cell of K is joined with the apex.
// The apex label must not occur in K.
SimplicialComplex coneOver(const SimplicialComplex& k,
                           const std::string& apex);

}  // namespace mtk

#endif
