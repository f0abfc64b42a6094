#include "morsekit/homology.hpp"

#include <algorithm>

namespace mtk {

IntMatrix boundaryMatrix(const SimplicialComplex& k, int dim) {
  if (dim < 1 || dim > k.dim())
    throw InputError("boundary dimension out of range");
  const auto& rows = k.cellsOfDim(dim - 1);
  const auto& cols = k.cellsOfDim(dim);
  std::vector<int> rowIndex(k.cellCount(), -1);
  for (int i = 0; i < static_cast<int>(rows.size()); ++i)
    rowIndex[rows[i]] = i;
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (int j = 0; j < static_cast<int>(cols.size()); ++j)
    for (const auto& f : k.faces(cols[j]))
      m.at(rowIndex[f.cell], j) = f.sign;
  return m;
}

std::vector<Int> smithInvariantFactors(IntMatrix m) {
  std::vector<Int> diag;
  int top = 0;
  while (top < m.rows && top < m.cols) {
    // pivot: smallest |entry| != 0 in the remaining block, ties by (r, c)
    int pr = -1, pc = -1;
    Int best = 0;
    for (int r = top; r < m.rows; ++r)
      for (int c = top; c < m.cols; ++c) {
        const Int v = abs(m.at(r, c));
        if (v != 0 && (pr == -1 || v < best)) {
          best = v;
          pr = r;
          pc = c;
        }
      }
    if (pr == -1) break;
    // move pivot to (top, top)
    if (pr != top)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(pr, c), m.at(top, c));
    if (pc != top)
      for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, pc), m.at(r, top));

    bool reduced = false;
    while (!reduced) {
      reduced = true;
      const Int p = m.at(top, top);
      for (int r = top + 1; r < m.rows; ++r) {
        if (m.at(r, top) == 0) continue;
        const Int q = m.at(r, top) / p;
        for (int c = top; c < m.cols; ++c) m.at(r, c) -= q * m.at(top, c);
        if (m.at(r, top) != 0) {
          // remainder smaller than pivot: swap up and restart
          for (int c = 0; c < m.cols; ++c)
            std::swap(m.at(r, c), m.at(top, c));
          reduced = false;
          break;
        }
      }
      if (!reduced) continue;
      for (int c = top + 1; c < m.cols; ++c) {
        if (m.at(top, c) == 0) continue;
        const Int q = m.at(top, c) / p;
        for (int r = top; r < m.rows; ++r) m.at(r, c) -= q * m.at(r, top);
        if (m.at(top, c) != 0) {
          for (int r = 0; r < m.rows; ++r)
            std::swap(m.at(r, c), m.at(r, top));
          reduced = false;
          break;
        }
      }
    }
    diag.push_back(abs(m.at(top, top)));
    ++top;
  }
  // enforce the divisibility chain d_i | d_{i+1}
  for (std::size_t i = 0; i + 1 < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j)
      if (diag[j] % diag[i] != 0) {
        const Int g = gcd(diag[i], diag[j]);
        const Int l = diag[i] / g * diag[j];
        diag[i] = g;
        diag[j] = l;
      }
  std::sort(diag.begin(), diag.end());
  return diag;
}

HomologyProfile homology(const SimplicialComplex& k) {
  const int dim = k.dim();
  std::vector<std::vector<Int>> factors(dim + 2);
  for (int q = 1; q <= dim; ++q)
    factors[q] = smithInvariantFactors(boundaryMatrix(k, q));

  HomologyProfile p;
  p.euler = k.eulerCharacteristic();
  p.bettiUnreduced.resize(dim + 1);
  p.bettiReduced.resize(dim + 1);
  p.torsion.resize(dim + 1);
  for (int q = 0; q <= dim; ++q) {
    const long long rankQ = static_cast<long long>(factors[q].size());
    const long long rankQ1 = static_cast<long long>(factors[q + 1].size());
    p.bettiUnreduced[q] = k.fVector()[q] - rankQ - rankQ1;
    p.bettiReduced[q] = p.bettiUnreduced[q] - (q == 0 ? 1 : 0);
    for (const Int& d : factors[q + 1])
      if (d > 1) p.torsion[q].push_back(d);
  }
  p.acyclic = true;
  for (int q = 0; q <= dim; ++q)
    if (p.bettiReduced[q] != 0 || !p.torsion[q].empty()) p.acyclic = false;
  return p;
}

bool isAcyclic(const SimplicialComplex& k) { return homology(k).acyclic; }

bool relaxedHypothesesHold(const SimplicialComplex& k) {
  if (k.dim() > 2) throw InputError("relaxed hypotheses apply to 2-complexes");
  if (!k.connected() || k.eulerCharacteristic() != 1) return false;
  if (k.dim() < 2) return true;
  const HomologyProfile p = homology(k);
  return p.bettiReduced[2] == 0 && p.torsion[2].empty();
}

std::vector<long long> rationalBetti(const std::vector<int>& ranks,
                                     const std::vector<IntMatrix>& d) {
  std::vector<long long> rank(ranks.size() + 1, 0);
  for (std::size_t q = 1; q < ranks.size(); ++q)
    rank[q] = static_cast<long long>(smithInvariantFactors(d[q]).size());
  std::vector<long long> betti(ranks.size());
  for (std::size_t q = 0; q < ranks.size(); ++q)
    betti[q] = ranks[q] - rank[q] - rank[q + 1];
  return betti;
}

}  // namespace mtk
