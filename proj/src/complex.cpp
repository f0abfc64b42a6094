#include "morsekit/complex.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace mtk {

namespace {
constexpr std::size_t kMaxCells = std::size_t(1) << 20;
}

SimplicialComplex SimplicialComplex::fromMaximal(
    const std::vector<std::vector<std::string>>& facets) {
  if (facets.empty()) throw InputError("empty facet list");

  std::set<std::vector<std::string>> cellSet;
  for (const auto& f : facets) {
    if (f.empty()) throw InputError("empty facet");
    std::vector<std::string> sorted = f;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
      if (sorted[i] == sorted[i - 1])
        throw InputError("duplicate vertex '" + sorted[i] + "' within a facet");
    // every nonempty subset is a cell
    const std::size_t n = sorted.size();
    if (n > 25) throw InputError("facet dimension too large");
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<std::string> sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) sub.push_back(sorted[i]);
      cellSet.insert(std::move(sub));
      if (cellSet.size() > kMaxCells)
        throw InputError("complex exceeds the 2^20 cell limit");
    }
  }

  SimplicialComplex k;
  k.cells_.assign(cellSet.begin(), cellSet.end());
  std::stable_sort(k.cells_.begin(), k.cells_.end(),
                   [](const auto& a, const auto& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return a < b;
                   });
  for (CellId i = 0; i < static_cast<CellId>(k.cells_.size()); ++i)
    k.index_[k.cells_[i]] = i;

  k.dim_ = static_cast<int>(k.cells_.back().size()) - 1;
  k.byDim_.resize(k.dim_ + 1);
  k.fvec_.assign(k.dim_ + 1, 0);
  k.faces_.resize(k.cells_.size());
  k.cofaces_.resize(k.cells_.size());

  for (CellId c = 0; c < static_cast<CellId>(k.cells_.size()); ++c) {
    const auto& verts = k.cells_[c];
    const int d = static_cast<int>(verts.size()) - 1;
    k.byDim_[d].push_back(c);
    ++k.fvec_[d];
    if (d == 0) continue;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      std::vector<std::string> face;
      face.reserve(verts.size() - 1);
      for (std::size_t j = 0; j < verts.size(); ++j)
        if (j != i) face.push_back(verts[j]);
      const CellId f = k.index_.at(face);
      const int sign = (i % 2 == 0) ? 1 : -1;
      k.faces_[c].push_back({f, sign});
      k.cofaces_[f].push_back({c, sign});
    }
  }
  // coface lists in id order (face lists already are, by construction)
  for (auto& cf : k.cofaces_)
    std::sort(cf.begin(), cf.end(),
              [](const Incidence& a, const Incidence& b) {
                return a.cell < b.cell;
              });
  return k;
}

std::string SimplicialComplex::cellName(CellId c) const {
  std::string out;
  for (const auto& v : cells_[c]) {
    if (!out.empty()) out += ' ';
    out += v;
  }
  return out;
}

CellId SimplicialComplex::findCell(
    const std::vector<std::string>& verts) const {
  auto it = index_.find(verts);
  return it == index_.end() ? -1 : it->second;
}

long long SimplicialComplex::eulerCharacteristic() const {
  long long chi = 0;
  for (int d = 0; d <= dim_; ++d) chi += (d % 2 == 0) ? fvec_[d] : -fvec_[d];
  return chi;
}

bool SimplicialComplex::connected() const {
  if (connected_ >= 0) return connected_ == 1;
  if (cells_.empty()) throw InputError("empty complex");
  // BFS over the 1-skeleton
  std::vector<char> seen(cells_.size(), 0);
  std::vector<CellId> stack{byDim_[0].front()};
  seen[stack.front()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const CellId v = stack.back();
    stack.pop_back();
    for (const auto& e : cofaces_[v]) {
      if (cellDim(e.cell) != 1) continue;
      for (const auto& w : faces_[e.cell]) {
        if (!seen[w.cell]) {
          seen[w.cell] = 1;
          ++reached;
          stack.push_back(w.cell);
        }
      }
    }
  }
  connected_ = (reached == byDim_[0].size()) ? 1 : 0;
  return connected_ == 1;
}

int SimplicialComplex::incidenceSign(CellId sigma, CellId tau) const {
  for (const auto& f : faces_[tau])
    if (f.cell == sigma) return f.sign;
  return 0;
}

SimplicialComplex SimplicialComplex::barycentricSubdivision() const {
  // Facets of sd(K) are the maximal chains; taking all maximal cells'
  // full flags suffices since every chain extends to a maximal one.
  std::vector<std::vector<std::string>> facets;
  auto label = [this](CellId c) { return "b(" + cellName(c) + ")"; };

  // enumerate maximal chains ending at each maximal cell by descending DFS
  std::vector<CellId> chain;
  std::vector<std::vector<std::string>> out;
  auto emit = [&]() {
    std::vector<std::string> f;
    f.reserve(chain.size());
    for (CellId c : chain) f.push_back(label(c));
    facets.push_back(std::move(f));
  };
  std::function<void(CellId)> descend = [&](CellId c) {
    chain.push_back(c);
    if (cellDim(c) == 0) {
      emit();
    } else {
      for (const auto& f : faces_[c]) descend(f.cell);
    }
    chain.pop_back();
  };
  for (CellId m : maximalCells()) descend(m);
  return fromMaximal(facets);
}

std::vector<CellId> SimplicialComplex::maximalCells() const {
  std::vector<CellId> out;
  for (CellId c = 0; c < cellCount(); ++c)
    if (cofaces_[c].empty()) out.push_back(c);
  return out;
}

SimplicialComplex coneOver(const SimplicialComplex& k,
                           const std::string& apex) {
  if (!apex.empty() && k.findCell({apex}) != -1)
    throw InputError("cone apex label already occurs in the complex");
  std::vector<std::vector<std::string>> facets;
  for (CellId m : k.maximalCells()) {
    std::vector<std::string> f = k.vertices(m);
    f.push_back(apex);
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::fromMaximal(facets);
}

}  // namespace mtk
