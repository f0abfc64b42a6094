#include "morsekit/normalize.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>

namespace mtk {

NormalizedFunction normalize(const DiscreteVectorField& v) {
  const SimplicialComplex& k = *v.host;
  const int n = k.cellCount();

  // contract matched pairs to their lower cell
  std::vector<CellId> comp(n);
  for (CellId c = 0; c < n; ++c)
    comp[c] = (v.pairDown[c] != -1) ? v.pairDown[c] : c;

  // weight-1 edge per unmatched immediate incidence between distinct nodes
  std::vector<std::vector<CellId>> adj(n);
  std::vector<int> indeg(n, 0);
  for (CellId c = 0; c < n; ++c) {
    for (const auto& f : k.faces(c)) {
      if (v.pairUp[f.cell] == c) continue;
      const CellId a = comp[f.cell], b = comp[c];
      if (a == b) continue;
      adj[a].push_back(b);
      ++indeg[b];
    }
  }

  std::vector<long long> h(n, 0);
  std::deque<CellId> queue;
  int nodes = 0;
  for (CellId c = 0; c < n; ++c)
    if (comp[c] == c) {
      ++nodes;
      if (indeg[c] == 0) queue.push_back(c);
    }
  int processed = 0;
  while (!queue.empty()) {
    const CellId u = queue.front();
    queue.pop_front();
    ++processed;
    for (CellId w : adj[u]) {
      h[w] = std::max(h[w], h[u] + 1);
      if (--indeg[w] == 0) queue.push_back(w);
    }
  }
  if (processed != nodes)
    throw InternalError("contracted Hasse digraph has a cycle");

  NormalizedFunction out;
  out.host = &k;
  out.values.resize(n);
  for (CellId c = 0; c < n; ++c) {
    out.values[c] = h[comp[c]];
    assert(out.values[c] <= n);
  }
  return out;
}

NkfValue nkf(const DiscreteVectorField& v) {
  const SimplicialComplex& k = *v.host;
  const NormalizedFunction h = normalize(v);
  NkfValue out;
  long long full = 0;
  long long criticalOnly = 0;
  for (CellId c = 0; c < k.cellCount(); ++c) {
    const long long signedValue =
        (k.cellDim(c) % 2 == 0) ? h.values[c] : -h.values[c];
    full += signedValue;
    if (v.isCritical(c)) {
      criticalOnly += signedValue;
      out.criticalContributions.push_back({c, signedValue});
    }
  }
  if (full != criticalOnly)
    throw InternalError("nkf audit identity failed");
  out.value = full;
  return out;
}

NormalizedFunction bruteForceNormalize(const DiscreteVectorField& v,
                                       int bound) {
  const SimplicialComplex& k = *v.host;
  const int n = k.cellCount();
  if (n > 10) throw InputError("brute-force oracle limited to 10 cells");
  if (bound < n) throw InputError("bound must be at least the cell count");

  std::vector<long long> minima(n, -1);
  std::vector<int> g(n, 0);

  // Faces of a cell have smaller ids, so constraints close over prefixes.
  auto admissible = [&](CellId c) {
    for (const auto& f : k.faces(c)) {
      const bool matched = (v.pairUp[f.cell] == c);
      if (matched ? (g[f.cell] < g[c]) : (g[f.cell] >= g[c])) return false;
    }
    return true;
  };
  std::function<void(CellId)> enumerate = [&](CellId c) {
    if (c == n) {
      for (CellId i = 0; i < n; ++i)
        if (minima[i] == -1 || g[i] < minima[i]) minima[i] = g[i];
      return;
    }
    for (g[c] = 0; g[c] <= bound; ++g[c])
      if (admissible(c)) enumerate(c + 1);
  };
  enumerate(0);
  if (minima[0] == -1)
    throw InternalError("no realization found within the bound");

  NormalizedFunction out;
  out.host = &k;
  out.values.assign(minima.begin(), minima.end());
  return out;
}

}  // namespace mtk
