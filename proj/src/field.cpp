#include "morsekit/field.hpp"

#include <algorithm>
#include <deque>

namespace mtk {

namespace {

// Per-level digraph on matched lower cells: sigma -> sigma' whenever
// sigma is matched with tau and sigma' is another immediate face of tau.
// A closed V-path is exactly a directed cycle here.
struct LevelDigraph {
  const SimplicialComplex& k;
  const std::vector<CellId>& pairUp;

  std::vector<CellId> successors(CellId sigma) const {
    std::vector<CellId> out;
    const CellId tau = pairUp[sigma];
    if (tau == -1) return out;
    for (const auto& f : k.faces(tau))
      if (f.cell != sigma) out.push_back(f.cell);
    return out;
  }
};

// Shortest directed cycle through `start`, as the alternating cell list
// sigma0, tau0, sigma1, ..., sigma0. Empty if none.
std::vector<CellId> shortestCycleThrough(const LevelDigraph& g, CellId start) {
  std::deque<CellId> queue{start};
  std::vector<CellId> parent(g.k.cellCount(), -2);  // -2 unseen
  parent[start] = -1;
  while (!queue.empty()) {
    const CellId u = queue.front();
    queue.pop_front();
    for (CellId w : g.successors(u)) {
      if (w == start) {
        // reconstruct sigma-path start..u, then close
        std::vector<CellId> sigmas{u};
        for (CellId p = parent[u]; p >= 0; p = parent[p]) sigmas.push_back(p);
        std::reverse(sigmas.begin(), sigmas.end());
        std::vector<CellId> cycle;
        for (CellId s : sigmas) {
          cycle.push_back(s);
          cycle.push_back(g.pairUp[s]);
        }
        cycle.push_back(start);
        return cycle;
      }
      if (parent[w] == -2 && g.pairUp[w] != -1) {
        parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  return {};
}

}  // namespace

DiscreteVectorField validateField(
    const SimplicialComplex& k,
    const std::vector<std::pair<CellId, CellId>>& pairs) {
  DiscreteVectorField v;
  v.host = &k;
  v.pairUp.assign(k.cellCount(), -1);
  v.pairDown.assign(k.cellCount(), -1);
  v.pairs = pairs;
  std::sort(v.pairs.begin(), v.pairs.end());

  for (const auto& [sigma, tau] : v.pairs) {
    if (sigma < 0 || tau < 0 || sigma >= k.cellCount() || tau >= k.cellCount())
      throw InputError("pair references a cell id outside the complex");
    if (k.incidenceSign(sigma, tau) == 0)
      throw NotIncidenceError("'" + k.cellName(sigma) +
                              "' is not an immediate face of '" +
                              k.cellName(tau) + "'");
    if (v.pairUp[sigma] != -1 || v.pairDown[sigma] != -1)
      throw NotAMatchingError(
          "cell '" + k.cellName(sigma) + "' occurs in two pairs", sigma);
    if (v.pairUp[tau] != -1 || v.pairDown[tau] != -1)
      throw NotAMatchingError(
          "cell '" + k.cellName(tau) + "' occurs in two pairs", tau);
    v.pairUp[sigma] = tau;
    v.pairDown[tau] = sigma;
  }

  // Acyclicity, level by level. Cycles alternate between two consecutive
  // dimensions, so the per-level digraphs capture all of them.
  const LevelDigraph g{k, v.pairUp};
  std::vector<char> color(k.cellCount(), 0);  // 0 white, 1 grey, 2 black
  std::vector<CellId> stack;
  for (const auto& [sigma, tau] : v.pairs) {
    (void)tau;
    if (color[sigma]) continue;
    // iterative DFS with grey/black marking
    std::vector<std::pair<CellId, std::size_t>> frames{{sigma, 0}};
    color[sigma] = 1;
    while (!frames.empty()) {
      auto& [u, i] = frames.back();
      const auto succ = g.successors(u);
      bool descended = false;
      for (; i < succ.size(); ++i) {
        const CellId w = succ[i];
        if (v.pairUp[w] == -1) continue;  // not a digraph node
        if (color[w] == 1) {
          auto cycle = shortestCycleThrough(g, w);
          std::string msg = "closed V-path:";
          for (CellId c : cycle) msg += " " + k.cellName(c);
          throw ClosedVPathError(msg, std::move(cycle));
        }
        if (color[w] == 0) {
          color[w] = 1;
          ++i;
          frames.push_back({w, 0});
          descended = true;
          break;
        }
      }
      if (!descended) {
        color[u] = 2;
        frames.pop_back();
      }
    }
  }
  return v;
}

CriticalReport criticalReport(const DiscreteVectorField& v) {
  const SimplicialComplex& k = *v.host;
  CriticalReport r;
  r.perDim.resize(k.dim() + 1);
  r.counts.assign(k.dim() + 1, 0);
  for (CellId c = 0; c < k.cellCount(); ++c) {
    if (v.isCritical(c)) {
      r.perDim[k.cellDim(c)].push_back(c);
      ++r.counts[k.cellDim(c)];
      ++r.total;
    }
  }
  return r;
}

bool pairKeepsAcyclic(const DiscreteVectorField& v, CellId sigma, CellId tau) {
  const SimplicialComplex& k = *v.host;
  // Adding (sigma, tau) creates edges sigma -> other faces of tau; a cycle
  // appears iff some other face of tau already reaches sigma.
  const LevelDigraph g{k, v.pairUp};
  std::vector<CellId> stack;
  for (const auto& f : k.faces(tau))
    if (f.cell != sigma && v.pairUp[f.cell] != -1) stack.push_back(f.cell);
  std::vector<char> seen(k.cellCount(), 0);
  while (!stack.empty()) {
    const CellId u = stack.back();
    stack.pop_back();
    if (seen[u]) continue;
    seen[u] = 1;
    for (CellId w : g.successors(u)) {
      if (w == sigma) return false;
      if (!seen[w] && v.pairUp[w] != -1) stack.push_back(w);
    }
  }
  return true;
}

}  // namespace mtk
