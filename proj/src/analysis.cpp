#include "morsekit/analysis.hpp"

#include <algorithm>
#include <functional>

#include "morsekit/normalize.hpp"

namespace mtk {

std::vector<GradientPath> gradientPaths(const DiscreteVectorField& v,
                                        CellId start, CellId end,
                                        std::size_t cap) {
  const SimplicialComplex& k = *v.host;
  if (k.cellDim(start) != k.cellDim(end))
    throw InputError("gradient path endpoints must have equal dimension");

  std::vector<GradientPath> out;
  std::vector<CellId> path;
  std::function<void(CellId)> walk = [&](CellId sigma) {
    path.push_back(sigma);
    if (sigma == end) {
      if (out.size() >= cap)
        throw InputError("gradient path enumeration exceeded its cap");
      out.push_back({path});
      // acyclicity: no V-path revisits `end`, so stop here
      path.pop_back();
      return;
    }
    const CellId tau = v.pairUp[sigma];
    if (tau != -1 && k.cellDim(tau) == k.cellDim(sigma) + 1) {
      path.push_back(tau);
      for (const auto& f : k.faces(tau))
        if (f.cell != sigma) walk(f.cell);
      path.pop_back();
    }
    path.pop_back();
  };
  walk(start);
  return out;
}

namespace {

// Signed flow of a (q)-cell onto the critical q-cells, following V-paths.
// flow[sigma] is a row over criticalIndex; memoized over the level DAG.
struct LevelFlow {
  const DiscreteVectorField& v;
  const SimplicialComplex& k;
  std::vector<int> criticalIndex;          // per cell, index among critical q-cells
  std::vector<std::vector<Int>> memo;      // per cell
  std::vector<char> done;
  int criticalCount = 0;

  LevelFlow(const DiscreteVectorField& v, int q)
      : v(v), k(*v.host), criticalIndex(k.cellCount(), -1),
        memo(k.cellCount()), done(k.cellCount(), 0) {
    for (CellId c : k.cellsOfDim(q))
      if (v.isCritical(c)) criticalIndex[c] = criticalCount++;
  }

  const std::vector<Int>& flow(CellId sigma) {
    if (done[sigma]) return memo[sigma];
    done[sigma] = 1;
    auto& row = memo[sigma];
    row.assign(criticalCount, 0);
    if (criticalIndex[sigma] >= 0) {
      row[criticalIndex[sigma]] = 1;
      return row;
    }
    const CellId tau = v.pairUp[sigma];
    if (tau == -1) return row;  // matched downward: paths stop, contributes 0
    const int sSigma = k.incidenceSign(sigma, tau);
    for (const auto& f : k.faces(tau)) {
      if (f.cell == sigma) continue;
      const auto& sub = flow(f.cell);
      const int step = -sSigma * f.sign;
      for (int i = 0; i < criticalCount; ++i) row[i] += step * sub[i];
    }
    return row;
  }
};

}  // namespace

MorseChainComplex morseBoundary(const DiscreteVectorField& v) {
  const SimplicialComplex& k = *v.host;
  MorseChainComplex m;
  m.basis.resize(k.dim() + 1);
  for (CellId c = 0; c < k.cellCount(); ++c)
    if (v.isCritical(c)) m.basis[k.cellDim(c)].push_back(c);

  m.boundary.resize(k.dim() + 1);
  for (int q = 1; q <= k.dim(); ++q) {
    LevelFlow flow(v, q - 1);
    IntMatrix mat(static_cast<int>(m.basis[q - 1].size()),
                  static_cast<int>(m.basis[q].size()));
    for (int j = 0; j < mat.cols; ++j) {
      const CellId tau = m.basis[q][j];
      for (const auto& f : k.faces(tau)) {
        const auto& row = flow.flow(f.cell);
        for (int i = 0; i < mat.rows; ++i)
          mat.at(i, j) += f.sign * row[i];
      }
    }
    m.boundary[q] = std::move(mat);
  }
  return m;
}

bool morseHomologyCheck(const DiscreteVectorField& v) {
  const SimplicialComplex& k = *v.host;
  const MorseChainComplex m = morseBoundary(v);
  std::vector<int> ranks(k.dim() + 1);
  for (int q = 0; q <= k.dim(); ++q)
    ranks[q] = static_cast<int>(m.basis[q].size());
  const auto morseBetti = rationalBetti(ranks, m.boundary);
  const auto profile = homology(k);
  return morseBetti == profile.bettiUnreduced;
}

CriticalIncidenceGraph criticalIncidenceGraph(const DiscreteVectorField& v) {
  const SimplicialComplex& k = *v.host;
  if (k.dim() > 2)
    throw InputError("critical incidence graph applies to 2-complexes");

  CriticalIncidenceGraph g;
  std::vector<int> aIndex(k.cellCount(), -1);
  if (k.dim() >= 1)
    for (CellId c : k.cellsOfDim(1))
      if (v.isCritical(c)) {
        aIndex[c] = static_cast<int>(g.sideA.size());
        g.sideA.push_back(c);
      }
  if (k.dim() == 2)
    for (CellId c : k.cellsOfDim(2))
      if (v.isCritical(c)) g.sideB.push_back(c);

  // reachability in the level-1 modified digraph from the faces of each
  // critical 2-cell; edge membership only needs nonemptiness of Gamma
  for (int bi = 0; bi < static_cast<int>(g.sideB.size()); ++bi) {
    std::vector<char> seen(k.cellCount(), 0);
    std::vector<CellId> stack;
    for (const auto& f : k.faces(g.sideB[bi])) stack.push_back(f.cell);
    std::vector<int> hits;
    while (!stack.empty()) {
      const CellId e = stack.back();
      stack.pop_back();
      if (seen[e]) continue;
      seen[e] = 1;
      if (aIndex[e] >= 0) hits.push_back(aIndex[e]);
      const CellId tau = v.pairUp[e];
      if (tau != -1 && k.cellDim(tau) == 2)
        for (const auto& f2 : k.faces(tau))
          if (f2.cell != e) stack.push_back(f2.cell);
    }
    std::sort(hits.begin(), hits.end());
    for (int ai : hits) g.edges.push_back({ai, bi});
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::vector<int> maxBipartiteMatching(
    int sizeA, int sizeB, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adjB(sizeB);  // B -> list of A
  for (const auto& [a, b] : edges) adjB[b].push_back(a);
  for (auto& l : adjB) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  std::vector<int> matchA(sizeA, -1), matchB(sizeB, -1);
  std::vector<char> visited(sizeA, 0);
  std::function<bool(int)> augment = [&](int b) {
    for (int a : adjB[b]) {
      if (visited[a]) continue;
      visited[a] = 1;
      if (matchA[a] == -1 || augment(matchA[a])) {
        matchA[a] = b;
        matchB[b] = a;
        return true;
      }
    }
    return false;
  };
  for (int b = 0; b < sizeB; ++b) {
    std::fill(visited.begin(), visited.end(), 0);
    augment(b);
  }
  return matchB;
}

MatchingCertificate hallMatching(const CriticalIncidenceGraph& g) {
  const int na = static_cast<int>(g.sideA.size());
  const int nb = static_cast<int>(g.sideB.size());
  const auto matchB = maxBipartiteMatching(na, nb, g.edges);

  MatchingCertificate cert;
  int matched = 0;
  for (int b = 0; b < nb; ++b)
    if (matchB[b] != -1) {
      cert.matching.push_back({matchB[b], b});
      ++matched;
    }
  std::sort(cert.matching.begin(), cert.matching.end());
  cert.complete = (na == nb && matched == nb);
  if (cert.complete || matched == nb) return cert;

  // Koenig-style violator: B-vertices reachable by alternating paths from
  // an unmatched B-vertex; their joint neighborhood is strictly smaller.
  std::vector<std::vector<int>> adjB(nb);
  for (const auto& [a, b] : g.edges) adjB[b].push_back(a);
  std::vector<int> matchA(na, -1);
  for (int b = 0; b < nb; ++b)
    if (matchB[b] != -1) matchA[matchB[b]] = b;

  std::vector<char> inS(nb, 0), inN(na, 0);
  std::vector<int> stack;
  for (int b = 0; b < nb; ++b)
    if (matchB[b] == -1) {
      inS[b] = 1;
      stack.push_back(b);
    }
  while (!stack.empty()) {
    const int b = stack.back();
    stack.pop_back();
    for (int a : adjB[b]) {
      if (inN[a]) continue;
      inN[a] = 1;
      const int b2 = matchA[a];
      if (b2 != -1 && !inS[b2]) {
        inS[b2] = 1;
        stack.push_back(b2);
      }
    }
  }
  for (int b = 0; b < nb; ++b)
    if (inS[b]) cert.violator.push_back(b);
  for (int a = 0; a < na; ++a)
    if (inN[a]) cert.neighborhood.push_back(a);
  if (cert.violator.size() <= cert.neighborhood.size())
    throw InternalError("Hall violator extraction failed");
  return cert;
}

GapCertificate theoremGapCertificate(const DiscreteVectorField& v) {
  const SimplicialComplex& k = *v.host;
  if (!k.connected()) throw InputError("complex must be connected");
  if (!relaxedHypothesesHold(k))
    throw InputError("complex fails the relaxed hypotheses (connected, "
                     "chi = 1, H_2 = 0)");

  const CriticalReport report = criticalReport(v);
  GapCertificate cert;
  if (report.total == 1) {
    cert.status = GapCertificate::Status::NoObstruction;
    return cert;
  }
  const int m1 = k.dim() >= 1 ? report.counts[1] : 0;
  const int m2 = k.dim() >= 2 ? report.counts[2] : 0;
  if (report.counts[0] != 1 || m1 != m2 || m1 < 1)
    throw InputError("field does not have the optimal critical shape "
                     "(1, k, k)");

  const CriticalIncidenceGraph g = criticalIncidenceGraph(v);
  MatchingCertificate hall = hallMatching(g);
  if (!hall.complete) {
    cert.status = GapCertificate::Status::HallViolation;
    cert.hall = std::move(hall);
    return cert;
  }

  const NormalizedFunction h = normalize(v);
  long long gapSum = 0;
  for (const auto& [ai, bi] : hall.matching) {
    const CellId e = g.sideA[ai];
    const CellId s = g.sideB[bi];
    if (h.values[e] >= h.values[s])
      throw InternalError("matched pair without an h-gap");
    cert.pairs.push_back({e, s, h.values[e], h.values[s]});
    gapSum += h.values[s] - h.values[e];
  }
  cert.nkfValue = nkf(v).value;
  if (cert.nkfValue != gapSum || gapSum <= 0)
    throw InternalError("gap sum does not reproduce the invariant");
  cert.status = GapCertificate::Status::Certified;
  return cert;
}

}  // namespace mtk
