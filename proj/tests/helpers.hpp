// shared test utilities: deterministic field sampling and exhaustive
// matching enumeration for small complexes
#ifndef TESTS_HELPERS_HPP
#define TESTS_HELPERS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "morsekit/field.hpp"

namespace testutil {

// 64-bit LCG (Knuth constants); fixed seeds keep every test run identical
struct Lcg {
  std::uint64_t s;
  explicit Lcg(std::uint64_t seed) : s(seed) {}
  std::uint32_t next() {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::uint32_t>(s >> 33);
  }
  std::uint32_t below(std::uint32_t n) { return next() % n; }
};

// Random valid field: shuffle all Hasse incidences, then greedily match
// pairs that keep the matching acyclic.
inline mtk::DiscreteVectorField sampleField(const mtk::SimplicialComplex& k,
                                            Lcg& rng) {
  std::vector<std::pair<mtk::CellId, mtk::CellId>> incidences;
  for (mtk::CellId c = 0; c < k.cellCount(); ++c)
    for (const auto& cf : k.cofaces(c)) incidences.push_back({c, cf.cell});
  for (std::size_t i = incidences.size(); i > 1; --i)
    std::swap(incidences[i - 1], incidences[rng.below(i)]);

  mtk::DiscreteVectorField v;
  v.host = &k;
  v.pairUp.assign(k.cellCount(), -1);
  v.pairDown.assign(k.cellCount(), -1);
  std::vector<std::pair<mtk::CellId, mtk::CellId>> chosen;
  for (const auto& [lo, hi] : incidences) {
    if (v.pairUp[lo] != -1 || v.pairDown[lo] != -1) continue;
    if (v.pairUp[hi] != -1 || v.pairDown[hi] != -1) continue;
    if (!mtk::pairKeepsAcyclic(v, lo, hi)) continue;
    v.pairUp[lo] = hi;
    v.pairDown[hi] = lo;
    chosen.push_back({lo, hi});
  }
  return mtk::validateField(k, chosen);
}

// Every acyclic matching of a small complex, by subset enumeration over
// the incidence list. Exponential; keep the input tiny.
inline std::vector<std::vector<std::pair<mtk::CellId, mtk::CellId>>>
allMatchings(const mtk::SimplicialComplex& k) {
  std::vector<std::pair<mtk::CellId, mtk::CellId>> incidences;
  for (mtk::CellId c = 0; c < k.cellCount(); ++c)
    for (const auto& cf : k.cofaces(c)) incidences.push_back({c, cf.cell});

  std::vector<std::vector<std::pair<mtk::CellId, mtk::CellId>>> out;
  const std::size_t m = incidences.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
    std::vector<std::pair<mtk::CellId, mtk::CellId>> pairs;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) pairs.push_back(incidences[i]);
    try {
      mtk::validateField(k, pairs);
    } catch (const mtk::Error&) {
      continue;
    }
    out.push_back(std::move(pairs));
  }
  return out;
}

}  // namespace testutil

#endif
