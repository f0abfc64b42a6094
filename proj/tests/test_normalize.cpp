#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "morsekit/catalog.hpp"
#include "morsekit/morse_function.hpp"
#include "morsekit/normalize.hpp"

using namespace mtk;

TEST_CASE("collapsed edge") {
  // pair (a, ab), b critical: h(a)=1, h(b)=0, h(ab)=1
  const auto k = SimplicialComplex::fromMaximal({{"a", "b"}});
  const CellId a = k.findCell({"a"}), b = k.findCell({"b"}),
               ab = k.findCell({"a", "b"});
  const auto v = validateField(k, {{a, ab}});
  const auto h = normalize(v);
  CHECK(h.values[a] == 1);
  CHECK(h.values[b] == 0);
  CHECK(h.values[ab] == 1);
  CHECK(nkf(v).value == 0);  // 1 + 0 - 1
}

TEST_CASE("everything critical gives h = dim") {
  for (const auto& name : {"cycle_4", "full_simplex_2", "path_3"}) {
    const auto k = catalog(name);
    const auto v = validateField(k, {});
    const auto h = normalize(v);
    for (CellId c = 0; c < k.cellCount(); ++c)
      CHECK(h.values[c] == k.cellDim(c));
  }
}

TEST_CASE("normalize equals the definitional oracle on every matching") {
  for (const auto& name : {"point", "full_simplex_1", "path_3", "cycle_3"}) {
    const auto k = catalog(name);
    for (const auto& pairs : testutil::allMatchings(k)) {
      const auto v = validateField(k, pairs);
      const auto fast = normalize(v);
      const auto slow = bruteForceNormalize(v, k.cellCount());
      CHECK(fast.values == slow.values);
    }
  }
}

TEST_CASE("normalized values are pointwise minimal, not just equivalent") {
  // on C3 with one vertex-edge pair, check against the oracle with a
  // generous bound to rule out bound artifacts
  const auto k = catalog("cycle_3");
  const auto v = validateField(
      k, {{k.findCell({"v001"}), k.findCell({"v001", "v002"})}});
  CHECK(normalize(v).values == bruteForceNormalize(v, 9).values);
}

TEST_CASE("sampled fields satisfy the structural laws of h") {
  testutil::Lcg rng(31);
  for (const auto& name :
       {"dunce_hat", "rp2_6", "torus_7", "cycle_5", "full_simplex_3"}) {
    const auto k = catalog(name);
    for (int trial = 0; trial < 20; ++trial) {
      const auto v = testutil::sampleField(k, rng);
      const auto h = normalize(v);
      for (CellId c = 0; c < k.cellCount(); ++c) {
        CHECK(h.values[c] >= k.cellDim(c));
        const bool zero = h.values[c] == 0;
        const bool criticalVertex = v.isCritical(c) && k.cellDim(c) == 0;
        CHECK(zero == criticalVertex);
      }
      for (const auto& [lo, hi] : v.pairs)
        CHECK(h.values[lo] == h.values[hi]);
      for (CellId c = 0; c < k.cellCount(); ++c)
        for (const auto& cf : k.cofaces(c))
          if (v.pairUp[c] != cf.cell)
            CHECK(h.values[c] < h.values[cf.cell]);
    }
  }
}

TEST_CASE("normalization is a morse function inducing the same field") {
  testutil::Lcg rng(47);
  for (const auto& name : {"dunce_hat", "torus_7", "path_5"}) {
    const auto k = catalog(name);
    for (int trial = 0; trial < 10; ++trial) {
      const auto v = testutil::sampleField(k, rng);
      const auto h = normalize(v);
      CellFunction f(k.cellCount());
      for (CellId c = 0; c < k.cellCount(); ++c) f[c] = h.values[c];
      CHECK(isMorseFunction(k, f));
      CHECK(gradientFieldOf(k, f).pairs == v.pairs);
    }
  }
}

TEST_CASE("alternating sum audit: all cells vs critical cells only") {
  testutil::Lcg rng(53);
  for (const auto& name : {"dunce_hat", "rp2_6", "cycle_4"}) {
    const auto k = catalog(name);
    for (int trial = 0; trial < 10; ++trial) {
      const auto v = testutil::sampleField(k, rng);
      const auto h = normalize(v);
      const auto n = nkf(v);
      long long full = 0;
      for (CellId c = 0; c < k.cellCount(); ++c)
        full += (k.cellDim(c) % 2 == 0 ? 1 : -1) * h.values[c];
      long long critOnly = 0;
      for (const auto& [cell, contribution] : n.criticalContributions) {
        CHECK(v.isCritical(cell));
        critOnly += contribution;
      }
      CHECK(full == n.value);
      CHECK(critOnly == n.value);
    }
  }
}

TEST_CASE("oracle refuses oversized inputs") {
  const auto k = catalog("cycle_3");
  const auto v = validateField(k, {});
  CHECK_THROWS_AS(bruteForceNormalize(v, 2), InputError);  // bound < n
  const auto big = catalog("dunce_hat");
  CHECK_THROWS_AS(bruteForceNormalize(validateField(big, {}), 49),
                  InputError);
}
