#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "helpers.hpp"
#include "morsekit/analysis.hpp"
#include "morsekit/catalog.hpp"
#include "morsekit/normalize.hpp"
#include "morsekit/search.hpp"

using namespace mtk;

TEST_CASE("gradient paths on a matched path graph") {
  // v1 - v2 - v3 with v2 matched into (v2,v3): the one-step vertex path
  // v2, (v2,v3), v3 is the only nontrivial V-path
  const auto k = catalog("path_3");
  const CellId v2 = k.findCell({"v002"});
  const CellId v3 = k.findCell({"v003"});
  const CellId e12 = k.findCell({"v001", "v002"});
  const CellId e23 = k.findCell({"v002", "v003"});
  const auto v = validateField(k, {{v2, e23}});

  const auto trivial = gradientPaths(v, e12, e12);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].cells == std::vector<CellId>{e12});

  const auto paths = gradientPaths(v, v2, v3);
  REQUIRE(paths.size() == 1);
  CHECK(paths[0].cells == std::vector<CellId>{v2, e23, v3});

  CHECK(gradientPaths(v, v3, v2).empty());
  CHECK(gradientPaths(v, e12, e23).empty());
  CHECK_THROWS_AS(gradientPaths(v, e12, v2), InputError);  // dim mismatch
}

TEST_CASE("morse boundary of the empty field is the simplicial boundary") {
  const auto k = catalog("cycle_3");
  const auto v = validateField(k, {});
  const auto m = morseBoundary(v);
  REQUIRE(m.basis.size() == 2);
  CHECK(m.basis[0].size() == 3);
  CHECK(m.basis[1].size() == 3);
  const auto d1 = boundaryMatrix(k, 1);
  for (int r = 0; r < d1.rows; ++r)
    for (int c = 0; c < d1.cols; ++c)
      CHECK(m.boundary[1].at(r, c) == d1.at(r, c));
}

TEST_CASE("morse complex of an optimal torus field") {
  const auto k = catalog("torus_7");
  const auto opt = minCriticalCells(k, 10000000);
  REQUIRE(opt.total == 4);
  const auto v = validateField(k, opt.witnesses.front());
  const auto m = morseBoundary(v);
  CHECK(m.basis[0].size() == 1);
  CHECK(m.basis[1].size() == 2);
  CHECK(m.basis[2].size() == 1);
  // all Morse boundary maps vanish rationally on the torus
  std::vector<int> ranks{1, 2, 1};
  std::vector<IntMatrix> d{{}, m.boundary[1], m.boundary[2]};
  CHECK(rationalBetti(ranks, d) == std::vector<long long>{1, 2, 1});
}

TEST_CASE("morse homology equals simplicial homology on sampled fields") {
  testutil::Lcg rng(211);
  for (const auto& name : {"dunce_hat", "rp2_6", "torus_7", "cycle_5"}) {
    const auto k = catalog(name);
    for (int trial = 0; trial < 10; ++trial)
      CHECK(morseHomologyCheck(testutil::sampleField(k, rng)));
  }
}

TEST_CASE("critical incidence graph on the dunce hat") {
  const auto k = catalog("dunce_hat");
  const auto opt = minCriticalCells(k, 10000000);
  REQUIRE(opt.total == 3);
  for (const auto& w : opt.witnesses) {
    const auto v = validateField(k, w);
    const auto g = criticalIncidenceGraph(v);
    CHECK(g.sideA.size() == 1);  // one critical edge
    CHECK(g.sideB.size() == 1);  // one critical 2-cell
    for (CellId e : g.sideA) CHECK(k.cellDim(e) == 1);
    for (CellId s : g.sideB) CHECK(k.cellDim(s) == 2);
  }
}

TEST_CASE("maximum bipartite matching against exhaustive search") {
  // every bipartite graph on 3+3: brute force over edge subsets that
  // form matchings
  const int a = 3, b = 3;
  std::vector<std::pair<int, int>> all;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) all.push_back({i, j});
  for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1) edges.push_back(all[i]);
    int best = 0;
    for (std::uint32_t sub = 0; sub < (1u << edges.size()); ++sub) {
      int usedA = 0, usedB = 0, size = 0;
      bool ok = true;
      for (std::size_t i = 0; i < edges.size(); ++i)
        if (sub >> i & 1) {
          if (usedA >> edges[i].first & 1) ok = false;
          if (usedB >> edges[i].second & 1) ok = false;
          usedA |= 1 << edges[i].first;
          usedB |= 1 << edges[i].second;
          ++size;
        }
      if (ok) best = std::max(best, size);
    }
    const auto matched = maxBipartiteMatching(a, b, edges);
    int size = 0;
    for (int m : matched)
      if (m != -1) ++size;
    CHECK(size == best);
  }
}

TEST_CASE("hall certificate on an unsaturatable graph") {
  CriticalIncidenceGraph g;
  g.sideA = {0, 1};        // placeholder cell ids
  g.sideB = {2, 3};
  g.edges = {{0, 0}, {0, 1}};  // both B cells see only A[0]
  const auto cert = hallMatching(g);
  CHECK_FALSE(cert.complete);
  CHECK(cert.violator.size() > cert.neighborhood.size());
  // violator is on the B side and its neighborhood is correct
  for (int bIdx : cert.violator)
    for (const auto& [ai, bi] : g.edges)
      if (bi == bIdx)
        CHECK(std::find(cert.neighborhood.begin(), cert.neighborhood.end(),
                        ai) != cert.neighborhood.end());
}

TEST_CASE("gap certificate on every optimal dunce hat field") {
  const auto k = catalog("dunce_hat");
  const auto opt = minCriticalCells(k, 10000000);
  for (const auto& w : opt.witnesses) {
    const auto v = validateField(k, w);
    const auto cert = theoremGapCertificate(v);
    REQUIRE(cert.status == GapCertificate::Status::Certified);
    REQUIRE(cert.pairs.size() == 1);
    long long sum = 0;
    for (const auto& p : cert.pairs) {
      CHECK(p.hEdge < p.hTriangle);
      sum += p.hTriangle - p.hEdge;
    }
    CHECK(sum == cert.nkfValue);
    CHECK(cert.nkfValue > 0);
    CHECK(cert.nkfValue == nkf(v).value);
  }
}

TEST_CASE("gap certificate rejects hypothesis violations") {
  const auto torus = catalog("torus_7");
  const auto v = validateField(torus, {});
  CHECK_THROWS_AS(theoremGapCertificate(v), InputError);  // chi != 1

  // collapsible: single critical cell is reported as no obstruction
  const auto k = SimplicialComplex::fromMaximal({{"a", "b"}});
  const auto c = isCollapsible(k);
  const auto w = prop3Witness(k, c);
  CHECK(theoremGapCertificate(w).status ==
        GapCertificate::Status::NoObstruction);
}
