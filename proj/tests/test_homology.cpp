#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "morsekit/catalog.hpp"
#include "morsekit/homology.hpp"

using namespace mtk;

TEST_CASE("smith normal form basics") {
  IntMatrix m(2, 2);
  m.at(0, 0) = 2;
  m.at(1, 1) = 4;
  auto inv = smithInvariantFactors(m);
  REQUIRE(inv.size() == 2);
  CHECK(inv[0] == 2);
  CHECK(inv[1] == 4);

  // divisibility fix-up: diag(2, 3) ~ diag(1, 6)
  IntMatrix d(2, 2);
  d.at(0, 0) = 2;
  d.at(1, 1) = 3;
  inv = smithInvariantFactors(d);
  REQUIRE(inv.size() == 2);
  CHECK(inv[0] == 1);
  CHECK(inv[1] == 6);

  IntMatrix z(3, 2);
  CHECK(smithInvariantFactors(z).empty());
}

TEST_CASE("smith invariant factors divide in a chain") {
  IntMatrix m(3, 3);
  int vals[9] = {6, 4, 2, 4, 6, 8, 2, 8, 10};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m.at(r, c) = vals[r * 3 + c];
  const auto inv = smithInvariantFactors(m);
  for (std::size_t i = 1; i < inv.size(); ++i) CHECK(inv[i] % inv[i - 1] == 0);
}

TEST_CASE("homology of catalog surfaces") {
  const auto dunce = homology(catalog("dunce_hat"));
  CHECK(dunce.acyclic);
  CHECK(dunce.bettiReduced == std::vector<long long>{0, 0, 0});
  CHECK(dunce.euler == 1);
  for (const auto& t : dunce.torsion) CHECK(t.empty());

  const auto rp2 = homology(catalog("rp2_6"));
  CHECK_FALSE(rp2.acyclic);
  CHECK(rp2.bettiReduced == std::vector<long long>{0, 0, 0});
  REQUIRE(rp2.torsion[1].size() == 1);
  CHECK(rp2.torsion[1][0] == 2);
  CHECK(rp2.euler == 1);

  const auto torus = homology(catalog("torus_7"));
  CHECK(torus.bettiReduced == std::vector<long long>{0, 2, 1});
  CHECK(torus.torsion[1].empty());
  CHECK(torus.euler == 0);

  const auto bing = homology(catalog("bing_house"));
  CHECK(bing.acyclic);
  CHECK(bing.euler == 1);
}

TEST_CASE("unreduced vs reduced betti") {
  const auto p = homology(catalog("point"));
  CHECK(p.bettiUnreduced == std::vector<long long>{1});
  CHECK(p.bettiReduced == std::vector<long long>{0});
  CHECK(p.acyclic);

  const auto c5 = homology(catalog("cycle_5"));
  CHECK(c5.bettiUnreduced == std::vector<long long>{1, 1});
  CHECK(c5.bettiReduced == std::vector<long long>{0, 1});
}

TEST_CASE("euler agrees with alternating betti sum plus torsion-free rank") {
  for (const auto& name : {"dunce_hat", "rp2_6", "torus_7", "cycle_4"}) {
    const auto k = catalog(name);
    const auto h = homology(k);
    long long chi = 0;
    for (std::size_t d = 0; d < h.bettiUnreduced.size(); ++d)
      chi += (d % 2 == 0 ? 1 : -1) * h.bettiUnreduced[d];
    CHECK(chi == k.eulerCharacteristic());
  }
}

TEST_CASE("is_acyclic") {
  CHECK(isAcyclic(catalog("point")));
  CHECK(isAcyclic(catalog("full_simplex_3")));
  CHECK(isAcyclic(catalog("dunce_hat")));
  CHECK_FALSE(isAcyclic(catalog("rp2_6")));  // torsion must count
  CHECK_FALSE(isAcyclic(catalog("cycle_3")));
}

TEST_CASE("relaxed hypotheses") {
  CHECK(relaxedHypothesesHold(catalog("dunce_hat")));
  CHECK(relaxedHypothesesHold(catalog("rp2_6")));  // chi=1, H2=0, torsion ok
  CHECK_FALSE(relaxedHypothesesHold(catalog("torus_7")));
  CHECK_THROWS_AS(relaxedHypothesesHold(catalog("full_simplex_3")),
                  InputError);
}

TEST_CASE("rational betti of a hand-built chain complex") {
  // 0 -> Z^1 --0--> Z^1 -> 0 : betti (1, 1)
  std::vector<int> ranks{1, 1};
  std::vector<IntMatrix> d(2);
  d[1] = IntMatrix(1, 1);
  CHECK(rationalBetti(ranks, d) == std::vector<long long>{1, 1});

  d[1].at(0, 0) = 3;  // rationally an isomorphism
  CHECK(rationalBetti(ranks, d) == std::vector<long long>{0, 0});
}
