#include "doctest.h"

#include <algorithm>
#include <vector>

#include "cntube/error.hpp"
#include "cntube/lattice.hpp"
#include "cntube/oracles.hpp"
#include "cntube/verify.hpp"

using namespace cntube;

TEST_CASE("lattice points validate the coordinate sum") {
  CHECK_NOTHROW(LatticePoint(0, 0, 0));
  CHECK_NOTHROW(LatticePoint(1, 0, 0));
  CHECK_THROWS_AS(LatticePoint(1, 1, 0), InvalidArgument);
  CHECK_THROWS_AS(LatticePoint(-1, 0, 0), InvalidArgument);
  CHECK_THROWS_AS(TranslationVector(1, 0, 0), InvalidArgument);
  CHECK_NOTHROW(TranslationVector(10, -2, -8));
}

TEST_CASE("epsilon") {
  CHECK(epsilon(LatticePoint(0, 0, 0)) == 1);
  CHECK(epsilon(LatticePoint(1, 0, 0)) == -1);
  CHECK(epsilon(LatticePoint(3, -1, -2)) == 1);
}

TEST_CASE("distance") {
  CHECK(distance(LatticePoint(0, 0, 0), LatticePoint(1, 0, 0)) == 1);
  CHECK(distance(LatticePoint(0, 0, 0), LatticePoint(0, 0, 0)) == 0);
  CHECK(distance(LatticePoint(0, 0, 0), LatticePoint(1, -1, 1)) == 3);
}

TEST_CASE("nearest neighbours") {
  using A = std::array<LatticePoint, 3>;
  CHECK(nearest_neighbors(LatticePoint(0, 0, 0)) ==
        A{LatticePoint(1, 0, 0), LatticePoint(0, 1, 0), LatticePoint(0, 0, 1)});
  CHECK(nearest_neighbors(LatticePoint(1, 0, 0)) ==
        A{LatticePoint(0, 0, 0), LatticePoint(1, -1, 0), LatticePoint(1, 0, -1)});
  CHECK(nearest_neighbors(LatticePoint(5, -1, -4)) ==
        A{LatticePoint(6, -1, -4), LatticePoint(5, 0, -4), LatticePoint(5, -1, -3)});
}

TEST_CASE("next-nearest neighbours follow the fixed (i,j) order") {
  using A = std::array<LatticePoint, 6>;
  CHECK(next_nearest_neighbors(LatticePoint(0, 0, 0)) ==
        A{LatticePoint(1, -1, 0), LatticePoint(1, 0, -1), LatticePoint(-1, 1, 0),
          LatticePoint(0, 1, -1), LatticePoint(-1, 0, 1), LatticePoint(0, -1, 1)});
}

TEST_CASE("honeycomb generators") {
  const auto g = honeycomb_generators();
  CHECK(g[0](LatticePoint(1, 0, 0)) == LatticePoint(0, 0, 1));
  CHECK(g[1](LatticePoint(0, 1, 0)) == LatticePoint(0, 0, 1));
  CHECK(g[2](LatticePoint(0, 0, 0)) == LatticePoint(1, 0, 0));
  // inversion is an involution
  const LatticePoint v(4, -7, 3);
  CHECK(g[2](g[2](v)) == v);
}

TEST_CASE("is_translation") {
  CHECK(is_translation({1, -1, 0}));
  CHECK_FALSE(is_translation({1, 0, 0}));
  CHECK(is_translation({10, -2, -8}));
}

TEST_CASE("neighbour shells match brute force") {
  verify::Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto v = verify::random_point(rng, 10000);
    auto nn = nearest_neighbors(v);
    std::vector<LatticePoint> got(nn.begin(), nn.end());
    auto expect = oracle::neighbor_shell(v, 1, 1);
    std::sort(got.begin(), got.end());
    std::sort(expect.begin(), expect.end());
    REQUIRE(got == expect);
    for (const auto& u : nn)
      CHECK(epsilon(u) == -epsilon(v));

    auto nnn = next_nearest_neighbors(v);
    std::vector<LatticePoint> got2(nnn.begin(), nnn.end());
    auto expect2 = oracle::neighbor_shell(v, 2, 2);
    std::erase_if(expect2, [&](const LatticePoint& u) { return epsilon(u) != epsilon(v); });
    std::sort(got2.begin(), got2.end());
    std::sort(expect2.begin(), expect2.end());
    REQUIRE(got2 == expect2);
  }
}

TEST_CASE("metric axioms and isometries on random triples") {
  verify::Rng rng(11);
  const auto gens = honeycomb_generators();
  for (int trial = 0; trial < 500; ++trial) {
    const auto v = verify::random_point(rng, 40);
    const auto u = verify::random_point(rng, 40);
    const auto w = verify::random_point(rng, 40);
    CHECK(distance(v, u) == distance(u, v));
    CHECK((distance(v, u) == 0) == (v == u));
    CHECK(distance(v, w) <= distance(v, u) + distance(u, w));
    for (const auto& g : gens)
      CHECK(distance(g(v), g(u)) == distance(v, u));
  }
}
