#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "cntube/error.hpp"
#include "cntube/geometry.hpp"
#include "cntube/oracles.hpp"
#include "cntube/verify.hpp"

using namespace cntube;
using doctest::Approx;

namespace {
constexpr double tol = 1e-12;
const double h = kZoneHalfWidth; // 2pi/3a
} // namespace

TEST_CASE("constants") {
  CHECK(kFrameScale == Approx(2.0 / 3.0));
  CHECK(std::abs(h - kPi) < tol);
}

TEST_CASE("embed") {
  const auto p = embed(IntTriple{1, 0, 0});
  CHECK(std::abs(p.x - 1.0) < tol);
  CHECK(std::abs(p.y) < tol);
  CHECK(norm(embed(IntTriple{0, 0, 0})) < tol);
  CHECK(norm(embed(IntTriple{1, 1, 1})) < tol);
  for (const auto& e : frame_vectors())
    CHECK(std::abs(norm(e) - 1.0) < tol);
}

TEST_CASE("canonical coordinates and tight-frame reconstruction") {
  const auto x = canonical_coords({1.0, 0.0});
  CHECK(std::abs(x[0] - 1.0) < tol);
  CHECK(std::abs(x[1] + 0.5) < tol);
  CHECK(std::abs(x[2] + 0.5) < tol);
  const auto z = canonical_coords({0.0, 0.0});
  CHECK(std::abs(z[0]) + std::abs(z[1]) + std::abs(z[2]) < tol);

  verify::Rng rng(3);
  std::uniform_real_distribution<double> d(-10.0, 10.0);
  for (int i = 0; i < 100; ++i) {
    const PlaneVector p{d(rng), d(rng)};
    const auto c = canonical_coords(p);
    CHECK(std::abs(c[0] + c[1] + c[2]) < tol);
    CHECK(norm(frame_reconstruct(c) - p) < tol);
  }
}

TEST_CASE("pairing") {
  const KVector k(h, -h, 0.0);
  CHECK(std::abs(pairing(k, IntTriple{10, -2, -8}) - 8 * kPi) < tol);
  CHECK(pairing(k, IntTriple{0, 0, 0}) == 0.0);

  const auto& b0 = periodicity_vectors()[0];
  verify::Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto v = verify::random_translation(rng, 100);
    CHECK(std::abs(pairing(b0, v) - 2 * kPi * static_cast<double>(v[0])) < 1e-9);
  }
  // Shifting the real representative by (alpha,alpha,alpha) does not matter.
  const KVector q(0.3, -1.1, 0.8);
  CHECK(std::abs(pairing(q, IntTriple{4, -1, -3}) - pairing(q, IntTriple{6, 1, -1})) < tol);
}

TEST_CASE("pairing is the Euclidean pairing with the reciprocal embedding") {
  verify::Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    const auto k = verify::random_k(rng, 5.0);
    const auto v = verify::random_point(rng, 30);
    CHECK(std::abs(pairing(k, v) - dot(reciprocal_embed(k), embed(v))) < 1e-11);
  }
}

TEST_CASE("inner product matches the Euclidean oracle") {
  const TranslationVector c(10, -2, -8), t(-1, 3, -2);
  // Frozen from the embedding oracle: |embed(c)|^2 = 252.
  CHECK(std::abs(oracle::euclidean_dot(c.coords(), c.coords()) - 252.0) < 1e-10);
  CHECK(std::abs(inner(c, c) - 252.0) < tol);
  CHECK(std::abs(inner(c, t)) < tol);
  CHECK(std::abs(inner(TranslationVector(1, -1, 0), TranslationVector(1, -1, 0)) - 3.0) < tol);
  CHECK_THROWS_AS(inner(IntTriple{1, 0, 0}, IntTriple{0, 0, 0}), InvalidArgument);

  verify::Rng rng(17);
  for (int i = 0; i < 1000; ++i) {
    const auto u = verify::random_translation(rng, 20);
    const auto w = verify::random_translation(rng, 20);
    REQUIRE(std::abs(inner(u, w) - oracle::euclidean_dot(u.coords(), w.coords())) < tol);
  }
}

TEST_CASE("hexagon B") {
  CHECK(hexagon_B_contains(KVector(0, 0, 0)));
  CHECK_FALSE(hexagon_B_contains(periodicity_vectors()[0]));
  CHECK(hexagon_B_contains(KVector(h, -h, 0)));
  CHECK_FALSE(hexagon_B_contains(KVector(h + 1e-6, -h, -1e-6)));
}

TEST_CASE("periodicity vectors") {
  const auto& b = periodicity_vectors();
  for (const auto& bi : b)
    CHECK(std::abs(bi[0] + bi[1] + bi[2]) < tol);
  CHECK(b[1][0] == b[0][1]);
  CHECK(b[1][1] == b[0][0]);
  CHECK(b[1][2] == b[0][2]);
  CHECK(std::abs(reciprocal_norm(b[0]) - reciprocal_norm(b[1])) < tol);
  CHECK(std::abs(reciprocal_norm(b[0]) - reciprocal_norm(b[2])) < tol);
  // Reciprocal of a honeycomb with unit bonds: |b| = 4pi/3.
  CHECK(std::abs(reciprocal_norm(b[0]) - 4 * kPi / 3) < tol);
}

TEST_CASE("k-vectors reject nonzero sums") {
  CHECK_THROWS_AS(KVector(1.0, 0.0, 0.0), InvalidArgument);
  CHECK_NOTHROW(KVector(1.0, -0.5, -0.5));
}

TEST_CASE("reduce_to_hexagon") {
  const auto& b = periodicity_vectors();
  verify::Rng rng(23);
  for (int i = 0; i < 500; ++i) {
    const auto k = verify::random_k(rng, 20.0);
    const auto red = reduce_to_hexagon(k);
    CHECK(hexagon_B_contains(red.k, kGeometryTolerance));
    KVector back = red.k;
    for (const auto& s : red.path)
      back = back - static_cast<double>(s.sign) * b[s.index];
    CHECK(max_abs_difference(back, k) < 1e-9);
  }
  const auto inside = reduce_to_hexagon(KVector(0.5, -0.25, -0.25));
  CHECK(inside.path.empty());
}

TEST_CASE("embedding is injective on a box") {
  std::vector<std::pair<double, double>> pts;
  for (Int a = -10; a <= 10; ++a)
    for (Int b = -10; b <= 10; ++b)
      for (Int c = -10; c <= 10; ++c)
        if (a + b + c == 0 || a + b + c == 1) {
          const auto p = embed(IntTriple{a, b, c});
          pts.emplace_back(p.x, p.y);
        }
  std::sort(pts.begin(), pts.end());
  int collisions = 0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (std::hypot(pts[i].first - pts[i - 1].first, pts[i].second - pts[i - 1].second) < 1e-9)
      ++collisions;
  CHECK(collisions == 0);
}
