#include "doctest.h"

#include <sstream>

#include "cntube/error.hpp"
#include "cntube/geometry.hpp"
#include "cntube/nanotube.hpp"
#include "cntube/oracles.hpp"
#include "cntube/verify.hpp"

using namespace cntube;

namespace {

struct Expected {
  IntTriple c;
  Int n;
  IntTriple c_tilde;
  IntTriple t;
  Int R;
  Int q;
  Int q_tilde;
  IntTriple w;
  TubeClass cls;
};

// Frozen from an exhaustive search that does not use extended Euclid.
const Expected kTable[] = {
    {{10, -2, -8}, 2, {5, -1, -4}, {-1, 3, -2}, 6, 28, 14, {1, 0, -1}, TubeClass::chiral},
    {{7, -3, -4}, 1, {7, -3, -4}, {-1, 11, -10}, 1, 74, 74, {-2, 1, 1}, TubeClass::chiral},
    {{9, -3, -6}, 3, {3, -1, -2}, {-1, 5, -4}, 3, 42, 14, {1, 0, -1}, TubeClass::chiral},
    {{12, -5, -7}, 1, {12, -5, -7}, {-2, 19, -17}, 1, 218, 218, {5, -2, -3}, TubeClass::chiral},
    {{6, -1, -5}, 1, {6, -1, -5}, {-4, 11, -7}, 1, 62, 62, {1, 0, -1}, TubeClass::chiral},
    {{5, -1, -4}, 1, {5, -1, -4}, {-1, 3, -2}, 3, 14, 14, {1, 0, -1}, TubeClass::chiral},
    {{11, -4, -7}, 1, {11, -4, -7}, {-1, 6, -5}, 3, 62, 62, {3, -1, -2}, TubeClass::chiral},
};

Int norm2(const TranslationVector& v) { return frame_dot(v.coords(), v.coords()); }

} // namespace

TEST_CASE("frozen chirality data") {
  for (const auto& e : kTable) {
    CAPTURE(e.c[0]);
    CAPTURE(e.c[1]);
    const auto cd = analyze(e.c);
    CHECK(cd.c.coords() == e.c);
    CHECK(cd.n == e.n);
    CHECK(cd.c_tilde.coords() == e.c_tilde);
    CHECK(cd.t.coords() == e.t);
    CHECK(cd.R == e.R);
    CHECK(cd.q == e.q);
    CHECK(cd.q_tilde == e.q_tilde);
    CHECK(cd.w.coords() == e.w);
    CHECK(cd.tube_class == e.cls);
    CHECK(cd.normalization.is_identity());
  }
}

TEST_CASE("armchair and zigzag tubes") {
  const auto arm = analyze({2, -1, -1});
  CHECK(arm.tube_class == TubeClass::armchair);
  CHECK(arm.n == 1);
  CHECK(arm.t.coords() == IntTriple{0, 1, -1});
  CHECK(arm.R == 3);
  CHECK(arm.q == 2);
  // Two shortest screw vectors tie here; both have |w|^2 = 2 in frame units.
  CHECK(norm2(arm.w) == 2);
  CHECK((arm.w.coords() == IntTriple{-1, 1, 0} || arm.w.coords() == IntTriple{1, 0, -1}));
  CHECK(oracle::projection_is_unit_step(arm.w, arm));

  const auto zig = analyze({1, 0, -1});
  CHECK(zig.tube_class == TubeClass::zigzag);
  CHECK(zig.t.coords() == IntTriple{-1, 2, -1});
  CHECK(zig.R == 1);
  CHECK(zig.q == 2);
  CHECK(norm2(zig.w) == 2);
  CHECK((zig.w.coords() == IntTriple{-1, 1, 0} || zig.w.coords() == IntTriple{0, 1, -1}));
  CHECK_FALSE(zig.is_chiral());
  CHECK(to_string(TubeClass::zigzag) == "zigzag");
}

TEST_CASE("normalization") {
  const auto cd = analyze({-8, 10, -2});
  CHECK(cd.c.coords() == IntTriple{10, -2, -8});
  CHECK_FALSE(cd.normalization.is_identity());
  CHECK_FALSE(cd.normalization.negated);

  const auto neg = analyze({-10, 2, 8});
  CHECK(neg.c.coords() == IntTriple{10, -2, -8});
  CHECK(neg.normalization.negated);

  // Middle component positive: negate.
  const auto mid = analyze({8, 2, -10});
  CHECK(mid.c.coords() == IntTriple{10, -2, -8});
  CHECK(mid.normalization.negated);

  for (const IntTriple in : {IntTriple{-4, -1, 5}, IntTriple{1, 4, -5}, IntTriple{0, 3, -3}}) {
    const auto nm = normalize_chirality(in);
    IntTriple out{};
    for (int i = 0; i < 3; ++i)
      out[i] = (nm.negated ? -1 : 1) * in[nm.permutation[i]];
    const auto cd = analyze(in);
    CHECK(out == cd.c.coords());
    CHECK(cd.c[0] > cd.c[1]);
    CHECK(cd.c[1] >= cd.c[2]);
    CHECK(cd.c[1] <= 0);
  }
}

TEST_CASE("hamada conversion") {
  CHECK(hamada_to_triple(6, 4) == IntTriple{10, -4, -6});
  CHECK(hamada_to_triple(5, 0) == IntTriple{5, 0, -5});
  CHECK(analyze(hamada_to_triple(5, 5)).tube_class == TubeClass::armchair);
  CHECK(analyze(hamada_to_triple(5, 0)).tube_class == TubeClass::zigzag);
}

TEST_CASE("invalid chiralities") {
  CHECK_THROWS_AS(analyze({0, 0, 0}), InvalidArgument);
  CHECK_THROWS_AS(analyze({1, 0, 0}), InvalidArgument);
}

TEST_CASE("decomposition") {
  const auto cd = analyze({10, -2, -8});
  const auto x = decompose(LatticePoint(11, -2, -8), cd);
  CHECK(x.s == 0);
  CHECK(x.m == 0);
  CHECK(x.p == 1);
  CHECK(x.j == 1);
  CHECK(canonicalize(LatticePoint(11, -2, -8), cd).representative() == LatticePoint(1, 0, 0));

  verify::Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto v = verify::random_point(rng, 500);
    const auto d = decompose(v, cd);
    CHECK(d.m >= 0);
    CHECK(d.m < cd.n);
    const LatticePoint rebuilt = compose_representative(d.s, d.m, d.p, cd) + d.j * cd.c;
    REQUIRE(rebuilt == v);
  }
}

TEST_CASE("decomposition is unique (brute force)") {
  verify::Rng rng(37);
  for (const auto& e : kTable) {
    const auto cd = analyze(e.c);
    for (int trial = 0; trial < 20; ++trial) {
      // Build v from a word inside the search window so the window is known to contain it.
      const Int s0 = static_cast<Int>(rng() % 61) - 30, j0 = static_cast<Int>(rng() % 11) - 5;
      const Int m0 = static_cast<Int>(rng() % static_cast<std::uint64_t>(cd.n));
      const int p0 = static_cast<int>(rng() % 2);
      const auto v = compose_representative(s0, m0, p0, cd) + j0 * cd.c;
      const auto words = oracle::words_reaching(v, cd, 30, 5);
      REQUIRE(words.size() == 1);
      const auto d = decompose(v, cd);
      CHECK(words[0].s == d.s);
      CHECK(words[0].m == d.m);
      CHECK(words[0].p == d.p);
      CHECK(words[0].j == d.j);
    }
  }
}

TEST_CASE("same_class and integer_multiple_of") {
  const auto cd = analyze({10, -2, -8});
  CHECK(same_class(LatticePoint(0, 0, 0), LatticePoint(10, -2, -8), cd));
  CHECK_FALSE(same_class(LatticePoint(0, 0, 0), LatticePoint(5, -1, -4), cd));
  Int j = 0;
  CHECK(integer_multiple_of({-20, 4, 16}, cd.c, &j));
  CHECK(j == -2);
  CHECK(integer_multiple_of({0, 0, 0}, cd.c, &j));
  CHECK(j == 0);
  CHECK_FALSE(integer_multiple_of({5, -1, -4}, cd.c));
}

TEST_CASE("circumference") {
  const auto cd = analyze({10, -2, -8});
  CHECK(cd.circumference() == doctest::Approx(std::sqrt(252.0)));
}

TEST_CASE("invariant chain on random chiral tubes") {
  verify::Rng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const auto cd = analyze(verify::random_chiral(rng, 200));
    const Int expect_R = (cd.c_tilde[0] - cd.c_tilde[1]) % 3 == 0 ? 3 * cd.n : cd.n;
    REQUIRE(cd.R == expect_R);
    REQUIRE(cd.q % cd.n == 0);
    REQUIRE(integer_multiple_of((cd.q * cd.w - cd.n * cd.t).coords(), cd.c));
    REQUIRE(oracle::axis_norm_identity(cd));
    REQUIRE(oracle::projection_is_unit_step(cd.w, cd));
    REQUIRE(frame_dot(cd.c.coords(), cd.t.coords()) == 0);
  }
}

TEST_CASE("w is the shortest screw vector") {
  verify::Rng rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const auto cd = analyze(verify::random_chiral(rng, 12));
    const Int bound = std::max({std::abs(cd.w[0]), std::abs(cd.w[1]), std::abs(cd.w[2])}) + 4;
    const auto best = oracle::shortest_screw_norm(cd, bound);
    REQUIRE(best.has_value());
    CHECK(*best == norm2(cd.w));
  }
}

TEST_CASE("tube points print their representative") {
  const auto cd = analyze({10, -2, -8});
  std::ostringstream os;
  os << canonicalize(LatticePoint(11, -2, -8), cd);
  CHECK(os.str().find("(1,0,0)") != std::string::npos);
}
