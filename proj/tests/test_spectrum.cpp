#include "doctest.h"

#include <cmath>

#include "cntube/error.hpp"
#include "cntube/oracles.hpp"
#include "cntube/spectrum.hpp"
#include "cntube/verify.hpp"

using namespace cntube;

namespace {
constexpr double tol = 1e-12;
const double h = kZoneHalfWidth;
} // namespace

TEST_CASE("dispersion at special points") {
  CHECK(std::abs(dispersion(KVector(0, 0, 0)) - 3.0) < tol);
  CHECK(std::abs(dispersion(KVector(-h, h / 2, h / 2)) - 1.0) < tol);
  for (const auto& kp : k_points()) {
    CHECK(dispersion(kp) < tol);
    CHECK(hexagon_B_contains(kp, tol));
  }
  CHECK(lambda_phase(k_points()[0]) == 0.0);
}

TEST_CASE("structure sum and lambda") {
  verify::Rng rng(61);
  for (int i = 0; i < 200; ++i) {
    const auto k = verify::random_k(rng, 4.0);
    const Complex s = structure_sum(k);
    const double lam = lambda_phase(k);
    CHECK(lam >= -kPi / 2);
    CHECK(lam < kPi / 2);
    // S e^{2i lambda} is real; its modulus is E.
    const Complex r = s * std::polar(1.0, 2 * lam);
    CHECK(std::abs(r.imag()) < 1e-12);
    CHECK(std::abs(std::abs(r) - dispersion(k)) < tol);
  }
}

TEST_CASE("dispersion symmetries") {
  verify::Rng rng(67);
  const auto& b = periodicity_vectors();
  for (int i = 0; i < 2000; ++i) {
    const auto k = verify::random_k(rng, 8.0);
    const double e = dispersion(k);
    REQUIRE(e >= 0.0);
    REQUIRE(e <= 3.0 + tol);
    REQUIRE(std::abs(dispersion(-k) - e) < tol);
    for (const auto& bi : b)
      REQUIRE(std::abs(dispersion(k + bi) - e) < tol);
    REQUIRE(std::abs(dispersion_cosine_form(k) - e) < tol);
  }
}

TEST_CASE("allowed lines") {
  const auto cd = analyze({10, -2, -8});
  CHECK(on_allowed_line(KVector(0, 0, 0), cd));
  CHECK(std::abs(line_coordinate(k_points()[0], cd) - 4.0) < 1e-12);
  CHECK(std::abs(line_spacing(cd) - 2 * kPi / std::sqrt(252.0)) < tol);

  const auto lines = allowed_lines(cd);
  REQUIRE_FALSE(lines.empty());
  Int prev = lines.front().index - 1;
  for (const auto& l : lines) {
    CHECK(l.index > prev);
    prev = l.index;
    CHECK(l.param_min <= l.param_max);
    CHECK(std::abs(reciprocal_norm(l.direction) - 1.0) < 1e-12);
    for (double t : {l.param_min, 0.5 * (l.param_min + l.param_max), l.param_max}) {
      const auto k = l.at(t);
      CHECK(on_allowed_line(k, cd));
      CHECK(std::abs(line_coordinate(k, cd) - static_cast<double>(l.index)) < 1e-9);
      CHECK(hexagon_B_contains(k, 1e-9));
    }
    // The direction is parallel to t, so moving along the line keeps <k,c>.
    CHECK(std::abs(pairing(l.direction, cd.c)) < 1e-12);
  }
}

TEST_CASE("sample_bands") {
  const auto cd = analyze({5, -1, -4});
  CHECK_THROWS_AS(sample_bands(cd, 1), InvalidArgument);
  const auto samples = sample_bands(cd, 16);
  std::size_t expected = 0;
  for (const auto& l : allowed_lines(cd))
    expected += l.param_min == l.param_max ? 1 : 16;
  CHECK(samples.size() == expected);
  for (std::size_t i = 1; i < samples.size(); ++i) {
    const auto& a = samples[i - 1];
    const auto& b = samples[i];
    CHECK((a.line_index < b.line_index || (a.line_index == b.line_index && a.param < b.param)));
  }
  for (const auto& s : samples) {
    CHECK(s.energy_minus == -s.energy_plus);
    CHECK(std::abs(s.energy_plus - dispersion(s.k)) < tol);
  }
}

TEST_CASE("wave functions") {
  const auto cd = analyze({10, -2, -8});
  CHECK_THROWS_AS(WaveFunction(KVector(0.1, -0.05, -0.05), Band::plus, cd), OffAllowedLine);

  verify::Rng rng(71);
  std::vector<KVector> ks;
  for (int i = 0; i < 100; ++i)
    ks.push_back(verify::random_allowed_k(rng, cd));
  for (const auto& kp : k_points())
    if (on_allowed_line(kp, cd))
      ks.push_back(kp);
  CHECK(ks.size() > 100);
  for (const auto& k : ks)
    for (Band band : {Band::plus, Band::minus}) {
      const WaveFunction psi(k, band, cd);
      const double e = (band == Band::plus ? 1.0 : -1.0) * dispersion(k);
      for (int j = 0; j < 5; ++j) {
        const auto v = verify::random_point(rng, 30);
        REQUIRE(std::abs(apply_hamiltonian(psi, v) - e * psi(v)) < tol);
        // Well defined on the tube.
        REQUIRE(std::abs(psi(v + cd.c) - psi(v)) < 1e-9);
        REQUIRE(std::abs(psi(canonicalize(v, cd)) - psi(v)) < 1e-9);
      }
    }
}

TEST_CASE("the Lambda set") {
  const auto& lam = lambda_set();
  CHECK(lam[0].alpha == 0);
  CHECK(lam[0].beta == 0);
  for (std::size_t i = 0; i < lam.size(); ++i) {
    CHECK(hexagon_B_contains(lam[i].k, 1e-12));
    CHECK(lambda_index(lam[i].k) == static_cast<int>(i));
    // 2k is a reciprocal lattice vector: it pairs into 2piZ with every translation.
    for (const IntTriple u : {IntTriple{1, -1, 0}, IntTriple{0, 1, -1}})
      CHECK(std::abs(std::remainder(2 * pairing(lam[i].k, u), 2 * kPi)) < 1e-12);
  }
  CHECK(lambda_index(KVector(0.3, -0.1, -0.2)) == -1);

  // All seven lie on lines when every alpha*c1 + beta*c2 is even.
  CHECK(lambda_points(analyze({10, -2, -8})).size() == 7);
  const auto odd = lambda_points(analyze({7, -3, -4}));
  CHECK(odd.size() < 7);
  for (const auto& p : odd)
    CHECK(on_allowed_line(p.k, analyze({7, -3, -4})));
}

TEST_CASE("metallic rule") {
  CHECK(is_metallic(analyze({10, -2, -8})));
  CHECK(is_metallic(analyze({2, -1, -1})));
  CHECK(is_metallic(analyze({3, 0, -3})));
  CHECK_FALSE(is_metallic(analyze({7, -3, -4})));
  CHECK_FALSE(is_metallic(analyze({1, 0, -1})));
  verify::Rng rng(73);
  for (int i = 0; i < 100; ++i) {
    const auto cd = analyze(verify::random_chiral(rng, 40));
    bool on = false;
    for (const auto& kp : k_points())
      on = on || on_allowed_line(kp, cd);
    CHECK(on == is_metallic(cd));
  }
}
