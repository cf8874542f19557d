#include "cntube/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "cntube/error.hpp"
#include "cntube/geometry.hpp"
#include "cntube/oracles.hpp"
#include "cntube/reps.hpp"
#include "cntube/symgroup.hpp"

namespace cntube::verify {

namespace {

constexpr double kTol = 1e-12;

// A check body returns an empty string on success or a counterexample.
using Body = std::function<std::string()>;

struct Suite {
  std::vector<CheckResult> results;

  void run(const std::string& module, const std::string& name, const Body& body) {
    CheckResult r{module, name, Status::pass, {}};
    try {
      r.detail = body();
      if (!r.detail.empty())
        r.status = Status::fail;
    } catch (const std::exception& e) {
      r.status = Status::fail;
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  }

  void skip(const std::string& module, const std::string& name, const std::string& why) {
    results.push_back(CheckResult{module, name, Status::skip, why});
  }
};

template <class... Args>
std::string msg(const Args&... args) {
  std::ostringstream os;
  os.precision(17);
  (os << ... << args);
  return os.str();
}

double max_entry(const Matrix2c& m) { return m.cwiseAbs().maxCoeff(); }

void lattice_checks(Suite& suite, Rng& rng, int trials) {
  suite.run("lattice", "parity flips across every bond", [&]() -> std::string {
    for (int i = 0; i < trials; ++i) {
      const auto v = random_point(rng, 1000);
      for (const auto& u : nearest_neighbors(v))
        if (epsilon(u) != -epsilon(v))
          return msg("v=", v, " neighbour ", u);
    }
    return {};
  });
  suite.run("lattice", "distance is a metric", [&]() -> std::string {
    for (int i = 0; i < trials; ++i) {
      const auto v = random_point(rng, 50), u = random_point(rng, 50), w = random_point(rng, 50);
      if (distance(v, u) != distance(u, v))
        return msg("asymmetric at ", v, ", ", u);
      if ((distance(v, u) == 0) != (v == u))
        return msg("identity fails at ", v, ", ", u);
      if (distance(v, w) > distance(v, u) + distance(u, w))
        return msg("triangle fails at ", v, ", ", u, ", ", w);
    }
    return {};
  });
  suite.run("lattice", "generators are isometries", [&]() -> std::string {
    for (const auto& g : honeycomb_generators())
      for (int i = 0; i < trials; ++i) {
        const auto v = random_point(rng, 50), u = random_point(rng, 50);
        if (distance(g(v), g(u)) != distance(v, u))
          return msg(g.name, " at ", v, ", ", u);
      }
    return {};
  });
  suite.run("lattice", "nearest neighbours = distance-1 shell", [&]() -> std::string {
    for (int i = 0; i < std::min(trials, 50); ++i) {
      const auto v = random_point(rng, 1000);
      auto expect = oracle::neighbor_shell(v, 1, 1);
      auto nn = nearest_neighbors(v);
      std::vector<LatticePoint> got(nn.begin(), nn.end());
      std::sort(expect.begin(), expect.end());
      std::sort(got.begin(), got.end());
      if (got != expect)
        return msg("v=", v);
    }
    return {};
  });
  suite.run("lattice", "next-nearest = same-parity distance-2 shell", [&]() -> std::string {
    for (int i = 0; i < std::min(trials, 50); ++i) {
      const auto v = random_point(rng, 1000);
      auto expect = oracle::neighbor_shell(v, 2, 2);
      std::erase_if(expect, [&](const LatticePoint& u) { return epsilon(u) != epsilon(v); });
      auto nnn = next_nearest_neighbors(v);
      std::vector<LatticePoint> got(nnn.begin(), nnn.end());
      std::sort(expect.begin(), expect.end());
      std::sort(got.begin(), got.end());
      if (got != expect)
        return msg("v=", v);
    }
    return {};
  });
}

void geometry_checks(Suite& suite, Rng& rng, int trials, const ChiralityData& cd) {
  suite.run("geometry", "embedding is injective on [-10,10]^3", []() -> std::string {
    std::vector<std::pair<double, double>> pts;
    for (Int a = -10; a <= 10; ++a)
      for (Int b = -10; b <= 10; ++b)
        for (Int c = -10; c <= 10; ++c) {
          const Int s = a + b + c;
          if (s == 0 || s == 1) {
            const auto p = embed(IntTriple{a, b, c});
            pts.emplace_back(p.x, p.y);
          }
        }
    std::sort(pts.begin(), pts.end());
    for (std::size_t i = 1; i < pts.size(); ++i)
      if (std::hypot(pts[i].first - pts[i - 1].first, pts[i].second - pts[i - 1].second) < 1e-9)
        return msg("collision near (", pts[i].first, ",", pts[i].second, ")");
    return {};
  });
  suite.run("geometry", "pairing is linear along c", [&]() -> std::string {
    for (int i = 0; i < trials; ++i) {
      const auto k = random_k(rng, 4.0);
      const auto v = random_point(rng, 50);
      const Int j = static_cast<Int>(rng() % 7) - 3;
      const double lhs = pairing(k, v + j * cd.c);
      const double rhs = pairing(k, v) + static_cast<double>(j) * pairing(k, cd.c);
      if (std::abs(lhs - rhs) > 1e-10)
        return msg("k=", k, " v=", v, " j=", j);
    }
    return {};
  });
  suite.run("geometry", "inner equals Euclidean dot of embeddings", [&]() -> std::string {
    for (int i = 0; i < trials; ++i) {
      const auto u = random_translation(rng, 20), w = random_translation(rng, 20);
      const double err = std::abs(inner(u, w) - oracle::euclidean_dot(u.coords(), w.coords()));
      if (err > kTol)
        return msg("u=", u, " w=", w, " err=", err);
    }
    return {};
  });
  suite.run("geometry", "tight-frame reconstruction", [&]() -> std::string {
    for (int i = 0; i < trials; ++i) {
      const auto v = random_point(rng, 50);
      const PlaneVector p = embed(v);
      const PlaneVector r = frame_reconstruct(canonical_coords(p));
      if (norm(r - p) > 1e-12 * std::max(1.0, norm(p)))
        return msg("v=", v);
    }
    return {};
  });
}

void nanotube_checks(Suite& suite, Rng& rng, int trials, const ChiralityData& cd) {
  suite.run("nanotube", "invariant chain (R rule, q in nZ, [qw]=[nt], R^2|t|^2=3|c|^2)",
            [&]() -> std::string {
              std::vector<ChiralityData> tubes{cd};
              for (int i = 0; i < trials; ++i)
                tubes.push_back(analyze(random_chiral(rng, 200)));
              for (const auto& x : tubes) {
                const Int diff = x.c_tilde[2] - x.c_tilde[1];
                const Int expect_R = (diff % 3 == 0) ? 3 * x.n : x.n;
                if (x.R != expect_R)
                  return msg("R rule fails for c=", x.c);
                if (x.q % x.n != 0)
                  return msg("q not in nZ for c=", x.c);
                const TranslationVector d = x.q * x.w - x.n * x.t;
                if (!integer_multiple_of(d.coords(), x.c))
                  return msg("qw - nt not in Zc for c=", x.c);
                if (!oracle::axis_norm_identity(x))
                  return msg("R^2|t|^2 != 3|c|^2 for c=", x.c);
                if (frame_dot(x.c.coords(), x.t.coords()) != 0)
                  return msg("t not orthogonal to c for c=", x.c);
                if (!oracle::projection_is_unit_step(x.w, x))
                  return msg("projection of w on t is not t/q~ for c=", x.c);
              }
              return {};
            });
  suite.run("nanotube", "w is the shortest screw vector (brute force)", [&]() -> std::string {
    const Int bound = std::max({std::abs(cd.w[0]), std::abs(cd.w[1]), std::abs(cd.w[2])}) +
                      std::max({std::abs(cd.c_tilde[0]), std::abs(cd.c_tilde[1]),
                                std::abs(cd.c_tilde[2])});
    if (bound > 400)
      return {};
    const auto best = oracle::shortest_screw_norm(cd, bound);
    const Int mine = frame_dot(cd.w.coords(), cd.w.coords());
    if (!best || *best != mine)
      return msg("w=", cd.w, " |w|^2=", mine, " brute force ", best.value_or(-1));
    return {};
  });
  suite.run("nanotube", "canonicalize is constant on classes", [&]() -> std::string {
    for (int i = 0; i < trials; ++i) {
      const auto v = random_point(rng, 100);
      const auto ref = canonicalize(v, cd);
      for (Int j = -3; j <= 3; ++j)
        if (canonicalize(v + j * cd.c, cd) != ref)
          return msg("v=", v, " j=", j);
      if (canonicalize(ref.representative(), cd) != ref)
        return msg("not idempotent at v=", v);
    }
    return {};
  });
}

void symgroup_checks(Suite& suite, Rng& rng, int trials, const ChiralityData& cd) {
  const SymmetryGroup group(cd);
  auto random_element = [&]() {
    return group.element(static_cast<Int>(rng() % 41) - 20, static_cast<Int>(rng() % cd.n),
                         static_cast<int>(rng() % 2));
  };
  auto random_tube_point = [&]() { return group.point(random_point(rng, 100)); };

  suite.run("symgroup", "presentation relations hold as words and actions", [&]() -> std::string {
    const auto e = group.identity(), r = group.rho(), s = group.sigma(), t = group.tau();
    const std::pair<GroupElement, GroupElement> rels[] = {
        {group.compose(r, s), group.compose(s, r)},
        {group.power(r, cd.n), e},
        {group.compose(t, t), e},
        {group.power(group.compose(s, t), 2), e},
        {group.power(group.compose(r, t), 2), e}};
    for (std::size_t i = 0; i < std::size(rels); ++i) {
      if (rels[i].first != rels[i].second)
        return msg("word relation ", i, " fails: ", rels[i].first, " vs ", rels[i].second);
    }
    // Same relations through raw actions, independent of compose().
    for (int i = 0; i < trials; ++i) {
      const auto x = random_tube_point();
      auto apply = [&](std::initializer_list<GroupElement> word) {
        TubePoint y = x;
        for (auto it = std::rbegin(word); it != std::rend(word); ++it)
          y = group.act(*it, y);
        return y;
      };
      if (apply({r, s}) != apply({s, r}))
        return msg("rho sigma != sigma rho at ", x);
      TubePoint y = x;
      for (Int k = 0; k < cd.n; ++k)
        y = group.act(r, y);
      if (y != x)
        return msg("rho^n != e at ", x);
      if (apply({t, t}) != x || apply({s, t, s, t}) != x || apply({r, t, r, t}) != x)
        return msg("involution relation fails at ", x);
    }
    return {};
  });
  suite.run("symgroup", "act is a group action", [&]() -> std::string {
    for (int i = 0; i < trials; ++i) {
      const auto g = random_element(), h = random_element();
      const auto x = random_tube_point();
      if (group.act(group.compose(g, h), x) != group.act(g, group.act(h, x)))
        return msg("g=", g, " h=", h, " x=", x);
      if (group.compose(g, group.inverse(g)) != group.identity())
        return msg("inverse fails for ", g);
    }
    return {};
  });
  suite.run("symgroup", "act preserves nearest-neighbour triples", [&]() -> std::string {
    for (int i = 0; i < trials; ++i) {
      const auto g = random_element();
      const auto x = random_tube_point();
      const auto gx = group.act(g, x);
      std::vector<TubePoint> image, expect;
      for (const auto& u : nearest_neighbors(x.representative()))
        image.push_back(group.act(g, group.point(u)));
      for (const auto& u : nearest_neighbors(gx.representative()))
        expect.push_back(group.point(u));
      auto key = [](const TubePoint& a, const TubePoint& b) {
        return a.representative() < b.representative();
      };
      std::sort(image.begin(), image.end(), key);
      std::sort(expect.begin(), expect.end(), key);
      if (image != expect)
        return msg("g=", g, " x=", x);
    }
    return {};
  });
  suite.run("symgroup", "factorize inverts the orbit map", [&]() -> std::string {
    for (Int s = -20; s <= 20; ++s)
      for (Int m = 0; m < cd.n; ++m)
        for (int p = 0; p <= 1; ++p) {
          const auto g = group.element(s, m, p);
          if (group.factorize(group.act(g, group.origin())) != g)
            return msg("word ", g);
        }
    for (int i = 0; i < trials; ++i) {
      const auto x = random_tube_point();
      const auto g = group.factorize(x);
      if (group.act(g, group.origin()) != x)
        return msg("round trip fails at ", x);
    }
    return {};
  });
}

void spectrum_checks(Suite& suite, Rng& rng, int trials, const ChiralityData& cd) {
  const auto& b = periodicity_vectors();
  suite.run("spectrum", "E is even, b-periodic, bounded, cosine form agrees",
            [&]() -> std::string {
              for (int i = 0; i < trials; ++i) {
                const auto k = random_k(rng, 8.0);
                const double e = dispersion(k);
                if (e < 0.0 || e > 3.0 + kTol)
                  return msg("E out of [0,3] at k=", k);
                if (std::abs(dispersion(-k) - e) > kTol)
                  return msg("E(-k) != E(k) at k=", k);
                for (const auto& bi : b)
                  if (std::abs(dispersion(k + bi) - e) > kTol)
                    return msg("E(k+b) != E(k) at k=", k);
                if (std::abs(dispersion_cosine_form(k) - e) > kTol)
                  return msg("cosine form differs at k=", k);
              }
              return {};
            });
  suite.run("spectrum", "H psi = +-E psi on allowed lines (incl. K points)",
            [&]() -> std::string {
              std::vector<KVector> ks;
              for (int i = 0; i < trials; ++i)
                ks.push_back(random_allowed_k(rng, cd));
              for (const auto& kp : k_points())
                if (on_allowed_line(kp, cd))
                  ks.push_back(kp);
              for (const auto& k : ks)
                for (Band band : {Band::plus, Band::minus}) {
                  const WaveFunction psi(k, band, cd);
                  const double e = (band == Band::plus ? 1.0 : -1.0) * dispersion(k);
                  for (int j = 0; j < 5; ++j) {
                    const auto v = random_point(rng, 30);
                    const double res = std::abs(apply_hamiltonian(psi, v) - e * psi(v));
                    if (res > kTol)
                      return msg("k=", k, " v=", v, " residual ", res);
                    if (std::abs(std::abs(psi(v)) - 1.0) > kTol)
                      return msg("|psi| != 1 at k=", k, " v=", v);
                  }
                }
              return {};
            });
  suite.run("spectrum", "psi is well defined on classes", [&]() -> std::string {
    for (int i = 0; i < trials; ++i) {
      const auto k = random_allowed_k(rng, cd);
      const WaveFunction psi(k, Band::plus, cd);
      const auto v = random_point(rng, 30);
      for (Int j = -2; j <= 2; ++j)
        if (std::abs(psi(v + j * cd.c) - psi(v)) > 1e-9)
          return msg("k=", k, " v=", v, " j=", j);
    }
    return {};
  });
  suite.run("spectrum", "rho, sigma, tau act on psi_k by the stated phases",
            [&]() -> std::string {
              for (int i = 0; i < trials; ++i) {
                const auto k = random_allowed_k(rng, cd);
                if (dispersion(k) < 1e-6)
                  continue;
                for (Band band : {Band::plus, Band::minus}) {
                  const WaveFunction psi(k, band, cd), psi_neg(-k, band, cd);
                  const double sign = band == Band::plus ? 1.0 : -1.0;
                  const auto v = random_point(rng, 30);
                  // (g psi)[v] = psi(g^-1 v)
                  const Complex rho_psi = psi(v - cd.c_tilde);
                  const Complex sigma_psi = psi(v - cd.w);
                  const Complex tau_psi = psi(LatticePoint(1 - v[0], -v[1], -v[2]));
                  if (std::abs(rho_psi - std::polar(1.0, pairing(k, cd.c_tilde)) * psi(v)) > kTol)
                    return msg("rho phase at k=", k, " v=", v);
                  if (std::abs(sigma_psi - std::polar(1.0, pairing(k, cd.w)) * psi(v)) > kTol)
                    return msg("sigma phase at k=", k, " v=", v);
                  if (std::abs(tau_psi - sign * std::polar(1.0, -k[0] * kFrameScale) *
                                             psi_neg(v)) > kTol)
                    return msg("tau relation at k=", k, " v=", v);
                }
              }
              return {};
            });
  suite.run("spectrum", "band samples lie in B on allowed lines", [&]() -> std::string {
    for (const auto& s : sample_bands(cd, 64)) {
      if (!hexagon_B_contains(s.k, 1e-9) || !on_allowed_line(s.k, cd))
        return msg("sample k=", s.k, " line ", s.line_index);
      if (s.energy_plus > 3.0 + kTol || s.energy_plus != -s.energy_minus)
        return msg("energy out of range at k=", s.k);
    }
    return {};
  });
}

void reps_checks(Suite& suite, Rng& rng, int trials, const ChiralityData& cd) {
  auto sample_irreducible = [&]() {
    for (;;) {
      const auto k = random_allowed_k(rng, cd);
      if (classify(k, cd).kind == RepKind::irreducible_2d)
        return k;
    }
  };
  suite.run("reps", "matrices are unitary and satisfy the presentation", [&]() -> std::string {
    const Matrix2c id = Matrix2c::Identity();
    for (int i = 0; i < trials; ++i) {
      const auto k = sample_irreducible();
      const auto r = rep_matrices(k, cd);
      for (const Matrix2c* m : {&r.rho, &r.sigma, &r.tau})
        if (max_entry(m->adjoint() * *m - id) > kTol)
          return msg("non-unitary at k=", k);
      Matrix2c rn = id;
      for (Int j = 0; j < cd.n; ++j)
        rn = rn * r.rho;
      const double res = std::max({max_entry(r.rho * r.sigma - r.sigma * r.rho), max_entry(rn - id),
                                   max_entry(r.tau * r.tau - id),
                                   max_entry((r.sigma * r.tau) * (r.sigma * r.tau) - id),
                                   max_entry((r.rho * r.tau) * (r.rho * r.tau) - id)});
      if (res > kTol)
        return msg("relation residual ", res, " at k=", k);
    }
    return {};
  });
  suite.run("reps", "matrix entries match the action on psi_k, psi_-k", [&]() -> std::string {
    for (int i = 0; i < trials; ++i) {
      const auto k = sample_irreducible();
      if (dispersion(k) < 1e-6)
        continue;
      const auto r = rep_matrices(k, cd);
      const WaveFunction pk(k, Band::plus, cd), pm(-k, Band::plus, cd);
      const auto v = random_point(rng, 30);
      const LatticePoint vt(1 - v[0], -v[1], -v[2]);
      // g psi_k = M(0,0) psi_k + M(1,0) psi_-k
      const Complex diffs[] = {
          pk(v - cd.c_tilde) - (r.rho(0, 0) * pk(v) + r.rho(1, 0) * pm(v)),
          pm(v - cd.c_tilde) - (r.rho(0, 1) * pk(v) + r.rho(1, 1) * pm(v)),
          pk(v - cd.w) - (r.sigma(0, 0) * pk(v) + r.sigma(1, 0) * pm(v)),
          pk(vt) - (r.tau(0, 0) * pk(v) + r.tau(1, 0) * pm(v)),
          pm(vt) - (r.tau(0, 1) * pk(v) + r.tau(1, 1) * pm(v))};
      for (const auto& d : diffs)
        if (std::abs(d) > kTol)
          return msg("matrix/action mismatch at k=", k, " v=", v);
    }
    return {};
  });
  suite.run("reps", "pi-criterion agrees with brute-force commutant", [&]() -> std::string {
    for (int i = 0; i < trials; ++i) {
      const auto k = random_allowed_k(rng, cd);
      const auto cls = classify(k, cd);
      if (cls.kind == RepKind::one_dimensional_pair)
        continue;
      const int dim = oracle::commutant_dimension(generator_images(k, cd), 1e-8);
      if ((cls.kind == RepKind::irreducible_2d) != (dim == 1))
        return msg("k=", k, " kind ", to_string(cls.kind), " commutant dim ", dim);
    }
    return {};
  });
  suite.run("reps", "reducible projectors and characters", [&]() -> std::string {
    // 3 b_0 / 2 lies on every line family with even c0 and is reducible
    // outside Lambda; otherwise use b_0.
    const auto& b0 = periodicity_vectors()[0];
    const KVector k = cd.c[0] % 2 == 0 ? 1.5 * b0 : b0;
    const auto cls = classify(k, cd);
    if (cls.kind != RepKind::reducible_pair)
      return msg("k=", k, " classified ", to_string(cls.kind));
    const auto r = generator_images(k, cd);
    const Matrix2c& P = cls.projectors[0];
    const Matrix2c& Q = cls.projectors[1];
    if (max_entry(P * P - P) > kTol || max_entry(Q * Q - Q) > kTol ||
        max_entry(P + Q - Matrix2c::Identity()) > kTol)
      return "projectors are not complementary idempotents";
    for (const Matrix2c* m : {&r.rho, &r.sigma, &r.tau})
      if (max_entry(P * *m - *m * P) > kTol)
        return "projector does not commute with a generator";
    for (std::size_t i = 0; i < 2; ++i) {
      const auto& ch = cls.characters[i];
      const Eigen::Vector2cd x = cls.projectors[i].col(0);
      if ((r.rho * x - ch.rho * x).norm() > kTol || (r.sigma * x - ch.sigma * x).norm() > kTol ||
          (r.tau * x - ch.tau * x).norm() > kTol)
        return msg("character mismatch for subspace ", i);
    }
    return {};
  });
  suite.run("reps", "Clebsch-Gordan block diagonalization", [&]() -> std::string {
    int done = 0;
    for (int attempt = 0; attempt < 200 * trials && done < std::max(1, trials / 4); ++attempt) {
      const auto k = sample_irreducible(), kp = sample_irreducible();
      ClebschGordanResult cg;
      try {
        cg = clebsch_gordan(k, kp, cd);
      } catch (const CgPreconditionError&) {
        continue;
      }
      ++done;
      if (cg.residual > kTol)
        return msg("residual ", cg.residual, " at k=", k, " k'=", kp);
      if (cg.coefficients.size() != 4)
        return "expected four nonzero coefficients";
    }
    if (done == 0)
      return "no valid (k,k') pair found";
    return {};
  });
}

} // namespace

std::string_view to_string(Status s) {
  switch (s) {
  case Status::pass:
    return "PASS";
  case Status::fail:
    return "FAIL";
  case Status::skip:
    return "SKIP";
  }
  return "?";
}

LatticePoint random_point(Rng& rng, Int radius) {
  std::uniform_int_distribution<Int> d(-radius, radius);
  const Int a = d(rng), b = d(rng);
  const Int sub = static_cast<Int>(rng() % 2);
  return LatticePoint(a, b, sub - a - b);
}

TranslationVector random_translation(Rng& rng, Int radius) {
  std::uniform_int_distribution<Int> d(-radius, radius);
  const Int a = d(rng), b = d(rng);
  return TranslationVector(a, b, -a - b);
}

KVector random_k(Rng& rng, double radius) {
  std::uniform_real_distribution<double> d(-radius, radius);
  const double a = d(rng), b = d(rng);
  return KVector(a, b, -a - b);
}

IntTriple random_chiral(Rng& rng, Int max_index) {
  std::uniform_int_distribution<Int> d1(2, max_index);
  const Int n1 = d1(rng);
  std::uniform_int_distribution<Int> d2(1, n1 - 1);
  return hamada_to_triple(n1, d2(rng));
}

KVector random_allowed_k(Rng& rng, const ChiralityData& cd) {
  const auto lines = allowed_lines(cd);
  const auto& line = lines[rng() % lines.size()];
  std::uniform_real_distribution<double> d(line.param_min, line.param_max);
  return line.at(d(rng));
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::none_of(results.begin(), results.end(),
                      [](const CheckResult& r) { return r.status == Status::fail; });
}

std::vector<CheckResult> run_all(const ChiralityData& cd, const Options& opts) {
  Suite suite;
  Rng rng(opts.seed);
  const int trials = std::max(1, opts.trials);
  lattice_checks(suite, rng, trials);
  geometry_checks(suite, rng, trials, cd);
  nanotube_checks(suite, rng, trials, cd);
  spectrum_checks(suite, rng, trials, cd);
  if (cd.is_chiral()) {
    symgroup_checks(suite, rng, trials, cd);
    reps_checks(suite, rng, trials, cd);
  } else {
    const std::string why = "symmetry group is only available for chiral tubes; c is " +
                            std::string(to_string(cd.tube_class));
    for (const char* name : {"presentation relations", "group action", "neighbour preservation",
                             "factorization"})
      suite.skip("symgroup", name, why);
    for (const char* name : {"unitarity and relations", "action consistency",
                             "commutant agreement", "projectors", "Clebsch-Gordan"})
      suite.skip("reps", name, why);
  }
  return suite.results;
}

} // namespace cntube::verify
