#pragma once

// Euclidean embedding of the three-axes lattice and its reciprocal space.
//
// Lengths are in carbon-bond units (|e_i| = 1). Reciprocal vectors are
// zero-sum real triples k paired with lattice triples through
// <k,v> = a * sum_i k_i v_i, a = 2/3.

#include <array>
#include <cmath>
#include <iosfwd>
#include <numbers>
#include <vector>

#include "cntube/lattice.hpp"

namespace cntube {

inline constexpr double kFrameScale = 2.0 / 3.0;           // a
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kZoneHalfWidth = 2.0 * kPi / (3.0 * kFrameScale); // 2pi/3a
inline constexpr double kGeometryTolerance = 1e-12;

struct PlaneVector {
  double x = 0.0;
  double y = 0.0;

  friend PlaneVector operator+(PlaneVector a, PlaneVector b) { return {a.x + b.x, a.y + b.y}; }
  friend PlaneVector operator-(PlaneVector a, PlaneVector b) { return {a.x - b.x, a.y - b.y}; }
  friend PlaneVector operator*(double s, PlaneVector a) { return {s * a.x, s * a.y}; }
};

inline double dot(PlaneVector a, PlaneVector b) { return a.x * b.x + a.y * b.y; }
inline double norm(PlaneVector a) { return std::hypot(a.x, a.y); }

// e_0, e_1, e_2: unit vectors at 120 degrees.
const std::array<PlaneVector, 3>& frame_vectors();

// Reciprocal-space point. Construction rejects |k0+k1+k2| > 1e-12.
class KVector {
public:
  KVector() = default;
  KVector(double k0, double k1, double k2);
  explicit KVector(const std::array<double, 3>& k) : KVector(k[0], k[1], k[2]) {}

  // The zero-sum triple with the same components as u.
  static KVector from_translation(const TranslationVector& u, double scale = 1.0);

  double operator[](std::size_t i) const { return k_[i]; }
  const std::array<double, 3>& coords() const { return k_; }

  KVector operator-() const { return raw(-k_[0], -k_[1], -k_[2]); }
  friend KVector operator+(const KVector& a, const KVector& b) {
    return raw(a[0] + b[0], a[1] + b[1], a[2] + b[2]);
  }
  friend KVector operator-(const KVector& a, const KVector& b) {
    return raw(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
  }
  friend KVector operator*(double s, const KVector& a) { return raw(s * a[0], s * a[1], s * a[2]); }

private:
  // Arithmetic on valid vectors stays in K up to rounding; skip revalidation.
  static KVector raw(double k0, double k1, double k2) {
    KVector k;
    k.k_ = {k0, k1, k2};
    return k;
  }

  std::array<double, 3> k_{0.0, 0.0, 0.0};
};

std::ostream& operator<<(std::ostream& os, const KVector& k);

double max_abs_difference(const KVector& a, const KVector& b);

PlaneVector embed(const IntTriple& v);
inline PlaneVector embed(const LatticePoint& v) { return embed(v.coords()); }
inline PlaneVector embed(const TranslationVector& u) { return embed(u.coords()); }

// (<p,e_0>, <p,e_1>, <p,e_2>); the components sum to zero.
std::array<double, 3> canonical_coords(PlaneVector p);

// a * sum_i x_i e_i, the tight-frame reconstruction.
PlaneVector frame_reconstruct(const std::array<double, 3>& x);

// a * sum_i k_i v_i. Invariant under v -> v + (alpha,alpha,alpha).
double pairing(const KVector& k, const IntTriple& v);
inline double pairing(const KVector& k, const LatticePoint& v) { return pairing(k, v.coords()); }
inline double pairing(const KVector& k, const TranslationVector& u) { return pairing(k, u.coords()); }

// Exact sum_i u_i w_i. For translations the Euclidean scalar product of the
// embeddings is 3/2 of this.
Int frame_dot(const IntTriple& u, const IntTriple& w);

// Euclidean scalar product of two translations.
double inner(const TranslationVector& u, const TranslationVector& w);
// Same, validating that both triples have zero coordinate sum.
double inner(const IntTriple& u, const IntTriple& w);

inline double euclidean_norm(const TranslationVector& u) { return std::sqrt(inner(u, u)); }

// The plane vector K with <K, embed(v)> = pairing(k, v) for every lattice v;
// equals a^2 * sum_i k_i e_i.
PlaneVector reciprocal_embed(const KVector& k);
double reciprocal_norm(const KVector& k);

// Closed hexagon |k_i| <= 2pi/3a. `tol` widens the bounds.
bool hexagon_B_contains(const KVector& k, double tol = 0.0);

// b_0, b_1, b_2.
const std::array<KVector, 3>& periodicity_vectors();

struct ReciprocalShift {
  int index; // which b_i
  int sign;  // +1 means b_i was added, -1 subtracted
};

struct HexagonReduction {
  KVector k;
  std::vector<ReciprocalShift> path;
};

// Moves k into B by repeatedly removing the b_i along the most violated
// coordinate. Each step strictly shortens k, so this terminates.
HexagonReduction reduce_to_hexagon(const KVector& k, double tol = kGeometryTolerance);

} // namespace cntube
