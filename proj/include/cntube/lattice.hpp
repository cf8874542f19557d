#pragma once

// Integer three-axes model of the honeycomb lattice.
//
// A vertex is a triple (v0,v1,v2) of integers with v0+v1+v2 in {0,1}. The
// translations are the triples with coordinate sum 0. Coordinates are
// 64-bit; callers bound inputs so that products of two coordinates fit.

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string_view>

namespace cntube {

using Int = std::int64_t;
using IntTriple = std::array<Int, 3>;

inline Int coordinate_sum(const IntTriple& v) { return v[0] + v[1] + v[2]; }

class TranslationVector {
public:
  constexpr TranslationVector() = default;
  TranslationVector(Int u0, Int u1, Int u2);
  explicit TranslationVector(const IntTriple& u);

  Int operator[](std::size_t i) const { return u_[i]; }
  const IntTriple& coords() const { return u_; }

  TranslationVector operator-() const { return {-u_[0], -u_[1], -u_[2]}; }
  friend TranslationVector operator+(const TranslationVector& a, const TranslationVector& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
  }
  friend TranslationVector operator-(const TranslationVector& a, const TranslationVector& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
  }
  friend TranslationVector operator*(Int s, const TranslationVector& a) {
    return {s * a[0], s * a[1], s * a[2]};
  }
  friend auto operator<=>(const TranslationVector&, const TranslationVector&) = default;

private:
  IntTriple u_{0, 0, 0};
};

class LatticePoint {
public:
  constexpr LatticePoint() = default;
  // Throws InvalidArgument unless v0+v1+v2 is 0 or 1.
  LatticePoint(Int v0, Int v1, Int v2);
  explicit LatticePoint(const IntTriple& v);

  Int operator[](std::size_t i) const { return v_[i]; }
  const IntTriple& coords() const { return v_; }
  // 0 or 1
  int sublattice() const { return static_cast<int>(coordinate_sum(v_)); }

  friend LatticePoint operator+(const LatticePoint& v, const TranslationVector& u) {
    return LatticePoint(v[0] + u[0], v[1] + u[1], v[2] + u[2]);
  }
  friend LatticePoint operator-(const LatticePoint& v, const TranslationVector& u) {
    return LatticePoint(v[0] - u[0], v[1] - u[1], v[2] - u[2]);
  }
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

private:
  IntTriple v_{0, 0, 0};
};

// (1,0,0): the image of the origin under the sublattice exchange.
inline const LatticePoint kSublatticeOffset{1, 0, 0};

std::ostream& operator<<(std::ostream& os, const LatticePoint& v);
std::ostream& operator<<(std::ostream& os, const TranslationVector& u);

// Sublattice parity (-1)^(v0+v1+v2).
int epsilon(const LatticePoint& v);

// L1 metric; its unit spheres are the nearest-neighbour shells.
Int distance(const LatticePoint& v, const LatticePoint& u);

// v^i = v + epsilon(v) * unit_i, in order i = 0, 1, 2.
std::array<LatticePoint, 3> nearest_neighbors(const LatticePoint& v);

// v^{ij} = (v^i)^j for (i,j) in (0,1),(0,2),(1,0),(1,2),(2,0),(2,1).
std::array<LatticePoint, 6> next_nearest_neighbors(const LatticePoint& v);

struct LatticeAutomorphism {
  std::string_view name;
  LatticePoint (*map)(const LatticePoint&);

  LatticePoint operator()(const LatticePoint& v) const { return map(v); }
};

// Generators of the honeycomb isometry group: cyclic shift, swap of the
// last two axes and the point inversion exchanging the sublattices.
std::array<LatticeAutomorphism, 3> honeycomb_generators();

bool is_translation(const IntTriple& u);

} // namespace cntube
