#include "cntube/lattice.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "cntube/error.hpp"

namespace cntube {

namespace {

std::string triple_string(const IntTriple& v) {
  std::ostringstream os;
  os << '(' << v[0] << ',' << v[1] << ',' << v[2] << ')';
  return os.str();
}

LatticePoint cyclic(const LatticePoint& v) { return {v[1], v[2], v[0]}; }
LatticePoint swap12(const LatticePoint& v) { return {v[0], v[2], v[1]}; }
LatticePoint inversion(const LatticePoint& v) { return {1 - v[0], -v[1], -v[2]}; }

} // namespace

TranslationVector::TranslationVector(Int u0, Int u1, Int u2) : u_{u0, u1, u2} {
  if (coordinate_sum(u_) != 0)
    throw InvalidArgument("translation vector " + triple_string(u_) +
                          " must have coordinate sum 0");
}

TranslationVector::TranslationVector(const IntTriple& u) : TranslationVector(u[0], u[1], u[2]) {}

LatticePoint::LatticePoint(Int v0, Int v1, Int v2) : v_{v0, v1, v2} {
  const Int s = coordinate_sum(v_);
  if (s != 0 && s != 1)
    throw InvalidArgument("lattice point " + triple_string(v_) +
                          " must have coordinate sum 0 or 1");
}

LatticePoint::LatticePoint(const IntTriple& v) : LatticePoint(v[0], v[1], v[2]) {}

std::ostream& operator<<(std::ostream& os, const LatticePoint& v) {
  return os << triple_string(v.coords());
}

std::ostream& operator<<(std::ostream& os, const TranslationVector& u) {
  return os << triple_string(u.coords());
}

int epsilon(const LatticePoint& v) { return v.sublattice() == 0 ? 1 : -1; }

Int distance(const LatticePoint& v, const LatticePoint& u) {
  return std::abs(v[0] - u[0]) + std::abs(v[1] - u[1]) + std::abs(v[2] - u[2]);
}

std::array<LatticePoint, 3> nearest_neighbors(const LatticePoint& v) {
  const Int e = epsilon(v);
  return {LatticePoint{v[0] + e, v[1], v[2]},
          LatticePoint{v[0], v[1] + e, v[2]},
          LatticePoint{v[0], v[1], v[2] + e}};
}

std::array<LatticePoint, 6> next_nearest_neighbors(const LatticePoint& v) {
  static constexpr std::array<std::array<int, 2>, 6> order{
      {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}}};
  const auto first = nearest_neighbors(v);
  std::array<LatticePoint, 6> out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto [i, j] = order[k];
    out[k] = nearest_neighbors(first[i])[j];
  }
  return out;
}

std::array<LatticeAutomorphism, 3> honeycomb_generators() {
  return {LatticeAutomorphism{"cyclic", &cyclic},
          LatticeAutomorphism{"swap", &swap12},
          LatticeAutomorphism{"inversion", &inversion}};
}

bool is_translation(const IntTriple& u) { return coordinate_sum(u) == 0; }

} // namespace cntube
