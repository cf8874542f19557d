#include "cntube/geometry.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "cntube/error.hpp"

namespace cntube {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

} // namespace

const std::array<PlaneVector, 3>& frame_vectors() {
  static const std::array<PlaneVector, 3> e{
      PlaneVector{1.0, 0.0}, PlaneVector{-0.5, kSqrt3 / 2}, PlaneVector{-0.5, -kSqrt3 / 2}};
  return e;
}

KVector::KVector(double k0, double k1, double k2) : k_{k0, k1, k2} {
  if (!std::isfinite(k0) || !std::isfinite(k1) || !std::isfinite(k2))
    throw InvalidArgument("k-vector components must be finite");
  if (std::abs(k0 + k1 + k2) > kGeometryTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "k-vector (" << k0 << ',' << k1 << ',' << k2 << ") must have zero coordinate sum";
    throw InvalidArgument(os.str());
  }
}

KVector KVector::from_translation(const TranslationVector& u, double scale) {
  return KVector(scale * static_cast<double>(u[0]), scale * static_cast<double>(u[1]),
                 scale * static_cast<double>(u[2]));
}

std::ostream& operator<<(std::ostream& os, const KVector& k) {
  return os << '(' << k[0] << ',' << k[1] << ',' << k[2] << ')';
}

double max_abs_difference(const KVector& a, const KVector& b) {
  return std::max({std::abs(a[0] - b[0]), std::abs(a[1] - b[1]), std::abs(a[2] - b[2])});
}

PlaneVector embed(const IntTriple& v) {
  const auto& e = frame_vectors();
  PlaneVector p;
  for (int i = 0; i < 3; ++i)
    p = p + static_cast<double>(v[i]) * e[i];
  return p;
}

std::array<double, 3> canonical_coords(PlaneVector p) {
  const auto& e = frame_vectors();
  return {dot(p, e[0]), dot(p, e[1]), dot(p, e[2])};
}

PlaneVector frame_reconstruct(const std::array<double, 3>& x) {
  const auto& e = frame_vectors();
  PlaneVector p;
  for (int i = 0; i < 3; ++i)
    p = p + (kFrameScale * x[i]) * e[i];
  return p;
}

double pairing(const KVector& k, const IntTriple& v) {
  return kFrameScale * (k[0] * static_cast<double>(v[0]) + k[1] * static_cast<double>(v[1]) +
                        k[2] * static_cast<double>(v[2]));
}

Int frame_dot(const IntTriple& u, const IntTriple& w) {
  return u[0] * w[0] + u[1] * w[1] + u[2] * w[2];
}

double inner(const TranslationVector& u, const TranslationVector& w) {
  return 1.5 * static_cast<double>(frame_dot(u.coords(), w.coords()));
}

double inner(const IntTriple& u, const IntTriple& w) {
  return inner(TranslationVector(u), TranslationVector(w));
}

PlaneVector reciprocal_embed(const KVector& k) {
  const auto& e = frame_vectors();
  PlaneVector p;
  for (int i = 0; i < 3; ++i)
    p = p + (kFrameScale * kFrameScale * k[i]) * e[i];
  return p;
}

double reciprocal_norm(const KVector& k) { return norm(reciprocal_embed(k)); }

bool hexagon_B_contains(const KVector& k, double tol) {
  const double bound = kZoneHalfWidth + tol;
  return std::abs(k[0]) <= bound && std::abs(k[1]) <= bound && std::abs(k[2]) <= bound;
}

const std::array<KVector, 3>& periodicity_vectors() {
  static const std::array<KVector, 3> b = [] {
    const double big = 4.0 * kPi / (3.0 * kFrameScale);
    const double small = -2.0 * kPi / (3.0 * kFrameScale);
    return std::array<KVector, 3>{KVector(big, small, small), KVector(small, big, small),
                                  KVector(small, small, big)};
  }();
  return b;
}

HexagonReduction reduce_to_hexagon(const KVector& k, double tol) {
  HexagonReduction out{k, {}};
  const auto& b = periodicity_vectors();
  while (!hexagon_B_contains(out.k, tol)) {
    int worst = 0;
    for (int i = 1; i < 3; ++i)
      if (std::abs(out.k[i]) > std::abs(out.k[worst]))
        worst = i;
    const int sign = out.k[worst] > 0 ? -1 : 1;
    out.k = out.k + static_cast<double>(sign) * b[worst];
    out.path.push_back({worst, sign});
  }
  return out;
}

} // namespace cntube
