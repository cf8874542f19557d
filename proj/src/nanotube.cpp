#include "cntube/nanotube.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "cntube/error.hpp"
#include "cntube/geometry.hpp"

namespace cntube {

namespace {

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

Int floor_mod(Int a, Int b) { return a - b * floor_div(a, b); }

// Returns g = gcd(a, b) >= 0 with x*a + y*b = g.
Int extended_gcd(Int a, Int b, Int& x, Int& y) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const Int quot = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - quot * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - quot * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - quot * t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

// Solves c1*w2 - c2*w1 = 1 for (w1, w2) given coprime (c1, c2), which puts
// the projection of w on t at exactly t/q_tilde; then picks the shortest
// member of w + Z*c_tilde.
TranslationVector shortest_screw_vector(const TranslationVector& ct) {
  Int x = 0, y = 0;
  // x*c1 + y*c2 = 1  =>  w2 = x, w1 = -y.
  const Int g = extended_gcd(ct[1], ct[2], x, y);
  if (g != 1)
    throw Error("internal: reduced chirality components c1, c2 are not coprime");
  const TranslationVector base(y - x, -y, x);

  const Int norm_c = frame_dot(ct.coords(), ct.coords());
  const Int cross = frame_dot(base.coords(), ct.coords());
  // |base + k c~|^2 is minimized over reals at -cross/norm_c.
  const Int k_lo = floor_div(-cross, norm_c);
  TranslationVector best = base + k_lo * ct;
  Int best_norm = frame_dot(best.coords(), best.coords());
  const TranslationVector alt = base + (k_lo + 1) * ct;
  const Int alt_norm = frame_dot(alt.coords(), alt.coords());
  if (alt_norm < best_norm)
    best = alt;
  return best;
}

} // namespace

std::string_view to_string(TubeClass cls) {
  switch (cls) {
  case TubeClass::armchair:
    return "armchair";
  case TubeClass::zigzag:
    return "zigzag";
  case TubeClass::chiral:
    return "chiral";
  }
  return "unknown";
}

double ChiralityData::circumference() const { return euclidean_norm(c); }

IntTriple hamada_to_triple(Int n1, Int n2) { return {n1 + n2, -n2, -n1}; }

Normalization normalize_chirality(const IntTriple& c) {
  if (c == IntTriple{0, 0, 0})
    throw InvalidArgument("chirality must be nonzero");
  if (coordinate_sum(c) != 0)
    throw InvalidArgument("chirality must have zero coordinate sum");

  Normalization norm;
  norm.input = c;
  auto sorted_by = [&](int sign) {
    std::array<int, 3> perm{0, 1, 2};
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int a, int b) { return sign * c[a] > sign * c[b]; });
    return perm;
  };
  norm.permutation = sorted_by(1);
  if (c[norm.permutation[1]] > 0) {
    norm.negated = true;
    norm.permutation = sorted_by(-1);
  }
  return norm;
}

ChiralityData analyze(const IntTriple& input) {
  ChiralityData cd;
  cd.normalization = normalize_chirality(input);
  const int sign = cd.normalization.negated ? -1 : 1;
  IntTriple c;
  for (int i = 0; i < 3; ++i)
    c[i] = sign * input[cd.normalization.permutation[i]];
  cd.c = TranslationVector(c);

  cd.n = std::gcd(std::gcd(c[0], c[1]), c[2]);
  cd.c_tilde = TranslationVector(c[0] / cd.n, c[1] / cd.n, c[2] / cd.n);

  const IntTriple axis{c[2] - c[1], c[0] - c[2], c[1] - c[0]};
  cd.R = std::gcd(std::gcd(axis[0], axis[1]), axis[2]);
  cd.t = TranslationVector(axis[0] / cd.R, axis[1] / cd.R, axis[2] / cd.R);

  const Int norm2 = frame_dot(c, c);
  cd.q = norm2 / cd.R;
  cd.q_tilde = cd.q / cd.n;
  cd.w = shortest_screw_vector(cd.c_tilde);

  if (c[1] == c[2])
    cd.tube_class = TubeClass::armchair;
  else if (c[1] == 0)
    cd.tube_class = TubeClass::zigzag;
  else
    cd.tube_class = TubeClass::chiral;
  return cd;
}

TubeCoordinates decompose(const LatticePoint& v, const ChiralityData& cd) {
  TubeCoordinates tc;
  tc.p = v.sublattice();
  const Int u1 = v[1], u2 = v[2]; // v - p*(1,0,0) leaves coordinates 1, 2 untouched
  const auto& ct = cd.c_tilde;
  const auto& w = cd.w;
  // (u1,u2) = s*(w1,w2) + m'*(ct1,ct2), determinant w1*ct2 - w2*ct1 = -1.
  tc.s = u2 * ct[1] - u1 * ct[2];
  const Int m_full = w[2] * u1 - w[1] * u2;
  tc.m = floor_mod(m_full, cd.n);
  tc.j = floor_div(m_full, cd.n);
  return tc;
}

LatticePoint compose_representative(Int s, Int m, int p, const ChiralityData& cd) {
  const TranslationVector u = s * cd.w + m * cd.c_tilde;
  return LatticePoint(p, 0, 0) + u;
}

std::ostream& operator<<(std::ostream& os, const TubePoint& x) {
  return os << '[' << x.representative() << ']';
}

TubePoint canonicalize(const LatticePoint& v, const ChiralityData& cd) {
  const TubeCoordinates tc = decompose(v, cd);
  return TubePoint(compose_representative(tc.s, tc.m, tc.p, cd), cd.c);
}

bool integer_multiple_of(const IntTriple& d, const TranslationVector& c, Int* j) {
  int pivot = 0;
  while (pivot < 3 && c[pivot] == 0)
    ++pivot;
  if (pivot == 3)
    return false;
  if (d[pivot] % c[pivot] != 0)
    return false;
  const Int factor = d[pivot] / c[pivot];
  for (int i = 0; i < 3; ++i)
    if (d[i] != factor * c[i])
      return false;
  if (j)
    *j = factor;
  return true;
}

bool same_class(const LatticePoint& v, const LatticePoint& u, const ChiralityData& cd) {
  const IntTriple d{v[0] - u[0], v[1] - u[1], v[2] - u[2]};
  return integer_multiple_of(d, cd.c);
}

} // namespace cntube
