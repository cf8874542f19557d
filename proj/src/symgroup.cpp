#include "cntube/symgroup.hpp"

#include <ostream>
#include <sstream>

#include "cntube/error.hpp"

namespace cntube {

std::ostream& operator<<(std::ostream& os, const GroupElement& g) {
  return os << "(s=" << g.s << ", m=" << g.m << ", p=" << g.p << ')';
}

SymmetryGroup::SymmetryGroup(ChiralityData cd) : cd_(std::move(cd)) {
  if (!cd_.is_chiral()) {
    std::ostringstream os;
    os << "symmetry group is only available for chiral tubes; c=" << cd_.c << " is "
       << to_string(cd_.tube_class) << " (the model restricts itself to chiral nanotubes)";
    throw NotChiral(os.str());
  }
}

void SymmetryGroup::check(const TranslationVector& c, const char* what) const {
  if (c != cd_.c) {
    std::ostringstream os;
    os << what << " belongs to chirality " << c << ", group is for " << cd_.c;
    throw ChiralityMismatch(os.str());
  }
}

GroupElement SymmetryGroup::element(Int s, Int m, int p) const {
  if (p != 0 && p != 1)
    throw InvalidArgument("tau exponent must be 0 or 1");
  m %= cd_.n;
  if (m < 0)
    m += cd_.n;
  return GroupElement{s, m, p, cd_.c};
}

TubePoint SymmetryGroup::origin() const { return TubePoint(LatticePoint{}, cd_.c); }

TubePoint SymmetryGroup::act(const GroupElement& g, const TubePoint& x) const {
  check(g.chirality, "group element");
  check(x.chirality(), "tube point");
  LatticePoint v = x.representative();
  if (g.p == 1)
    v = LatticePoint(1 - v[0], -v[1], -v[2]);
  return canonicalize(v + (g.s * cd_.w + g.m * cd_.c_tilde), cd_);
}

GroupElement SymmetryGroup::compose(const GroupElement& g, const GroupElement& h) const {
  check(g.chirality, "left operand");
  check(h.chirality, "right operand");
  // tau g_u tau = g_{-u}: moving tau^p(g) past h's translation flips its sign.
  const Int sign = g.p == 1 ? -1 : 1;
  return element(g.s + sign * h.s, g.m + sign * h.m, (g.p + h.p) % 2);
}

GroupElement SymmetryGroup::inverse(const GroupElement& g) const {
  check(g.chirality, "group element");
  if (g.p == 1)
    return g;
  return element(-g.s, -g.m, 0);
}

GroupElement SymmetryGroup::power(const GroupElement& g, Int k) const {
  GroupElement base = k < 0 ? inverse(g) : g;
  if (k < 0)
    k = -k;
  GroupElement acc = identity();
  while (k > 0) {
    if (k & 1)
      acc = compose(acc, base);
    base = compose(base, base);
    k >>= 1;
  }
  return acc;
}

GroupElement SymmetryGroup::factorize(const TubePoint& x) const {
  check(x.chirality(), "tube point");
  const TubeCoordinates tc = decompose(x.representative(), cd_);
  return GroupElement{tc.s, tc.m, tc.p, cd_.c};
}

} // namespace cntube
