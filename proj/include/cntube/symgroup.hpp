#pragma once

// The symmetry group G_c of a chiral tube, presented by
//   rho = translation by c_tilde, sigma = translation by w,
//   tau = [v] -> [(1,0,0) - v],
// with rho sigma = sigma rho and rho^n = tau^2 = (sigma tau)^2 = (rho tau)^2 = e.
// Elements are kept in the normal form sigma^s rho^m tau^p.

#include <iosfwd>

#include "cntube/nanotube.hpp"

namespace cntube {

struct GroupElement {
  Int s = 0;
  Int m = 0; // 0 <= m < n
  int p = 0; // 0 or 1
  TranslationVector chirality;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

std::ostream& operator<<(std::ostream& os, const GroupElement& g);

class SymmetryGroup {
public:
  // Throws NotChiral for armchair and zig-zag tubes.
  explicit SymmetryGroup(ChiralityData cd);

  const ChiralityData& chirality() const { return cd_; }
  Int rotation_order() const { return cd_.n; }

  // Reduces m modulo n; p must be 0 or 1.
  GroupElement element(Int s, Int m, int p) const;
  GroupElement identity() const { return element(0, 0, 0); }
  GroupElement rho() const { return element(0, 1, 0); }
  GroupElement sigma() const { return element(1, 0, 0); }
  GroupElement tau() const { return element(0, 0, 1); }

  TubePoint origin() const;
  TubePoint point(const LatticePoint& v) const { return canonicalize(v, cd_); }

  // tau^p first, then translation by s*w + m*c_tilde.
  TubePoint act(const GroupElement& g, const TubePoint& x) const;
  // g after h.
  GroupElement compose(const GroupElement& g, const GroupElement& h) const;
  GroupElement inverse(const GroupElement& g) const;
  GroupElement power(const GroupElement& g, Int k) const;
  // The unique word mapping [0,0,0] to x.
  GroupElement factorize(const TubePoint& x) const;

private:
  void check(const TranslationVector& c, const char* what) const;

  ChiralityData cd_;
};

} // namespace cntube
