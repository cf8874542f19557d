#pragma once

// Chirality analysis and the factor space L_c = L / Zc.

#include <array>
#include <iosfwd>
#include <string_view>

#include "cntube/lattice.hpp"

namespace cntube {

enum class TubeClass { armchair, zigzag, chiral };

std::string_view to_string(TubeClass cls);

// How the user's triple was brought to the normal form c0 > c1 >= c2, c1 <= 0:
// normalized[i] = (negated ? -1 : 1) * input[permutation[i]].
struct Normalization {
  IntTriple input{};
  std::array<int, 3> permutation{0, 1, 2};
  bool negated = false;

  bool is_identity() const { return !negated && permutation == std::array<int, 3>{0, 1, 2}; }
};

struct ChiralityData {
  TranslationVector c;       // normalized chirality
  Int n = 0;                 // gcd(c0, c1, c2)
  TranslationVector c_tilde; // c / n, generator of the pure rotation
  TranslationVector t;       // shortest pure translation along the axis
  Int R = 0;                 // gcd(c2-c1, c0-c2, c1-c0)
  Int q = 0;                 // (c0^2+c1^2+c2^2) / R
  Int q_tilde = 0;           // q / n
  TranslationVector w;       // shortest screw translation, projection t/q_tilde
  TubeClass tube_class = TubeClass::chiral;
  Normalization normalization;

  // Euclidean circumference |c| in bond lengths.
  double circumference() const;
  bool is_chiral() const { return tube_class == TubeClass::chiral; }
};

// Throws InvalidArgument for the zero vector or a nonzero coordinate sum.
ChiralityData analyze(const IntTriple& c);

// Brings a nonzero zero-sum triple to the normal form described above.
Normalization normalize_chirality(const IntTriple& c);

// Hamada (n1, n2) -> three-axes (n1+n2, -n2, -n1).
IntTriple hamada_to_triple(Int n1, Int n2);

// Unique decomposition v = s*w + m*c_tilde + p*(1,0,0) + j*c with
// 0 <= m < n and p in {0,1}.
struct TubeCoordinates {
  Int s = 0;
  Int m = 0;
  int p = 0;
  Int j = 0;
};

TubeCoordinates decompose(const LatticePoint& v, const ChiralityData& cd);

// s*w + m*c_tilde + p*(1,0,0).
LatticePoint compose_representative(Int s, Int m, int p, const ChiralityData& cd);

// A point [v] of the tube, stored through its canonical representative (j = 0).
class TubePoint {
public:
  TubePoint(LatticePoint representative, TranslationVector chirality)
      : rep_(representative), c_(chirality) {}

  const LatticePoint& representative() const { return rep_; }
  const TranslationVector& chirality() const { return c_; }

  friend bool operator==(const TubePoint&, const TubePoint&) = default;

private:
  LatticePoint rep_;
  TranslationVector c_;
};

std::ostream& operator<<(std::ostream& os, const TubePoint& x);

TubePoint canonicalize(const LatticePoint& v, const ChiralityData& cd);

// True iff v - u is an integer multiple of c.
bool same_class(const LatticePoint& v, const LatticePoint& u, const ChiralityData& cd);

// If d = j*c for an integer j, stores j and returns true.
bool integer_multiple_of(const IntTriple& d, const TranslationVector& c, Int* j = nullptr);

} // namespace cntube
