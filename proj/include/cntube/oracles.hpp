#pragma once

// Brute-force reference computations. These deliberately avoid the
// library's closed forms and are used only to check them.

#include <optional>
#include <span>
#include <vector>

#include "cntube/nanotube.hpp"
#include "cntube/reps.hpp"

namespace cntube::oracle {

// All lattice points u in the cube |u_i - v_i| <= radius with d(v,u) = shell.
std::vector<LatticePoint> neighbor_shell(const LatticePoint& v, Int radius, Int shell);

// sum_i u_i w_i evaluated on the Euclidean embedding, 1.5 * sum_i u_i w_i for
// translations.
double euclidean_dot(const IntTriple& u, const IntTriple& w);

// Checks R^2 |t|^2 == 3 |c|^2 in exact integer arithmetic (both sides carry
// the same frame factor, which cancels).
bool axis_norm_identity(const ChiralityData& cd);

// Exact test that <w,t>/|t|^2 == 1/q_tilde, i.e. q_tilde*sum(w t) == sum(t t).
bool projection_is_unit_step(const TranslationVector& w, const ChiralityData& cd);

// Shortest T-vector with projection t/q_tilde found by scanning the cube
// max_i |u_i| <= bound. Returns the minimal squared frame norm found.
std::optional<Int> shortest_screw_norm(const ChiralityData& cd, Int bound);

// All words (s,m,p,j) in the given window with s*w + m*c~ + p*e0 + j*c == v.
struct Word {
  Int s;
  Int m;
  int p;
  Int j;
};
std::vector<Word> words_reaching(const LatticePoint& v, const ChiralityData& cd, Int s_range,
                                 Int j_range);

// Dimension of {X : X A = A X for every generator image}, counting singular
// values of the Kronecker-form constraint below `tol`.
int commutant_dimension(const RepMatrices& r, double tol);

// sigma_min/sigma_max of the matrix whose columns are a and b.
double rank_ratio(std::span<const Complex> a, std::span<const Complex> b);

} // namespace cntube::oracle
