#pragma once

// Two-dimensional representations D_c(k) of G_c on span{psi_k, psi_-k},
// their classification, equivalence and the Clebsch-Gordan decomposition
// D(k) x D(k') = D(k+k') + D(k-k').

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cntube/geometry.hpp"
#include "cntube/nanotube.hpp"
#include "cntube/spectrum.hpp"

namespace cntube {

using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;

inline constexpr double kIrreducibilityTolerance = 1e-9;
inline constexpr double kIntertwinerTolerance = 1e-9;

struct RepMatrices {
  Matrix2c rho;
  Matrix2c sigma;
  Matrix2c tau;
};

// The generator images for any k, no preconditions:
// rho = diag(e^{i<k,c~>}, e^{-i<k,c~>}), sigma likewise with w,
// tau = antidiag(e^{i k0 a}, e^{-i k0 a}).
RepMatrices generator_images(const KVector& k, const ChiralityData& cd);

// As above, but rejects k off the allowed lines (OffAllowedLine) or in
// Lambda (PreconditionError), where the basis degenerates.
RepMatrices rep_matrices(const KVector& k, const ChiralityData& cd);

enum class RepKind { one_dimensional_pair, reducible_pair, irreducible_2d };

std::string_view to_string(RepKind kind);

// Eigenvalues of rho, sigma and tau on a one-dimensional subrepresentation.
struct Character {
  Complex rho;
  Complex sigma;
  Complex tau;
};

struct RepClassification {
  KVector k;
  RepKind kind = RepKind::irreducible_2d;
  // <k,c~>/pi and <k,w>/pi and their distances to the nearest integer.
  double rho_turns = 0.0;
  double sigma_turns = 0.0;
  double rho_distance = 0.0;
  double sigma_distance = 0.0;
  // Index into lambda_set() for one_dimensional_pair.
  int lambda_index = -1;
  // one_dimensional_pair: one entry (psi_k itself).
  // reducible_pair: two entries for psi_k +- e^{-i k0 a} psi_-k.
  std::vector<Character> characters;
  // reducible_pair only: P+ and P- in the basis {psi_k, psi_-k}.
  std::vector<Matrix2c> projectors;
  // reducible_pair only: <k,c~> = m pi, <k,w> = p pi.
  Int m = 0;
  Int p = 0;
};

// k must lie on an allowed line (it need not lie in B).
RepClassification classify(const KVector& k, const ChiralityData& cd);

// True iff D(k1) and D(k2) are equivalent. Both must be irreducible_2d.
bool equivalent(const KVector& k1, const KVector& k2, const ChiralityData& cd);

struct CgCoefficient {
  int i = 0;      // basis index of D(k), 1 or 2
  int j = 0;      // basis index of D(k'), 1 or 2
  bool plus = true; // target D(k+) or D(k-)
  int l = 0;      // basis index inside the target, 1 or 2
  double value = 0.0;

  std::string label() const; // e.g. "(kk'12|k-1)"
};

struct ClebschGordanResult {
  Eigen::Matrix4d M;
  std::vector<CgCoefficient> coefficients;
  KVector k_plus;  // k + k'
  KVector k_minus; // k - k'
  HexagonReduction k_plus_reduced;
  HexagonReduction k_minus_reduced;
  // max over rho, sigma, tau of |M^-1 (D(k) x D(k')) M - (D(k+) + D(k-))|.
  double residual = 0.0;
};

// The permutation matrix M with unit entries at (1,1), (4,2), (2,3), (3,4).
Eigen::Matrix4d clebsch_gordan_matrix();

// Requires k, k' and the hexagon-reduced k+-k' in B_c^irred with E != 0 at
// k+-k'. Throws CgPreconditionError naming the failing vector.
ClebschGordanResult clebsch_gordan(const KVector& k, const KVector& k_prime,
                                   const ChiralityData& cd);

Matrix2c direct_sum_block(const Matrix4c& m, int block);
Matrix4c block_diag(const Matrix2c& a, const Matrix2c& b);

} // namespace cntube
