#include "cntube/reps.hpp"

#include <cmath>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

#include "cntube/error.hpp"

namespace cntube {

namespace {

Matrix2c diag_phase(double theta) {
  Matrix2c m = Matrix2c::Zero();
  m(0, 0) = std::polar(1.0, theta);
  m(1, 1) = std::polar(1.0, -theta);
  return m;
}

double distance_to_integer(double x) { return std::abs(x - std::round(x)); }

std::string describe(const KVector& k) {
  std::ostringstream os;
  os.precision(17);
  os << k;
  return os.str();
}

void require_on_line(const KVector& k, const ChiralityData& cd) {
  if (!on_allowed_line(k, cd))
    throw OffAllowedLine("k=" + describe(k) + " is not on an allowed line");
}

// Solves X A1(g) = A2(g) X for all three generators and returns the
// smallest singular value of the stacked linear system with the
// corresponding X.
std::pair<double, Matrix2c> intertwiner(const RepMatrices& a, const RepMatrices& b) {
  Eigen::Matrix<Complex, 12, 4> sys = Eigen::Matrix<Complex, 12, 4>::Zero();
  const Matrix2c* lhs[3] = {&a.rho, &a.sigma, &a.tau};
  const Matrix2c* rhs[3] = {&b.rho, &b.sigma, &b.tau};
  // Unknown vector x = (X00, X01, X10, X11).
  for (int g = 0; g < 3; ++g) {
    const Matrix2c& A = *lhs[g];
    const Matrix2c& B = *rhs[g];
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        const int row = 4 * g + 2 * r + c;
        // (X A)_{rc} = sum_t X_{rt} A_{tc};  (B X)_{rc} = sum_t B_{rt} X_{tc}
        for (int t = 0; t < 2; ++t) {
          sys(row, 2 * r + t) += A(t, c);
          sys(row, 2 * t + c) -= B(r, t);
        }
      }
    }
  }
  Eigen::JacobiSVD<Eigen::Matrix<Complex, 12, 4>> svd(sys, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const Eigen::Vector4cd x = svd.matrixV().col(3);
  Matrix2c X;
  X << x(0), x(1), x(2), x(3);
  return {sv(3), X};
}

} // namespace

std::string_view to_string(RepKind kind) {
  switch (kind) {
  case RepKind::one_dimensional_pair:
    return "one_dimensional_pair";
  case RepKind::reducible_pair:
    return "reducible_pair";
  case RepKind::irreducible_2d:
    return "irreducible_2d";
  }
  return "unknown";
}

RepMatrices generator_images(const KVector& k, const ChiralityData& cd) {
  RepMatrices r;
  r.rho = diag_phase(pairing(k, cd.c_tilde));
  r.sigma = diag_phase(pairing(k, cd.w));
  r.tau = Matrix2c::Zero();
  r.tau(0, 1) = std::polar(1.0, k[0] * kFrameScale);
  r.tau(1, 0) = std::polar(1.0, -k[0] * kFrameScale);
  return r;
}

RepMatrices rep_matrices(const KVector& k, const ChiralityData& cd) {
  require_on_line(k, cd);
  if (lambda_index(k) >= 0)
    throw PreconditionError("k=" + describe(k) +
                            " is a Lambda point; the eigenspace is one-dimensional");
  return generator_images(k, cd);
}

RepClassification classify(const KVector& k, const ChiralityData& cd) {
  require_on_line(k, cd);
  RepClassification out;
  out.k = k;
  out.rho_turns = pairing(k, cd.c_tilde) / kPi;
  out.sigma_turns = pairing(k, cd.w) / kPi;
  out.rho_distance = distance_to_integer(out.rho_turns);
  out.sigma_distance = distance_to_integer(out.sigma_turns);

  out.lambda_index = lambda_index(k);
  if (out.lambda_index >= 0) {
    out.kind = RepKind::one_dimensional_pair;
    // psi_-k = C psi_k with C = e^{-2i lambda(k)}, so tau psi_k = e^{-i k0 a} C psi_k.
    const double lam = lambda_phase(k);
    out.characters.push_back(Character{std::polar(1.0, pairing(k, cd.c_tilde)),
                                       std::polar(1.0, pairing(k, cd.w)),
                                       std::polar(1.0, -k[0] * kFrameScale - 2.0 * lam)});
    return out;
  }

  if (out.rho_distance > kIrreducibilityTolerance ||
      out.sigma_distance > kIrreducibilityTolerance) {
    out.kind = RepKind::irreducible_2d;
    return out;
  }

  out.kind = RepKind::reducible_pair;
  out.m = static_cast<Int>(std::llround(out.rho_turns));
  out.p = static_cast<Int>(std::llround(out.sigma_turns));
  const double rho_char = (out.m % 2 == 0) ? 1.0 : -1.0;
  const double sigma_char = (out.p % 2 == 0) ? 1.0 : -1.0;
  const Complex phase = std::polar(1.0, k[0] * kFrameScale);
  for (double sign : {1.0, -1.0}) {
    Matrix2c P;
    P << 1.0, sign * phase, sign * std::conj(phase), 1.0;
    out.projectors.push_back(0.5 * P);
    out.characters.push_back(Character{rho_char, sigma_char, sign});
  }
  return out;
}

bool equivalent(const KVector& k1, const KVector& k2, const ChiralityData& cd) {
  for (const KVector* k : {&k1, &k2}) {
    if (classify(*k, cd).kind != RepKind::irreducible_2d)
      throw PreconditionError("equivalence is only defined here for irreducible k; k=" +
                              describe(*k) + " is not");
  }
  // Characters of sigma^s rho^m are 2cos(s*theta_w + m*theta_c); tau-words
  // have trace zero. They agree iff (theta_c, theta_w) match up to a joint sign.
  const double c1 = pairing(k1, cd.c_tilde), w1 = pairing(k1, cd.w);
  const double c2 = pairing(k2, cd.c_tilde), w2 = pairing(k2, cd.w);
  auto same_angle = [](double x, double y) {
    return std::abs(std::remainder(x - y, 2.0 * kPi)) < kIntertwinerTolerance;
  };
  const bool phases_match =
      (same_angle(c1, c2) && same_angle(w1, w2)) || (same_angle(c1, -c2) && same_angle(w1, -w2));
  if (!phases_match)
    return false;

  const auto [residual, X] = intertwiner(generator_images(k1, cd), generator_images(k2, cd));
  return residual < kIntertwinerTolerance && std::abs(X.determinant()) > kIntertwinerTolerance;
}

std::string CgCoefficient::label() const {
  std::ostringstream os;
  os << "(kk'" << i << j << "|k" << (plus ? '+' : '-') << l << ')';
  return os.str();
}

Eigen::Matrix4d clebsch_gordan_matrix() {
  Eigen::Matrix4d M = Eigen::Matrix4d::Zero();
  M(0, 0) = 1.0;
  M(3, 1) = 1.0;
  M(1, 2) = 1.0;
  M(2, 3) = 1.0;
  return M;
}

Matrix2c direct_sum_block(const Matrix4c& m, int block) {
  return m.block<2, 2>(2 * block, 2 * block);
}

Matrix4c block_diag(const Matrix2c& a, const Matrix2c& b) {
  Matrix4c out = Matrix4c::Zero();
  out.block<2, 2>(0, 0) = a;
  out.block<2, 2>(2, 2) = b;
  return out;
}

ClebschGordanResult clebsch_gordan(const KVector& k, const KVector& k_prime,
                                   const ChiralityData& cd) {
  auto require_irreducible = [&](const KVector& v, const std::string& name, bool in_b) {
    if (!on_allowed_line(v, cd))
      throw CgPreconditionError(name, name + "=" + describe(v) + " is not on an allowed line");
    if (in_b && !hexagon_B_contains(v, kGeometryTolerance))
      throw CgPreconditionError(name, name + "=" + describe(v) + " lies outside the hexagon B");
    const auto cls = classify(v, cd);
    if (cls.kind != RepKind::irreducible_2d)
      throw CgPreconditionError(name, name + "=" + describe(v) + " is not in B_c^irred (" +
                                          std::string(to_string(cls.kind)) + ")");
  };
  require_irreducible(k, "k", true);
  require_irreducible(k_prime, "k'", true);

  ClebschGordanResult out;
  out.k_plus = k + k_prime;
  out.k_minus = k - k_prime;
  out.k_plus_reduced = reduce_to_hexagon(out.k_plus);
  out.k_minus_reduced = reduce_to_hexagon(out.k_minus);
  require_irreducible(out.k_plus_reduced.k, "k+", true);
  require_irreducible(out.k_minus_reduced.k, "k-", true);
  if (dispersion(out.k_plus) < kLineTolerance)
    throw CgPreconditionError("k+", "k+=" + describe(out.k_plus) + " has E = 0");
  if (dispersion(out.k_minus) < kLineTolerance)
    throw CgPreconditionError("k-", "k-=" + describe(out.k_minus) + " has E = 0");

  out.M = clebsch_gordan_matrix();
  const Matrix4c M = out.M.cast<Complex>();
  const Matrix4c Minv = out.M.transpose().cast<Complex>();

  const RepMatrices a = generator_images(k, cd);
  const RepMatrices b = generator_images(k_prime, cd);
  const RepMatrices plus = generator_images(out.k_plus, cd);
  const RepMatrices minus = generator_images(out.k_minus, cd);
  const std::pair<const Matrix2c*, const Matrix2c*> factors[3] = {
      {&a.rho, &b.rho}, {&a.sigma, &b.sigma}, {&a.tau, &b.tau}};
  const std::pair<const Matrix2c*, const Matrix2c*> targets[3] = {
      {&plus.rho, &minus.rho}, {&plus.sigma, &minus.sigma}, {&plus.tau, &minus.tau}};
  for (int g = 0; g < 3; ++g) {
    const Matrix4c prod = Eigen::kroneckerProduct(*factors[g].first, *factors[g].second).eval();
    const Matrix4c conj = Minv * prod * M;
    const Matrix4c expected = block_diag(*targets[g].first, *targets[g].second);
    out.residual = std::max(out.residual, (conj - expected).cwiseAbs().maxCoeff());
  }

  // Row (i,j) of M indexes e_i x e_j; column (target, l) indexes the
  // l-th basis vector of D(k+) (columns 1,2) or D(k-) (columns 3,4).
  for (int row = 0; row < 4; ++row) {
    for (int col = 0; col < 4; ++col) {
      if (out.M(row, col) == 0.0)
        continue;
      out.coefficients.push_back(
          CgCoefficient{row / 2 + 1, row % 2 + 1, col < 2, col % 2 + 1, out.M(row, col)});
    }
  }
  return out;
}

} // namespace cntube
