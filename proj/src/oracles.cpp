#include "cntube/oracles.hpp"

#include <cstdlib>

#include "cntube/geometry.hpp"

namespace cntube::oracle {

std::vector<LatticePoint> neighbor_shell(const LatticePoint& v, Int radius, Int shell) {
  std::vector<LatticePoint> out;
  for (Int a = -radius; a <= radius; ++a)
    for (Int b = -radius; b <= radius; ++b)
      for (Int c = -radius; c <= radius; ++c) {
        const IntTriple u{v[0] + a, v[1] + b, v[2] + c};
        const Int sum = coordinate_sum(u);
        if (sum != 0 && sum != 1)
          continue;
        if (std::abs(a) + std::abs(b) + std::abs(c) == shell)
          out.emplace_back(u);
      }
  return out;
}

double euclidean_dot(const IntTriple& u, const IntTriple& w) {
  return dot(embed(u), embed(w));
}

bool axis_norm_identity(const ChiralityData& cd) {
  using Wide = __int128;
  Wide t2 = 0, c2 = 0;
  for (int i = 0; i < 3; ++i) {
    t2 += static_cast<Wide>(cd.t[i]) * cd.t[i];
    c2 += static_cast<Wide>(cd.c[i]) * cd.c[i];
  }
  return static_cast<Wide>(cd.R) * cd.R * t2 == 3 * c2;
}

bool projection_is_unit_step(const TranslationVector& w, const ChiralityData& cd) {
  using Wide = __int128;
  Wide wt = 0, tt = 0;
  for (int i = 0; i < 3; ++i) {
    wt += static_cast<Wide>(w[i]) * cd.t[i];
    tt += static_cast<Wide>(cd.t[i]) * cd.t[i];
  }
  return static_cast<Wide>(cd.q_tilde) * wt == tt;
}

std::optional<Int> shortest_screw_norm(const ChiralityData& cd, Int bound) {
  std::optional<Int> best;
  for (Int a = -bound; a <= bound; ++a)
    for (Int b = -bound; b <= bound; ++b) {
      const Int c = -a - b;
      if (std::abs(c) > bound)
        continue;
      const TranslationVector u(a, b, c);
      if (!projection_is_unit_step(u, cd))
        continue;
      const Int n2 = a * a + b * b + c * c;
      if (!best || n2 < *best)
        best = n2;
    }
  return best;
}

std::vector<Word> words_reaching(const LatticePoint& v, const ChiralityData& cd, Int s_range,
                                 Int j_range) {
  std::vector<Word> out;
  for (Int s = -s_range; s <= s_range; ++s)
    for (Int m = 0; m < cd.n; ++m)
      for (int p = 0; p <= 1; ++p)
        for (Int j = -j_range; j <= j_range; ++j) {
          IntTriple u{p, 0, 0};
          for (int i = 0; i < 3; ++i)
            u[i] += s * cd.w[i] + m * cd.c_tilde[i] + j * cd.c[i];
          if (u == v.coords())
            out.push_back(Word{s, m, p, j});
        }
  return out;
}

int commutant_dimension(const RepMatrices& r, double tol) {
  // vec(X A - A X) = (A^T kron I - I kron A) vec(X), column-major vec.
  using Mat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
  Mat sys(12, 4);
  const Matrix2c id = Matrix2c::Identity();
  int row = 0;
  for (const Matrix2c* A : {&r.rho, &r.sigma, &r.tau}) {
    Eigen::Matrix4cd block;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l)
            block(2 * i + k, 2 * j + l) = (*A)(j, i) * id(k, l) - id(i, j) * (*A)(k, l);
    sys.block(row, 0, 4, 4) = block;
    row += 4;
  }
  Eigen::BDCSVD<Mat> svd(sys);
  int dim = 0;
  for (int i = 0; i < 4; ++i)
    if (svd.singularValues()(i) < tol)
      ++dim;
  return dim;
}

double rank_ratio(std::span<const Complex> a, std::span<const Complex> b) {
  using Mat = Eigen::Matrix<Complex, Eigen::Dynamic, 2>;
  Mat m(static_cast<Eigen::Index>(a.size()), 2);
  for (std::size_t i = 0; i < a.size(); ++i) {
    m(static_cast<Eigen::Index>(i), 0) = a[i];
    m(static_cast<Eigen::Index>(i), 1) = b[i];
  }
  Eigen::JacobiSVD<Mat> svd(m);
  const auto& sv = svd.singularValues();
  return sv(1) / sv(0);
}

} // namespace cntube::oracle
