#pragma once

// Nearest-neighbour tight-binding spectrum on L_c, hopping kappa = 1.

#include <array>
#include <complex>
#include <vector>

#include "cntube/geometry.hpp"
#include "cntube/nanotube.hpp"

namespace cntube {

using Complex = std::complex<double>;

inline constexpr double kLineTolerance = 1e-9;  // |<k,c> mod 2pi|
inline constexpr double kNodeTolerance = 1e-12; // |S(k)| below this selects lambda = 0

// S(k) = e^{i k0 a} + e^{i k1 a} + e^{i k2 a}.
Complex structure_sum(const KVector& k);

// E(k) = |S(k)|.
double dispersion(const KVector& k);
// sqrt(3 + 2cos(k0-k1)a + 2cos(k1-k2)a + 2cos(k2-k0)a).
double dispersion_cosine_form(const KVector& k);

// -arg(S(k))/2, or 0 where S(k) vanishes.
double lambda_phase(const KVector& k);

// <k,c>/(2pi); integral exactly on the allowed lines.
double line_coordinate(const KVector& k, const ChiralityData& cd);
bool on_allowed_line(const KVector& k, const ChiralityData& cd, double tol = kLineTolerance);

enum class Band { plus, minus };

// psi_k^{+-}[v] = e^{-i<k,v>} phi_k^{+-}[v], phi = e^{i lambda} on the even
// sublattice and +-e^{-i lambda} on the odd one.
class WaveFunction {
public:
  // Throws OffAllowedLine unless <k,c> is in 2piZ within kLineTolerance.
  WaveFunction(const KVector& k, Band band, const ChiralityData& cd);

  const KVector& k() const { return k_; }
  Band band() const { return band_; }
  const TranslationVector& chirality() const { return c_; }

  Complex operator()(const LatticePoint& v) const;
  Complex operator()(const TubePoint& x) const { return (*this)(x.representative()); }

private:
  KVector k_;
  Band band_;
  TranslationVector c_;
  Complex even_;
  Complex odd_;
};

// (H psi)[v] = sum over the three nearest neighbours of psi.
template <class Fn>
Complex apply_hamiltonian(const Fn& psi, const LatticePoint& v) {
  Complex sum{0.0, 0.0};
  for (const auto& u : nearest_neighbors(v))
    sum += psi(u);
  return sum;
}

// The line <k,c> = 2pi*index clipped to the hexagon B, parametrized by
// k(param) = base + param * direction with |direction| = 1 in the reciprocal
// metric and direction parallel to t.
struct AllowedLine {
  Int index = 0;
  KVector base;
  KVector direction;
  double param_min = 0.0;
  double param_max = 0.0;

  KVector at(double param) const { return base + param * direction; }
};

std::vector<AllowedLine> allowed_lines(const ChiralityData& cd);

// 2pi/|c|.
double line_spacing(const ChiralityData& cd);

struct BandSample {
  Int line_index = 0;
  double param = 0.0;
  KVector k;
  double energy_plus = 0.0;
  double energy_minus = 0.0;
  double lambda_phase = 0.0;
};

// `samples_per_line` uniformly spaced points on every allowed line, both
// endpoints included; ordered by (line, param). A line that meets B in a
// single corner yields one sample.
std::vector<BandSample> sample_bands(const ChiralityData& cd, int samples_per_line);

// The seven points with one-dimensional eigenspace, built from
// (alpha,beta) in {0,+-1}^2 and filtered to B. Order: (0,0,0) first.
struct LambdaPoint {
  int alpha = 0;
  int beta = 0;
  KVector k;
};
const std::array<LambdaPoint, 7>& lambda_set();

// Members of the Lambda set lying on allowed lines of cd
// (alpha*c1 + beta*c2 even).
std::vector<LambdaPoint> lambda_points(const ChiralityData& cd);

// Index into lambda_set() within `tol`, or -1.
int lambda_index(const KVector& k, double tol = kLineTolerance);

// The six hexagon corners, where E vanishes.
const std::array<KVector, 6>& k_points();

// Exact test: some K point satisfies <K,c> in 2piZ, i.e. c0 - c1 = 0 mod 3.
bool is_metallic(const ChiralityData& cd);

} // namespace cntube
