#include "cntube/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cntube/error.hpp"

namespace cntube {

Complex structure_sum(const KVector& k) {
  Complex s{0.0, 0.0};
  for (int i = 0; i < 3; ++i)
    s += std::polar(1.0, k[i] * kFrameScale);
  return s;
}

double dispersion(const KVector& k) { return std::abs(structure_sum(k)); }

double dispersion_cosine_form(const KVector& k) {
  const double a = kFrameScale;
  const double arg = 3.0 + 2.0 * std::cos((k[0] - k[1]) * a) + 2.0 * std::cos((k[1] - k[2]) * a) +
                     2.0 * std::cos((k[2] - k[0]) * a);
  return std::sqrt(std::max(arg, 0.0));
}

double lambda_phase(const KVector& k) {
  const Complex s = structure_sum(k);
  if (std::abs(s) < kNodeTolerance)
    return 0.0;
  return -0.5 * std::arg(s);
}

double line_coordinate(const KVector& k, const ChiralityData& cd) {
  return pairing(k, cd.c) / (2.0 * kPi);
}

bool on_allowed_line(const KVector& k, const ChiralityData& cd, double tol) {
  const double phase = pairing(k, cd.c);
  const double r = std::remainder(phase, 2.0 * kPi);
  return std::abs(r) < tol;
}

WaveFunction::WaveFunction(const KVector& k, Band band, const ChiralityData& cd)
    : k_(k), band_(band), c_(cd.c) {
  if (!on_allowed_line(k, cd)) {
    std::ostringstream os;
    os.precision(17);
    os << "k=" << k << " is not on an allowed line of c=" << cd.c << ": <k,c>/2pi = "
       << line_coordinate(k, cd);
    throw OffAllowedLine(os.str());
  }
  const double lam = lambda_phase(k);
  const double sign = band == Band::plus ? 1.0 : -1.0;
  even_ = std::polar(1.0, lam);
  odd_ = sign * std::polar(1.0, -lam);
}

Complex WaveFunction::operator()(const LatticePoint& v) const {
  const Complex plane = std::polar(1.0, -pairing(k_, v));
  return plane * (epsilon(v) == 1 ? even_ : odd_);
}

double line_spacing(const ChiralityData& cd) { return 2.0 * kPi / cd.circumference(); }

std::vector<AllowedLine> allowed_lines(const ChiralityData& cd) {
  const auto& c = cd.c;
  const double c_norm2 = static_cast<double>(frame_dot(c.coords(), c.coords()));
  // base_mu = mu * step * c  gives pairing(base_mu, c) = 2 pi mu exactly.
  const double step = 2.0 * kPi / (kFrameScale * c_norm2);
  const KVector t_k = KVector::from_translation(cd.t);
  const KVector direction = (1.0 / reciprocal_norm(t_k)) * t_k;

  // The hexagon's extreme pairings with c are attained at its corners.
  Int max_diff = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      max_diff = std::max(max_diff, c[i] - c[j]);
  const Int mu_max = max_diff / 3;

  constexpr double clip_tol = 1e-9;
  std::vector<AllowedLine> lines;
  for (Int mu = -mu_max; mu <= mu_max; ++mu) {
    AllowedLine line;
    line.index = mu;
    line.base = static_cast<double>(mu) * step * KVector::from_translation(c);
    line.direction = direction;
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool empty = false;
    for (int i = 0; i < 3 && !empty; ++i) {
      const double b = line.base[i];
      const double d = direction[i];
      if (std::abs(d) < 1e-300) {
        if (std::abs(b) > kZoneHalfWidth + clip_tol)
          empty = true;
        continue;
      }
      double t1 = (-kZoneHalfWidth - b) / d;
      double t2 = (kZoneHalfWidth - b) / d;
      if (t1 > t2)
        std::swap(t1, t2);
      lo = std::max(lo, t1);
      hi = std::min(hi, t2);
    }
    if (empty)
      continue;
    if (hi < lo) {
      // Lines grazing a corner meet B in a single point up to rounding.
      if (lo - hi > clip_tol)
        continue;
      const double mid = 0.5 * (lo + hi);
      lo = hi = mid;
    }
    line.param_min = lo;
    line.param_max = hi;
    lines.push_back(line);
  }
  return lines;
}

std::vector<BandSample> sample_bands(const ChiralityData& cd, int samples_per_line) {
  if (samples_per_line < 2)
    throw InvalidArgument("samples_per_line must be at least 2");
  const auto lines = allowed_lines(cd);
  std::vector<BandSample> out;
  out.reserve(lines.size() * static_cast<std::size_t>(samples_per_line));
  for (const auto& line : lines) {
    // A line touching B only at a corner contributes that single point.
    const int count = line.param_min == line.param_max ? 1 : samples_per_line;
    for (int i = 0; i < count; ++i) {
      BandSample s;
      s.line_index = line.index;
      // Weighted form: endpoints are exact and an odd count hits the midpoint.
      const double f = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
      s.param = (1.0 - f) * line.param_min + f * line.param_max;
      s.k = line.at(s.param);
      s.energy_plus = dispersion(s.k);
      s.energy_minus = -s.energy_plus;
      s.lambda_phase = lambda_phase(s.k);
      out.push_back(s);
    }
  }
  return out;
}

const std::array<LambdaPoint, 7>& lambda_set() {
  static const std::array<LambdaPoint, 7> set = [] {
    std::array<LambdaPoint, 7> pts{};
    std::size_t n = 0;
    const double unit = kPi / kFrameScale;
    for (int alpha : {0, 1, -1}) {
      for (int beta : {0, 1, -1}) {
        const KVector k(-(alpha + beta) / 3.0 * unit, (2 * alpha - beta) / 3.0 * unit,
                        (-alpha + 2 * beta) / 3.0 * unit);
        if (!hexagon_B_contains(k, kGeometryTolerance))
          continue;
        pts.at(n++) = LambdaPoint{alpha, beta, k};
      }
    }
    return pts;
  }();
  return set;
}

std::vector<LambdaPoint> lambda_points(const ChiralityData& cd) {
  std::vector<LambdaPoint> out;
  for (const auto& lp : lambda_set())
    if ((lp.alpha * cd.c[1] + lp.beta * cd.c[2]) % 2 == 0)
      out.push_back(lp);
  return out;
}

int lambda_index(const KVector& k, double tol) {
  const auto& set = lambda_set();
  for (std::size_t i = 0; i < set.size(); ++i)
    if (max_abs_difference(k, set[i].k) <= tol)
      return static_cast<int>(i);
  return -1;
}

const std::array<KVector, 6>& k_points() {
  static const std::array<KVector, 6> pts = [] {
    const double h = kZoneHalfWidth;
    return std::array<KVector, 6>{KVector(h, -h, 0), KVector(h, 0, -h), KVector(0, h, -h),
                                  KVector(-h, h, 0), KVector(-h, 0, h), KVector(0, -h, h)};
  }();
  return pts;
}

bool is_metallic(const ChiralityData& cd) {
  // <K,c> = (2pi/3)(c_i - c_j) at each corner; all differences agree mod 3.
  return (cd.c[0] - cd.c[1]) % 3 == 0;
}

} // namespace cntube
