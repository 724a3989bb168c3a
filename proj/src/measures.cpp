#include "equidist/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "equidist/parallel.hpp"
#include "equidist/rng.hpp"

namespace equidist::measures {

namespace {
constexpr double kTau = 2.0 * std::numbers::pi;

std::vector<double> normalized_weights(std::vector<double> w, std::size_t n) {
  if (w.empty()) w.assign(n, 1.0 / double(n));
  if (w.size() != n) fail(ErrorKind::ValueOutOfRange, "weights/atoms size mismatch");
  double s = pairwise_sum(w);
  if (s <= 0) fail(ErrorKind::ValueOutOfRange, "weights must sum to a positive value");
  for (auto& x : w) x /= s;
  return w;
}
}  // namespace

double weight_sum(const std::vector<double>& w) { return pairwise_sum(w); }

Empirical1D make_empirical1d(std::vector<double> atoms, std::vector<double> weights) {
  Empirical1D m;
  m.weights = normalized_weights(std::move(weights), atoms.size());
  // sort atoms, carrying weights
  std::vector<std::size_t> idx(atoms.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return atoms[a] < atoms[b]; });
  m.atoms.resize(atoms.size());
  std::vector<double> w(atoms.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    m.atoms[i] = atoms[idx[i]];
    w[i] = m.weights[idx[i]];
  }
  m.weights = std::move(w);
  return m;
}

Empirical2D make_empirical2d(std::vector<cd> pts, std::vector<double> weights) {
  Empirical2D m;
  m.weights = normalized_weights(std::move(weights), pts.size());
  m.pts = std::move(pts);
  return m;
}

double sato_tate_cdf(double x) {
  if (x <= -2.0) return 0.0;
  if (x >= 2.0) return 1.0;
  double f = 0.5 + x * std::sqrt(4.0 - x * x) / (4.0 * std::numbers::pi) +
             std::asin(x / 2.0) / std::numbers::pi;
  return std::clamp(f, 0.0, 1.0);
}

double sato_tate_density(double x) {
  if (x <= -2.0 || x >= 2.0) return 0.0;
  return std::sqrt(1.0 - x * x / 4.0) / std::numbers::pi;
}

double arcsine2cos_cdf(double x) {
  // P(2 cos(2 pi U) <= x) = 1 - acos(x/2)/pi
  if (x <= -2.0) return 0.0;
  if (x >= 2.0) return 1.0;
  return 1.0 - std::acos(x / 2.0) / std::numbers::pi;
}

double normal_cdf(double x, double sigma) {
  return 0.5 * std::erfc(-x / (sigma * std::numbers::sqrt2));
}

AnalyticCdf sato_tate_reference() {
  return AnalyticCdf{[](double x) { return sato_tate_cdf(x); }, -2.0, 2.0, 0.0, "sato_tate"};
}

AnalyticCdf arcsine2cos_reference() {
  return AnalyticCdf{[](double x) { return arcsine2cos_cdf(x); }, -2.0, 2.0, 0.0,
                     "arcsine_2cos"};
}

AnalyticCdf normal1d_reference(double sigma) {
  double cut = 8.5 * sigma;
  double mass = 2.0 * normal_cdf(-cut, sigma);  // ~3e-18 at 8.5 sigma
  return AnalyticCdf{[sigma](double x) { return normal_cdf(x, sigma); }, -cut, cut, mass,
                     "normal1d"};
}

Empirical2D gamma_d_sampler(std::uint64_t d, std::uint64_t seed, std::size_t M) {
  if (d < 2) fail(ErrorKind::ValueOutOfRange, "gamma_d requires d >= 2");
  CounterRng rng(seed);
  std::vector<cd> pts(M);
  const std::size_t k = d - 1;
  const double inv_sqrt_d = 1.0 / std::sqrt(double(d));
  for (std::size_t i = 0; i < M; ++i) {
    cd sum = 0.0, prod = 1.0;
    for (std::size_t j = 0; j < k; ++j) {
      cd z = std::polar(1.0, kTau * rng.unit_at(i * k + j));
      sum += z;
      prod *= z;
    }
    pts[i] = (sum + 1.0 / prod) * inv_sqrt_d;
  }
  return make_empirical2d(std::move(pts));
}

Empirical2D gaussian_half_id_sampler(std::uint64_t seed, std::size_t M) {
  CounterRng rng(seed);
  std::vector<cd> pts(M);
  const double sigma = 1.0 / std::numbers::sqrt2;  // variance 1/2 per coordinate
  for (std::size_t i = 0; i < M; ++i) {
    // Box-Muller on two fixed slots per sample
    double u1 = rng.unit_at(2 * i), u2 = rng.unit_at(2 * i + 1);
    double r = std::sqrt(-2.0 * std::log1p(-u1));  // u1 in [0,1) so 1-u1 > 0
    pts[i] = cd(sigma * r * std::cos(kTau * u2), sigma * r * std::sin(kTau * u2));
  }
  return make_empirical2d(std::move(pts));
}

EmpiricalCircle circle_grid(std::uint64_t N) {
  if (N == 0) fail(ErrorKind::ValueOutOfRange, "N must be >= 1");
  EmpiricalCircle m;
  m.atoms.resize(N);
  for (std::uint64_t i = 0; i < N; ++i) m.atoms[i] = double(i) / double(N);
  m.weights.assign(N, 1.0 / double(N));
  return m;
}

Empirical2D empirical2d_from_family(const expsums::SumFamily& fam, bool exclude_zero_index,
                                    double scale) {
  std::vector<cd> pts;
  pts.reserve(fam.values.size());
  for (std::size_t i = exclude_zero_index ? 1 : 0; i < fam.values.size(); ++i)
    pts.push_back(fam.values[i] * scale);
  return make_empirical2d(std::move(pts));
}

std::variant<Empirical1D, Empirical2D> empirical_from_family(const expsums::SumFamily& fam,
                                                             bool exclude_zero_index,
                                                             double scale, double real_tol) {
  Empirical2D planar = empirical2d_from_family(fam, exclude_zero_index, scale);
  bool all_real = std::all_of(planar.pts.begin(), planar.pts.end(),
                              [&](cd z) { return std::abs(z.imag()) <= real_tol; });
  if (!all_real) return planar;
  std::vector<double> atoms(planar.pts.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) atoms[i] = planar.pts[i].real();
  return make_empirical1d(std::move(atoms), std::move(planar.weights));
}

ReferenceMeasure ReferenceMeasure::sato_tate() {
  ReferenceMeasure r;
  r.kind_ = Kind::SatoTate;
  return r;
}
ReferenceMeasure ReferenceMeasure::arcsine2cos() {
  ReferenceMeasure r;
  r.kind_ = Kind::ArcSine2cos;
  return r;
}
ReferenceMeasure ReferenceMeasure::complex_gaussian_half_id() {
  ReferenceMeasure r;
  r.kind_ = Kind::ComplexGaussianHalfId;
  return r;
}
ReferenceMeasure ReferenceMeasure::haar_pushforward(zlattice::RelationModule R, double scale) {
  ReferenceMeasure r;
  r.kind_ = Kind::HaarPushforward;
  r.relations_ = std::move(R);
  r.scale_ = scale;
  return r;
}
ReferenceMeasure ReferenceMeasure::lebesgue_circle() {
  ReferenceMeasure r;
  r.kind_ = Kind::LebesgueCircle;
  return r;
}
ReferenceMeasure ReferenceMeasure::lebesgue_torus(std::size_t k) {
  ReferenceMeasure r;
  r.kind_ = Kind::LebesgueTorus;
  r.torus_dim_ = k;
  return r;
}

bool ReferenceMeasure::has_cdf() const {
  return kind_ == Kind::SatoTate || kind_ == Kind::ArcSine2cos;
}

AnalyticCdf ReferenceMeasure::cdf1d() const {
  switch (kind_) {
    case Kind::SatoTate: return sato_tate_reference();
    case Kind::ArcSine2cos: return arcsine2cos_reference();
    default: fail(ErrorKind::UnboundedSupport, "no analytic 1-D CDF for this reference");
  }
}

Empirical2D ReferenceMeasure::sample2d(std::size_t M, std::uint64_t seed) const {
  switch (kind_) {
    case Kind::ComplexGaussianHalfId:
      return gaussian_half_id_sampler(seed, M);
    case Kind::HaarPushforward: {
      zlattice::TorusSubgroupSampler sampler(*relations_, seed);
      auto vals = sampler.sigma_pushforward(M);
      if (scale_ != 1.0)
        for (auto& v : vals) v *= scale_;
      return make_empirical2d(std::move(vals));
    }
    case Kind::SatoTate: {
      // inverse-CDF sampling by bisection
      CounterRng rng(seed);
      std::vector<cd> pts(M);
      for (std::size_t i = 0; i < M; ++i) {
        double u = rng.unit_at(i);
        double lo = -2.0, hi = 2.0;
        for (int it = 0; it < 60; ++it) {
          double mid = 0.5 * (lo + hi);
          (sato_tate_cdf(mid) < u ? lo : hi) = mid;
        }
        pts[i] = cd(0.5 * (lo + hi), 0.0);
      }
      return make_empirical2d(std::move(pts));
    }
    case Kind::ArcSine2cos: {
      CounterRng rng(seed);
      std::vector<cd> pts(M);
      for (std::size_t i = 0; i < M; ++i)
        pts[i] = cd(2.0 * std::cos(kTau * rng.unit_at(i)), 0.0);
      return make_empirical2d(std::move(pts));
    }
    default:
      fail(ErrorKind::ValueOutOfRange, "sample2d undefined for this reference");
  }
}

std::string ReferenceMeasure::name() const {
  switch (kind_) {
    case Kind::SatoTate: return "sato_tate";
    case Kind::ArcSine2cos: return "arcsine_2cos";
    case Kind::ComplexGaussianHalfId: return "complex_gaussian_half_id";
    case Kind::HaarPushforward: return "haar_pushforward";
    case Kind::LebesgueCircle: return "lebesgue_circle";
    case Kind::LebesgueTorus: return "lebesgue_torus";
  }
  return "unknown";
}

}  // namespace equidist::measures
