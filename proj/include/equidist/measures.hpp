#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "equidist/expsums.hpp"
#include "equidist/zlattice.hpp"

namespace equidist::measures {

using cd = std::complex<double>;

// Atoms sorted ascending, weights positive and summing to 1.
struct Empirical1D {
  std::vector<double> atoms;
  std::vector<double> weights;
};

// Atoms in [0,1) with the circular metric l(x,y) = min(|x-y|, 1-|x-y|).
struct EmpiricalCircle {
  std::vector<double> atoms;
  std::vector<double> weights;
};

// Points in [0,1)^k with the flat torus metric (sum_j l(x_j,y_j)^2)^(1/2).
struct EmpiricalTorus {
  std::size_t dim = 1;
  std::vector<double> pts;  // n * dim row-major
  std::vector<double> weights;
  std::size_t size() const { return weights.size(); }
  const double* point(std::size_t i) const { return pts.data() + i * dim; }
};

// Points in the complex plane, Euclidean metric.
struct Empirical2D {
  std::vector<cd> pts;
  std::vector<double> weights;
};

Empirical1D make_empirical1d(std::vector<double> atoms,
                             std::vector<double> weights = {});
Empirical2D make_empirical2d(std::vector<cd> pts, std::vector<double> weights = {});

// Sato-Tate CDF F(x) = 1/2 + x sqrt(4-x^2)/(4 pi) + arcsin(x/2)/pi on [-2,2],
// clamped outside.
double sato_tate_cdf(double x);
double sato_tate_density(double x);
// CDF of 2 cos(2 pi U), U uniform: the arcsine law on [-2,2].
double arcsine2cos_cdf(double x);
// N(0, sigma^2) CDF.
double normal_cdf(double x, double sigma);

// 1-D analytic reference restricted to (or truncated onto) [lo, hi];
// truncated_mass is the mass outside, added to reported tolerances.
struct AnalyticCdf {
  std::function<double(double)> cdf;
  double lo = 0.0, hi = 0.0;
  double truncated_mass = 0.0;
  std::string name;
};

AnalyticCdf sato_tate_reference();
AnalyticCdf arcsine2cos_reference();
AnalyticCdf normal1d_reference(double sigma);  // truncated at +-8.5 sigma

// M samples of (z_1 + ... + z_{d-1} + 1/(z_1...z_{d-1})) / sqrt(d) with the
// z_i independent uniform on the unit circle (the hypocycloid law gamma_d).
Empirical2D gamma_d_sampler(std::uint64_t d, std::uint64_t seed, std::size_t M);

// M samples of a complex N(0, Id/2): per-coordinate variance 1/2.
Empirical2D gaussian_half_id_sampler(std::uint64_t seed, std::size_t M);

// Uniform atoms {0, 1/N, ..., (N-1)/N}.
EmpiricalCircle circle_grid(std::uint64_t N);

// Empirical measure of a sum family: uniform weights over retained indices;
// collapses to Empirical1D when all values are real within real_tol.
std::variant<Empirical1D, Empirical2D> empirical_from_family(
    const expsums::SumFamily& fam, bool exclude_zero_index, double scale = 1.0,
    double real_tol = 1e-9);

Empirical2D empirical2d_from_family(const expsums::SumFamily& fam, bool exclude_zero_index,
                                    double scale = 1.0);

// Tagged reference measure used by the harness.
class ReferenceMeasure {
 public:
  enum class Kind {
    SatoTate,
    ArcSine2cos,
    ComplexGaussianHalfId,
    HaarPushforward,
    LebesgueCircle,
    LebesgueTorus,
  };

  static ReferenceMeasure sato_tate();
  static ReferenceMeasure arcsine2cos();
  static ReferenceMeasure complex_gaussian_half_id();
  // sigma-pushforward of Haar on H_Z, optionally rescaled (1/sqrt(d) for the
  // normalized subgroup families).
  static ReferenceMeasure haar_pushforward(zlattice::RelationModule R, double scale = 1.0);
  static ReferenceMeasure lebesgue_circle();
  static ReferenceMeasure lebesgue_torus(std::size_t k);

  Kind kind() const { return kind_; }
  bool has_cdf() const;
  AnalyticCdf cdf1d() const;
  Empirical2D sample2d(std::size_t M, std::uint64_t seed) const;
  std::size_t torus_dim() const { return torus_dim_; }
  std::string name() const;

 private:
  Kind kind_ = Kind::SatoTate;
  std::optional<zlattice::RelationModule> relations_;
  double scale_ = 1.0;
  std::size_t torus_dim_ = 1;
};

double weight_sum(const std::vector<double>& w);

}  // namespace equidist::measures
