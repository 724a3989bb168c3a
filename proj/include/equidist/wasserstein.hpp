#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "equidist/measures.hpp"

namespace equidist::wasserstein {

using measures::AnalyticCdf;
using measures::Empirical1D;
using measures::Empirical2D;
using measures::EmpiricalCircle;
using measures::EmpiricalTorus;
using cd = std::complex<double>;

struct TransportResult {
  double value = 0.0;
  std::string method;
  std::vector<double> u, v;  // dual potentials on source/target atoms
  double duality_gap = 0.0;
  std::size_t iterations = 0;  // pivots for the exact solver
  bool converged = true;
  std::vector<double> stage_values;  // sinkhorn: rounded value per epsilon stage
};

// --- 1-D (real line) ----------------------------------------------------

// W1 = integral |F_mu - F_nu|, exact for empirical measures.
double w1_line(const Empirical1D& mu, const Empirical1D& nu);

// W_p via the quantile formula on the merged quantile grid, exact.
double wp_line(const Empirical1D& mu, const Empirical1D& nu, double p);

// Empirical vs analytic CDF: piecewise adaptive quadrature, abs tol 1e-10;
// the reference truncation mass (if any) is added to the result's error
// budget but not the value.
double w1_line_vs_cdf(const Empirical1D& mu, const AnalyticCdf& ref);

// --- circle ---------------------------------------------------------------

// W1 = min_c integral_0^1 |F_mu - F_nu - c|, the shift solved at a median.
// Exact for piecewise-constant / piecewise-linear CDFs.
double w1_circle(const EmpiricalCircle& mu, const EmpiricalCircle& nu);
double w1_circle_vs_lebesgue(const EmpiricalCircle& mu);

// --- exact discrete (network simplex) --------------------------------------

// Min-cost transportation on an explicit cost matrix (row-major n x m).
// Guard: n*m <= size_guard.  Returns dual potentials and the duality gap.
TransportResult w1_exact_discrete(const std::vector<double>& mu,
                                  const std::vector<double>& nu,
                                  const std::vector<double>& cost,
                                  std::size_t size_guard = 4'000'000);

TransportResult w1_exact_planar(const Empirical2D& mu, const Empirical2D& nu,
                                std::size_t size_guard = 4'000'000);

// --- entropic (Sinkhorn) ----------------------------------------------------

struct SinkhornOptions {
  double eps_start_factor = 0.5;    // times mean cost
  double eps_end_factor = 0.005;    // times mean cost
  unsigned stages = 8;              // geometric schedule length
  unsigned max_inner = 500;         // iterations per stage
  double marginal_tol = 1e-7;       // TV tolerance on the free marginal
  double gap_target = 0.0;          // >0: extend schedule until gap <= target*value
  unsigned max_extra_stages = 8;
};

// Log-domain annealed Sinkhorn.  value is the cost of the rounded feasible
// plan; duality_gap compares it against the c-transform LP dual, so the
// exact W1 lies within [value - gap, value].
TransportResult w1_sinkhorn(const Empirical2D& mu, const Empirical2D& nu,
                            const SinkhornOptions& opt = {});

// --- Fourier-side bound on the torus ---------------------------------------

struct FourierBoundReport {
  unsigned T = 0;
  double head_term = 0.0;  // 4 sqrt(3) sqrt(k) / T
  double tail_term = 0.0;  // (sum_{1<=|h|_inf<=T} |mu^(h)-nu^(h)|^2 / |h|^2)^(1/2)
  double bound = 0.0;
  unsigned optimal_T = 0;  // filled when a scan was requested
  double optimal_bound = 0.0;
};

// Exact evaluation of the truncated Fourier bound for W1 on (R/Z)^k.
// nu == nullptr means Lebesgue (all nontrivial coefficients zero).
// Guard: k (2T+1)^k <= 1e7.
FourierBoundReport fourier_bound_torus(const EmpiricalTorus& mu, const EmpiricalTorus* nu,
                                       unsigned T, bool scan = false,
                                       unsigned threads = 1);

// (4 sqrt(3) sqrt(|Z|) (|Z|+1) C_Z^(1/deg), 1/deg): the torus rate constant
// and exponent for a residue set of size z over a degree-deg field.
std::pair<double, double> rate_bound_constant(std::size_t z_size, unsigned field_degree,
                                              double C_Z);

// 1/T + (sum_{n=1..T} |W_n|^2 / (n(n+2)))^(1/2); diagnostic only, the
// underlying inequality's constant is not certified.
double su2_borda_diagnostic(std::span<const cd> weyl_values, unsigned T);

}  // namespace equidist::wasserstein
