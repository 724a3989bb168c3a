#include <algorithm>
#include <cmath>

#include "equidist/wasserstein.hpp"

namespace equidist::wasserstein {

double w1_line(const Empirical1D& mu, const Empirical1D& nu) {
  // integral of |F_mu - F_nu| over the merged support; both CDFs are step
  // functions so the integrand is constant between consecutive atoms.
  std::size_t i = 0, j = 0;
  double Fm = 0.0, Fn = 0.0, prev = 0.0, total = 0.0;
  bool first = true;
  while (i < mu.atoms.size() || j < nu.atoms.size()) {
    double x;
    if (j >= nu.atoms.size() || (i < mu.atoms.size() && mu.atoms[i] <= nu.atoms[j]))
      x = mu.atoms[i];
    else
      x = nu.atoms[j];
    if (!first) total += std::abs(Fm - Fn) * (x - prev);
    first = false;
    while (i < mu.atoms.size() && mu.atoms[i] == x) Fm += mu.weights[i++];
    while (j < nu.atoms.size() && nu.atoms[j] == x) Fn += nu.weights[j++];
    prev = x;
  }
  return total;
}

double wp_line(const Empirical1D& mu, const Empirical1D& nu, double p) {
  if (p < 1.0) fail(ErrorKind::ValueOutOfRange, "wp_line requires p >= 1");
  // quantile formula: integral over t in (0,1) of |Qmu - Qnu|^p, with both
  // quantile functions constant between merged cumulative-weight levels
  std::size_t i = 0, j = 0;
  double cum_i = 0.0, cum_j = 0.0, t = 0.0, total = 0.0;
  while (i < mu.atoms.size() && j < nu.atoms.size()) {
    double next_i = cum_i + mu.weights[i];
    double next_j = cum_j + nu.weights[j];
    double t_next = std::min(next_i, next_j);
    double dt = t_next - t;
    if (dt > 0) total += std::pow(std::abs(mu.atoms[i] - nu.atoms[j]), p) * dt;
    t = t_next;
    if (next_i <= t_next + 1e-18) { cum_i = next_i; ++i; }
    if (next_j <= t_next + 1e-18) { cum_j = next_j; ++j; }
  }
  return std::pow(total, 1.0 / p);
}

namespace {

// Adaptive Simpson for a smooth integrand.
double simpson(double a, double fa, double fm, double b, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double fa, double fm, double fb, double whole, double tol,
                        int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = simpson(a, fa, flm, m, fm);
  double right = simpson(m, fm, frm, b, fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  if (b <= a) return 0.0;
  double m = 0.5 * (a + b);
  double fa = f(a), fm = f(m), fb = f(b);
  return adaptive_simpson(f, a, b, fa, fm, fb, simpson(a, fa, fm, b, fb), tol, 48);
}

// integral of |F(x) - c| over [a, b] for a nondecreasing F
double integral_abs_cdf_minus(const std::function<double(double)>& F, double a, double b,
                              double c, double tol) {
  if (b <= a) return 0.0;
  double Fa = F(a), Fb = F(b);
  if (Fa >= c) return integrate([&](double x) { return F(x) - c; }, a, b, tol);
  if (Fb <= c) return integrate([&](double x) { return c - F(x); }, a, b, tol);
  // single crossing: bisect F(x*) = c
  double lo = a, hi = b;
  for (int it = 0; it < 80 && hi - lo > 1e-15 * (1.0 + std::abs(hi)); ++it) {
    double mid = 0.5 * (lo + hi);
    (F(mid) < c ? lo : hi) = mid;
  }
  double xs = 0.5 * (lo + hi);
  return integrate([&](double x) { return c - F(x); }, a, xs, tol / 2.0) +
         integrate([&](double x) { return F(x) - c; }, xs, b, tol / 2.0);
}

}  // namespace

double w1_line_vs_cdf(const Empirical1D& mu, const AnalyticCdf& ref) {
  if (mu.atoms.empty()) fail(ErrorKind::ValueOutOfRange, "empty measure");
  double lo = std::min(ref.lo, mu.atoms.front());
  double hi = std::max(ref.hi, mu.atoms.back());
  // breakpoints: reference support ends and the atoms
  std::vector<double> bp;
  bp.push_back(lo);
  if (ref.lo > lo) bp.push_back(ref.lo);
  for (double a : mu.atoms)
    if (a > lo && a < hi) bp.push_back(a);
  if (ref.hi < hi) bp.push_back(ref.hi);
  bp.push_back(hi);
  std::sort(bp.begin(), bp.end());
  bp.erase(std::unique(bp.begin(), bp.end()), bp.end());

  double total = 0.0;
  std::size_t ai = 0;
  double Femp = 0.0;
  double tol = 1e-12;
  for (std::size_t s = 0; s + 1 < bp.size(); ++s) {
    double a = bp[s], b = bp[s + 1];
    while (ai < mu.atoms.size() && mu.atoms[ai] <= a) Femp += mu.weights[ai++];
    total += integral_abs_cdf_minus(ref.cdf, a, b, Femp, tol);
  }
  return total;
}

std::pair<double, double> rate_bound_constant(std::size_t z_size, unsigned field_degree,
                                              double C_Z) {
  double z = double(z_size);
  double exponent = 1.0 / double(field_degree);
  double constant = 4.0 * std::sqrt(3.0) * std::sqrt(z) * (z + 1.0) * std::pow(C_Z, exponent);
  return {constant, exponent};
}

double su2_borda_diagnostic(std::span<const cd> weyl_values, unsigned T) {
  if (weyl_values.size() < T) fail(ErrorKind::ValueOutOfRange, "need W_n for n = 1..T");
  double tail = 0.0;
  for (unsigned n = 1; n <= T; ++n) {
    double kappa = double(n) * double(n + 2);
    tail += std::norm(weyl_values[n - 1]) / kappa;
  }
  return 1.0 / double(T) + std::sqrt(tail);
}

}  // namespace equidist::wasserstein
