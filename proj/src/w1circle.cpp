#include <algorithm>
#include <cmath>

#include "equidist/wasserstein.hpp"

namespace equidist::wasserstein {

namespace {

// G = F_mu - F_nu on [0,1) as a list of segments over which G is affine;
// W1 = min_c integral |G - c| with the minimum attained at a Lebesgue median
// of G.  Exact for step/linear CDFs, which covers empirical measures and the
// Lebesgue reference.
struct Segment {
  double len;     // in x
  double g0, g1;  // G at the left/right end (affine in between)
};

double circle_w1_from_segments(const std::vector<Segment>& segs) {
  // phi(c) = integral |G - c| is convex in c; its one-sided derivative
  // phi'(c) = measure{G < c} - measure{G > c} is nondecreasing, so the
  // optimal shift (a Lebesgue median of G) comes out of a bisection.
  auto dphi = [&](double c) {
    double d = 0.0;
    for (const auto& s : segs) {
      double lo = std::min(s.g0, s.g1), hi = std::max(s.g0, s.g1);
      if (hi == lo) {
        if (c > hi)
          d += s.len;
        else if (c < lo)
          d -= s.len;
      } else if (c <= lo) {
        d -= s.len;
      } else if (c >= hi) {
        d += s.len;
      } else {
        d += s.len * ((c - lo) - (hi - c)) / (hi - lo);
      }
    }
    return d;
  };

  double lo = segs[0].g0, hi = segs[0].g0;
  for (const auto& s : segs) {
    lo = std::min({lo, s.g0, s.g1});
    hi = std::max({hi, s.g0, s.g1});
  }
  if (dphi(lo) > 0.0) {
    hi = lo;
  } else if (dphi(hi) < 0.0) {
    lo = hi;
  } else {
    for (int it = 0; it < 120 && hi - lo > 0.0; ++it) {
      double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      (dphi(mid) < 0.0 ? lo : hi) = mid;
    }
  }
  double median = 0.5 * (lo + hi);

  double total = 0.0;
  for (const auto& s : segs) {
    double a = s.g0 - median, b = s.g1 - median;
    if (s.len == 0.0) continue;
    if (a * b >= 0.0) {
      total += 0.5 * (std::abs(a) + std::abs(b)) * s.len;
    } else {
      // affine part crossing zero: two triangles
      double t = std::abs(a) / (std::abs(a) + std::abs(b));
      total += 0.5 * (std::abs(a) * t + std::abs(b) * (1.0 - t)) * s.len;
    }
  }
  return total;
}

std::vector<Segment> segments_emp_vs_emp(const EmpiricalCircle& mu,
                                         const EmpiricalCircle& nu) {
  std::vector<double> cuts = {0.0, 1.0};
  cuts.insert(cuts.end(), mu.atoms.begin(), mu.atoms.end());
  cuts.insert(cuts.end(), nu.atoms.begin(), nu.atoms.end());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Segment> segs;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    double x = cuts[i];
    double Fm = 0.0, Fn = 0.0;
    for (std::size_t k = 0; k < mu.atoms.size(); ++k)
      if (mu.atoms[k] <= x) Fm += mu.weights[k];
    for (std::size_t k = 0; k < nu.atoms.size(); ++k)
      if (nu.atoms[k] <= x) Fn += nu.weights[k];
    double g = Fm - Fn;
    segs.push_back({cuts[i + 1] - cuts[i], g, g});
  }
  return segs;
}

std::vector<Segment> segments_emp_vs_lebesgue(const EmpiricalCircle& mu) {
  std::vector<double> cuts = {0.0, 1.0};
  cuts.insert(cuts.end(), mu.atoms.begin(), mu.atoms.end());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Segment> segs;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    double x = cuts[i];
    double Fm = 0.0;
    for (std::size_t k = 0; k < mu.atoms.size(); ++k)
      if (mu.atoms[k] <= x) Fm += mu.weights[k];
    // G = F_mu(x) - x: affine with slope -1 on the open segment
    segs.push_back({cuts[i + 1] - cuts[i], Fm - cuts[i], Fm - cuts[i + 1]});
  }
  return segs;
}

void check_circle_atoms(const EmpiricalCircle& m) {
  for (double a : m.atoms)
    if (a < 0.0 || a >= 1.0) fail(ErrorKind::ValueOutOfRange, "circle atom outside [0,1)");
}

}  // namespace

double w1_circle(const EmpiricalCircle& mu, const EmpiricalCircle& nu) {
  check_circle_atoms(mu);
  check_circle_atoms(nu);
  return circle_w1_from_segments(segments_emp_vs_emp(mu, nu));
}

double w1_circle_vs_lebesgue(const EmpiricalCircle& mu) {
  check_circle_atoms(mu);
  return circle_w1_from_segments(segments_emp_vs_lebesgue(mu));
}

}  // namespace equidist::wasserstein
