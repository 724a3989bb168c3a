#include "equidist/expsums.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <string>

#include "equidist/fft.hpp"
#include "equidist/parallel.hpp"

namespace equidist::expsums {

namespace {
constexpr double kTau = 2.0 * std::numbers::pi;

// e(j/q) for j in [0, q): one table shared by all additive families.
std::vector<cd> unit_roots(std::uint64_t q) {
  std::vector<cd> w(q);
  for (std::uint64_t j = 0; j < q; ++j)
    w[j] = std::polar(1.0, kTau * double(j) / double(q));
  return w;
}

SumFamily additive_family_over_roots(const FieldContext& F, std::vector<Elem> roots,
                                     FamilyKind kind, std::uint64_t param, double norm,
                                     unsigned threads) {
  if (F.n() != 1)
    fail(ErrorKind::ValueOutOfRange, "additive sum families require a prime field");
  const std::uint64_t q = F.q();
  auto w = unit_roots(q);
  SumFamily fam{kind, q, param, norm, std::vector<cd>(q)};
  parallel_for(q, threads, [&](std::size_t a) {
    cd s = 0.0;
    for (Elem x : roots) s += w[(std::uint64_t)a * x % q];
    fam.values[a] = s * norm;
  });
  return fam;
}
}  // namespace

const char* to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::GaussianPeriod: return "gaussian_period";
    case FamilyKind::RootSet: return "rootset";
    case FamilyKind::HyperKloosterman: return "kloosterman";
    case FamilyKind::Mellin: return "mellin";
    case FamilyKind::SubgroupNormalized: return "subgroup_normalized";
  }
  return "unknown";
}

SumFamily gaussian_period_family(const FieldContext& F, std::uint64_t d, unsigned threads) {
  auto roots = ff::roots_of_unity(F, d);
  return additive_family_over_roots(F, std::move(roots), FamilyKind::GaussianPeriod, d, 1.0,
                                    threads);
}

SumFamily rootset_family(const FieldContext& F, const std::vector<std::int64_t>& g,
                         unsigned threads) {
  auto pr = ff::poly_roots_mod(F, g, /*require_split=*/true);
  if (!pr.distinct)
    fail(ErrorKind::NotTotallySplit, "repeated roots: distinct residues required");
  return additive_family_over_roots(F, std::move(pr.roots), FamilyKind::RootSet, 0, 1.0,
                                    threads);
}

SumFamily subgroup_family_normalized(const FieldContext& F, std::uint64_t d,
                                     unsigned threads) {
  auto roots = ff::roots_of_unity(F, d);
  return additive_family_over_roots(F, std::move(roots), FamilyKind::SubgroupNormalized, d,
                                    1.0 / std::sqrt(double(d)), threads);
}

SumFamily kloosterman_family(const FieldContext& F, unsigned r) {
  if (r < 2) fail(ErrorKind::ValueOutOfRange, "Kloosterman rank r must be >= 2");
  const std::uint64_t q = F.q();
  // f(k) = psi(g^k); the r-fold cyclic convolution of f evaluated at m is
  // the unnormalized Kl_r at a = g^m.
  std::vector<cd> f(q - 1);
  for (std::uint64_t k = 0; k < q - 1; ++k) f[k] = F.psi(F.exp_gen(k));
  auto conv = fft::cyclic_convolution_power(f, r);
  double norm = std::pow(double(q), -double(r - 1) / 2.0);
  SumFamily fam{FamilyKind::HyperKloosterman, q, r, norm, std::vector<cd>(q, cd(0.0))};
  for (std::uint64_t m = 0; m < q - 1; ++m) fam.values[F.exp_gen(m)] = conv[m] * norm;
  return fam;
}

cd kloosterman_direct(const FieldContext& F, unsigned r, Elem a) {
  if (r < 2) fail(ErrorKind::ValueOutOfRange, "Kloosterman rank r must be >= 2");
  const std::uint64_t q = F.q();
  double tuples = std::pow(double(q), double(r - 1));
  if (tuples > 1e8) fail(ErrorKind::CostGuard, "q^(r-1) exceeds 1e8");
  if (a == 0) return 0.0;  // no tuples of units have product 0
  double norm = std::pow(double(q), -double(r - 1) / 2.0);
  // iterate over (x_1, ..., x_{r-1}) in (F_q^x)^{r-1}, x_r = a / prod
  std::vector<Elem> x(r - 1, 1);
  cd total = 0.0;
  while (true) {
    Elem prod = 1, sum_arg = 0;
    for (Elem xi : x) {
      prod = F.mul(prod, xi);
      sum_arg = F.add(sum_arg, xi);
    }
    Elem xr = F.mul(a, F.inv(prod));
    total += F.psi(F.add(sum_arg, xr));
    // odometer over F_q^x: elements 1..q-1
    std::size_t i = 0;
    for (; i < x.size(); ++i) {
      if (++x[i] < q) break;
      x[i] = 1;
    }
    if (i == x.size()) break;
  }
  return total * norm;
}

SumFamily mellin_family(const FieldContext& F) {
  if (F.n() != 1) fail(ErrorKind::ValueOutOfRange, "Mellin family requires a prime field");
  if (F.p() == 2) fail(ErrorKind::EvenCharacteristic, "Mellin family requires odd p");
  const std::uint64_t q = F.q();
  // h(k) = psi((x+1)/(x-1)) at x = g^k, with the x = 1 pole (k = 0) omitted.
  std::vector<cd> h(q - 1, cd(0.0));
  for (std::uint64_t k = 1; k < q - 1; ++k) {
    Elem x = F.exp_gen(k);
    Elem num = F.add(x, 1);
    Elem den = F.sub(x, 1);
    h[k] = F.psi(F.mul(num, F.inv(den)));
  }
  // R(chi_j) = q^-1/2 sum_k e(jk/(q-1)) h(k): a forward DFT with kernel e(+).
  auto R = fft::dft(h, +1);
  double norm = 1.0 / std::sqrt(double(q));
  SumFamily fam{FamilyKind::Mellin, q, 0, norm, std::vector<cd>(q - 2)};
  for (std::uint64_t j = 1; j <= q - 2; ++j) fam.values[j - 1] = R[j] * norm;
  return fam;
}

TorusOrbit torus_orbit(const FieldContext& F, std::vector<Elem> residues) {
  const std::uint64_t q = F.q();
  TorusOrbit orb;
  orb.dim = residues.size();
  orb.q = q;
  orb.pts.resize(q * orb.dim);
  for (std::uint64_t a = 0; a < q; ++a)
    for (std::size_t j = 0; j < orb.dim; ++j)
      orb.pts[a * orb.dim + j] = double((std::uint64_t)a * residues[j] % q) / double(q);
  return orb;
}

cd weyl_sum(const TorusOrbit& orbit, std::span<const long> alpha) {
  if (alpha.size() != orbit.dim)
    fail(ErrorKind::ValueOutOfRange, "alpha dimension mismatch");
  std::vector<cd> terms(orbit.q);
  for (std::uint64_t a = 0; a < orbit.q; ++a) {
    double phase = 0.0;
    const double* pt = orbit.point(a);
    for (std::size_t j = 0; j < orbit.dim; ++j) phase += double(alpha[j]) * pt[j];
    terms[a] = std::polar(1.0, kTau * phase);
  }
  return pairwise_sum(terms) / double(orbit.q);
}

cd su2_weyl_diagnostic(std::span<const double> values, unsigned n) {
  std::vector<cd> terms(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    double v = values[i];
    if (std::abs(v) > 2.0 + 1e-9)
      fail(ErrorKind::ValueOutOfRange, "trace value outside [-2,2]");
    double theta = std::acos(std::clamp(v / 2.0, -1.0, 1.0));
    double s = std::sin(theta);
    double chi;
    if (std::abs(s) < 1e-12) {
      // theta = 0: chi_n -> n+1; theta = pi: chi_n -> (n+1)(-1)^n
      chi = (theta < std::numbers::pi / 2) ? double(n + 1)
                                           : double(n + 1) * ((n % 2 == 0) ? 1.0 : -1.0);
    } else {
      chi = std::sin(double(n + 1) * theta) / s;
    }
    terms[i] = chi;
  }
  return pairwise_sum(terms) / double(values.size());
}

void write_family_csv(const SumFamily& fam, std::ostream& os) {
  os << "index,re,im\n";
  char buf[128];
  for (std::size_t i = 0; i < fam.values.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", i, fam.values[i].real(),
                  fam.values[i].imag());
    os << buf;
  }
}

SumFamily read_family_csv(std::istream& is) {
  SumFamily fam{FamilyKind::RootSet, 0, 0, 1.0, {}};
  std::string line;
  std::getline(is, line);  // header
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::size_t c1 = line.find(',');
    std::size_t c2 = line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      fail(ErrorKind::ConfigError, "bad family CSV line: " + line);
    double re = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
    double im = std::stod(line.substr(c2 + 1));
    fam.values.emplace_back(re, im);
  }
  fam.q = fam.values.size();
  return fam;
}

}  // namespace equidist::expsums
