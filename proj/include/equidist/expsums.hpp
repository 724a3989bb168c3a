#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "equidist/ff.hpp"

namespace equidist::expsums {

using ff::Elem;
using ff::FieldContext;
using cd = std::complex<double>;

enum class FamilyKind {
  GaussianPeriod,
  RootSet,
  HyperKloosterman,
  Mellin,
  SubgroupNormalized,
};

const char* to_string(FamilyKind k);

// A complete indexed family of exponential sums.  Additive families are
// indexed by a in F_q (length q); the Mellin family by the nontrivial
// character index j = 1..q-2 (length q-2, slot j-1).
struct SumFamily {
  FamilyKind kind;
  std::uint64_t q = 0;
  std::uint64_t param = 0;      // d for period/subgroup families, r for Kloosterman
  double normalization = 1.0;   // scalar already applied to values
  std::vector<cd> values;
};

// S_d(q,a) = sum over mu_d of e(ax/q); requires n = 1 and d | q-1.
SumFamily gaussian_period_family(const FieldContext& F, std::uint64_t d, unsigned threads = 1);

// Sum of e(ax/q) over the roots of a monic integer polynomial (all roots
// required to lie in F_q, each simple).
SumFamily rootset_family(const FieldContext& F, const std::vector<std::int64_t>& g,
                         unsigned threads = 1);

// Hyper-Kloosterman family Kl_r(a) for all a, normalization q^-(r-1)/2,
// computed as an r-fold cyclic convolution over F_q^x via an FFT of length
// q-1.  The a = 0 slot is the empty boundary sum (no unit tuples have
// product 0) and is excluded from empirical measures downstream.
SumFamily kloosterman_family(const FieldContext& F, unsigned r);

// Literal (r-1)-fold nested sum; cost guard q^(r-1) <= 1e8.
cd kloosterman_direct(const FieldContext& F, unsigned r, Elem a);

// Katz-Mellin family R(chi_j) = q^-1/2 sum_{x != 0,1} chi_j(x) psi((x+1)/(x-1))
// for the nontrivial characters j = 1..q-2, via a DFT of length q-1.
SumFamily mellin_family(const FieldContext& F);

// Gaussian periods scaled by 1/sqrt(d).
SumFamily subgroup_family_normalized(const FieldContext& F, std::uint64_t d,
                                     unsigned threads = 1);

// The orbit {(a x / q mod 1)_x : a in F_q} of the residue set Z, one point
// per a, coordinates ordered as the residues are given.
struct TorusOrbit {
  std::size_t dim = 0;
  std::uint64_t q = 0;
  std::vector<double> pts;  // q * dim, row-major
  const double* point(std::uint64_t a) const { return pts.data() + a * dim; }
};

TorusOrbit torus_orbit(const FieldContext& F, std::vector<Elem> residues);

// mu-hat_p(alpha) = (1/q) sum_a e(alpha . point_a); 0/1-valued for orbits of
// residue sets (within roundoff).
cd weyl_sum(const TorusOrbit& orbit, std::span<const long> alpha);

// Mean of the SU(2) character chi_n(theta) = sin((n+1)theta)/sin(theta) over
// a family of trace values v = 2 cos(theta) in [-2,2].  The removable
// singularities at theta = 0, pi take the limit values +-(n+1).
cd su2_weyl_diagnostic(std::span<const double> values, unsigned n);

// CSV serialization: header `index,re,im`, ascending index, 17 significant
// digits.
void write_family_csv(const SumFamily& fam, std::ostream& os);
SumFamily read_family_csv(std::istream& is);

}  // namespace equidist::expsums
