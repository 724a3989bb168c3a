#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "equidist/errors.hpp"
#include "equidist/rng.hpp"

namespace equidist::zlattice {

using Int = boost::multiprecision::cpp_int;

struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  Int& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
  static IntMatrix identity(std::size_t n);
  bool operator==(const IntMatrix&) const = default;
};

IntMatrix matmul(const IntMatrix& x, const IntMatrix& y);
Int determinant(const IntMatrix& m);  // square only; Bareiss, exact

// D = U A V with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
struct SNFDecomposition {
  IntMatrix U, D, V;
  std::vector<Int> diag() const;
  std::size_t rank() const;  // number of nonzero diagonal entries
};

// Pivot rule: smallest absolute nonzero entry, ties by row then column.
SNFDecomposition smith_normal_form(IntMatrix A);

enum class Provenance { PresetPrimeCyclotomic, PresetPrimePowerCyclotomic, UserSupplied };

const char* to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

// Generators of the relation module R_Z: each row alpha satisfies
// sum_x alpha(x) x = 0 over the ordered root set.
struct RelationModule {
  std::size_t z_size = 0;
  IntMatrix generators;  // generators.cols == z_size (rows may be 0)
  Provenance provenance = Provenance::UserSupplied;
};

// d prime: R is generated by the all-ones vector.
RelationModule relation_preset_prime(std::uint64_t d);

// d = r^b: r^(b-1) generators; generator m has ones at positions
// m + l*r^(b-1), l = 0..r-1, in the zeta-power ordering zeta^1..zeta^d.
RelationModule relation_preset_prime_power(std::uint64_t r, unsigned b);

std::string relation_to_json(const RelationModule& R);
RelationModule relation_from_json(const std::string& text);

// Samples Haar measure on H_Z = {t in (R/Z)^Z : A t = 0 mod 1} through the
// SNF parameterization t = V s.  Sample i consumes counter slots
// [i*dim, (i+1)*dim), so any partition of the sample range reproduces the
// sequential stream.
class TorusSubgroupSampler {
 public:
  TorusSubgroupSampler(const RelationModule& R, std::uint64_t seed);

  std::size_t dim() const { return dim_; }
  std::size_t free_rank() const { return dim_ - torsion_.size(); }
  const std::vector<std::uint64_t>& torsion_divisors() const { return torsion_; }
  std::uint64_t seed() const { return seed_; }

  void point(std::uint64_t index, std::span<double> out) const;
  std::vector<double> sample_points(std::uint64_t count, std::uint64_t start = 0) const;

  // sigma(f) = sum_x f(x) applied to each sample: count complex values.
  std::vector<std::complex<double>> sigma_pushforward(std::uint64_t count,
                                                      std::uint64_t start = 0) const;

  // Whether the character eta_alpha is trivial on H_Z (exact integer test).
  bool is_trivial_character(std::span<const long> alpha) const;

 private:
  std::size_t dim_;
  std::vector<std::uint64_t> torsion_;  // the nonzero divisors d_1..d_r
  std::vector<double> V_;               // dim x dim, row-major
  IntMatrix Vexact_;
  std::uint64_t seed_;
  CounterRng rng_;
};

}  // namespace equidist::zlattice
