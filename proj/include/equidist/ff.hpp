#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "equidist/errors.hpp"

namespace equidist::ff {

using Elem = std::uint32_t;  // element encoded as an integer in [0, q)

bool is_prime_u64(std::uint64_t n);
std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n);

struct FieldOptions {
  std::uint64_t table_cap = std::uint64_t(1) << 24;  // max q for table construction
};

// A finite field F_q, q = p^n, with full exp/dlog tables.  Elements of an
// extension are coefficient vectors in the monomial basis of
// F_p[t]/(modulus), encoded as c_0 + c_1 p + ... + c_{n-1} p^{n-1}.
// Immutable after construction.
class FieldContext {
 public:
  static FieldContext build(std::uint64_t p, unsigned n, FieldOptions opt = {});

  std::uint64_t p() const { return p_; }
  unsigned n() const { return n_; }
  std::uint64_t q() const { return q_; }
  Elem generator() const { return generator_; }
  // Coefficients of the monic degree-n modulus, low degree first, without the
  // leading 1; empty when n == 1.
  const std::vector<std::uint32_t>& modulus_poly() const { return modulus_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_table_[mod_order(std::uint64_t(dlog_table_[a]) + dlog_table_[b])];
  }
  Elem inv(Elem a) const {
    if (a == 0) fail(ErrorKind::ValueOutOfRange, "inverse of zero");
    std::uint32_t k = dlog_table_[a];
    return exp_table_[k == 0 ? 0 : std::uint32_t(q_ - 1 - k)];
  }
  Elem pow(Elem a, std::uint64_t e) const;

  std::uint32_t dlog(Elem a) const {
    if (a == 0) fail(ErrorKind::ValueOutOfRange, "dlog of zero");
    return dlog_table_[a];
  }
  Elem exp_gen(std::uint64_t k) const { return exp_table_[mod_order(k)]; }

  // Tr_{F_q/F_p}, value in [0, p).
  std::uint64_t trace(Elem a) const;
  // Additive character psi(x) = e(Tr(x)/p).
  std::complex<double> psi(Elem a) const;
  // Multiplicative character chi_j(g^k) = e(jk/(q-1)); undefined at 0.
  std::complex<double> chi(std::uint64_t j, Elem a) const;

  // Reduction of an integer into the prime subfield.
  Elem from_int(std::int64_t v) const {
    std::int64_t r = v % std::int64_t(p_);
    if (r < 0) r += std::int64_t(p_);
    return Elem(r);
  }

 private:
  FieldContext() = default;
  std::uint64_t mod_order(std::uint64_t k) const { return k % (q_ - 1); }

  std::uint64_t p_ = 0;
  unsigned n_ = 1;
  std::uint64_t q_ = 0;
  Elem generator_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> exp_table_;           // g^k, k in [0, q-1)
  std::vector<std::uint32_t> dlog_table_; // inverse of exp_table_, dlog[0] unused
  std::vector<std::uint32_t> trace_table_;
};

// mu_d, the subgroup of F_q^x of order d (requires d | q-1).  Returned in
// ascending element encoding.
std::vector<Elem> roots_of_unity(const FieldContext& F, std::uint64_t d);

// Same subgroup ordered as zeta, zeta^2, ..., zeta^d = 1 with
// zeta = g^((q-1)/d); this is the coordinate convention shared with the
// cyclotomic relation presets.
std::vector<Elem> roots_of_unity_zeta_order(const FieldContext& F, std::uint64_t d);

// mu_d for prime d (identical to roots_of_unity; the subgroup of a cyclic
// group of a given order is unique).
std::vector<Elem> find_subgroup_prime_order(const FieldContext& F, std::uint64_t d);

struct PolyRoots {
  std::vector<Elem> roots;  // distinct field elements, ascending encoding
  bool distinct = true;     // every root simple (separability of g mod p)
  bool split = false;       // root count with multiplicity == deg g
};

// Roots of a monic integer polynomial in F_q by exhaustive scan.
// g = coefficients low-degree first, leading coefficient must be 1.
PolyRoots poly_roots_mod(const FieldContext& F, const std::vector<std::int64_t>& g,
                         bool require_split = false);

}  // namespace equidist::ff
