#include "equidist/zlattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "json.hpp"

namespace equidist::zlattice {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix matmul(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) fail(ErrorKind::ValueOutOfRange, "matmul shape mismatch");
  IntMatrix out(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const Int& v = x.at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) out.at(i, j) += v * y.at(k, j);
    }
  return out;
}

// Bareiss fraction-free elimination; exact over cpp_int.
Int determinant(const IntMatrix& m) {
  if (m.rows != m.cols) fail(ErrorKind::ValueOutOfRange, "determinant of non-square");
  std::size_t n = m.rows;
  if (n == 0) return 1;
  IntMatrix w = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && w.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

std::vector<Int> SNFDecomposition::diag() const {
  std::size_t k = std::min(D.rows, D.cols);
  std::vector<Int> d(k);
  for (std::size_t i = 0; i < k; ++i) d[i] = D.at(i, i);
  return d;
}

std::size_t SNFDecomposition::rank() const {
  std::size_t r = 0;
  for (const Int& d : diag())
    if (d != 0) ++r;
  return r;
}

SNFDecomposition smith_normal_form(IntMatrix A) {
  const std::size_t R = A.rows, C = A.cols;
  SNFDecomposition out;
  out.U = IntMatrix::identity(R);
  out.V = IntMatrix::identity(C);
  IntMatrix& M = A;
  IntMatrix& U = out.U;
  IntMatrix& V = out.V;

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < C; ++j) std::swap(M.at(a, j), M.at(b, j));
    for (std::size_t j = 0; j < R; ++j) std::swap(U.at(a, j), U.at(b, j));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < R; ++i) std::swap(M.at(i, a), M.at(i, b));
    for (std::size_t i = 0; i < C; ++i) std::swap(V.at(i, a), V.at(i, b));
  };
  auto addmul_row = [&](std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t j = 0; j < C; ++j) M.at(dst, j) += c * M.at(src, j);
    for (std::size_t j = 0; j < R; ++j) U.at(dst, j) += c * U.at(src, j);
  };
  auto addmul_col = [&](std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t i = 0; i < R; ++i) M.at(i, dst) += c * M.at(i, src);
    for (std::size_t i = 0; i < C; ++i) V.at(i, dst) += c * V.at(i, src);
  };
  auto negate_row = [&](std::size_t r) {
    for (std::size_t j = 0; j < C; ++j) M.at(r, j) = -M.at(r, j);
    for (std::size_t j = 0; j < R; ++j) U.at(r, j) = -U.at(r, j);
  };

  std::size_t kmax = std::min(R, C);
  for (std::size_t k = 0; k < kmax; ++k) {
    for (;;) {
      // pivot: smallest |entry| != 0 in the trailing block, row-then-col ties
      std::size_t pi = k, pj = k;
      Int best = 0;
      for (std::size_t i = k; i < R; ++i)
        for (std::size_t j = k; j < C; ++j) {
          const Int& v = M.at(i, j);
          if (v == 0) continue;
          Int av = abs(v);
          if (best == 0 || av < best) {
            best = av;
            pi = i;
            pj = j;
          }
        }
      if (best == 0) { k = kmax; break; }  // trailing block is zero
      swap_rows(k, pi);
      swap_cols(k, pj);

      bool clean = true;
      for (std::size_t i = k + 1; i < R; ++i) {
        if (M.at(i, k) == 0) continue;
        Int qv = M.at(i, k) / M.at(k, k);  // truncated division
        if (qv != 0) addmul_row(i, k, -qv);
        if (M.at(i, k) != 0) clean = false;  // remainder: pivot will shrink
      }
      for (std::size_t j = k + 1; j < C; ++j) {
        if (M.at(k, j) == 0) continue;
        Int qv = M.at(k, j) / M.at(k, k);
        if (qv != 0) addmul_col(j, k, -qv);
        if (M.at(k, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: pivot must divide the trailing block
      bool divides = true;
      for (std::size_t i = k + 1; i < R && divides; ++i)
        for (std::size_t j = k + 1; j < C; ++j)
          if (M.at(i, j) % M.at(k, k) != 0) {
            addmul_row(k, i, 1);  // fold the offending row in and redo
            divides = false;
            break;
          }
      if (!divides) continue;
      if (M.at(k, k) < 0) negate_row(k);
      break;
    }
    if (k == kmax) break;
  }
  out.D = std::move(M);
  return out;
}

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::PresetPrimeCyclotomic: return "preset_prime_cyclotomic";
    case Provenance::PresetPrimePowerCyclotomic: return "preset_prime_power_cyclotomic";
    case Provenance::UserSupplied: return "user_supplied";
  }
  return "user_supplied";
}

Provenance provenance_from_string(const std::string& s) {
  if (s == "preset_prime_cyclotomic") return Provenance::PresetPrimeCyclotomic;
  if (s == "preset_prime_power_cyclotomic") return Provenance::PresetPrimePowerCyclotomic;
  if (s == "user_supplied") return Provenance::UserSupplied;
  fail(ErrorKind::ConfigError, "unknown provenance: " + s);
}

RelationModule relation_preset_prime(std::uint64_t d) {
  if (!ff::is_prime_u64(d)) fail(ErrorKind::NotPrime, "preset requires prime d");
  RelationModule R;
  R.z_size = d;
  R.generators = IntMatrix(1, d);
  for (std::size_t j = 0; j < d; ++j) R.generators.at(0, j) = 1;
  R.provenance = Provenance::PresetPrimeCyclotomic;
  return R;
}

RelationModule relation_preset_prime_power(std::uint64_t r, unsigned b) {
  if (!ff::is_prime_u64(r)) fail(ErrorKind::NotPrime, "preset requires prime r");
  if (b < 1) fail(ErrorKind::ValueOutOfRange, "exponent b must be >= 1");
  std::uint64_t d = 1;
  for (unsigned i = 0; i < b; ++i) d *= r;
  std::uint64_t nrows = d / r;  // r^(b-1)
  RelationModule R;
  R.z_size = d;
  R.generators = IntMatrix(nrows, d);
  // generator m (1-based): ones at positions m + l*r^(b-1), l = 0..r-1, in
  // the ordering zeta^1, ..., zeta^d (position p <-> column p-1)
  for (std::uint64_t m = 1; m <= nrows; ++m)
    for (std::uint64_t l = 0; l < r; ++l) R.generators.at(m - 1, m + l * nrows - 1) = 1;
  R.provenance = Provenance::PresetPrimePowerCyclotomic;
  return R;
}

std::string relation_to_json(const RelationModule& R) {
  nlohmann::json j;
  j["z_size"] = R.z_size;
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < R.generators.rows; ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t c = 0; c < R.generators.cols; ++c)
      row.push_back((std::int64_t)R.generators.at(i, c));
    rows.push_back(row);
  }
  j["generators"] = rows;
  j["provenance"] = to_string(R.provenance);
  return j.dump(2) + "\n";
}

RelationModule relation_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  RelationModule R;
  R.z_size = j.at("z_size").get<std::size_t>();
  auto rows = j.at("generators");
  R.generators = IntMatrix(rows.size(), R.z_size);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != R.z_size)
      fail(ErrorKind::ConfigError, "generator row length != z_size");
    for (std::size_t c = 0; c < R.z_size; ++c)
      R.generators.at(i, c) = rows[i][c].get<std::int64_t>();
  }
  R.provenance = provenance_from_string(j.value("provenance", "user_supplied"));
  return R;
}

TorusSubgroupSampler::TorusSubgroupSampler(const RelationModule& R, std::uint64_t seed)
    : dim_(R.z_size), seed_(seed), rng_(seed) {
  if (dim_ == 0) fail(ErrorKind::ValueOutOfRange, "z_size must be >= 1");
  IntMatrix A = R.generators;
  if (A.rows == 0) A = IntMatrix(0, dim_);
  auto snf = smith_normal_form(A);
  Vexact_ = snf.V;
  for (const Int& d : snf.diag())
    if (d != 0) torsion_.push_back(d.convert_to<std::uint64_t>());
  V_.resize(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      const Int& v = Vexact_.at(i, j);
      if (abs(v) > Int(std::int64_t(1) << 52))
        fail(ErrorKind::Overflow, "SNF basis entry exceeds double precision");
      V_[i * dim_ + j] = v.convert_to<double>();
    }
}

void TorusSubgroupSampler::point(std::uint64_t index, std::span<double> out) const {
  if (out.size() != dim_) fail(ErrorKind::ValueOutOfRange, "output span size mismatch");
  // s_i on the d_i-torsion grid for i < rank, uniform in [0,1) beyond
  std::vector<double> s(dim_);
  const std::size_t rank = torsion_.size();
  for (std::size_t j = 0; j < dim_; ++j) {
    double u = rng_.unit_at(index * dim_ + j);
    if (j < rank) {
      std::uint64_t dj = torsion_[j];
      s[j] = double(std::uint64_t(u * double(dj))) / double(dj);
    } else {
      s[j] = u;
    }
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    double t = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) t += V_[i * dim_ + j] * s[j];
    t -= std::floor(t);
    if (t >= 1.0) t = 0.0;  // guard against floor rounding at the seam
    out[i] = t;
  }
}

std::vector<double> TorusSubgroupSampler::sample_points(std::uint64_t count,
                                                        std::uint64_t start) const {
  std::vector<double> pts(count * dim_);
  for (std::uint64_t i = 0; i < count; ++i)
    point(start + i, std::span<double>(pts.data() + i * dim_, dim_));
  return pts;
}

std::vector<std::complex<double>> TorusSubgroupSampler::sigma_pushforward(
    std::uint64_t count, std::uint64_t start) const {
  constexpr double kTau = 2.0 * std::numbers::pi;
  std::vector<std::complex<double>> out(count);
  std::vector<double> t(dim_);
  for (std::uint64_t i = 0; i < count; ++i) {
    point(start + i, t);
    std::complex<double> s = 0.0;
    for (double tj : t) s += std::polar(1.0, kTau * tj);
    out[i] = s;
  }
  return out;
}

bool TorusSubgroupSampler::is_trivial_character(std::span<const long> alpha) const {
  if (alpha.size() != dim_) fail(ErrorKind::ValueOutOfRange, "alpha dimension mismatch");
  // eta_alpha(V s) = e((V^T alpha) . s); trivial iff each torsion coordinate
  // is killed mod d_i and each free coordinate vanishes.
  const std::size_t rank = torsion_.size();
  for (std::size_t j = 0; j < dim_; ++j) {
    Int w = 0;
    for (std::size_t i = 0; i < dim_; ++i) w += Vexact_.at(i, j) * Int(alpha[i]);
    if (j < rank) {
      if (w % Int(torsion_[j]) != 0) return false;
    } else {
      if (w != 0) return false;
    }
  }
  return true;
}

}  // namespace equidist::zlattice
