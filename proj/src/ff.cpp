#include "equidist/ff.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace equidist::ff {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return std::uint64_t((unsigned __int128)a * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % sp == 0) return n == sp;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  // Deterministic Miller-Rabin witness set for n < 3.3e24 (covers 64 bits).
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> f;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      unsigned e = 0;
      while (n % d == 0) { n /= d; ++e; }
      f.emplace_back(d, e);
    }
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

namespace {

// Dense polynomial arithmetic over F_p used only during construction.
using Poly = std::vector<std::uint64_t>;  // coefficients, low degree first

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, std::uint64_t p) {
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  // reduce by monic mod of degree n
  std::size_t n = mod.size() - 1;
  for (std::size_t i = prod.size(); i-- > n;) {
    std::uint64_t c = prod[i];
    if (!c) continue;
    prod[i] = 0;
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t sub = c * mod[j] % p;
      std::size_t k = i - n + j;
      prod[k] = (prod[k] + p - sub % p) % p;
    }
  }
  prod.resize(n);
  return prod;
}

Poly poly_powmod(Poly a, std::uint64_t e, const Poly& mod, std::uint64_t p) {
  Poly r(mod.size() - 1, 0);
  r[0] = 1;
  while (e) {
    if (e & 1) r = poly_mulmod(r, a, mod, p);
    a = poly_mulmod(a, a, mod, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  auto deg = [](const Poly& f) {
    std::size_t d = f.size();
    while (d > 0 && f[d - 1] == 0) --d;
    return d;  // number of coefficients; 0 for the zero polynomial
  };
  while (deg(b) > 0) {
    std::size_t db = deg(b), da = deg(a);
    if (da < db) { std::swap(a, b); continue; }
    // a -= lead(a)/lead(b) * x^(da-db) * b
    std::uint64_t lb = b[db - 1];
    std::uint64_t linv = powmod(lb, p - 2, p);
    std::uint64_t c = a[da - 1] * linv % p;
    for (std::size_t j = 0; j < db; ++j) {
      std::uint64_t sub = c * b[j] % p;
      a[da - db + j] = (a[da - db + j] + p - sub) % p;
    }
    if (deg(a) < deg(b)) std::swap(a, b);
  }
  a.resize(std::max<std::size_t>(deg(a), 1));
  return a;
}

// Irreducibility over F_p via the Frobenius/gcd criterion:
// x^(p^n) == x mod f, and gcd(x^(p^(n/l)) - x, f) trivial for prime l | n.
bool poly_irreducible(const Poly& f, std::uint64_t p) {
  std::size_t n = f.size() - 1;
  Poly x(n, 0);
  if (n == 1) return true;
  x[1 % n] = 1;
  Poly fr = x;
  // fr_k = x^(p^k) mod f
  std::vector<Poly> frob(n + 1);
  frob[0] = x;
  for (std::size_t k = 1; k <= n; ++k) frob[k] = poly_powmod(frob[k - 1], p, f, p);
  Poly diff = frob[n];
  diff[1] = (diff[1] + p - 1) % p;
  for (auto c : diff)
    if (c) return false;
  for (auto [l, e] : factorize_u64(n)) {
    (void)e;
    Poly d = frob[n / l];
    d[1] = (d[1] + p - 1) % p;
    Poly g = poly_gcd(f, d, p);
    std::size_t dg = g.size();
    while (dg > 0 && g[dg - 1] == 0) --dg;
    if (dg > 1) return false;
  }
  return true;
}

}  // namespace

FieldContext FieldContext::build(std::uint64_t p, unsigned n, FieldOptions opt) {
  if (!is_prime_u64(p)) fail(ErrorKind::NotPrime, "p = " + std::to_string(p));
  if (n < 1) fail(ErrorKind::ValueOutOfRange, "extension degree must be >= 1");

  // q = p^n with overflow guard
  unsigned __int128 q128 = 1;
  for (unsigned i = 0; i < n; ++i) q128 *= p;
  if (q128 > opt.table_cap)
    fail(ErrorKind::FieldTooLarge,
         "q = p^n exceeds table cap " + std::to_string(opt.table_cap));
  std::uint64_t q = std::uint64_t(q128);

  FieldContext F;
  F.p_ = p;
  F.n_ = n;
  F.q_ = q;

  Poly modulus;  // monic, degree n: coefficients low-first incl. leading 1
  if (n > 1) {
    // first irreducible in the element encoding order of the low part
    bool found = false;
    for (std::uint64_t v = 0; v < q; ++v) {
      Poly f(n + 1, 0);
      std::uint64_t t = v;
      for (unsigned i = 0; i < n; ++i) { f[i] = t % p; t /= p; }
      f[n] = 1;
      if (poly_irreducible(f, p)) { modulus = f; found = true; break; }
    }
    if (!found) fail(ErrorKind::NoIrreducibleFound, "degree " + std::to_string(n));
    F.modulus_.assign(modulus.begin(), modulus.end() - 1);
  }

  auto encode = [&](const Poly& e) {
    std::uint64_t v = 0;
    for (std::size_t i = e.size(); i-- > 0;) v = v * p + e[i];
    return Elem(v);
  };
  auto decode = [&](std::uint64_t v) {
    Poly e(n, 0);
    for (unsigned i = 0; i < n; ++i) { e[i] = v % p; v /= p; }
    return e;
  };
  auto raw_mul = [&](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
    if (n == 1) return mulmod(a, b, p);
    return encode(poly_mulmod(decode(a), decode(b), modulus, p));
  };
  auto raw_pow = [&](std::uint64_t a, std::uint64_t e) -> std::uint64_t {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = raw_mul(r, a);
      a = raw_mul(a, a);
      e >>= 1;
    }
    return r;
  };

  // Smallest generator in element encoding order.  Order check uses the
  // prime factorization of q-1 (trial division).
  auto qm1_factors = factorize_u64(q - 1);
  Elem gen = 0;
  for (std::uint64_t v = 1; v < q; ++v) {
    bool ok = true;
    for (auto [l, e] : qm1_factors) {
      (void)e;
      if (raw_pow(v, (q - 1) / l) == 1) { ok = false; break; }
    }
    if (ok) { gen = Elem(v); break; }
  }
  if (gen == 0) fail(ErrorKind::NoIrreducibleFound, "no generator found");
  F.generator_ = gen;

  F.exp_table_.resize(q - 1);
  F.dlog_table_.assign(q, 0);
  std::uint64_t cur = 1;
  for (std::uint64_t k = 0; k < q - 1; ++k) {
    F.exp_table_[k] = Elem(cur);
    F.dlog_table_[cur] = std::uint32_t(k);
    cur = raw_mul(cur, gen);
  }
  if (cur != 1) fail(ErrorKind::NoIrreducibleFound, "generator order check failed");

  // Trace table via linearity: Tr(x) = sum_j c_j Tr(t^j).
  F.trace_table_.assign(q, 0);
  if (n == 1) {
    for (std::uint64_t v = 0; v < q; ++v) F.trace_table_[v] = std::uint32_t(v);
  } else {
    // Tr(t^j) = sum of the Frobenius orbit of t^j; the trace lands in F_p,
    // so only the constant coefficient of the accumulated sum survives.
    std::vector<std::uint64_t> tr_basis(n, 0);
    for (unsigned j = 0; j < n; ++j) {
      Poly acc(n, 0);
      std::uint64_t x = raw_pow(p, j);  // t has encoding p; x = t^j
      for (unsigned i = 0; i < n; ++i) {
        Poly d = decode(x);
        for (unsigned c = 0; c < n; ++c) acc[c] = (acc[c] + d[c]) % p;
        x = raw_pow(x, p);
      }
      tr_basis[j] = acc[0];
    }
    for (std::uint64_t v = 0; v < q; ++v) {
      Poly d = decode(v);
      std::uint64_t s = 0;
      for (unsigned j = 0; j < n; ++j) s += d[j] * tr_basis[j];
      F.trace_table_[v] = std::uint32_t(s % p);
    }
  }
  return F;
}

Elem FieldContext::add(Elem a, Elem b) const {
  if (n_ == 1) {
    std::uint64_t s = std::uint64_t(a) + b;
    return Elem(s >= q_ ? s - q_ : s);
  }
  std::uint64_t va = a, vb = b, out = 0, mult = 1;
  for (unsigned i = 0; i < n_; ++i) {
    std::uint64_t c = (va % p_ + vb % p_) % p_;
    out += c * mult;
    mult *= p_;
    va /= p_;
    vb /= p_;
  }
  return Elem(out);
}

Elem FieldContext::neg(Elem a) const {
  if (n_ == 1) return a == 0 ? 0 : Elem(q_ - a);
  std::uint64_t va = a, out = 0, mult = 1;
  for (unsigned i = 0; i < n_; ++i) {
    std::uint64_t c = va % p_;
    out += (c == 0 ? 0 : p_ - c) * mult;
    mult *= p_;
    va /= p_;
  }
  return Elem(out);
}

Elem FieldContext::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FieldContext::pow(Elem a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  std::uint64_t k = dlog_table_[a];
  return exp_table_[mod_order((unsigned __int128)k * e % (q_ - 1))];
}

std::uint64_t FieldContext::trace(Elem a) const { return trace_table_[a]; }

std::complex<double> FieldContext::psi(Elem a) const {
  double t = double(trace_table_[a]) / double(p_);
  return std::polar(1.0, 2.0 * std::numbers::pi * t);
}

std::complex<double> FieldContext::chi(std::uint64_t j, Elem a) const {
  std::uint64_t k = dlog(a);
  double t = double((unsigned __int128)(j % (q_ - 1)) * k % (q_ - 1)) / double(q_ - 1);
  return std::polar(1.0, 2.0 * std::numbers::pi * t);
}

std::vector<Elem> roots_of_unity_zeta_order(const FieldContext& F, std::uint64_t d) {
  if (d == 0 || (F.q() - 1) % d != 0)
    fail(ErrorKind::OrderDoesNotDivide, std::to_string(d) + " does not divide q-1");
  std::vector<Elem> out;
  out.reserve(d);
  std::uint64_t step = (F.q() - 1) / d;
  for (std::uint64_t m = 1; m <= d; ++m) out.push_back(F.exp_gen(step * m));
  return out;
}

std::vector<Elem> roots_of_unity(const FieldContext& F, std::uint64_t d) {
  auto out = roots_of_unity_zeta_order(F, d);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> find_subgroup_prime_order(const FieldContext& F, std::uint64_t d) {
  if (!is_prime_u64(d)) fail(ErrorKind::NotPrime, "subgroup order must be prime");
  return roots_of_unity(F, d);
}

PolyRoots poly_roots_mod(const FieldContext& F, const std::vector<std::int64_t>& g,
                         bool require_split) {
  if (g.size() < 2 || g.back() != 1)
    fail(ErrorKind::ValueOutOfRange, "polynomial must be monic of degree >= 1");
  std::size_t deg = g.size() - 1;
  std::vector<Elem> coeff(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) coeff[i] = F.from_int(g[i]);

  PolyRoots out;
  std::vector<unsigned> mult;
  for (std::uint64_t x = 0; x < F.q(); ++x) {
    // Horner
    Elem acc = coeff[deg];
    for (std::size_t i = deg; i-- > 0;) acc = F.add(F.mul(acc, Elem(x)), coeff[i]);
    if (acc == 0) out.roots.push_back(Elem(x));
  }
  // multiplicity via repeated synthetic division by (X - r)
  std::size_t total = 0;
  for (Elem r : out.roots) {
    std::vector<Elem> work(coeff);
    unsigned m = 0;
    while (work.size() >= 2) {
      // divide by (X - r): quotient via Horner, remainder must be 0
      std::vector<Elem> quot(work.size() - 1);
      Elem carry = work.back();
      for (std::size_t i = work.size() - 1; i-- > 0;) {
        quot[i] = carry;
        carry = F.add(F.mul(carry, r), work[i]);
      }
      if (carry != 0) break;
      ++m;
      work = quot;
    }
    mult.push_back(m);
    total += m;
  }
  out.distinct = std::all_of(mult.begin(), mult.end(), [](unsigned m) { return m == 1; });
  out.split = (total == deg);
  if (require_split && !out.split)
    fail(ErrorKind::NotTotallySplit,
         "polynomial has " + std::to_string(total) + " roots with multiplicity, degree " +
             std::to_string(deg));
  return out;
}

}  // namespace equidist::ff
