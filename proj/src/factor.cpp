#include "lcgerm/factor.hpp"

#include <algorithm>
#include <random>

#include "lcgerm/errors.hpp"

namespace lcgerm {

namespace {

// ---------------------------------------------------------------------------
// Polynomials over Z/p, p an odd prime below 2^31. Coefficients low to high.

using FpPoly = std::vector<long>;

long md(long a, long p) {
  a %= p;
  return a < 0 ? a + p : a;
}

long inv_mod(long a, long p) {
  long t = 0, nt = 1, r = p, nr = md(a, p);
  while (nr != 0) {
    const long q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  return md(t, p);
}

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, long p) {
  FpPoly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = md(c[i] - b[i], p);
  fp_trim(c);
  return c;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, long p) {
  if (a.empty() || b.empty()) return {};
  FpPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  fp_trim(c);
  return c;
}

std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b, long p) {
  FpPoly r = a;
  fp_trim(r);
  const int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(r.size()) - 1 < db) return {{}, r};
  FpPoly q(r.size() - db, 0);
  const long inv = inv_mod(b.back(), p);
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    if (r[i] == 0) continue;
    const long f = r[i] * inv % p;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] = md(r[i - db + j] - f * b[j], p);
  }
  r.resize(db);
  fp_trim(r);
  fp_trim(q);
  return {q, r};
}

FpPoly fp_monic(const FpPoly& a, long p) {
  if (a.empty()) return a;
  const long inv = inv_mod(a.back(), p);
  FpPoly out = a;
  for (auto& c : out) c = c * inv % p;
  return out;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, long p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    FpPoly r = fp_divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a, p);
}

FpPoly fp_powmod(const FpPoly& base, const Integer& e, const FpPoly& mod, long p) {
  FpPoly result{1};
  FpPoly b = fp_divmod(base, mod, p).second;
  const std::string bits = e.get_str(2);
  for (char bit : bits) {
    result = fp_divmod(fp_mul(result, result, p), mod, p).second;
    if (bit == '1') result = fp_divmod(fp_mul(result, b, p), mod, p).second;
  }
  return result;
}

// s*a + t*b == 1 for coprime a, b.
void fp_ext_gcd(const FpPoly& a, const FpPoly& b, long p, FpPoly& s, FpPoly& t) {
  FpPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = fp_divmod(r0, r1, p);
    FpPoly s2 = fp_sub(s0, fp_mul(q, s1, p), p);
    FpPoly t2 = fp_sub(t0, fp_mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const long inv = inv_mod(r0.at(0), p);
  s = s0;
  t = t0;
  for (auto& c : s) c = c * inv % p;
  for (auto& c : t) c = c * inv % p;
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<FpPoly, int>> fp_ddf(FpPoly f, long p) {
  std::vector<std::pair<FpPoly, int>> out;
  const FpPoly x{0, 1};
  FpPoly h = x;
  int i = 1;
  while (static_cast<int>(f.size()) - 1 >= 2 * i) {
    h = fp_powmod(h, Integer(p), f, p);
    FpPoly g = fp_gcd(fp_sub(h, x, p), f, p);
    if (g.size() > 1) {
      out.emplace_back(g, i);
      f = fp_divmod(f, g, p).first;
      h = fp_divmod(h, f, p).second;
    }
    ++i;
  }
  if (f.size() > 1) out.emplace_back(fp_monic(f, p), static_cast<int>(f.size()) - 1);
  return out;
}

// Cantor-Zassenhaus equal-degree splitting.
void fp_edf(const FpPoly& f, int d, long p, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n == d) {
    out.push_back(fp_monic(f, p));
    return;
  }
  Integer pd;
  mpz_pow_ui(pd.get_mpz_t(), Integer(p).get_mpz_t(), d);
  const Integer e = (pd - 1) / 2;
  std::uniform_int_distribution<long> dist(0, p - 1);
  for (;;) {
    FpPoly a(n);
    for (auto& c : a) c = dist(rng);
    fp_trim(a);
    if (a.size() < 2) continue;
    FpPoly b = fp_powmod(a, e, f, p);
    b = fp_sub(b, FpPoly{1}, p);
    FpPoly g = fp_gcd(b, f, p);
    const int dg = static_cast<int>(g.size()) - 1;
    if (dg > 0 && dg < n) {
      fp_edf(g, d, p, rng, out);
      fp_edf(fp_divmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

// ---------------------------------------------------------------------------
// Integer polynomials.

using ZPoly = std::vector<Integer>;

void z_trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Integer z_mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

ZPoly z_mul_mod(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  for (auto& x : c) x = z_mod(x, m);
  z_trim(c);
  return c;
}

ZPoly z_from_fp(const FpPoly& a) {
  ZPoly out;
  for (auto c : a) out.emplace_back(static_cast<long>(c));
  return out;
}

FpPoly fp_from_z(const ZPoly& a, long p) {
  FpPoly out;
  for (const auto& c : a) out.push_back(z_mod(c, Integer(p)).get_si());
  fp_trim(out);
  return out;
}

// Exact division over Z; false when b does not divide a.
bool z_exact_div(const ZPoly& a, const ZPoly& b, ZPoly& q) {
  ZPoly r = a;
  const int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(r.size()) - 1 < db) return false;
  q.assign(r.size() - db, 0);
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), b.back().get_mpz_t())) return false;
    const Integer f = r[i] / b.back();
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b[j];
  }
  for (int i = 0; i < db; ++i) {
    if (r[i] != 0) return false;
  }
  return true;
}

ZPoly z_primitive(ZPoly a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

// Lifts monic f == prod(factors) (mod p) to a factorization mod p^k.
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<FpPoly>& factors, long p, int k) {
  Integer modulus;
  mpz_pow_ui(modulus.get_mpz_t(), Integer(p).get_mpz_t(), k);
  if (factors.size() == 1) {
    ZPoly out = f;
    for (auto& c : out) c = z_mod(c, modulus);
    return {out};
  }
  const std::size_t half = factors.size() / 2;
  FpPoly g0{1}, h0{1};
  for (std::size_t i = 0; i < half; ++i) g0 = fp_mul(g0, factors[i], p);
  for (std::size_t i = half; i < factors.size(); ++i) h0 = fp_mul(h0, factors[i], p);
  FpPoly s, t;
  fp_ext_gcd(g0, h0, p, s, t);

  ZPoly g = z_from_fp(g0), h = z_from_fp(h0);
  Integer pj = p;
  for (int j = 1; j < k; ++j) {
    const Integer next = pj * p;
    ZPoly gh = z_mul_mod(g, h, next);
    ZPoly e(std::max(f.size(), gh.size()), 0);
    for (std::size_t i = 0; i < f.size(); ++i) e[i] = f[i];
    for (std::size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
    for (auto& c : e) c = z_mod(c, next) / pj;
    const FpPoly ep = fp_from_z(e, p);
    const FpPoly a = fp_divmod(fp_mul(ep, t, p), g0, p).second;
    const FpPoly b = fp_divmod(fp_sub(ep, fp_mul(a, h0, p), p), g0, p).first;
    const ZPoly az = z_from_fp(a), bz = z_from_fp(b);
    g.resize(std::max(g.size(), az.size()), 0);
    h.resize(std::max(h.size(), bz.size()), 0);
    for (std::size_t i = 0; i < az.size(); ++i) g[i] += pj * az[i];
    for (std::size_t i = 0; i < bz.size(); ++i) h[i] += pj * bz[i];
    pj = next;
  }
  std::vector<FpPoly> left(factors.begin(), factors.begin() + half);
  std::vector<FpPoly> right(factors.begin() + half, factors.end());
  auto out = hensel_lift(g, left, p, k);
  auto more = hensel_lift(h, right, p, k);
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Irreducible factors of a primitive squarefree integer polynomial.
std::vector<ZPoly> zassenhaus(ZPoly f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};

  long p = 3;
  for (;; p += 2) {
    if (!is_prime(p)) continue;
    if (z_mod(f.back(), Integer(p)) == 0) continue;
    const FpPoly fp = fp_from_z(f, p);
    FpPoly dfp;
    for (std::size_t i = 1; i < fp.size(); ++i) dfp.push_back(fp[i] * static_cast<long>(i) % p);
    fp_trim(dfp);
    if (fp_gcd(fp, dfp, p).size() == 1) break;
  }

  const FpPoly fm = fp_monic(fp_from_z(f, p), p);
  std::mt19937_64 rng(0x5eed ^ static_cast<unsigned long>(p));
  std::vector<FpPoly> modular;
  for (const auto& [g, d] : fp_ddf(fm, p)) fp_edf(g, d, p, rng, modular);
  if (modular.size() == 1) return {f};

  // Mignotte-style bound on factor coefficients, scaled by the leading coefficient.
  Integer max_coeff = 0;
  for (const auto& c : f) max_coeff = std::max(max_coeff, Integer(abs(c)));
  Integer bound = max_coeff * (Integer(1) << n) * Integer(n + 2) * abs(f.back());
  int k = 1;
  Integer modulus = p;
  while (modulus <= 2 * bound) {
    modulus *= p;
    ++k;
  }

  // Monic version of f modulo p^k.
  Integer lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), f.back().get_mpz_t(), modulus.get_mpz_t());
  ZPoly fmon = f;
  for (auto& c : fmon) c = z_mod(c * lc_inv, modulus);
  std::vector<ZPoly> lifted = hensel_lift(fmon, modular, p, k);

  std::vector<ZPoly> found;
  const Integer half_mod = modulus / 2;
  std::size_t size = 1;
  while (2 * size <= lifted.size()) {
    bool progressed = false;
    const std::size_t r = lifted.size();
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      ZPoly cand{f.back()};
      for (auto i : idx) cand = z_mul_mod(cand, lifted[i], modulus);
      for (auto& c : cand) {
        c = z_mod(c, modulus);
        if (c > half_mod) c -= modulus;
      }
      cand = z_primitive(cand);
      ZPoly quotient;
      if (z_exact_div(f, cand, quotient)) {
        found.push_back(cand);
        f = z_primitive(quotient);
        for (std::size_t i = size; i-- > 0;) lifted.erase(lifted.begin() + idx[i]);
        progressed = true;
        break;
      }
      // next combination
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == r - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!progressed) ++size;
  }
  if (f.size() > 1) found.push_back(f);
  return found;
}

std::vector<UPoly> factor_rational(const UPoly& f) {
  const UPoly sf = squarefree_part(f);
  if (sf.degree() <= 0) return {};
  if (sf.degree() == 1) return {sf.monic()};
  Integer den = 1;
  for (const auto& c : sf.coeffs()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.to_rational().get_den().get_mpz_t());
  }
  ZPoly z;
  for (const auto& c : sf.coeffs()) {
    Rational scaled = c.to_rational() * den;
    z.push_back(scaled.get_num());
  }
  std::vector<UPoly> out;
  for (const auto& g : zassenhaus(z_primitive(z))) {
    std::vector<Elem> coeffs;
    for (const auto& c : g) coeffs.emplace_back(Rational(c));
    out.push_back(UPoly(nullptr, std::move(coeffs)).monic());
  }
  return out;
}

std::vector<UPoly> factor_extension(const UPoly& f) {
  const UPoly g = squarefree_part(f);
  if (g.degree() <= 0) return {};
  if (g.degree() == 1) return {g.monic()};
  const FieldPtr& field = g.field();
  const Elem alpha = Elem::generator(field);
  for (long s = 0;; ++s) {
    const UPoly h = g.shifted(Elem(-s) * alpha);
    const UPoly n = norm_to_base(h);
    if (!is_squarefree(n)) continue;
    std::vector<UPoly> out;
    for (const auto& piece : factor(n)) {
      const UPoly common = gcd(piece.lifted(field), h);
      if (common.degree() > 0) out.push_back(common.shifted(Elem(s) * alpha).monic());
    }
    return out;
  }
}

}  // namespace

UPoly norm_to_base(const UPoly& f) {
  const FieldPtr& field = f.field();
  if (!field) throw InvariantError("norm of a polynomial over Q");
  const FieldPtr& base = field->base();
  const UPoly minpoly(base, field->minpoly());
  const int points = f.degree() * field->degree() + 1;

  // Evaluate at t = 0, 1, ..., then interpolate (Newton divided differences).
  std::vector<Elem> values;
  for (int j = 0; j < points; ++j) {
    const Elem v = f.eval(Elem(j));
    std::vector<Elem> as_poly = v.coeffs();
    values.push_back(resultant(minpoly, UPoly(base, as_poly)));
  }
  std::vector<Elem> dd = values;
  for (int level = 1; level < points; ++level) {
    for (int i = points - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) * Elem(Rational(1, level));
    }
  }
  UPoly result(base);
  for (int i = points - 1; i >= 0; --i) {
    result = result * UPoly(base, {Elem(-i), Elem(1)}) + UPoly::constant(base, dd[i]);
  }
  return result;
}

std::vector<UPoly> factor(const UPoly& f) {
  std::vector<UPoly> out = f.field() ? factor_extension(f) : factor_rational(f);
  std::sort(out.begin(), out.end(), [](const UPoly& a, const UPoly& b) { return compare(a, b) < 0; });
  return out;
}

}  // namespace lcgerm
