#include "weber/numeric.hpp"

#include <algorithm>

namespace weber {

Int mod(const Int& a, const Int& m) {
  if (m == 0) throw std::invalid_argument("mod: zero modulus");
  Int r, am = abs(m);
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), am.get_mpz_t());
  return r;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

long to_long(const Int& a) {
  if (!a.fits_slong_p()) throw std::overflow_error("to_long: value out of range");
  return mpz_get_si(a.get_mpz_t());
}

Residue::Residue(Int v, Int m) : modulus(std::move(m)) {
  if (modulus <= 0) throw std::invalid_argument("Residue: modulus must be positive");
  value = mod(v, modulus);
}

int kronecker(const Int& a, const Int& n) {
  if (n == 0) throw std::invalid_argument("kronecker: n must be nonzero");
  return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

int kronecker(long a, long n) { return kronecker(Int(a), Int(n)); }

long valuation(const Int& n, const Int& p) {
  if (n == 0) throw std::invalid_argument("valuation: n must be nonzero");
  if (p < 2) throw std::invalid_argument("valuation: p must be >= 2");
  Int rest, an = abs(n);
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), an.get_mpz_t(), p.get_mpz_t()));
}

OddPart odd_part(const Int& n) {
  if (n == 0) return {1, Int(1)};
  auto lam = static_cast<long>(mpz_scan1(n.get_mpz_t(), 0));
  Int odd = n >> static_cast<unsigned long>(lam);
  return {lam, odd};
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool is_square(const Int& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::vector<std::pair<Int, int>> factorize(Int n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be nonzero");
  n = abs(n);
  std::vector<std::pair<Int, int>> out;
  auto strip = [&](const Int& p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  for (Int p = 5; p * p <= n;) {
    strip(p);
    strip(p + 2);
    p += 6;
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

Int mod_inverse(const Int& a, const Int& m) {
  Int inv;
  if (!mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
    throw std::invalid_argument("mod_inverse: not invertible");
  return inv;
}

namespace {

// Roots of x^2 = a (mod p) for odd prime p, gcd(a, p) = 1 assumed afterwards;
// handles the a = 0 case separately.  Tonelli-Shanks.
std::optional<Int> tonelli(const Int& a0, const Int& p) {
  Int a = mod(a0, p);
  if (a == 0) return Int(0);
  if (kronecker(a, p) != 1) return std::nullopt;
  if (mod(p, Int(4)) == 3) {
    Int x;
    Int e = (p + 1) / 4;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return x;
  }
  // p = 1 (mod 4): full ladder
  Int q = p - 1;
  long s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Int z = 2;
  while (kronecker(z, p) != -1) ++z;
  Int c, x, t, e = (q + 1) / 2;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  long m = s;
  while (t != 1) {
    Int tt = t;
    long i = 0;
    while (tt != 1) {
      tt = mod(tt * tt, p);
      ++i;
      if (i == m) return std::nullopt;  // a was not a residue after all
    }
    Int b = c;
    for (long j = 0; j < m - i - 1; ++j) b = mod(b * b, p);
    x = mod(x * b, p);
    c = mod(b * b, p);
    t = mod(t * c, p);
    m = i;
  }
  return x;
}

// All square roots of a modulo p^e.  Singular residues (p | a) make the
// root set non-cyclic, so lift level by level keeping every solution.
std::vector<Int> roots_mod_prime_power(const Int& a, const Int& p, int e) {
  Int pe = 1;
  for (int i = 0; i < e; ++i) pe *= p;
  Int am = mod(a, pe);

  if (p == 2) {
    // Base cases mod 2 and mod 4 by inspection, then lift.
    std::vector<Int> cur;
    Int m = 2;
    for (Int x = 0; x < 2; ++x)
      if (mod(x * x - am, m) == 0) cur.push_back(x);
    while (m < pe) {
      Int next_m = m * 2;
      std::vector<Int> nxt;
      for (const Int& x : cur)
        for (int t = 0; t < 2; ++t) {
          Int cand = x + Int(t) * m;
          if (mod(cand * cand - am, next_m) == 0) nxt.push_back(cand);
        }
      std::sort(nxt.begin(), nxt.end());
      nxt.erase(std::unique(nxt.begin(), nxt.end()), nxt.end());
      cur = std::move(nxt);
      m = next_m;
    }
    return cur;
  }

  // Odd p.  Nonsingular case lifts by Hensel; singular residues scan the
  // p candidates per level, which stays cheap for the moduli used here.
  if (mod(am, p) != 0) {
    auto r = tonelli(am, p);
    if (!r) return {};
    Int x = *r, m = p;
    while (m < pe) {
      Int next_m = m * p;
      // Hensel: x' = x - (x^2-a) * (2x)^{-1} mod next_m
      Int f = mod(x * x - am, next_m);
      Int inv = mod_inverse(mod(2 * x, next_m), next_m);
      x = mod(x - f * inv, next_m);
      m = next_m;
    }
    Int other = mod(-x, pe);
    if (other == x) return {x};
    std::vector<Int> out{x, other};
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Int> cur;
  Int m = p;
  for (Int x = 0; x < p; ++x)
    if (mod(x * x - am, m) == 0) cur.push_back(x);
  while (m < pe) {
    Int next_m = m * p;
    std::vector<Int> nxt;
    for (const Int& x : cur)
      for (Int t = 0; t < p; ++t) {
        Int cand = x + t * m;
        if (mod(cand * cand - am, next_m) == 0) nxt.push_back(cand);
      }
    std::sort(nxt.begin(), nxt.end());
    nxt.erase(std::unique(nxt.begin(), nxt.end()), nxt.end());
    cur = std::move(nxt);
    m = next_m;
  }
  return cur;
}

}  // namespace

std::vector<Int> sqrt_mod_all(const Int& a, const Int& m) {
  if (m <= 0) throw std::invalid_argument("sqrt_mod_all: modulus must be positive");
  if (m == 1) return {Int(0)};
  auto fac = factorize(m);
  // Per-prime-power root lists, then CRT across the cartesian product.
  std::vector<std::vector<Int>> lists;
  std::vector<Int> mods;
  for (auto& [p, e] : fac) {
    auto roots = roots_mod_prime_power(a, p, e);
    if (roots.empty()) return {};
    Int pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    lists.push_back(std::move(roots));
    mods.push_back(pe);
  }
  std::vector<Int> acc{Int(0)};
  Int acc_mod = 1;
  for (size_t i = 0; i < lists.size(); ++i) {
    std::vector<Int> next;
    Int g, u, v;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), acc_mod.get_mpz_t(),
               mods[i].get_mpz_t());
    Int combined = acc_mod * mods[i];
    for (const Int& x : acc)
      for (const Int& y : lists[i]) {
        // x mod acc_mod, y mod mods[i]; u*acc_mod + v*mods[i] = 1
        Int z = mod(x * v * mods[i] + y * u * acc_mod, combined);
        next.push_back(z);
      }
    acc = std::move(next);
    acc_mod = combined;
  }
  std::sort(acc.begin(), acc.end());
  acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
  return acc;
}

std::optional<Int> sqrt_mod(const Int& a, const Int& m) {
  auto all = sqrt_mod_all(a, m);
  if (all.empty()) return std::nullopt;
  return all.front();
}

RootOfUnity24::RootOfUnity24(long k, int sign) : k_(((k % 24) + 24) % 24), sign_(sign >= 0 ? 1 : -1) {}

RootOfUnity24 RootOfUnity24::operator*(const RootOfUnity24& o) const {
  return RootOfUnity24(k_ + o.k_, sign_ * o.sign_);
}

RootOfUnity24 RootOfUnity24::pow(long e) const {
  long em = to_long(mod(Int(e), Int(24)));
  int s = (sign_ == -1 && (e % 2 != 0)) ? -1 : 1;
  return RootOfUnity24(k_ * em, s);
}

RootOfUnity24 RootOfUnity24::times_sign(int s) const { return RootOfUnity24(k_, sign_ * (s >= 0 ? 1 : -1)); }

}  // namespace weber
