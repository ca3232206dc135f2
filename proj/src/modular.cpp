#include "weber/modular.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <sstream>
#include <tuple>

#include "weber/eta.hpp"
#include "weber/invariant.hpp"

namespace weber {

BigComplex moebius(const Matrix2& m, const BigComplex& z) {
  mpfr_prec_t p = z.precision();
  BigComplex a = BigComplex::real(BigFloat::of(m.a, p));
  BigComplex b = BigComplex::real(BigFloat::of(m.b, p));
  BigComplex c = BigComplex::real(BigFloat::of(m.c, p));
  BigComplex d = BigComplex::real(BigFloat::of(m.d, p));
  return (a * z + b) / (c * z + d);
}

long mu_of(long k, long n) {
  for (long mu = 1;; ++mu)
    if (std::gcd(mu * k - 1, n) == 1) return mu;
}

long psi(long n) {
  long num = n, den = 1;
  for (const auto& [p, ex] : factorize(Int(n))) {
    num *= to_long(p) + 1;
    den *= to_long(p);
  }
  if (num % den) throw std::logic_error("psi: non-integral index");
  return num / den;
}

long S_of_N(long n) {
  long num = 0;
  for (long k = 2; k < n; ++k) {
    long d = std::gcd(k, n);
    if (d == 1 || d * d >= n) continue;
    num += mu_of(k, n) * (n - d * d);
  }
  if (num % n) throw std::logic_error("S_of_N: non-integral sum");
  return num / n;
}

CosetSet cosets(long n) {
  if (n < 2) throw std::invalid_argument("cosets: n must be >= 2");
  CosetSet cs{n, {}};
  for (long v = 0; v < n; ++v) cs.mats.push_back({1, v, 0, 1});
  cs.mats.push_back({0, -1, 1, 0});
  for (long k = 2; k < n; ++k) {
    if (std::gcd(k, n) == 1) continue;
    long cap = mu_of(k, n);
    for (long kp = 0; kp < cap; ++kp) cs.mats.push_back({k, k * kp - 1, 1, kp});
  }
  if (static_cast<long>(cs.mats.size()) != psi(n))
    throw std::logic_error("cosets: representative count does not match index");
  return cs;
}

DegreeData degrees(long n) {
  ExponentData ex = canonical_exponents(n);
  long num = ex.s * (n - 1 + S_of_N(n));
  if (num % 24) throw std::logic_error("degrees: J-degree is not integral");
  return {psi(n), num / 24};
}

std::string FunctionDescriptor::name() const {
  std::string base = dbl ? "w_{" + std::to_string(p1) + "," + std::to_string(p2) + "}"
                         : "w_" + std::to_string(n);
  if (e > 1) base += "^" + std::to_string(e);
  return base;
}

mpq_class height_factor(const FunctionDescriptor& f) {
  mpq_class r;
  if (f.dbl) {
    if (f.p1 == f.p2)
      r = mpq_class(f.e * (f.p1 - 1) * (f.p2 - 1), 12 * f.p1 * (f.p1 + 1));
    else
      r = mpq_class(f.e * (f.p1 - 1) * (f.p2 - 1), 12 * (f.p1 + 1) * (f.p2 + 1));
  } else {
    r = mpq_class(f.e * (f.n - 1 + S_of_N(f.n)), 24 * psi(f.n));
  }
  r.canonicalize();
  return r;
}

std::vector<HeightEntry> comparison_table(const mpq_class& min_gain, long max_degj) {
  std::vector<HeightEntry> out;
  for (long N = 2; N <= 500; ++N) {
    ExponentData ex = canonical_exponents(N);
    DegreeData dd = degrees(N);
    if (dd.degJ > max_degj) continue;
    for (long e = 1; e <= ex.s; ++e) {
      if (ex.s % e) continue;
      bool usable = (e % 2 == 0) || ex.square || N == 2 || (e % 3 == 0 && N % 3 == 0);
      if (!usable) continue;
      FunctionDescriptor f{false, N, 0, 0, e};
      mpq_class gain = mpq_class(1) / height_factor(f);
      if (gain < min_gain) continue;
      out.push_back({f, gain, dd.degJ});
    }
  }
  std::vector<long> primes;
  for (long p = 2; p * 2 <= 200; ++p)
    if (is_prime(Int(p))) primes.push_back(p);
  for (long p1 : primes)
    for (long p2 : primes) {
      if (p2 < p1 || p1 * p2 > 200) continue;
      long sigma = 24 / std::gcd(24L, (p1 - 1) * (p2 - 1));
      long num = sigma * (p1 - 1) * (p2 - 1);
      if (num % 12) throw std::logic_error("comparison_table: non-integral J-degree");
      long degj = num / 12;
      if (degj > max_degj) continue;
      FunctionDescriptor f{true, 0, p1, p2, sigma};
      mpq_class gain = mpq_class(1) / height_factor(f);
      if (gain < min_gain) continue;
      out.push_back({f, gain, degj});
    }
  std::sort(out.begin(), out.end(), [](const HeightEntry& a, const HeightEntry& b) {
    if (a.gain != b.gain) return a.gain > b.gain;
    long pa = a.f.dbl ? a.f.p1 * a.f.p2 : a.f.n;
    long pb = b.f.dbl ? b.f.p1 * b.f.p2 : b.f.n;
    return std::tie(pa, a.f.e, a.f.dbl) < std::tie(pb, b.f.e, b.f.dbl);
  });
  return out;
}

namespace {

std::string jterm_str(const Int& v, long m) {
  Int av = abs(v);
  std::string body;
  if (m == 0) return av.get_str();
  if (av != 1) body = av.get_str() + "*";
  body += (m == 1) ? "J" : "J^" + std::to_string(m);
  return body;
}

std::string fpower_str(long d) {
  if (d == 0) return "";
  if (d == 1) return "F";
  return "F^" + std::to_string(d);
}

}  // namespace

std::string BivariatePoly::str() const {
  std::ostringstream os;
  bool first = true;
  for (long d = degF; d >= 0; --d) {
    const std::vector<Int>& row = c[static_cast<size_t>(d)];
    std::vector<long> nz;
    for (long m = 0; m < static_cast<long>(row.size()); ++m)
      if (row[static_cast<size_t>(m)] != 0) nz.push_back(m);
    if (nz.empty()) continue;
    char sgn = '+';
    std::string body;
    if (nz.size() == 1) {
      long m = nz.front();
      const Int& v = row[static_cast<size_t>(m)];
      sgn = v < 0 ? '-' : '+';
      std::string coef = jterm_str(v, m);
      std::string fp = fpower_str(d);
      if (fp.empty())
        body = coef;
      else if (m == 0 && abs(v) == 1)
        body = fp;
      else
        body = coef + "*" + fp;
    } else {
      std::string inner;
      for (size_t i = 0; i < nz.size(); ++i) {
        const Int& v = row[static_cast<size_t>(nz[i])];
        if (i == 0)
          inner += (v < 0 ? "-" : "");
        else
          inner += (v < 0 ? "-" : "+");
        inner += jterm_str(v, nz[i]);
      }
      body = "(" + inner + ")";
      std::string fp = fpower_str(d);
      if (!fp.empty()) body += "*" + fp;
    }
    if (first) {
      if (sgn == '-') os << "-";
      os << body;
      first = false;
    } else {
      os << sgn << body;
    }
  }
  if (first) os << "0";
  return os.str();
}

BigComplex BivariatePoly::eval(const BigComplex& F, const BigComplex& J) const {
  mpfr_prec_t p = F.precision();
  BigComplex acc = BigComplex::zero(p);
  for (long d = degF; d >= 0; --d) {
    const std::vector<Int>& row = c[static_cast<size_t>(d)];
    BigComplex inner = BigComplex::zero(p);
    for (long m = static_cast<long>(row.size()); m-- > 0;)
      inner = inner * J + BigComplex::real(BigFloat::of(row[static_cast<size_t>(m)], p));
    acc = acc * F + inner;
  }
  return acc;
}

namespace {

struct SamplePoint {
  BigComplex j;
  std::vector<BigComplex> sigma;  // coefficients of prod over cosets (F - w(Mz)), ascending
};

SamplePoint sample_at(long n, long s, const CosetSet& cs, double x, double y, mpfr_prec_t wp) {
  BigComplex z = BigComplex::of(x, y, wp);
  SamplePoint pt{j_invariant(z, wp), {BigComplex::one(wp)}};
  for (const Matrix2& m : cs.mats) {
    BigComplex v = weber_w(n, s, moebius(m, z), wp);
    std::vector<BigComplex> next(pt.sigma.size() + 1, BigComplex::zero(wp));
    for (size_t i = 0; i < pt.sigma.size(); ++i) {
      next[i + 1] = next[i + 1] + pt.sigma[i];
      next[i] = next[i] - v * pt.sigma[i];
    }
    pt.sigma = std::move(next);
  }
  return pt;
}

}  // namespace

BivariatePoly modular_polynomial(long n, mpfr_prec_t prec) {
  if (n < 2 || n > 8) throw std::invalid_argument("modular_polynomial: n must be in [2,8]");
  ExponentData ex = canonical_exponents(n);
  DegreeData deg = degrees(n);
  CosetSet cs = cosets(n);
  long primary = deg.degJ + 1;
  long nodes = primary + 2;
  mpfr_prec_t wp = prec ? prec : static_cast<mpfr_prec_t>(1536 + 128 * deg.degJ);
  double y0 = 1.1;

  for (int attempt = 0; attempt < 3; ++attempt, y0 += 0.037, wp *= 2) {
    std::vector<std::future<SamplePoint>> futures;
    for (long k = 0; k < nodes; ++k) {
      double x = -0.47 + 0.94 * static_cast<double>(k) / static_cast<double>(nodes - 1);
      futures.push_back(std::async(std::launch::async,
                                   [n, &ex, &cs, x, y0, wp] { return sample_at(n, ex.s, cs, x, y0, wp); }));
    }
    std::vector<SamplePoint> pts;
    pts.reserve(static_cast<size_t>(nodes));
    for (auto& fu : futures) pts.push_back(fu.get());

    double maxj = 0.0, minsep = -1.0;
    for (long i = 0; i < nodes; ++i) {
      maxj = std::max(maxj, pts[static_cast<size_t>(i)].j.abs().to_double());
      for (long l = i + 1; l < nodes; ++l) {
        double sep = (pts[static_cast<size_t>(i)].j - pts[static_cast<size_t>(l)].j).abs().to_double();
        if (minsep < 0 || sep < minsep) minsep = sep;
      }
    }
    if (minsep < 1e-4 * maxj) continue;

    // per-node Lagrange basis: master poly over the primary nodes, then
    // synthetic division by (J - j_k) gives the numerator of basis k
    std::vector<BigComplex> master{BigComplex::one(wp)};
    for (long k = 0; k < primary; ++k) {
      const BigComplex& jk = pts[static_cast<size_t>(k)].j;
      std::vector<BigComplex> next(master.size() + 1, BigComplex::zero(wp));
      for (size_t i = 0; i < master.size(); ++i) {
        next[i + 1] = next[i + 1] + master[i];
        next[i] = next[i] - jk * master[i];
      }
      master = std::move(next);
    }
    std::vector<std::vector<BigComplex>> basis;
    std::vector<BigComplex> scale;
    for (long k = 0; k < primary; ++k) {
      const BigComplex& jk = pts[static_cast<size_t>(k)].j;
      std::vector<BigComplex> q(static_cast<size_t>(primary), BigComplex::zero(wp));
      q[static_cast<size_t>(primary - 1)] = master[static_cast<size_t>(primary)];
      for (long i = primary - 2; i >= 0; --i)
        q[static_cast<size_t>(i)] = master[static_cast<size_t>(i + 1)] + jk * q[static_cast<size_t>(i + 1)];
      BigComplex den = BigComplex::zero(wp);
      for (long i = primary; i-- > 0;) den = den * jk + q[static_cast<size_t>(i)];
      basis.push_back(std::move(q));
      scale.push_back(den.inverse());
    }

    BivariatePoly poly{n, deg.degF, deg.degJ, {}};
    poly.c.assign(static_cast<size_t>(deg.degF) + 1, std::vector<Int>(static_cast<size_t>(primary), Int(0)));
    double max_resid = 0.0;
    for (long d = 0; d <= deg.degF; ++d) {
      std::vector<BigComplex> acc(static_cast<size_t>(primary), BigComplex::zero(wp));
      for (long k = 0; k < primary; ++k) {
        BigComplex f = pts[static_cast<size_t>(k)].sigma[static_cast<size_t>(d)] * scale[static_cast<size_t>(k)];
        for (long i = 0; i < primary; ++i)
          acc[static_cast<size_t>(i)] = acc[static_cast<size_t>(i)] + f * basis[static_cast<size_t>(k)][static_cast<size_t>(i)];
      }
      for (long m = 0; m < primary; ++m) {
        Int r = acc[static_cast<size_t>(m)].re().round_to_int();
        BigFloat dx = acc[static_cast<size_t>(m)].re() - BigFloat::of(r, wp);
        max_resid = std::max(max_resid, BigFloat::hypot(dx, acc[static_cast<size_t>(m)].im()).to_double());
        poly.c[static_cast<size_t>(d)][static_cast<size_t>(m)] = r;
      }
    }
    if (max_resid > 0.01) continue;

    bool valid = true;
    for (long k = primary; k < nodes && valid; ++k) {
      const SamplePoint& pt = pts[static_cast<size_t>(k)];
      for (long d = 0; d <= deg.degF && valid; ++d) {
        BigComplex pv = BigComplex::zero(wp);
        for (long m = primary; m-- > 0;)
          pv = pv * pt.j + BigComplex::real(BigFloat::of(poly.c[static_cast<size_t>(d)][static_cast<size_t>(m)], wp));
        double err = (pv - pt.sigma[static_cast<size_t>(d)]).abs().to_double();
        double mag = std::max(1.0, pt.sigma[static_cast<size_t>(d)].abs().to_double());
        if (err > 1e-6 * mag) valid = false;
      }
    }
    if (!valid) continue;
    if (poly.c.back()[0] != 1) continue;
    for (size_t m = 1; m < poly.c.back().size(); ++m)
      if (poly.c.back()[m] != 0) valid = false;
    if (!valid) continue;
    return poly;
  }
  throw RoundingError("modular_polynomial: interpolation did not stabilise");
}

}  // namespace weber
