#include "weber/eta.hpp"

#include <cmath>
#include <future>
#include <sstream>

#include "weber/modular.hpp"

namespace weber {

EtaArg reduce_to_fundamental(const BigComplex& z) {
  if (z.im().sign() <= 0) throw std::invalid_argument("eta: Im z must be positive");
  mpfr_prec_t p = z.precision();
  BigComplex w = z;
  BigComplex factor = BigComplex::one(p);
  BigFloat one = BigFloat::of(1L, p);
  for (int iter = 0; iter < 10000; ++iter) {
    Int t = w.re().round_to_int();
    if (t != 0) {
      w = BigComplex(w.re() - BigFloat::of(t, p), w.im());
      factor = factor * unity_value(RootOfUnity24(to_long(mod(t, Int(24)))), p);
    }
    if (w.norm() < one) {
      BigComplex inv = -w.inverse();  // -1/w
      factor = factor * inv.times_minus_i().sqrt_posreal();
      w = inv;
      continue;
    }
    return {w, factor};
  }
  throw std::runtime_error("eta: argument reduction did not converge");
}

BigComplex eta(const BigComplex& z, mpfr_prec_t prec) {
  mpfr_prec_t wp = prec + 64;
  EtaArg red = reduce_to_fundamental(z.rounded(wp));
  BigFloat pi12 = BigFloat::pi(wp) / BigFloat::of(12L, wp);
  BigComplex q24 = (red.z.times_i() * BigComplex::real(pi12)).exp();
  BigComplex q = q24.pow(24);
  long qexp = mpfr_get_exp(q.abs().raw());  // |q| < 2^qexp
  if (qexp >= 0) throw std::logic_error("eta: |q| >= 1 after reduction");
  BigComplex sum = BigComplex::one(wp);
  for (long k = 1;; ++k) {
    long g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
    if (g1 * (-qexp) > static_cast<long>(wp) + 16) break;
    BigComplex term = q.pow(g1) + q.pow(g2);
    sum = (k % 2) ? sum - term : sum + term;
  }
  return (red.factor * q24 * sum).rounded(prec);
}

RootOfUnity24 epsilon_eta(Int a, Int b, Int c, Int d) {
  if (a * d - b * c != 1) throw std::invalid_argument("epsilon_eta: determinant must be 1");
  if (c < 0 || (c == 0 && d < 0)) {
    a = -a;
    b = -b;
    c = -c;
    d = -d;
  }
  Int c1;
  long lam;
  if (c == 0) {
    c1 = 1;
    lam = 1;
  } else {
    OddPart oc = odd_part(c);
    c1 = oc.odd;
    lam = oc.lambda;
  }
  Int e = a * b + c * (d * (1 - a * a) - a) + 3 * c1 * (a - 1);
  Int twice = 3 * Int(lam) * (a * a - 1);
  if (mod(twice, Int(2)) != 0) throw std::logic_error("epsilon_eta: non-integral exponent term");
  e += twice / 2;
  return RootOfUnity24(to_long(mod(e, Int(24))), kronecker(a, c1));
}

RootOfUnity24 epsilon_w(long n, Int a, Int b, Int c, Int d) {
  if (a * d - b * c != 1) throw std::invalid_argument("epsilon_w: determinant must be 1");
  if (mod(b, Int(n)) != 0) throw std::invalid_argument("epsilon_w: upper-right entry must be 0 mod n");
  if (c < 0 || (c == 0 && d < 0)) {
    a = -a;
    b = -b;
    c = -c;
    d = -d;
  }
  Int b0 = b / Int(n);
  OddPart No = odd_part(Int(n));
  Int e = Int(n - 1) * (-b0 * a + c * (d * (1 - a * a) - a));
  Int c1 = (c == 0) ? Int(1) : odd_part(c).odd;
  e += 6 * c1 * ((No.odd - 1) / 2) * (a - 1);
  if (No.lambda > 0) {
    Int eighth = Int(No.lambda) * (a * a - 1);
    if (mod(eighth, Int(8)) != 0) throw std::logic_error("epsilon_w: non-integral exponent term");
    e += 12 * (eighth / 8);
  }
  return RootOfUnity24(to_long(mod(e, Int(24))), kronecker(a, No.odd));
}

BigComplex weber_w(long n, long e, const BigComplex& z, mpfr_prec_t prec) {
  if (n < 2) throw std::invalid_argument("weber_w: n must be >= 2");
  if (e < 1) throw std::invalid_argument("weber_w: e must be >= 1");
  mpfr_prec_t wp = prec + 64;
  BigFloat nf = BigFloat::of(n, wp);
  BigComplex zw = z.rounded(wp);
  BigComplex zn(zw.re() / nf, zw.im() / nf);
  BigComplex quot = eta(zn, wp) / eta(zw, wp);
  return quot.pow(e).rounded(prec);
}

BigComplex j_invariant(const BigComplex& z, mpfr_prec_t prec) {
  mpfr_prec_t wp = prec + 64;
  BigComplex x = weber_w(2, 24, z, wp);
  BigComplex c16 = BigComplex::of(16.0, 0.0, wp);
  BigComplex t = x + c16;
  return (t * t * t / x).rounded(prec);
}

BigComplex omega_value(const Discriminant& disc, mpfr_prec_t prec) {
  BigFloat half_root = BigFloat::of(-disc.delta, prec).sqrt() / BigFloat::of(2L, prec);
  if (mod(disc.delta, Int(4)) == 0) return BigComplex(BigFloat::of(0L, prec), half_root);
  return BigComplex(BigFloat::of(1L, prec) / BigFloat::of(2L, prec), half_root);
}

std::string omega_description(const Discriminant& disc) {
  if (mod(disc.delta, Int(4)) == 0) return "omega = sqrt(" + Int(disc.delta / 4).get_str() + ")";
  return "omega = (1+sqrt(" + disc.delta.get_str() + "))/2";
}

bool AlgebraicPoly::rational() const {
  for (auto& [x, y] : coeffs)
    if (y != 0) return false;
  return true;
}

namespace {

std::string power_str(long j) {
  if (j == 0) return "";
  if (j == 1) return "X";
  return "X^" + std::to_string(j);
}

// one monomial "c*X^j" with the coefficient x + y*w; returns the printed
// form without a leading sign, and the sign separately
std::pair<char, std::string> term_str(const Int& x, const Int& y, long j) {
  std::string pw = power_str(j);
  if (y == 0) {
    char sgn = x < 0 ? '-' : '+';
    Int ax = abs(x);
    if (j == 0) return {sgn, ax.get_str()};
    if (ax == 1) return {sgn, pw};
    return {sgn, ax.get_str() + "*" + pw};
  }
  if (x == 0) {
    char sgn = y < 0 ? '-' : '+';
    Int ay = abs(y);
    std::string body = (ay == 1) ? "w" : ay.get_str() + "*w";
    if (j > 0) body += "*" + pw;
    return {sgn, body};
  }
  Int ay = abs(y);
  std::string inner = x.get_str() + (y < 0 ? "-" : "+") + (ay == 1 ? "" : ay.get_str() + "*") + "w";
  std::string body = "(" + inner + ")";
  if (j > 0) body += "*" + pw;
  return {'+', body};
}

}  // namespace

std::string AlgebraicPoly::str() const {
  std::ostringstream os;
  bool first = true;
  for (long j = degree(); j >= 0; --j) {
    const auto& [x, y] = coeffs[static_cast<size_t>(j)];
    if (x == 0 && y == 0) continue;
    auto [sgn, body] = term_str(x, y, j);
    if (first) {
      if (sgn == '-') os << "-";
      os << body;
      first = false;
    } else {
      os << " " << sgn << " " << body;
    }
  }
  if (first) os << "0";
  return os.str();
}

mpfr_prec_t precision_estimate(const InvariantChoice& choice, const NSystem& sys) {
  FunctionDescriptor f{false, choice.n, 0, 0, choice.e};
  mpq_class c = height_factor(f);
  double inv_a = 0.0;
  for (const QuadForm& q : sys.forms) inv_a += 1.0 / q.a.get_d();
  double bits = c.get_d() * M_PI * std::sqrt(Int(-choice.D).get_d()) * inv_a / std::log(2.0);
  double margin = std::ceil(3.5 * static_cast<double>(sys.forms.size())) + 64.0;
  return static_cast<mpfr_prec_t>(std::ceil(bits) + margin);
}

namespace {

std::vector<BigComplex> poly_mul(const std::vector<BigComplex>& a, const std::vector<BigComplex>& b,
                                 mpfr_prec_t wp) {
  std::vector<BigComplex> out(a.size() + b.size() - 1, BigComplex::zero(wp));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  return out;
}

}  // namespace

AlgebraicPoly class_polynomial(const InvariantChoice& choice, PolyVariant variant, mpfr_prec_t prec) {
  NSystem sys = n_system(choice.D, choice.level, choice.b);
  RealityClass reality = classify_reality(choice.n, choice.D, choice.e, choice.b);
  bool to_integers = (variant == PolyVariant::plain && reality == RealityClass::rationalPoly) ||
                     (variant == PolyVariant::timesSqrtD && reality == RealityClass::rationalAfterSqrtD);
  mpfr_prec_t base = prec ? prec : precision_estimate(choice, sys);
  Discriminant disc(choice.D);

  for (int attempt = 0; attempt < 2; ++attempt) {
    mpfr_prec_t wp = base << attempt;
    std::vector<std::future<BigComplex>> futures;
    futures.reserve(sys.forms.size());
    for (const QuadForm& f : sys.forms)
      futures.push_back(std::async(std::launch::async, [&choice, f, wp, variant] {
        BigComplex val = weber_w(choice.n, choice.e, root_of(f, wp), wp);
        if (variant == PolyVariant::timesSqrtD)
          val = val * BigComplex(BigFloat::of(0L, wp), BigFloat::of(-choice.D, wp).sqrt());
        return val;
      }));

    std::vector<std::vector<BigComplex>> factors;
    factors.reserve(futures.size());
    for (auto& fu : futures) factors.push_back({-fu.get(), BigComplex::one(wp)});
    while (factors.size() > 1) {
      std::vector<std::vector<BigComplex>> next;
      for (size_t i = 0; i + 1 < factors.size(); i += 2)
        next.push_back(poly_mul(factors[i], factors[i + 1], wp));
      if (factors.size() % 2) next.push_back(std::move(factors.back()));
      factors = std::move(next);
    }
    const std::vector<BigComplex>& raw = factors.front();

    BigComplex om = omega_value(disc, wp);
    AlgebraicPoly poly{disc, {}, 0.0};
    for (const BigComplex& zc : raw) {
      Int x, y;
      BigFloat rx(wp), ry(wp);
      if (to_integers) {
        y = 0;
        x = zc.re().round_to_int();
        rx = zc.re() - BigFloat::of(x, wp);
        ry = zc.im();
      } else {
        y = (zc.im() / om.im()).round_to_int();
        BigFloat yf = BigFloat::of(y, wp);
        x = (zc.re() - yf * om.re()).round_to_int();
        rx = zc.re() - BigFloat::of(x, wp) - yf * om.re();
        ry = zc.im() - yf * om.im();
      }
      double resid = BigFloat::hypot(rx, ry).to_double();
      poly.max_residual = std::max(poly.max_residual, resid);
      poly.coeffs.emplace_back(std::move(x), std::move(y));
    }
    if (poly.max_residual < 0.01) {
      if (poly.coeffs.back() != std::make_pair(Int(1), Int(0)))
        throw std::logic_error("class_polynomial: product is not monic");
      return poly;
    }
  }
  throw RoundingError("class_polynomial: rounding residual too large even after precision retry");
}

}  // namespace weber
