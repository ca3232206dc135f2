#include "weber/bigfloat.hpp"

#include <algorithm>
#include <stdexcept>

namespace weber {

namespace {
mpfr_prec_t join(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat BigFloat::of(long x, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_si(r.v_, x, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::of(const Int& x, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::of(double x, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_d(r.v_, x, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::rounded(mpfr_prec_t prec) const {
  BigFloat r(prec);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator+(const BigFloat& o) const {
  BigFloat r(join(*this, o));
  mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-(const BigFloat& o) const {
  BigFloat r(join(*this, o));
  mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator*(const BigFloat& o) const {
  BigFloat r(join(*this, o));
  mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator/(const BigFloat& o) const {
  BigFloat r(join(*this, o));
  mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt() const {
  BigFloat r(precision());
  mpfr_sqrt(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r(precision());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::exp() const {
  BigFloat r(precision());
  mpfr_exp(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::log() const {
  BigFloat r(precision());
  mpfr_log(r.v_, v_, MPFR_RNDN);
  return r;
}

void BigFloat::sin_cos(BigFloat& s, BigFloat& c) const {
  s = BigFloat(precision());
  c = BigFloat(precision());
  mpfr_sin_cos(s.v_, c.v_, v_, MPFR_RNDN);
}

BigFloat BigFloat::hypot(const BigFloat& x, const BigFloat& y) {
  BigFloat r(join(x, y));
  mpfr_hypot(r.raw(), x.v_, y.v_, MPFR_RNDN);
  return r;
}

Int BigFloat::round_to_int() const {
  BigFloat n(precision());
  mpfr_rint(n.v_, v_, MPFR_RNDN);
  Int z;
  mpfr_get_z(z.get_mpz_t(), n.v_, MPFR_RNDN);
  return z;
}

std::string BigFloat::str(size_t digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

BigComplex BigComplex::of(double re, double im, mpfr_prec_t prec) {
  return BigComplex(BigFloat::of(re, prec), BigFloat::of(im, prec));
}

BigComplex BigComplex::real(const BigFloat& x) {
  return BigComplex(x, BigFloat::of(0L, x.precision()));
}

BigComplex BigComplex::zero(mpfr_prec_t prec) { return of(0.0, 0.0, prec); }
BigComplex BigComplex::one(mpfr_prec_t prec) { return of(1.0, 0.0, prec); }

mpfr_prec_t BigComplex::precision() const {
  return std::min(re_.precision(), im_.precision());
}

BigComplex BigComplex::rounded(mpfr_prec_t prec) const {
  return BigComplex(re_.rounded(prec), im_.rounded(prec));
}

BigComplex BigComplex::operator+(const BigComplex& o) const {
  return BigComplex(re_ + o.re_, im_ + o.im_);
}

BigComplex BigComplex::operator-(const BigComplex& o) const {
  return BigComplex(re_ - o.re_, im_ - o.im_);
}

BigComplex BigComplex::operator*(const BigComplex& o) const {
  return BigComplex(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
}

BigComplex BigComplex::operator/(const BigComplex& o) const {
  return *this * o.inverse();
}

BigComplex BigComplex::operator-() const { return BigComplex(-re_, -im_); }

BigComplex BigComplex::conj() const { return BigComplex(re_, -im_); }

BigFloat BigComplex::abs() const { return BigFloat::hypot(re_, im_); }

BigFloat BigComplex::norm() const { return re_ * re_ + im_ * im_; }

BigComplex BigComplex::inverse() const {
  BigFloat n = norm();
  if (n.is_zero()) throw std::domain_error("BigComplex::inverse of zero");
  return BigComplex(re_ / n, -im_ / n);
}

BigComplex BigComplex::exp() const {
  BigFloat m = re_.exp(), s(precision()), c(precision());
  im_.sin_cos(s, c);
  return BigComplex(m * c, m * s);
}

BigComplex BigComplex::pow(long e) const {
  if (e < 0) throw std::invalid_argument("BigComplex::pow: negative exponent");
  BigComplex acc = one(precision());
  BigComplex base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

BigComplex BigComplex::sqrt_posreal() const {
  mpfr_prec_t p = precision();
  BigFloat m = abs();
  BigFloat two = BigFloat::of(2L, p);
  if (re_.sign() >= 0) {
    // u = sqrt((|z|+re)/2) is well-conditioned here
    BigFloat u = ((m + re_) / two).sqrt();
    if (u.is_zero()) return zero(p);  // z == 0
    BigFloat v = im_ / (two * u);
    return BigComplex(u, v);
  }
  BigFloat t = ((m - re_) / two).sqrt();
  BigFloat v = im_.sign() >= 0 ? t : -t;
  BigFloat u = im_.abs() / (two * t);
  return BigComplex(u, v);
}

BigComplex BigComplex::times_i() const { return BigComplex(-im_, re_); }
BigComplex BigComplex::times_minus_i() const { return BigComplex(im_, -re_); }

std::string BigComplex::str(size_t digits) const {
  return re_.str(digits) + (im_.sign() < 0 ? " - " : " + ") + im_.abs().str(digits) + "i";
}

BigComplex unity_value(const RootOfUnity24& u, mpfr_prec_t prec) {
  BigFloat angle = BigFloat::pi(prec) * BigFloat::of(static_cast<long>(u.folded_exponent()), prec) /
                   BigFloat::of(12L, prec);
  BigFloat s(prec), c(prec);
  angle.sin_cos(s, c);
  return BigComplex(c, s);
}

}  // namespace weber
