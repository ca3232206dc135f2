#pragma once

#include <mpfr.h>

#include <string>

#include "weber/numeric.hpp"

namespace weber {

// Thin RAII wrapper over mpfr_t.  Binary ops compute at the larger of the
// two operand precisions, rounding to nearest.
class BigFloat {
 public:
  BigFloat() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
  explicit BigFloat(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat of(long x, mpfr_prec_t prec);
  static BigFloat of(const Int& x, mpfr_prec_t prec);
  static BigFloat of(double x, mpfr_prec_t prec);
  static BigFloat pi(mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  BigFloat rounded(mpfr_prec_t prec) const;

  BigFloat operator+(const BigFloat& o) const;
  BigFloat operator-(const BigFloat& o) const;
  BigFloat operator*(const BigFloat& o) const;
  BigFloat operator/(const BigFloat& o) const;
  BigFloat operator-() const;

  bool operator<(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) < 0; }
  bool operator>(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) > 0; }
  bool operator==(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) == 0; }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_); }

  BigFloat sqrt() const;
  BigFloat abs() const;
  BigFloat exp() const;
  BigFloat log() const;
  // (cos x, sin x) in one call.
  void sin_cos(BigFloat& s, BigFloat& c) const;
  static BigFloat hypot(const BigFloat& x, const BigFloat& y);

  // Nearest integer, and the distance to it.
  Int round_to_int() const;
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string str(size_t digits = 20) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  mpfr_t v_;
};

// Rectangular complex on two BigFloats.  No external complex library:
// everything needed is a handful of formulas.
class BigComplex {
 public:
  BigComplex() = default;
  BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
  static BigComplex of(double re, double im, mpfr_prec_t prec);
  static BigComplex real(const BigFloat& x);
  static BigComplex zero(mpfr_prec_t prec);
  static BigComplex one(mpfr_prec_t prec);

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  mpfr_prec_t precision() const;
  BigComplex rounded(mpfr_prec_t prec) const;

  BigComplex operator+(const BigComplex& o) const;
  BigComplex operator-(const BigComplex& o) const;
  BigComplex operator*(const BigComplex& o) const;
  BigComplex operator/(const BigComplex& o) const;
  BigComplex operator-() const;

  BigComplex conj() const;
  BigFloat abs() const;
  BigFloat norm() const;  // |z|^2
  BigComplex inverse() const;
  BigComplex exp() const;
  BigComplex pow(long e) const;  // integer exponent, e >= 0
  // Square root with nonnegative real part (principal branch).
  BigComplex sqrt_posreal() const;
  BigComplex times_i() const;
  BigComplex times_minus_i() const;

  std::string str(size_t digits = 20) const;

 private:
  BigFloat re_, im_;
};

// Numeric value of sign * zeta24^k at the given precision.
BigComplex unity_value(const RootOfUnity24& u, mpfr_prec_t prec);

}  // namespace weber
