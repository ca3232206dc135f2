#include <cmath>
#include <random>

#include "doctest.h"
#include "weber/eta.hpp"

using namespace weber;

namespace {

double rel_err(const BigComplex& got, const BigComplex& want) {
  return ((got - want).abs() / want.abs()).to_double();
}

BigComplex random_z(std::mt19937_64& rng, mpfr_prec_t prec) {
  double x = (static_cast<double>(rng() % 10000) / 10000.0) - 0.5;
  double y = 0.6 + static_cast<double>(rng() % 10000) / 10000.0;
  return BigComplex::of(x, y, prec);
}

}  // namespace

TEST_CASE("eta at i matches the gamma-function closed form") {
  mpfr_prec_t prec = 256;
  BigComplex ei = eta(BigComplex::of(0, 1, prec), prec);
  CHECK(ei.im().to_double() == doctest::Approx(0.0));
  // Gamma(1/4) / (2 pi^(3/4))
  BigFloat g(prec + 32), pi = BigFloat::pi(prec + 32);
  mpfr_set_d(g.raw(), 0.25, MPFR_RNDN);
  mpfr_gamma(g.raw(), g.raw(), MPFR_RNDN);
  BigFloat p34(prec + 32);
  mpfr_set(p34.raw(), pi.raw(), MPFR_RNDN);
  mpfr_pow_ui(p34.raw(), p34.raw(), 3, MPFR_RNDN);
  mpfr_rootn_ui(p34.raw(), p34.raw(), 4, MPFR_RNDN);
  BigFloat want = g / (BigFloat::of(2L, prec + 32) * p34);
  CHECK((ei.re() - want).abs().to_double() < 1e-30);
}

TEST_CASE("eta halves its period under doubling at i") {
  mpfr_prec_t prec = 256;
  BigComplex ei = eta(BigComplex::of(0, 1, prec), prec);
  BigComplex e2i = eta(BigComplex::of(0, 2, prec), prec);
  // eta(2i) = eta(i) / 2^(3/8)
  BigFloat scale(prec);
  mpfr_set_d(scale.raw(), 0.375, MPFR_RNDN);
  mpfr_exp2(scale.raw(), scale.raw(), MPFR_RNDN);
  CHECK((e2i * BigComplex::real(scale) - ei).abs().to_double() < 1e-30);
}

TEST_CASE("eta functional equations at random points") {
  std::mt19937_64 rng(7);
  mpfr_prec_t prec = 192;
  for (int i = 0; i < 10; ++i) {
    BigComplex z = random_z(rng, prec);
    BigComplex lhs = eta(z + BigComplex::one(prec), prec);
    BigComplex rhs = unity_value(RootOfUnity24(1), prec) * eta(z, prec);
    CHECK(rel_err(lhs, rhs) < 1e-50);

    BigComplex inv = -z.inverse();
    BigComplex lhs2 = eta(inv, prec);
    BigComplex rhs2 = z.times_minus_i().sqrt_posreal() * eta(z, prec);
    CHECK(rel_err(lhs2, rhs2) < 1e-50);
  }
}

TEST_CASE("reduction reports a consistent prefactor") {
  std::mt19937_64 rng(13);
  mpfr_prec_t prec = 192;
  for (int i = 0; i < 10; ++i) {
    double x = (static_cast<double>(rng() % 10000) / 10000.0 - 0.5) * 16.0;
    double y = 0.05 + static_cast<double>(rng() % 10000) / 10000.0;
    BigComplex z = BigComplex::of(x, y, prec);
    CAPTURE(i);
    EtaArg red = reduce_to_fundamental(z);
    CHECK(red.z.im().to_double() >= 0.8);
    CHECK(std::abs(red.z.re().to_double()) <= 0.5 + 1e-9);
    CHECK(red.z.norm().to_double() >= 1.0 - 1e-9);
    BigComplex direct = eta(z, prec);
    BigComplex via = red.factor * eta(red.z, prec);
    CHECK(rel_err(direct, via) < 1e-40);
  }
}

TEST_CASE("eta multiplier on pinned matrices") {
  CHECK(epsilon_eta(Int(1), Int(1), Int(0), Int(1)) == RootOfUnity24(1));
  CHECK(epsilon_eta(Int(0), Int(-1), Int(1), Int(0)) == RootOfUnity24(-3));
  CHECK(epsilon_eta(Int(-1), Int(0), Int(0), Int(-1)) == RootOfUnity24(0));  // -I acts trivially
  CHECK_THROWS_AS(epsilon_eta(Int(1), Int(1), Int(1), Int(1)), std::invalid_argument);
}

TEST_CASE("eta multiplier matches numerics on random unimodular matrices") {
  std::mt19937_64 rng(19);
  mpfr_prec_t prec = 128;
  for (int trial = 0; trial < 50; ++trial) {
    // random word in the two generators
    Int a = 1, b = 0, c = 0, d = 1;
    for (int w = 0; w < 6; ++w) {
      long k = static_cast<long>(rng() % 11) - 5;
      // right-multiply by T^k, then maybe by S
      b += a * k;
      d += c * k;
      if (rng() % 2) {
        Int na = b, nc = d;
        b = -a;
        d = -c;
        a = na;
        c = nc;
      }
    }
    if (c < 0 || (c == 0 && d < 0)) {
      a = -a;
      b = -b;
      c = -c;
      d = -d;
    }
    REQUIRE(a * d - b * c == 1);
    BigComplex z = random_z(rng, prec);
    BigComplex mz = (BigComplex::real(BigFloat::of(a, prec)) * z + BigComplex::real(BigFloat::of(b, prec))) /
                    (BigComplex::real(BigFloat::of(c, prec)) * z + BigComplex::real(BigFloat::of(d, prec)));
    BigComplex lhs = eta(mz, prec);
    BigComplex root = (BigComplex::real(BigFloat::of(c, prec)) * z + BigComplex::real(BigFloat::of(d, prec)))
                          .sqrt_posreal();
    BigComplex rhs = unity_value(epsilon_eta(a, b, c, d), prec) * root * eta(z, prec);
    CHECK(rel_err(lhs, rhs) < 1e-25);
  }
}

TEST_CASE("level quotient multiplier on pinned matrices") {
  for (long n : {2L, 3L, 5L, 9L}) {
    RootOfUnity24 eps = epsilon_w(n, Int(1), Int(n), Int(0), Int(1));  // T^n
    CHECK(eps == RootOfUnity24(1 - n));
  }
  CHECK(epsilon_w(4, Int(1), Int(0), Int(0), Int(1)) == RootOfUnity24::one());
  CHECK_THROWS_AS(epsilon_w(3, Int(1), Int(1), Int(0), Int(1)), std::invalid_argument);
}

TEST_CASE("level quotient multiplier matches numerics") {
  std::mt19937_64 rng(23);
  mpfr_prec_t prec = 128;
  for (long n : {2L, 3L, 5L, 9L}) {
    int done = 0;
    while (done < 10) {
      Int c = 1 + Int(rng() % 12);
      Int a = Int(rng() % 40) - 20;
      if (a == 0 || gcd(a, n * c) != 1) continue;
      Int d = mod_inverse(a, n * c) + n * c * (Int(rng() % 3) - 1);
      Int b = (a * d - 1) / c;
      REQUIRE(mod(b, Int(n)) == 0);
      BigComplex z = random_z(rng, prec);
      BigComplex mz = (BigComplex::real(BigFloat::of(a, prec)) * z + BigComplex::real(BigFloat::of(b, prec))) /
                      (BigComplex::real(BigFloat::of(c, prec)) * z + BigComplex::real(BigFloat::of(d, prec)));
      BigComplex lhs = weber_w(n, 1, mz, prec);
      BigComplex rhs = unity_value(epsilon_w(n, a, b, c, d), prec) * weber_w(n, 1, z, prec);
      CHECK(rel_err(lhs, rhs) < 1e-10);
      ++done;
    }
  }
}

TEST_CASE("the quotient under inversion picks up sqrt(n)") {
  mpfr_prec_t prec = 192;
  std::mt19937_64 rng(31);
  for (long n : {2L, 3L}) {
    BigComplex z = random_z(rng, prec);
    BigComplex lhs = weber_w(n, 1, -z.inverse(), prec);
    BigFloat nf = BigFloat::of(n, prec);
    BigComplex nz(z.re() * nf, z.im() * nf);
    BigComplex rhs = BigComplex::real(nf.sqrt()) * eta(nz, prec) / eta(z, prec);
    CHECK(rel_err(lhs, rhs) < 1e-40);
  }
}

TEST_CASE("j at complex multiplication points") {
  mpfr_prec_t prec = 384;
  BigComplex ji = j_invariant(BigComplex::of(0, 1, prec), prec);
  CHECK((ji - BigComplex::of(1728, 0, prec)).abs().to_double() < 1e-40);

  BigComplex j2i = j_invariant(BigComplex::of(0, 2, prec), prec);
  CHECK((j2i - BigComplex::of(287496, 0, prec)).abs().to_double() < 1e-40);

  BigFloat half = BigFloat::of(1L, prec) / BigFloat::of(2L, prec);
  BigComplex rho(half, (BigFloat::of(3L, prec).sqrt() / BigFloat::of(2L, prec)));
  CHECK(j_invariant(rho, prec).abs().to_double() < 1e-40);

  BigComplex t7(half, BigFloat::of(7L, prec).sqrt() / BigFloat::of(2L, prec));
  CHECK((j_invariant(t7, prec) - BigComplex::of(-3375, 0, prec)).abs().to_double() < 1e-40);

  BigComplex t163(half, BigFloat::of(163L, prec).sqrt() / BigFloat::of(2L, prec));
  BigComplex want(BigFloat::of(Int("-262537412640768000"), prec), BigFloat::of(0L, prec));
  CHECK(((j_invariant(t163, prec) - want).abs() / want.abs()).to_double() < 1e-40);
}

TEST_CASE("leading q-order of the quotient") {
  mpfr_prec_t prec = 256;
  for (long n : {2L, 3L, 5L}) {
    BigComplex z = BigComplex::of(0.0, 40.0, prec);
    BigComplex w = weber_w(n, 1, z, prec);
    double measured = w.abs().log().to_double();
    // eta(z/n) decays slower than eta(z), so the quotient grows like q^(-(n-1)/24n)
    double predicted = 2 * M_PI * 40.0 * static_cast<double>(n - 1) / (24.0 * static_cast<double>(n));
    CHECK(std::abs(measured / predicted - 1.0) < 1e-6);
  }
}

TEST_CASE("sixth power of the level-two quotient is imaginary on the mirror line") {
  mpfr_prec_t prec = 256;
  BigFloat im = BigFloat::of(72L, prec).sqrt() / BigFloat::of(2L, prec);
  BigComplex z0(BigFloat::of(-2L, prec), im);  // (-4 + sqrt(-72)) / 2
  BigComplex v = weber_w(2, 6, z0, prec);
  CHECK((v.re().abs() / v.abs()).to_double() < 1e-70);
}

TEST_CASE("polynomial string forms") {
  Discriminant d(Int(-11));
  AlgebraicPoly p1{d, {{Int(-1), Int(-1)}, {Int(1), Int(0)}}, 0.0};
  CHECK(p1.str() == "X + (-1-w)");
  CHECK_FALSE(p1.rational());
  AlgebraicPoly p2{d, {{Int(729), Int(0)}, {Int(-162), Int(0)}, {Int(1), Int(0)}}, 0.0};
  CHECK(p2.str() == "X^2 - 162*X + 729");
  CHECK(p2.rational());
  AlgebraicPoly p3{d, {{Int(0), Int(-1)}, {Int(1), Int(0)}}, 0.0};
  CHECK(p3.str() == "X - w");
  AlgebraicPoly p4{d, {{Int(5), Int(0)}, {Int(0), Int(-3)}, {Int(1), Int(0)}}, 0.0};
  CHECK(p4.str() == "X^2 - 3*w*X + 5");
  AlgebraicPoly p5{d, {{Int(0), Int(0)}, {Int(2), Int(7)}, {Int(1), Int(0)}}, 0.0};
  CHECK(p5.str() == "X^2 + (2+7*w)*X");
}

TEST_CASE("omega conventions") {
  CHECK(omega_description(Discriminant(Int(-11))) == "omega = (1+sqrt(-11))/2");
  CHECK(omega_description(Discriminant(Int(-72))) == "omega = sqrt(-2)");
  CHECK(omega_description(Discriminant(Int(-12))) == "omega = (1+sqrt(-3))/2");
  BigComplex om = omega_value(Discriminant(Int(-72)), 128);
  CHECK(om.re().to_double() == doctest::Approx(0.0));
  CHECK(om.im().to_double() == doctest::Approx(std::sqrt(2.0)));
  BigComplex om2 = omega_value(Discriminant(Int(-11)), 128);
  CHECK(om2.re().to_double() == doctest::Approx(0.5));
  CHECK(om2.im().to_double() == doctest::Approx(std::sqrt(11.0) / 2));
}

TEST_CASE("class polynomials on pinned data") {
  InvariantChoice c1 = select_invariant(5, Int(-11));
  AlgebraicPoly p1 = class_polynomial(c1);
  REQUIRE(p1.coeffs.size() == 2);
  CHECK(p1.coeffs[0] == std::pair<Int, Int>(Int(-1), Int(-1)));
  CHECK(p1.coeffs[1] == std::pair<Int, Int>(Int(1), Int(0)));
  CHECK(p1.max_residual < 1e-10);

  InvariantChoice c2 = select_invariant(3, Int(-24));
  AlgebraicPoly p2 = class_polynomial(c2);
  CHECK(p2.rational());
  CHECK(p2.str() == "X^2 - 162*X + 729");

  // higher precision must not change the rounded result
  AlgebraicPoly p2b = class_polynomial(c2, PolyVariant::plain, 512);
  CHECK(p2b.coeffs == p2.coeffs);
}

TEST_CASE("conjugate classes pair up over an odd class group") {
  // h(-23) = 3: one real root and one conjugate pair, so plain coefficients
  // alternate between rationals and sqrt(D)-multiples once the witness class
  // is mirror-symmetric, and scaling the roots by sqrt(D) clears everything.
  InvariantChoice base = select_invariant(23, Int(-23));
  CHECK(base.e == 2);
  Int picked = -1;
  for (const Int& w : condition_witnesses(23, Int(-23), base.condition, base.level)) {
    if (classify_reality(23, Int(-23), base.e, w) == RealityClass::rationalAfterSqrtD) {
      picked = w;
      break;
    }
  }
  REQUIRE(picked >= 0);
  InvariantChoice ch = select_invariant(23, Int(-23), picked);

  AlgebraicPoly plain = class_polynomial(ch);
  REQUIRE(plain.degree() == 3);
  CHECK(plain.max_residual < 1e-10);
  // x + y*omega with omega = (1+sqrt(-23))/2: a sqrt(D)-multiple means 2x+y=0
  CHECK(plain.coeffs[3] == std::pair<Int, Int>(Int(1), Int(0)));
  CHECK(2 * plain.coeffs[2].first + plain.coeffs[2].second == 0);
  CHECK(plain.coeffs[1].second == 0);
  CHECK(2 * plain.coeffs[0].first + plain.coeffs[0].second == 0);

  AlgebraicPoly scaled = class_polynomial(ch, PolyVariant::timesSqrtD);
  REQUIRE(scaled.degree() == 3);
  CHECK(scaled.rational());
  CHECK(scaled.max_residual < 1e-10);
  // coefficient of X^k picks up (sqrt(D))^(3-k)
  CHECK(scaled.coeffs[1].first == Int(-23) * plain.coeffs[1].first);
  CHECK(2 * scaled.coeffs[2].first == Int(-23) * plain.coeffs[2].second);
  CHECK(2 * scaled.coeffs[0].first == Int(529) * plain.coeffs[0].second);
}

TEST_CASE("precision estimate scales sanely") {
  InvariantChoice ch = select_invariant(5, Int(-11));
  NSystem sys = n_system(ch.D, ch.level, ch.b);
  mpfr_prec_t est = precision_estimate(ch, sys);
  CHECK(est >= 64);
  CHECK(est < 4096);
}
