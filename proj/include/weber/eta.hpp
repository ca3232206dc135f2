#pragma once

#include <string>
#include <vector>

#include "weber/bigfloat.hpp"
#include "weber/invariant.hpp"
#include "weber/quadforms.hpp"

namespace weber {

// z reduced to |Re| <= 1/2, |z| >= 1 with the accumulated prefactor:
// eta(original) = factor * eta(z).
struct EtaArg {
  BigComplex z;
  BigComplex factor;
};
EtaArg reduce_to_fundamental(const BigComplex& z);

// Dedekind eta via the sparse (pentagonal-exponent) product expansion,
// after reduction to the fundamental domain.
BigComplex eta(const BigComplex& z, mpfr_prec_t prec);

// Root-of-unity factor of eta under a unimodular substitution, normalised
// so c >= 0 (and d > 0 when c = 0): eta(Mz) = eps * sqrt(cz+d) * eta(z).
RootOfUnity24 epsilon_eta(Int a, Int b, Int c, Int d);

// Root-of-unity factor of the level-n quotient under M with n | b:
// w_n(Mz) = eps * w_n(z).
RootOfUnity24 epsilon_w(long n, Int a, Int b, Int c, Int d);

// (eta(z/n) / eta(z))^e
BigComplex weber_w(long n, long e, const BigComplex& z, mpfr_prec_t prec);

// j from the level-2 quotient: x = w_2^24, j = (x+16)^3/x.
BigComplex j_invariant(const BigComplex& z, mpfr_prec_t prec);

struct RoundingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Polynomial with coefficients x + y*omega, omega the standard generator
// for the *fundamental* discriminant underlying D.
struct AlgebraicPoly {
  Discriminant disc;
  std::vector<std::pair<Int, Int>> coeffs;  // ascending, leading (1,0)
  double max_residual = 0.0;
  bool rational() const;
  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  std::string str() const;
};

enum class PolyVariant { plain, timesSqrtD };

// Working-precision heuristic for class polynomial assembly.
mpfr_prec_t precision_estimate(const InvariantChoice& choice, const NSystem& sys);

// Exact class polynomial: evaluates the invariant over the level-M system,
// multiplies out, and rounds to Z or Z+Z*omega per classify_reality.
AlgebraicPoly class_polynomial(const InvariantChoice& choice, PolyVariant variant = PolyVariant::plain,
                               mpfr_prec_t prec = 0);

// omega for the fundamental discriminant: sqrt(delta/4) if 4 | delta,
// else (1+sqrt(delta))/2.
BigComplex omega_value(const Discriminant& disc, mpfr_prec_t prec);
std::string omega_description(const Discriminant& disc);

}  // namespace weber
