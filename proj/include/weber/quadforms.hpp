#pragma once

#include <vector>

#include "weber/bigfloat.hpp"
#include "weber/numeric.hpp"

namespace weber {

// Negative discriminant D = conductor^2 * delta with delta fundamental.
struct Discriminant {
  Int D;
  Int delta;
  Int conductor;
  explicit Discriminant(const Int& d);
};

// Positive definite integral binary quadratic form a x^2 + b xy + c y^2.
struct QuadForm {
  Int a, b, c;
  Int discriminant() const { return b * b - 4 * a * c; }
  bool primitive() const;
  bool reduced() const;
  // Action of [[p, q], [r, s]] in GL2 (substitute x -> px+qy, y -> rx+sy).
  QuadForm transformed(const Int& p, const Int& q, const Int& r, const Int& s) const;
  // b -> b + 2ak, same a.
  QuadForm translated(const Int& k) const;
  QuadForm inverse() const { return {a, -b, c}; }
  bool operator==(const QuadForm& o) const { return a == o.a && b == o.b && c == o.c; }
  bool operator<(const QuadForm& o) const;
  std::string str() const;
};

QuadForm reduce(QuadForm f);

// Reduced representatives of the form class group, principal class first,
// the rest ordered by (a, b).
std::vector<QuadForm> class_representatives(const Int& D);
long class_number(const Int& D);

// Full set of class representatives sharing B = b_target (mod 2M) and
// gcd(a, M) = 1, anchored at the principal form.
struct NSystem {
  Int level;  // the M all middle coefficients agree modulo 2M
  std::vector<QuadForm> forms;
  QuadForm anchor;  // the adjusted principal form
};
NSystem n_system(const Int& D, const Int& M, const Int& b_target);

// CM point (-b + sqrt(D)) / (2a) in the upper half plane.
BigComplex root_of(const QuadForm& f, mpfr_prec_t prec);

}  // namespace weber
