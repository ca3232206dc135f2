#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "weber/bigfloat.hpp"
#include "weber/numeric.hpp"

namespace weber {

struct Matrix2 {
  Int a, b, c, d;
};

BigComplex moebius(const Matrix2& m, const BigComplex& z);

// right coset representatives of the upper-triangular-mod-n subgroup in SL2(Z)
struct CosetSet {
  long n;
  std::vector<Matrix2> mats;
};

// smallest mu >= 1 with gcd(mu*k - 1, n) == 1
long mu_of(long k, long n);

long psi(long n);  // index of the level-n subgroup: n * prod(1 + 1/p)

// correction term entering the degree and height formulas; always an integer
long S_of_N(long n);

CosetSet cosets(long n);

struct DegreeData {
  long degF;  // degree in the function variable
  long degJ;  // degree in J
};
DegreeData degrees(long n);

// a power of a level quotient: single level n, or a product over two primes
struct FunctionDescriptor {
  bool dbl;
  long n;        // single level (0 when dbl)
  long p1, p2;   // prime pair (0 when single)
  long e;
  std::string name() const;
};

// ratio of the modular polynomial height to the classical one at same level
mpq_class height_factor(const FunctionDescriptor& f);

struct HeightEntry {
  FunctionDescriptor f;
  mpq_class gain;  // 1 / height_factor
  long degj;
};

// all candidate functions with gain >= min_gain and degJ <= max_degj,
// sorted by decreasing gain
std::vector<HeightEntry> comparison_table(const mpq_class& min_gain = 13, long max_degj = 20);

struct BivariatePoly {
  long n;
  long degF;
  long degJ;
  std::vector<std::vector<Int>> c;  // c[d][m] multiplies F^d J^m
  std::string str() const;
  BigComplex eval(const BigComplex& F, const BigComplex& J) const;
};

// modular polynomial linking the canonical power of the level quotient to J
BivariatePoly modular_polynomial(long n, mpfr_prec_t prec = 0);

}  // namespace weber
