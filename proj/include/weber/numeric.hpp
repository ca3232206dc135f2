#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace weber {

using Int = mpz_class;

// Mathematical remainder in [0, |m|).
Int mod(const Int& a, const Int& m);
Int gcd(const Int& a, const Int& b);
// Conversion with range check.
long to_long(const Int& a);

struct Residue {
  Int value;    // normalized into [0, modulus)
  Int modulus;  // > 0
  Residue(Int v, Int m);
  bool operator==(const Residue& o) const { return value == o.value && modulus == o.modulus; }
};

// Kronecker symbol (a/n), n != 0.
int kronecker(const Int& a, const Int& n);
int kronecker(long a, long n);

// p-adic valuation of n != 0.
long valuation(const Int& n, const Int& p);

// n = odd * 2^lambda; by convention {1, 1} when n == 0.
struct OddPart {
  long lambda;
  Int odd;
};
OddPart odd_part(const Int& n);

bool is_prime(const Int& n);
bool is_square(const Int& n);
// Trial division, ascending primes. n != 0.
std::vector<std::pair<Int, int>> factorize(Int n);
Int mod_inverse(const Int& a, const Int& m);

// All x in [0, m) with x^2 = a (mod m), ascending; empty if none.
std::vector<Int> sqrt_mod_all(const Int& a, const Int& m);
// Smallest such x.
std::optional<Int> sqrt_mod(const Int& a, const Int& m);

// sign * zeta24^k, zeta24 = exp(2 pi i/24).  The sign slot keeps quadratic
// symbols out of the exponent so transformation formulas stay literal.
class RootOfUnity24 {
 public:
  RootOfUnity24() = default;
  explicit RootOfUnity24(long k, int sign = 1);
  static RootOfUnity24 one() { return RootOfUnity24(0, 1); }
  long exponent() const { return k_; }
  int sign() const { return sign_; }
  // exponent with the sign folded in as zeta24^12
  long folded_exponent() const { return (k_ + (sign_ < 0 ? 12 : 0)) % 24; }
  RootOfUnity24 operator*(const RootOfUnity24& o) const;
  RootOfUnity24 pow(long e) const;
  RootOfUnity24 times_sign(int s) const;
  bool operator==(const RootOfUnity24& o) const { return folded_exponent() == o.folded_exponent(); }

 private:
  long k_ = 0;
  int sign_ = 1;
};

}  // namespace weber
