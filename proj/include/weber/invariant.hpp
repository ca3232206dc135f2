#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weber/numeric.hpp"
#include "weber/quadforms.hpp"

namespace weber {

// t = 24/gcd(n-1, 24); s doubles t when t is odd and n is not a square.
struct ExponentData {
  long n;
  long t;
  long s;
  bool square;
};
ExponentData canonical_exponents(long n);

// Condition "r:R" on a witness B: (B^2 - D)/(4n) = r (mod R).
// Stored split into its 2-power and 3-power parts so rules compose.
struct BCondition {
  long r2 = 0, R2 = 1;  // R2 in {1,2,4,8}
  long r3 = 0, R3 = 1;  // R3 in {1,3}
  long R() const { return R2 * R3; }
  long r() const;  // CRT-combined residue mod R()
  bool trivial() const { return R2 == 1 && R3 == 1; }
  // "0:1", "1:4", or "1:4 & 2:3" for a genuine intersection
  std::string str() const;
  // always the single combined "r:R"
  std::string combined_str() const;
  bool operator==(const BCondition& o) const {
    return r2 == o.r2 && R2 == o.R2 && r3 == o.r3 && R3 == o.R3;
  }
};

enum class RealityClass { rationalPoly, rationalAfterSqrtD, complexQuadratic };
std::string to_string(RealityClass k);

struct InadmissibleError : std::runtime_error {
  long n;
  Int D;
  Int prime;  // the divisor of n where the local condition fails
  InadmissibleError(long n_, Int D_, Int p_);
};

// Per-prime local solvability of B^2 = D (mod 4n), cross-checked against a
// direct square-root computation.  Returns the smallest witness (< 2n).
std::optional<Int> admissible(const Int& D, long n, Int* failing_prime = nullptr);

// Genus character values at p: one Legendre symbol per odd prime divisor of
// D, then the 2-adic characters determined by D/4 mod 8.
std::vector<int> generic_characters(const Int& D, const Int& p);

// The transformation exponent attached to a form [A,B,C] and a pair (u,v)
// describing a degree-p isogeny direction; callers read it mod 24.
// Preconditions (rejected with named reasons): p = u(u-vB) + v^2 AC > 0,
// gcd(p, 6n*conductor(D)) = 1, p | u, n*p | C.
Int theta(long n, const QuadForm& f, const Int& u, const Int& v);

// One applicable divisibility rule: if a witness satisfies `cond`, every
// transformation exponent is divisible by 2^cert (2-adic rules) or
// 3^cert (3-adic rules) on top of what the other side certifies.
struct RuleCase {
  std::string id;  // mechanism label, empty for the unconditional baseline
  BCondition cond;
  long cert;  // total certified valuation of the exponent
};

// All 2-adic rule cases whose hypotheses hold for (n, D), baseline included.
std::vector<RuleCase> two_adic_cases(long n, const Int& D);
// Same for the 3-adic side.
std::vector<RuleCase> three_adic_cases(long n, const Int& D);

struct InvariantChoice {
  long n;
  Int D;
  long e;
  BCondition condition;
  Int b;      // concrete witness, 0 <= b < 2*level
  Int level;  // M = (s/e) n
  std::string rule2, rule3;  // applied rule ids ("" when only the baseline)
  ExponentData exponents;
};

// All witnesses in [0, 2M) of the condition's congruence for this n, D.
std::vector<Int> condition_witnesses(long n, const Int& D, const BCondition& cond, const Int& M);

// Minimal e | s reachable by combining at most one 2-adic and one 3-adic
// rule with a simultaneously solvable witness congruence.
InvariantChoice select_invariant(long n, const Int& D);
// Same selection, but with a caller-chosen witness (must satisfy the
// winning congruence).
InvariantChoice select_invariant(long n, const Int& D, const Int& witness);

RealityClass classify_reality(long n, const Int& D, long e, const Int& b);

struct ConditionRow {
  BCondition cond;
  long e;
  std::vector<long> residues;  // classes of D mod the table modulus
  std::string rule2, rule3;
};
struct ConditionTable {
  long n;
  long modulus;
  std::vector<ConditionRow> rows;
};
// Classify every admissible residue class of D modulo the table modulus.
ConditionTable generate_condition_table(long n);

}  // namespace weber
