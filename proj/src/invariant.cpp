#include "weber/invariant.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace weber {

ExponentData canonical_exponents(long n) {
  if (n < 2) throw std::invalid_argument("canonical_exponents: n must be >= 2");
  long t = 24 / to_long(gcd(Int(n - 1), Int(24)));
  bool sq = is_square(Int(n));
  long s = (t % 2 == 1 && !sq) ? 2 * t : t;
  return {n, t, s, sq};
}

long BCondition::r() const {
  for (long x = 0; x < R(); ++x)
    if (x % R2 == r2 && x % R3 == r3) return x;
  throw std::logic_error("BCondition: no CRT residue");
}

std::string BCondition::str() const {
  auto part = [](long r, long R) { return std::to_string(r) + ":" + std::to_string(R); };
  if (trivial()) return "0:1";
  if (R3 == 1) return part(r2, R2);
  if (R2 == 1) return part(r3, R3);
  return part(r2, R2) + " & " + part(r3, R3);
}

std::string BCondition::combined_str() const { return std::to_string(r()) + ":" + std::to_string(R()); }

std::string to_string(RealityClass k) {
  switch (k) {
    case RealityClass::rationalPoly: return "rationalPoly";
    case RealityClass::rationalAfterSqrtD: return "rationalAfterSqrtD";
    default: return "complexQuadratic";
  }
}

InadmissibleError::InadmissibleError(long n_, Int D_, Int p_)
    : std::runtime_error("no square root of " + D_.get_str() + " modulo " + Int(4 * n_).get_str() +
                         " (fails at p=" + p_.get_str() + ")"),
      n(n_),
      D(std::move(D_)),
      prime(std::move(p_)) {}

std::optional<Int> admissible(const Int& D, long n, Int* failing_prime) {
  Discriminant disc(D);
  bool ok = true;
  Int bad = 0;
  for (auto& [p, ep] : factorize(Int(n))) {
    int chi = kronecker(disc.delta, p);
    long vc = mod(disc.conductor, p) == 0 ? valuation(disc.conductor, p) : 0;
    bool okp = chi == 1 || (chi == -1 && ep <= 2 * vc) || (chi == 0 && ep <= 2 * vc + 1);
    if (!okp) {
      ok = false;
      bad = p;
      break;
    }
  }
  auto root = sqrt_mod(D, 4 * Int(n));
  if (ok != root.has_value())
    throw std::logic_error("admissible: local criterion disagrees with direct root search");
  if (!ok) {
    if (failing_prime) *failing_prime = bad;
    return std::nullopt;
  }
  return root;
}

std::vector<int> generic_characters(const Int& D, const Int& p) {
  Discriminant disc(D);
  if (gcd(p, 2 * disc.conductor * D) != 1)
    throw std::invalid_argument("generic_characters: p must be coprime to 2cD");
  std::vector<int> out;
  for (auto& [q, e] : factorize(D))
    if (q != 2) out.push_back(kronecker(p, q));
  if (mod(D, Int(4)) == 0) {
    Int m = mod(D / 4, Int(8));
    int chi4 = kronecker(Int(-1), p);
    int chi8 = kronecker(Int(2), p);
    if (m == 3 || m == 4 || m == 7) {
      out.push_back(chi4);
    } else if (m == 2) {
      out.push_back(chi8);
    } else if (m == 6) {
      out.push_back(chi4 * chi8);
    } else if (m == 0) {
      out.push_back(chi4);
      out.push_back(chi8);
    }
    // m in {1, 5}: no 2-adic character
  }
  return out;
}

Int theta(long n, const QuadForm& f, const Int& u, const Int& v) {
  const Int &A = f.a, &B = f.b, &C = f.c;
  Int up = u - v * B;
  Int p = u * up + v * v * A * C;
  if (p <= 0) throw std::invalid_argument("theta: norm p must be positive");
  Discriminant disc(f.discriminant());
  if (gcd(p, 6 * Int(n) * disc.conductor) != 1)
    throw std::invalid_argument("theta: p must be coprime to 6n and the conductor");
  if (mod(u, p) != 0) throw std::invalid_argument("theta: p must divide u");
  if (mod(C, Int(n) * p) != 0) throw std::invalid_argument("theta: np must divide C");

  OddPart vo = odd_part(v), Ao = odd_part(A), No = odd_part(Int(n));
  Int t1 = Int(n - 1) * v * ((up * C) / (Int(n) * p) + A * ((u / p) * (1 - up * up) - up));
  Int t2 = 3 * vo.odd * Ao.odd * (No.odd - 1) * (up - 1);
  Int t3 = 0;
  if (No.lambda > 0) {
    Int num = 3 * Int(No.lambda) * (up * up - 1);
    if (mod(num, Int(2)) != 0) throw std::logic_error("theta: non-integral 2-power term");
    t3 = num / 2;
  }
  return t1 + t2 + t3;
}

namespace {

BCondition cond2(long r2, long R2) { return BCondition{r2, R2, 0, 1}; }
BCondition cond3(long r3) { return BCondition{0, 1, r3, 3}; }

long clamped_base(long limit, long vs) { return std::max(0L, limit - vs); }

}  // namespace

std::vector<RuleCase> two_adic_cases(long n, const Int& D) {
  ExponentData ed = canonical_exponents(n);
  long v2s = ed.s % 2 == 0 ? valuation(Int(ed.s), Int(2)) : 0;
  long base2 = clamped_base(3, v2s);
  std::vector<RuleCase> out{{"", BCondition{}, base2}};
  if (n % 2 == 1) {
    if (mod(D, Int(2)) == 1) {
      long cert = std::min(3L, valuation(Int(n - 1), Int(2)) + 1);
      if (cert > base2) out.push_back({"odd-level", BCondition{}, cert});
    }
    return out;
  }
  bool d1mod8 = mod(D, Int(8)) == 1;
  long v2D = mod(D, Int(2)) == 0 ? valuation(D, Int(2)) : 0;
  long v2N = valuation(Int(n), Int(2));
  out.push_back({"half.any", cond2(1, 2), 1});
  if (d1mod8) out.push_back({"half.split", cond2(0, 2), 1});
  if (d1mod8) out.push_back({"quarter1.split", cond2(1, 4), 2});
  if (v2D >= 4) out.push_back({"quarter1.d16", cond2(1, 4), 2});
  if (v2N == 1 && v2D == 2) out.push_back({"quarter1.d4", cond2(1, 4), 2});
  if (d1mod8) out.push_back({"quarter3.split", cond2(3, 4), 2});
  if (v2N == 1 && v2D == 3) out.push_back({"quarter3.d8", cond2(3, 4), 2});
  if (v2N >= 2 && v2D == 2) out.push_back({"quarter3.d4", cond2(3, 4), 2});
  if (ed.square) {
    if (d1mod8) {
      out.push_back({"eighth.split.r3", cond2(3, 8), 3});
      out.push_back({"eighth.split.r7", cond2(7, 8), 3});
    }
    if (v2D >= 5) out.push_back({"eighth.d32", cond2(1, 8), 3});
    if (v2D == 4) out.push_back({"eighth.d16", cond2(5, 8), 3});
  }
  return out;
}

std::vector<RuleCase> three_adic_cases(long n, const Int& D) {
  ExponentData ed = canonical_exponents(n);
  long v3s = ed.s % 3 == 0 ? valuation(Int(ed.s), Int(3)) : 0;
  long base3 = clamped_base(1, v3s);
  std::vector<RuleCase> out{{"", BCondition{}, base3}};
  long d3 = to_long(mod(D, Int(3)));
  if (n % 3 == 0) {
    if (d3 == 0) out.push_back({"third.z0", cond3(1), 1});
    if (d3 == 1) out.push_back({"third.z1", cond3(2), 1});
  } else if (n % 3 == 2) {
    if (d3 == 1) out.push_back({"third.t1", cond3(1), 1});
    if (d3 == 2) out.push_back({"third.t2", cond3(2), 1});
  }
  return out;
}

std::vector<Int> condition_witnesses(long n, const Int& D, const BCondition& cond, const Int& M) {
  Int R(cond.R()), r(cond.r());
  if (mod(M, R * n) != 0) throw std::logic_error("condition_witnesses: level not a multiple of Rn");
  Int modulus = 4 * R * n;
  Int target = mod(D + 4 * r * n, modulus);
  std::vector<Int> out;
  for (Int B = 0; B < 2 * M; ++B)
    if (mod(B * B - target, modulus) == 0) out.push_back(B);
  return out;
}

namespace {

struct Combo {
  RuleCase c2, c3;
  long e = 0;
  BCondition cond;
  Int M;
  std::vector<Int> witnesses;
};

long pow_int(long b, long e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::optional<Combo> select_core(long n, const Int& D) {
  ExponentData ed = canonical_exponents(n);
  std::optional<Combo> best;
  for (const RuleCase& c2 : two_adic_cases(n, D)) {
    for (const RuleCase& c3 : three_adic_cases(n, D)) {
      long v2e = std::max({0L, 3 - c2.cert, ed.square ? 0L : 1L});
      long v3e = std::max(0L, 1 - c3.cert);
      long e = pow_int(2, v2e) * pow_int(3, v3e);
      if (ed.s % e != 0) throw std::logic_error("select: exponent does not divide s");
      BCondition cond{c2.cond.r2, c2.cond.R2, c3.cond.r3, c3.cond.R3};
      Int M = Int(ed.s / e) * n;
      auto wits = condition_witnesses(n, D, cond, M);
      if (wits.empty()) continue;
      auto key = [](const Combo& c) { return std::make_tuple(c.e, c.cond.R(), c.cond.r()); };
      Combo cand{c2, c3, e, cond, M, std::move(wits)};
      if (!best || key(cand) < key(*best)) best = std::move(cand);
    }
  }
  return best;
}

Int pick_witness(long n, const Int& D, const Combo& c) {
  if (mod(D, Int(n)) == 0)
    for (const Int& w : c.witnesses)
      if (mod(w, c.M) == 0) return w;
  return c.witnesses.front();
}

}  // namespace

InvariantChoice select_invariant(long n, const Int& D) {
  Int bad;
  if (!admissible(D, n, &bad)) throw InadmissibleError(n, D, bad);
  auto combo = select_core(n, D);
  if (!combo) throw std::logic_error("select_invariant: no solvable combination (not even baseline)");
  return InvariantChoice{n,       D,         combo->e,    combo->cond,
                         pick_witness(n, D, *combo),      combo->M,
                         combo->c2.id,                    combo->c3.id,
                         canonical_exponents(n)};
}

InvariantChoice select_invariant(long n, const Int& D, const Int& witness) {
  InvariantChoice choice = select_invariant(n, D);
  Int w = mod(witness, 2 * choice.level);
  Int modulus = 4 * Int(choice.condition.R()) * n;
  Int target = mod(D + 4 * Int(choice.condition.r()) * n, modulus);
  if (mod(w * w - target, modulus) != 0)
    throw std::invalid_argument("select_invariant: witness fails the selected congruence");
  choice.b = w;
  return choice;
}

RealityClass classify_reality(long n, const Int& D, long e, const Int& b) {
  ExponentData ed = canonical_exponents(n);
  if (e <= 0 || ed.s % e != 0) throw std::invalid_argument("classify_reality: e must divide s");
  Int M = Int(ed.s / e) * n;
  bool nDividesD = mod(D, Int(n)) == 0;
  if (nDividesD && mod(b, M) == 0) return RealityClass::rationalPoly;
  if (n % 8 != 1 && nDividesD && (ed.s / e) % 2 == 0 && mod(b, M / 2) == 0 && mod(b, M) != 0)
    return RealityClass::rationalAfterSqrtD;
  return RealityClass::complexQuadratic;
}

ConditionTable generate_condition_table(long n) {
  ExponentData ed = canonical_exponents(n);
  long R2max = n % 2 == 0 ? (ed.square ? 8 : 4) : 1;
  long R3max = n % 3 == 1 ? 1 : 3;
  long L = 4 * R2max * R3max * n;

  // keyed by (rule ids, condition, e) so distinct mechanisms with the same
  // displayed condition stay distinct rows
  std::map<std::tuple<std::string, std::string, long, long, long, long, long>, ConditionRow> rows;
  for (long d0 = 0; d0 < L; ++d0) {
    if (d0 % 4 != 0 && d0 % 4 != 1) continue;
    Int D = Int(d0) - L;
    if (!admissible(D, n)) continue;
    auto combo = select_core(n, D);
    if (!combo) throw std::logic_error("generate_condition_table: admissible class with no row");
    auto key = std::make_tuple(combo->c2.id, combo->c3.id, combo->cond.r2, combo->cond.R2,
                               combo->cond.r3, combo->cond.R3, combo->e);
    auto it = rows.find(key);
    if (it == rows.end())
      rows.emplace(key, ConditionRow{combo->cond, combo->e, {d0}, combo->c2.id, combo->c3.id});
    else
      it->second.residues.push_back(d0);
  }

  ConditionTable table{n, L, {}};
  for (auto& [k, row] : rows) table.rows.push_back(std::move(row));
  std::sort(table.rows.begin(), table.rows.end(), [](const ConditionRow& a, const ConditionRow& b) {
    auto ka = std::make_tuple(-a.e, a.cond.R(), a.cond.r(), a.residues.front());
    auto kb = std::make_tuple(-b.e, b.cond.R(), b.cond.r(), b.residues.front());
    return ka < kb;
  });
  return table;
}

}  // namespace weber
