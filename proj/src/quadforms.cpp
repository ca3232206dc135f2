#include "weber/quadforms.hpp"

#include <algorithm>
#include <sstream>

namespace weber {

Discriminant::Discriminant(const Int& d) : D(d) {
  if (d >= 0) throw std::invalid_argument("Discriminant: must be negative");
  Int r4 = mod(d, Int(4));
  if (r4 != 0 && r4 != 1) throw std::invalid_argument("Discriminant: must be 0 or 1 mod 4");
  Int n = -d;
  Int sq = 1, f = 1;
  for (auto& [p, e] : factorize(n)) {
    for (int i = 0; i + 1 < e; i += 2) f *= p;
    if (e % 2) sq *= p;
  }
  if (mod(-sq, Int(4)) == 1) {
    delta = -sq;
    conductor = f;
  } else {
    if (mod(f, Int(2)) != 0) throw std::logic_error("Discriminant: parity breakdown");
    delta = -4 * sq;
    conductor = f / 2;
  }
}

bool QuadForm::primitive() const { return gcd(gcd(a, b), c) == 1; }

bool QuadForm::reduced() const {
  Int ab = abs(b);
  if (!(ab <= a && a <= c)) return false;
  if ((ab == a || a == c) && b < 0) return false;
  return true;
}

QuadForm QuadForm::transformed(const Int& p, const Int& q, const Int& r, const Int& s) const {
  Int A = a * p * p + b * p * r + c * r * r;
  Int B = 2 * a * p * q + b * (p * s + q * r) + 2 * c * r * s;
  Int C = a * q * q + b * q * s + c * s * s;
  return {A, B, C};
}

QuadForm QuadForm::translated(const Int& k) const {
  return {a, b + 2 * a * k, c + b * k + a * k * k};
}

bool QuadForm::operator<(const QuadForm& o) const {
  if (a != o.a) return a < o.a;
  if (b != o.b) return b < o.b;
  return c < o.c;
}

std::string QuadForm::str() const {
  std::ostringstream os;
  os << "[" << a << ", " << b << ", " << c << "]";
  return os.str();
}

QuadForm reduce(QuadForm f) {
  if (f.a <= 0 || f.discriminant() >= 0)
    throw std::invalid_argument("reduce: form must be positive definite");
  while (true) {
    // normalize b into (-a, a]
    Int r = mod(f.b, 2 * f.a);
    if (r > f.a) r -= 2 * f.a;
    if (r != f.b) {
      Int k = (r - f.b) / (2 * f.a);
      f = f.translated(k);
    }
    if (f.c < f.a) {
      f = QuadForm{f.c, -f.b, f.a};
      continue;
    }
    break;
  }
  if ((f.c == f.a || -f.b == f.a) && f.b < 0) f.b = -f.b;
  return f;
}

std::vector<QuadForm> class_representatives(const Int& D) {
  Discriminant disc(D);  // validates
  std::vector<QuadForm> out;
  Int absD = -D;
  Int b0 = mod(D, Int(2));
  for (Int b = b0; 3 * b * b <= absD; b += 2) {
    Int m4 = b * b + absD;
    if (mod(m4, Int(4)) != 0) continue;
    Int m = m4 / 4;  // = a*c
    for (Int a = (b > 0 ? b : Int(1)); a * a <= m; ++a) {
      if (a == 0 || m % a != 0) continue;
      if (b > a) continue;
      Int c = m / a;
      QuadForm f{a, b, c};
      if (!f.primitive()) continue;
      out.push_back(f);
      if (b > 0 && b < a && a < c) out.push_back(QuadForm{a, -b, c});
    }
  }
  // principal first, remainder by (a, b, c)
  QuadForm principal = reduce(QuadForm{Int(1), b0, (b0 * b0 + absD) / 4});
  std::sort(out.begin(), out.end());
  auto it = std::find(out.begin(), out.end(), principal);
  if (it == out.end()) throw std::logic_error("class_representatives: principal form missing");
  std::rotate(out.begin(), it, it + 1);
  return out;
}

long class_number(const Int& D) { return static_cast<long>(class_representatives(D).size()); }

NSystem n_system(const Int& D, const Int& M, const Int& b_target) {
  Discriminant disc(D);  // validates D
  if (M <= 0) throw std::invalid_argument("n_system: level must be positive");
  if (mod(b_target * b_target - D, Int(4)) != 0)
    throw std::invalid_argument("n_system: b_target has wrong parity for D");

  QuadForm anchor{Int(1), b_target, (b_target * b_target - D) / 4};
  NSystem sys;
  sys.level = M;
  sys.anchor = anchor;

  auto reps = class_representatives(D);
  for (size_t i = 0; i < reps.size(); ++i) {
    const QuadForm& rep = reps[i];
    if (i == 0) {
      if (reduce(anchor) != rep) throw std::logic_error("n_system: anchor not principal");
      sys.forms.push_back(anchor);
      continue;
    }
    // Find a representative value A = rep(x, y) coprime to 2M, then carry
    // the whole form there with a unimodular substitution.
    bool placed = false;
    for (long radius = 1; radius <= 64 && !placed; ++radius) {
      for (long x = -radius; x <= radius && !placed; ++x) {
        for (long y = -radius; y <= radius && !placed; ++y) {
          if (std::max(std::abs(x), std::abs(y)) != radius) continue;
          Int X(x), Y(y);
          if (gcd(X, Y) != 1) continue;
          Int A = rep.a * X * X + rep.b * X * Y + rep.c * Y * Y;
          if (gcd(A, 2 * M) != 1) continue;
          Int g, s, t;
          mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), X.get_mpz_t(), Y.get_mpz_t());
          // s*x + t*y = 1, so [[x, -t], [y, s]] is unimodular
          QuadForm h0 = rep.transformed(X, -t, Y, s);
          if (h0.a != A) throw std::logic_error("n_system: transform mismatch");
          Int halfdiff = (b_target - h0.b) / 2;
          Int k = mod(halfdiff * mod_inverse(A, M), M);
          QuadForm h = h0.translated(k);
          if (mod(h.b - b_target, 2 * M) != 0) throw std::logic_error("n_system: alignment failed");
          if (reduce(h) != rep) throw std::logic_error("n_system: left the class");
          sys.forms.push_back(h);
          placed = true;
        }
      }
    }
    if (!placed) throw std::runtime_error("n_system: no admissible representative found for " + rep.str());
  }
  return sys;
}

BigComplex root_of(const QuadForm& f, mpfr_prec_t prec) {
  Int D = f.discriminant();
  BigFloat den = BigFloat::of(2 * f.a, prec);
  BigFloat re = BigFloat::of(-f.b, prec) / den;
  BigFloat im = BigFloat::of(-D, prec).sqrt() / den;
  return BigComplex(re, im);
}

}  // namespace weber
