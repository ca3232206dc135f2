#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "weber/eta.hpp"
#include "weber/invariant.hpp"
#include "weber/modular.hpp"

using ordered_json = nlohmann::ordered_json;
using namespace weber;

namespace {

ordered_json json_int(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();  // fallback for coefficients beyond 64 bits
}

int run_invariant(long n, long d, long b, long prec, bool sqrtd, const std::string& format) {
  auto t0 = std::chrono::steady_clock::now();
  InvariantChoice ch = b < 0 ? select_invariant(n, Int(d)) : select_invariant(n, Int(d), Int(b));
  PolyVariant variant = sqrtd ? PolyVariant::timesSqrtD : PolyVariant::plain;
  AlgebraicPoly poly = class_polynomial(ch, variant, static_cast<mpfr_prec_t>(prec));
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  RealityClass reality = classify_reality(n, Int(d), ch.e, ch.b);
  if (format == "json") {
    ordered_json out;
    out["n"] = n;
    out["d"] = d;
    out["e"] = ch.e;
    out["b"] = json_int(ch.b);
    out["condition"] = ch.condition.combined_str();
    out["level"] = json_int(ch.level);
    out["reality"] = to_string(reality);
    ordered_json coeffs = ordered_json::array();
    for (const auto& [x, y] : poly.coeffs)
      coeffs.push_back(ordered_json::array({json_int(x), json_int(y)}));
    ordered_json p;
    p["coeffs"] = coeffs;
    out["poly"] = p;
    out["residual"] = poly.max_residual;
    out["ms"] = ms;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "n = " << n << "\n"
              << "d = " << d << "\n"
              << "e = " << ch.e << "\n"
              << "b = " << ch.b.get_str() << "\n"
              << "condition = " << ch.condition.str() << "\n"
              << "level = " << ch.level.get_str() << "\n"
              << "reality = " << to_string(reality) << "\n"
              << omega_description(poly.disc) << "\n"
              << "poly = " << poly.str() << "\n";
    std::ostringstream rs;
    rs << std::setprecision(3) << poly.max_residual;
    std::ostringstream ts;
    ts << std::fixed << std::setprecision(1) << ms;
    std::cout << "residual = " << rs.str() << "\n"
              << "ms = " << ts.str() << "\n";
  }
  return 0;
}

int run_table(long n, const std::string& format) {
  ConditionTable t = generate_condition_table(n);
  if (format == "json") {
    ordered_json out;
    out["n"] = t.n;
    out["modulus"] = t.modulus;
    ordered_json rows = ordered_json::array();
    for (const ConditionRow& row : t.rows) {
      ordered_json r;
      r["condition"] = row.cond.str();
      r["e"] = row.e;
      r["residues"] = row.residues;
      rows.push_back(r);
    }
    out["rows"] = rows;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "n = " << t.n << "\n"
              << "modulus = " << t.modulus << "\n";
    for (const ConditionRow& row : t.rows) {
      std::ostringstream line;
      line << "e=" << row.e;
      std::cout << std::left << std::setw(6) << line.str() << std::setw(14) << row.cond.str() << "{";
      for (size_t i = 0; i < row.residues.size(); ++i)
        std::cout << (i ? "," : "") << row.residues[i];
      std::cout << "}\n";
    }
  }
  return 0;
}

int run_heights(double min_gain, long max_degj, const std::string& format) {
  std::vector<HeightEntry> entries = comparison_table(mpq_class(min_gain), max_degj);
  if (format == "json") {
    ordered_json out = ordered_json::array();
    for (const HeightEntry& h : entries) {
      ordered_json r;
      r["name"] = h.f.name();
      r["gain"] = h.gain.get_str();
      r["degj"] = h.degj;
      out.push_back(r);
    }
    std::cout << out.dump() << "\n";
  } else {
    for (const HeightEntry& h : entries)
      std::cout << h.f.name() << " " << h.gain.get_str() << " " << h.degj << "\n";
  }
  return 0;
}

int run_modpoly(long n, long prec, const std::string& format) {
  DegreeData dd = degrees(n);
  if (n > 8) {
    if (format == "json") {
      ordered_json out;
      out["n"] = n;
      out["degF"] = dd.degF;
      out["degJ"] = dd.degJ;
      std::cout << out.dump() << "\n";
    } else {
      std::cout << "degF = " << dd.degF << "\n"
                << "degJ = " << dd.degJ << "\n";
    }
    std::cerr << "notice: coefficients are computed only for n <= 8\n";
    return 0;
  }
  BivariatePoly p = modular_polynomial(n, static_cast<mpfr_prec_t>(prec));
  if (format == "json") {
    ordered_json out;
    out["n"] = n;
    out["degF"] = p.degF;
    out["degJ"] = p.degJ;
    out["poly"] = p.str();
    std::cout << out.dump() << "\n";
  } else {
    std::cout << p.str() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"class invariants and modular polynomials from eta quotients"};
  app.require_subcommand(1);

  auto* inv = app.add_subcommand("invariant", "select an invariant for (n, d) and compute its class polynomial");
  long in_n = 0;
  long in_d = 0;
  long in_b = -1;
  long in_prec = 0;
  bool in_sqrtd = false;
  std::string in_format = "text";
  inv->add_option("--n", in_n, "level of the eta quotient")->required();
  inv->add_option("--d", in_d, "negative discriminant")->required();
  inv->add_option("--b", in_b, "witness override (must satisfy the winning congruence)");
  inv->add_option("--prec", in_prec, "working precision in bits (0 = automatic)");
  inv->add_flag("--sqrtd", in_sqrtd, "compute the polynomial of sqrt(d) times the invariant");
  inv->add_option("--format", in_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* tab = app.add_subcommand("table", "condition tables and the height comparison table");
  long tab_n = 0;
  bool tab_heights = false;
  double tab_min_gain = 13.0;
  long tab_max_degj = 20;
  std::string tab_format = "text";
  auto* tab_n_opt = tab->add_option("--n", tab_n, "level whose discriminant classes are tabulated");
  auto* tab_h_opt = tab->add_flag("--heights", tab_heights, "print the height comparison table");
  tab->add_option("--min-gain", tab_min_gain, "smallest gain kept (with --heights)");
  tab->add_option("--max-degj", tab_max_degj, "largest J-degree kept (with --heights)");
  tab->add_option("--format", tab_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  tab_n_opt->excludes(tab_h_opt);

  auto* mp = app.add_subcommand("modpoly", "modular polynomial linking the canonical power to J");
  long mp_n = 0;
  long mp_prec = 0;
  std::string mp_format = "text";
  mp->add_option("--n", mp_n, "level")->required();
  mp->add_option("--prec", mp_prec, "working precision in bits (0 = automatic)");
  mp->add_option("--format", mp_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (inv->parsed()) return run_invariant(in_n, in_d, in_b, in_prec, in_sqrtd, in_format);
    if (tab->parsed()) {
      if (tab_heights) return run_heights(tab_min_gain, tab_max_degj, tab_format);
      if (tab_n_opt->count() == 0)
        throw std::invalid_argument("table: pass --n or --heights");
      return run_table(tab_n, tab_format);
    }
    if (mp->parsed()) return run_modpoly(mp_n, mp_prec, mp_format);
  } catch (const InadmissibleError& e) {
    std::cerr << "inadmissible at p=" << e.prime.get_str() << "\n";
    return 2;
  } catch (const RoundingError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
