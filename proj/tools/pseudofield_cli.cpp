#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "pseudofield/algebraic_recon.hpp"
#include "pseudofield/factorize.hpp"
#include "pseudofield/ideal_cover.hpp"
#include "pseudofield/rational_recon.hpp"
#include "pseudofield/rcf_probe.hpp"
#include "pseudofield/selftest.hpp"
#include "pseudofield/sturm.hpp"
#include "pseudofield/unit_value.hpp"
#include "pseudofield/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitRefused = 3;
constexpr int kExitSearchFailed = 4;

using pseudofield::Int;
using pseudofield::IntPoly;
using pseudofield::Rat;

/// Ascending comma-separated coefficient list, e.g. "1,0,1" for x^2+1.
IntPoly parse_poly(const std::string& s) {
  std::vector<Int> coeffs;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty coefficient in '" + s + "'");
    coeffs.emplace_back(item);
  }
  if (coeffs.empty()) throw std::invalid_argument("empty polynomial '" + s + "'");
  return IntPoly(std::move(coeffs));
}

std::string poly_json(const IntPoly& p) {
  std::string out = "[";
  for (int i = 0; i <= p.degree(); ++i) {
    if (i) out += ", ";
    out += "\"" + p.coeff(i).str() + "\"";
  }
  return out + "]";
}

std::string quote(const std::string& s) { return "\"" + s + "\""; }

/// Flat key/value config echo embedded in every report.
struct ConfigEcho {
  std::vector<std::pair<std::string, std::string>> entries;

  void add(const std::string& key, const std::string& raw_json) {
    entries.emplace_back(key, raw_json);
  }
  std::string json() const {
    std::string out = "{";
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i) out += ", ";
      out += quote(entries[i].first) + ": " + entries[i].second;
    }
    return out + "}";
  }
};

struct Output {
  std::string format = "json";
  std::string path;

  void emit(const ConfigEcho& config, const std::string& result_json,
            const std::string& text_form) const {
    std::string body;
    if (format == "text" || format == "csv") {
      body = text_form;
    } else {
      body = "{\"version\": " + quote(pseudofield::kVersion) +
             ", \"config\": " + config.json() + ", \"result\": " + result_json + "}\n";
    }
    if (path.empty()) {
      std::cout << body;
    } else {
      std::ofstream out(path, std::ios::binary);
      if (!out) throw std::runtime_error("cannot open output path " + path);
      out << body;
    }
  }
};

void add_output_flags(CLI::App* cmd, Output& out, bool csv_allowed = false) {
  std::vector<std::string> formats = {"json", "text"};
  if (csv_allowed) formats.push_back("csv");
  cmd->add_option("--format", out.format, "output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  cmd->add_option("--out", out.path, "write the report to this path instead of stdout");
}

void arm_deadline() {
  const char* env = std::getenv("PSEUDOFIELD_DEADLINE_SECS");
  if (!env || !*env) return;
  long secs = std::strtol(env, nullptr, 10);
  if (secs <= 0) return;
  std::thread([secs] {
    std::this_thread::sleep_for(std::chrono::seconds(secs));
    std::cerr << "deadline of " << secs << " s exceeded\n";
    std::_Exit(kExitRefused);
  }).detach();
}

int cmd_reconstruct(const std::string& kind, const std::string& p_str, const std::string& x_str,
                    unsigned budget, const Output& out) {
  pseudofield::PrimeField field{Int(p_str)};
  Int xv(x_str);
  if (xv < 0 || xv >= field.modulus()) throw std::invalid_argument("residue out of range");
  pseudofield::Residue x(xv, field);
  ConfigEcho cfg;
  cfg.add("command", quote("reconstruct"));
  cfg.add("kind", quote(kind));
  cfg.add("p", quote(field.modulus().str()));
  cfg.add("x", quote(xv.str()));
  if (kind == "q") {
    pseudofield::FqResult r = pseudofield::f_q_fast(x);
    out.emit(cfg,
             "{\"value\": " + r.value.str() +
                 ", \"witness\": " + quote(r.witness.str()) + "}",
             "f_Q(" + xv.str() + ") = " + r.value.str() + " in F_" + field.modulus().str() +
                 "  witness " + r.witness.str() + "\n");
    return kExitOk;
  }
  cfg.add("budget", std::to_string(budget));
  auto r = pseudofield::f_qbar_oracle(x, budget);
  if (!r) {
    std::cerr << "no witness of cost <= " << budget << "\n";
    return kExitSearchFailed;
  }
  out.emit(cfg,
           "{\"value\": " + std::to_string(r->cost) + ", \"witness\": " + r->witness.to_json() +
               "}",
           "f_Qbar(" + xv.str() + ") = " + std::to_string(r->cost) + " in F_" + field.modulus().str() +
               "\n");
  return kExitOk;
}

int cmd_witness(const std::string& p_str, const std::string& x_str, const std::string& y_str,
                const std::string& op, unsigned budget, const Output& out) {
  pseudofield::PrimeField field{Int(p_str)};
  Int xv(x_str);
  if (xv < 0 || xv >= field.modulus()) throw std::invalid_argument("residue out of range");
  pseudofield::Residue x(xv, field);
  ConfigEcho cfg;
  cfg.add("command", quote("witness"));
  cfg.add("p", quote(field.modulus().str()));
  cfg.add("x", quote(xv.str()));
  cfg.add("op", quote(op));
  cfg.add("budget", std::to_string(budget));
  auto wx = pseudofield::f_qbar_oracle(x, budget);
  if (!wx) {
    std::cerr << "no witness of cost <= " << budget << " for x\n";
    return kExitSearchFailed;
  }
  pseudofield::AlgebraicWitness result = wx->witness;
  if (op == "neg") {
    result = pseudofield::witness_neg(result);
  } else if (op == "inverse") {
    result = pseudofield::witness_inverse(result);
  } else if (op == "product" || op == "sum") {
    Int yv(y_str);
    if (yv < 0 || yv >= field.modulus()) throw std::invalid_argument("second residue out of range");
    cfg.add("y", quote(yv.str()));
    auto wy = pseudofield::f_qbar_oracle(pseudofield::Residue(yv, field), budget);
    if (!wy) {
      std::cerr << "no witness of cost <= " << budget << " for y\n";
      return kExitSearchFailed;
    }
    result = op == "product" ? pseudofield::witness_product(result, wy->witness)
                             : pseudofield::witness_sum(result, wy->witness);
  }
  bool ok = pseudofield::verify_witness(result);
  out.emit(cfg,
           "{\"witness\": " + result.to_json() + ", \"verified\": " + (ok ? "true" : "false") +
               "}",
           std::string("witness cost ") + std::to_string(result.cost()) + " verified " +
               (ok ? "true" : "false") + "\n");
  return ok ? kExitOk : kExitSearchFailed;
}

int cmd_probe(const std::string& p_str, unsigned d, unsigned budget, bool complex_case,
              const Output& out) {
  pseudofield::PrimeField field{Int(p_str)};
  ConfigEcho cfg;
  cfg.add("command", quote("probe"));
  cfg.add("p", quote(field.modulus().str()));
  cfg.add("d", std::to_string(d));
  cfg.add("budget", std::to_string(budget));
  cfg.add("complex", complex_case ? "true" : "false");
  pseudofield::ThresholdReport report = pseudofield::max_threshold(field, d, budget, complex_case);
  out.emit(cfg, report.to_json(), report.to_csv());
  return kExitOk;
}

int cmd_toolkit(const std::string& op, const std::string& f_str, const std::string& g_str,
                const std::string& h_str, long ell, unsigned exponent, const std::string& lo,
                const std::string& hi, const Output& out) {
  ConfigEcho cfg;
  cfg.add("command", quote("toolkit"));
  cfg.add("op", quote(op));
  if (!f_str.empty()) cfg.add("f", quote(f_str));
  if (!g_str.empty()) cfg.add("g", quote(g_str));
  if (!h_str.empty()) cfg.add("r", quote(h_str));
  std::string result, text;
  if (op == "resultant") {
    Int r = pseudofield::sylvester_resultant(parse_poly(f_str), parse_poly(g_str));
    result = "{\"resultant\": " + quote(r.str()) + "}";
    text = r.str() + "\n";
  } else if (op == "factor") {
    pseudofield::IntFactorization fac = pseudofield::factor_int_poly(parse_poly(f_str));
    Int scalar = Int(fac.sign) * fac.content_part;
    result = "{\"scalar\": " + quote(scalar.str()) + ", \"factors\": [";
    text = scalar.str();
    for (std::size_t i = 0; i < fac.factors.size(); ++i) {
      if (i) result += ", ";
      result += "{\"poly\": " + poly_json(fac.factors[i].first) +
                ", \"multiplicity\": " + std::to_string(fac.factors[i].second) + "}";
      text += " * (...)^" + std::to_string(fac.factors[i].second);
    }
    result += "]}";
    text += "\n";
  } else if (op == "content") {
    Int c = pseudofield::content(parse_poly(f_str));
    result = "{\"content\": " + quote(c.str()) + "}";
    text = c.str() + "\n";
  } else if (op == "divides") {
    bool d = pseudofield::divides(parse_poly(f_str), parse_poly(g_str));
    result = std::string("{\"divides\": ") + (d ? "true" : "false") + "}";
    text = std::string(d ? "true" : "false") + "\n";
  } else if (op == "monic-multiple") {
    cfg.add("ell", std::to_string(ell));
    cfg.add("exponent", std::to_string(exponent));
    pseudofield::ModPoly u =
        pseudofield::ModPoly::from_int_poly(parse_poly(f_str), Int(ell), exponent);
    pseudofield::ModPoly v = pseudofield::monic_multiple(u);
    pseudofield::ModPoly w = (pseudofield::ModPoly(Int(ell), exponent, {Int(1)}) + v * Int(ell)) * u;
    result = "{\"v\": " + poly_json(v.lift()) + ", \"monic\": " + poly_json(w.lift()) + "}";
    text = "monic multiple computed\n";
  } else if (op == "coprime-lift") {
    cfg.add("ell", std::to_string(ell));
    cfg.add("exponent", std::to_string(exponent));
    pseudofield::ModPoly w =
        pseudofield::ModPoly::from_int_poly(parse_poly(f_str), Int(ell), exponent);
    pseudofield::ModPoly r1 = pseudofield::ModPoly::from_int_poly(parse_poly(g_str), Int(ell), 1);
    pseudofield::ModPoly r2 = pseudofield::ModPoly::from_int_poly(parse_poly(h_str), Int(ell), 1);
    auto [l1, l2] = pseudofield::coprime_lift(w, r1, r2);
    result = "{\"lift1\": " + poly_json(l1.lift()) + ", \"lift2\": " + poly_json(l2.lift()) + "}";
    text = "coprime lift computed\n";
  } else if (op == "sturm") {
    cfg.add("lo", quote(lo));
    cfg.add("hi", quote(hi));
    pseudofield::RationalInterval iv{pseudofield::parse_rational(lo),
                                     pseudofield::parse_rational(hi)};
    unsigned n = pseudofield::sturm_root_count(parse_poly(f_str), iv);
    result = "{\"roots\": " + std::to_string(n) + "}";
    text = std::to_string(n) + "\n";
  } else if (op == "partner") {
    IntPoly q = pseudofield::res_one_partner(parse_poly(f_str));
    Int r = pseudofield::sylvester_resultant(parse_poly(f_str), q);
    result = "{\"partner\": " + poly_json(q) + ", \"resultant\": " + quote(r.str()) + "}";
    text = "partner found, resultant " + r.str() + "\n";
  } else {
    throw CLI::ValidationError("unknown toolkit op " + op);
  }
  out.emit(cfg, result, text);
  return kExitOk;
}

int cmd_unitfind(const std::vector<std::string>& poly_strs, const std::string& lo,
                 const std::string& hi, const Output& out) {
  std::vector<IntPoly> polys;
  for (const std::string& s : poly_strs) polys.push_back(parse_poly(s));
  pseudofield::RationalInterval interval{pseudofield::parse_rational(lo),
                                         pseudofield::parse_rational(hi)};
  ConfigEcho cfg;
  cfg.add("command", quote("unitfind"));
  std::string pl = "[";
  for (std::size_t i = 0; i < poly_strs.size(); ++i) {
    if (i) pl += ", ";
    pl += quote(poly_strs[i]);
  }
  cfg.add("polys", pl + "]");
  cfg.add("lo", quote(interval.lo.str()));
  cfg.add("hi", quote(interval.hi.str()));
  pseudofield::AlgebraicIntegerRep alpha = pseudofield::unit_value_alg_integer(polys, interval);
  IntPoly product({Int(1)});
  for (const IntPoly& p : polys) product = product * p;
  Int res = polys.empty() ? Int(1) : pseudofield::sylvester_resultant(alpha.minpoly, product);
  unsigned roots = pseudofield::sturm_root_count(alpha.minpoly, alpha.interval);
  out.emit(cfg,
           "{\"alpha\": " + alpha.to_json() + ", \"verification\": {\"resultant\": " +
               quote(res.str()) + ", \"sturm_count\": " + std::to_string(roots) + "}}",
           "minpoly " + poly_json(alpha.minpoly) + " on (" + alpha.interval.lo.str() + ", " +
               alpha.interval.hi.str() + ")\n");
  if (pseudofield::abs_int(res) != 1 || roots != 1) {
    std::cerr << "verification block failed\n";
    return kExitSearchFailed;
  }
  return kExitOk;
}

int cmd_selftest() {
  pseudofield::SelftestReport report = pseudofield::run_selftest_full();
  std::cout << report.text();
  return report.all_pass() ? kExitOk : kExitSearchFailed;
}

}  // namespace

int main(int argc, char** argv) {
  arm_deadline();
  CLI::App app{"pseudofield: residue complexity, order probes, and unit-value constructions"};
  app.require_subcommand(1);

  Output rec_out, wit_out, probe_out, tool_out, unit_out;

  auto* rec = app.add_subcommand("reconstruct", "reconstruct a residue as a small fraction or "
                                                "matrix eigenvalue");
  std::string rec_kind = "q", rec_p, rec_x;
  unsigned rec_budget = 4;
  rec->add_option("--kind", rec_kind)->check(CLI::IsMember({"q", "qbar"}))->capture_default_str();
  rec->add_option("--p", rec_p, "odd prime modulus")->required();
  rec->add_option("--x", rec_x, "residue in [0, p)")->required();
  rec->add_option("--budget", rec_budget, "search budget for --kind qbar")->capture_default_str();
  add_output_flags(rec, rec_out);

  auto* wit = app.add_subcommand("witness", "build and verify eigenvalue witnesses");
  std::string wit_p, wit_x, wit_y, wit_op = "none";
  unsigned wit_budget = 4;
  wit->add_option("--p", wit_p)->required();
  wit->add_option("--x", wit_x)->required();
  wit->add_option("--y", wit_y, "second operand for product/sum");
  wit->add_option("--op", wit_op)
      ->check(CLI::IsMember({"none", "product", "sum", "neg", "inverse"}))
      ->capture_default_str();
  wit->add_option("--budget", wit_budget)->capture_default_str();
  add_output_flags(wit, wit_out);

  auto* probe = app.add_subcommand("probe", "scan square-based order formulas over a prime field");
  std::string probe_p;
  unsigned probe_d = 2, probe_budget = 2;
  bool probe_complex = false;
  probe->add_option("--p", probe_p)->required();
  probe->add_option("--d", probe_d, "polynomial degree of the probe")->capture_default_str();
  probe->add_option("--budget", probe_budget)->capture_default_str();
  probe->add_flag("--complex", probe_complex, "use the complex-case probe family");
  add_output_flags(probe, probe_out, /*csv_allowed=*/true);

  auto* tool = app.add_subcommand("toolkit", "exact polynomial operations");
  std::string tool_op, tool_f, tool_g, tool_h, tool_lo = "0", tool_hi = "1";
  long tool_ell = 2;
  unsigned tool_exp = 1;
  tool->add_option("--op", tool_op)
      ->check(CLI::IsMember({"resultant", "factor", "content", "divides", "monic-multiple",
                             "coprime-lift", "sturm", "partner"}))
      ->required();
  tool->add_option("--f", tool_f, "polynomial, ascending comma coefficients");
  tool->add_option("--g", tool_g);
  tool->add_option("--r", tool_h, "second factor for coprime-lift");
  tool->add_option("--ell", tool_ell, "prime modulus for mod-l ops")->capture_default_str();
  tool->add_option("--exp", tool_exp, "exponent n for Z/l^n ops")->capture_default_str();
  tool->add_option("--lo", tool_lo);
  tool->add_option("--hi", tool_hi);
  add_output_flags(tool, tool_out);

  auto* unit = app.add_subcommand("unitfind",
                                  "find an algebraic integer in an interval with unit values");
  std::vector<std::string> unit_polys;
  std::string unit_lo, unit_hi;
  unit->add_option("--poly", unit_polys, "monic polynomial, repeatable");
  unit->add_option("--lo", unit_lo)->required();
  unit->add_option("--hi", unit_hi)->required();
  add_output_flags(unit, unit_out);

  app.add_subcommand("selftest", "run the full acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (rec->parsed()) return cmd_reconstruct(rec_kind, rec_p, rec_x, rec_budget, rec_out);
    if (wit->parsed()) return cmd_witness(wit_p, wit_x, wit_y, wit_op, wit_budget, wit_out);
    if (probe->parsed()) return cmd_probe(probe_p, probe_d, probe_budget, probe_complex, probe_out);
    if (tool->parsed())
      return cmd_toolkit(tool_op, tool_f, tool_g, tool_h, tool_ell, tool_exp, tool_lo, tool_hi,
                         tool_out);
    if (unit->parsed()) return cmd_unitfind(unit_polys, unit_lo, unit_hi, unit_out);
    return cmd_selftest();
  } catch (const pseudofield::BudgetTooLarge& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitRefused;
  } catch (const pseudofield::EnumerationTooLarge& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitRefused;
  } catch (const pseudofield::PrincipalityNotFound& e) {
    std::cerr << "search failed: " << e.what() << "\n";
    return kExitSearchFailed;
  } catch (const pseudofield::CycleSearchExhausted& e) {
    std::cerr << "search failed: " << e.what() << "\n";
    return kExitSearchFailed;
  } catch (const pseudofield::FactorizationUnsupported& e) {
    std::cerr << "search failed: " << e.what() << "\n";
    return kExitSearchFailed;
  } catch (const pseudofield::DegreeUnsupported& e) {
    std::cerr << "search failed: " << e.what() << "\n";
    return kExitSearchFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
