// Command-line front end: solves the classical and twin approximation
// systems, reports minor gcds and Siegel bounds, runs the randomized
// certificate battery, and regenerates the built-in reference tables.
//
// Exit codes: 0 = success / all certificates passed, 1 = usage error,
// 2 = a certificate was falsified.

#include <CLI11.hpp>

#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hpade/hpade.hpp"
#include "hpade/json_io.hpp"

namespace {

using namespace hpade;

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw CLI::ValidationError("empty list element");
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw CLI::ValidationError("empty list");
  return out;
}

std::vector<Int> parse_bigint_list(const std::string& s) {
  std::vector<Int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Int(item));
  if (out.empty()) throw CLI::ValidationError("empty list");
  return out;
}

Convention parse_convention(const std::string& s) {
  if (s == "binomial") return Convention::binomial;
  if (s == "falling" || s == "falling_factorial")
    return Convention::falling_factorial;
  throw CLI::ValidationError("convention must be binomial or falling");
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

// ---------------------------------------------------------------- tame ----

int run_tame(int l0, const std::string& l_str, const std::string& point_str,
             const std::string& format) {
  TameProblem p(l0, parse_int_list(l_str));
  std::optional<IntegerPoint> pt;
  if (!point_str.empty()) pt = IntegerPoint(parse_bigint_list(point_str));
  TameSolution sol = tame_solve(p, pt);

  if (format == "json") {
    OrderedJson j;
    j["schema"] = kReportSchema;
    j["l0"] = p.l0;
    j["l"] = p.l;
    OrderedJson coeffs = OrderedJson::array();
    for (const IntPoly& b : sol.b_normalized) coeffs.push_back(to_string(b));
    j["denominator"] = coeffs;
    OrderedJson minors = OrderedJson::array();
    for (const RatPoly& u : sol.minors) minors.push_back(u.str());
    j["minors"] = minors;
    j["cramer_proportional"] = sol.cramer_proportional;
    j["cramer_scale"] = sol.cramer_scale.str();
    OrderedJson orders = OrderedJson::array();
    for (const auto& oc : sol.remainder_orders)
      orders.push_back(oc.first_nonzero);
    j["remainder_first_nonzero"] = orders;
    if (sol.specialized) {
      OrderedJson bs = OrderedJson::array();
      for (const Int& b : sol.b_at_point) bs.push_back(b.get_str());
      j["denominator_at_point"] = bs;
    }
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "h,b_h\n";
    for (size_t h = 0; h < sol.b_normalized.size(); ++h)
      std::cout << h << "," << csv_quote(to_string(sol.b_normalized[h])) << "\n";
  } else {
    std::cout << "denominator coefficients (normalized), h = 0.." << p.L()
              << ":\n";
    for (size_t h = 0; h < sol.b_normalized.size(); ++h)
      std::cout << "  t^" << h << ": " << to_string(sol.b_normalized[h])
                << "\n";
    std::cout << "minor[h]:\n";
    for (size_t h = 0; h < sol.minors.size(); ++h)
      std::cout << "  " << h << ": " << sol.minors[h].str() << "\n";
    std::cout << "cramer proportional: "
              << (sol.cramer_proportional ? "yes" : "no")
              << "  scale: " << sol.cramer_scale.str() << "\n";
    for (size_t j = 0; j < sol.remainder_orders.size(); ++j) {
      const auto& oc = sol.remainder_orders[j];
      std::cout << "remainder " << (j + 1) << ": order "
                << (oc.order_known_finite()
                        ? std::to_string(oc.first_nonzero)
                        : ">= " + std::to_string(oc.truncation_order + 1))
                << " (required >= " << oc.claimed_min << ")\n";
    }
    if (sol.specialized) {
      std::cout << "at point:";
      for (const Int& b : sol.b_at_point) std::cout << " " << b.get_str();
      std::cout << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------- twin ----

int run_twin(const std::string& l_str, const std::string& format) {
  std::vector<int> l = parse_int_list(l_str);
  TameProblem tame_p(0, l);
  TameSolution tame_sol = tame_solve(tame_p);
  TwinTableOutput tw = twin_table_output(l);
  const int L = tame_p.L();

  if (format == "csv") {
    std::cout << "i,b_i,twin_i\n";
    for (int i = 0; i <= L; ++i)
      std::cout << i << ","
                << csv_quote(to_string(tame_sol.b_normalized[static_cast<size_t>(i)]))
                << ","
                << csv_quote(to_string(tw.coefficients[static_cast<size_t>(i)]))
                << "\n";
  } else if (format == "json") {
    OrderedJson j;
    j["schema"] = kReportSchema;
    j["l"] = l;
    OrderedJson bs = OrderedJson::array(), ts = OrderedJson::array();
    for (const IntPoly& b : tame_sol.b_normalized) bs.push_back(to_string(b));
    for (const IntPoly& c : tw.coefficients) ts.push_back(to_string(c));
    j["classical"] = bs;
    j["twin"] = ts;
    j["minor_gcd"] = to_string(tw.report.gcd);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "i | classical b_i | twin coefficient\n";
    for (int i = 0; i <= L; ++i)
      std::cout << i << " | "
                << to_string(tame_sol.b_normalized[static_cast<size_t>(i)])
                << " | " << to_string(tw.coefficients[static_cast<size_t>(i)])
                << "\n";
    std::cout << "minor gcd: " << to_string(tw.report.gcd) << "\n";
  }
  return 0;
}

// ----------------------------------------------------------- gcd-minors ----

int run_gcd_minors(const std::string& l_str, const std::string& nu_str,
                   const std::string& conv_str, const std::string& a_str,
                   const std::string& format) {
  std::vector<int> l = parse_int_list(l_str);
  std::vector<int> nu = nu_str.empty() ? l : parse_int_list(nu_str);
  Convention conv = parse_convention(conv_str);
  if (a_str.empty()) {
    WildProblem p(l, nu, conv);
    GcdReport rep = minor_gcd_report_symbolic(p);
    if (format == "text") {
      std::cout << "matrix:\n" << matrix_to_text(build_v_poly(p));
      std::cout << "gcd: " << to_string(rep.gcd) << "\n";
      for (size_t i = 0; i < rep.quotients.size(); ++i)
        std::cout << "minor[" << i << "]/gcd: " << to_string(rep.quotients[i])
                  << "\n";
      std::cout << "claimed factor: " << to_string(rep.claimed_factor)
                << (rep.divisibility_ok ? " (divides gcd)" : " (FALSIFIED)")
                << "\n";
    } else {
      std::cout << to_json(rep).dump(2) << "\n";
    }
  } else {
    WildProblem p(l, nu, conv, IntegerPoint(parse_bigint_list(a_str)));
    IntGcdReport rep = minor_gcd_report_specialized(p);
    if (format == "text") {
      std::cout << "gcd: " << rep.gcd.get_str() << "\n";
      for (size_t i = 0; i < rep.quotients.size(); ++i)
        std::cout << "minor[" << i << "]/gcd: " << rep.quotients[i].get_str()
                  << "\n";
      std::cout << "claimed factor: " << rep.claimed_factor.get_str()
                << (rep.divisibility_ok ? " (divides gcd)" : " (FALSIFIED)")
                << "\n";
    } else {
      std::cout << to_json(rep).dump(2) << "\n";
    }
  }
  return 0;
}

// --------------------------------------------------------------- siegel ----

int run_siegel(const std::string& a_str, const std::string& l_str,
               const std::string& nu_str, long budget,
               const std::string& format) {
  std::vector<int> l = parse_int_list(l_str);
  std::vector<int> nu = nu_str.empty() ? l : parse_int_list(nu_str);
  WildProblem p(l, nu, Convention::binomial,
                IntegerPoint(parse_bigint_list(a_str)));
  std::optional<Int> b;
  if (budget > 0) b = Int(budget);
  SiegelPadeSolution sol = siegel_pade_solve(p, b);
  if (format == "text") {
    std::cout << "mahler bound: " << sol.report.mahler.get_str() << "\n"
              << "fg bound: " << sol.report.fg.bound.decimal() << "\n";
    if (sol.report.rank_ok)
      std::cout << "bv bound: " << sol.report.bv.decimal()
                << " (D = " << sol.report.bv_divisor.get_str() << ")\n";
    std::cout << "solution:";
    for (const Int& c : sol.report.solution) std::cout << " " << c.get_str();
    std::cout << "\nnorm: " << sol.report.norm.get_str() << "\n";
    for (size_t j = 0; j < sol.remainder_orders.size(); ++j) {
      const auto& oc = sol.remainder_orders[j];
      std::cout << "remainder " << (j + 1) << ": order "
                << (oc.order_known_finite()
                        ? std::to_string(oc.first_nonzero)
                        : ">= " + std::to_string(oc.truncation_order + 1))
                << " (required >= " << oc.claimed_min << ")\n";
    }
  } else {
    OrderedJson j = to_json(sol.report);
    OrderedJson b0 = OrderedJson::array();
    for (const Int& c : sol.b0) b0.push_back(c.get_str());
    j["denominator"] = b0;
    OrderedJson orders = OrderedJson::array();
    for (const auto& oc : sol.remainder_orders)
      orders.push_back(oc.first_nonzero);
    j["remainder_first_nonzero"] = orders;
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

// -------------------------------------------------------------- certify ----

struct CertifyOutcome {
  int failures = 0;
  void report(const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "pass" : "FAIL") << "  " << name;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
  }
};

IntPoly random_poly(std::mt19937_64& rng, int arity, int max_deg, int terms,
                    int coeff_range) {
  std::uniform_int_distribution<int> cdist(-coeff_range, coeff_range);
  std::uniform_int_distribution<int> edist(0, max_deg);
  IntPoly p(arity);
  for (int t = 0; t < terms; ++t) {
    Monomial m(arity);
    for (int v = 0; v < arity; ++v)
      m.set_exp(v, static_cast<uint32_t>(edist(rng)));
    p.add_term(m, Int(cdist(rng)));
  }
  return p;
}

int run_certify(uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  CertifyOutcome out;

  // Determinant oracle equivalence on random polynomial matrices.
  {
    bool ok = true;
    for (int t = 0; t < trials && ok; ++t) {
      std::uniform_int_distribution<int> ndist(1, 4);
      int n = ndist(rng);
      PolyMatrix m(n, n, IntPoly::zero(2));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = random_poly(rng, 2, 2, 3, 5);
      ok = det_bareiss(m) == det_cofactor(m);
    }
    out.report("determinant oracle equivalence", ok,
               std::to_string(trials) + " random matrices");
  }

  // Block-factor divisibility for both block matrix variants.
  {
    bool ok = true;
    std::string detail;
    std::uniform_int_distribution<int> mdist(2, 3), sdist(1, 2);
    for (int t = 0; t < trials && ok; ++t) {
      int m = mdist(rng);
      std::vector<int> sizes;
      int n = 0;
      for (int j = 0; j < m; ++j) {
        sizes.push_back(sdist(rng));
        n += sizes.back();
      }
      std::vector<IntPoly> ps;
      for (int i = 0; i < n; ++i) ps.push_back(random_poly(rng, 1, n, 3, 4));
      bool nonzero = true;
      for (auto& q : ps) nonzero = nonzero && !q.is_zero();
      if (!nonzero) continue;
      PolySequence seq(ps);
      BlockSpec spec(sizes);
      try {
        certify_case_a_factor(seq, spec);
        certify_case_b_factor(seq, spec);
      } catch (const NotDivisible&) {
        ok = false;
        detail = "divisibility falsified";
      }
    }
    out.report("block determinant factor divisibility", ok, detail);
  }

  // Common-factor certificate on random wild instances.
  {
    bool ok = true;
    std::string detail;
    std::uniform_int_distribution<int> mdist(1, 3), ldist(1, 3);
    for (int t = 0; t < trials && ok; ++t) {
      int m = mdist(rng);
      std::vector<int> l, nu;
      for (int j = 0; j < m; ++j) {
        l.push_back(ldist(rng));
        std::uniform_int_distribution<int> nudist(1, l.back());
        nu.push_back(nudist(rng));
      }
      try {
        WildProblem p(l, nu, Convention::binomial);
        certify_minor_common_factor(p, 8, rng());
      } catch (const DivisibilityFalsified&) {
        ok = false;
        detail = "minor factor falsified";
      }
    }
    out.report("minor common-factor certificate", ok, detail);
  }

  // Integer specialization: the claimed integer divides the minor gcd.
  {
    bool ok = true;
    std::string detail;
    std::uniform_int_distribution<int> mdist(1, 3), ldist(1, 3), adist(-4, 4);
    for (int t = 0; t < trials && ok; ++t) {
      int m = mdist(rng);
      std::vector<int> l, nu;
      for (int j = 0; j < m; ++j) {
        l.push_back(ldist(rng));
        std::uniform_int_distribution<int> nudist(1, l.back());
        nu.push_back(nudist(rng));
      }
      std::vector<Int> a;
      while (static_cast<int>(a.size()) < m) {
        Int v(adist(rng));
        bool dup = v == 0;
        for (const Int& w : a) dup = dup || w == v;
        if (!dup) a.push_back(v);
      }
      try {
        WildProblem p(l, nu, Convention::binomial, IntegerPoint(a));
        minor_gcd_report_specialized(p);
      } catch (const DivisibilityFalsified&) {
        ok = false;
        detail = "integer factor falsified";
      }
    }
    out.report("integer specialization certificate", ok, detail);
  }

  std::cout << (out.failures == 0 ? "all certificates passed"
                                  : "certificates FAILED")
            << "\n";
  return out.failures == 0 ? 0 : 2;
}

// --------------------------------------------------------------- tables ----

int run_tables(int which, const std::string& format) {
  if (which == 1) {
    return run_twin("1,3", format.empty() ? "csv" : format);
  }
  struct Row {
    std::vector<int> l;
    Convention conv;
    bool derived_quotients;
  };
  std::vector<Row> rows;
  if (which == 2) {
    rows = {{{1, 1}, Convention::falling_factorial, false},
            {{1, 2}, Convention::binomial, false},
            {{2, 2}, Convention::binomial, false},
            {{1, 3}, Convention::binomial, false},
            {{1, 4}, Convention::binomial, false},
            {{2, 3}, Convention::binomial, false},
            {{3, 3}, Convention::binomial, false}};
  } else if (which == 3) {
    rows = {{{1, 1, 1}, Convention::binomial, false},
            {{1, 1, 2}, Convention::binomial, false},
            {{2, 2, 2}, Convention::binomial, true}};
  } else {
    throw CLI::ValidationError("tables: argument must be 1, 2 or 3");
  }

  bool json = format == "json";
  OrderedJson jrows = OrderedJson::array();
  for (const Row& row : rows) {
    GcdReport rep =
        minor_gcd_report_symbolic(WildProblem::twin(row.l, row.conv));
    if (json) {
      OrderedJson j = to_json(rep);
      j["l"] = row.l;
      j["quotients_derived"] = row.derived_quotients;
      jrows.push_back(j);
    } else {
      std::cout << "case l=(";
      for (size_t i = 0; i < row.l.size(); ++i)
        std::cout << (i ? "," : "") << row.l[i];
      std::cout << ") convention=" << to_string(row.conv) << "\n";
      std::cout << "gcd: " << to_string(rep.gcd) << "\n";
      for (size_t i = 0; i < rep.quotients.size(); ++i)
        std::cout << "minor[" << i << "]/gcd"
                  << (row.derived_quotients ? " (derived)" : "") << ": "
                  << to_string(rep.quotients[i]) << "\n";
      std::cout << "\n";
    }
  }
  if (json) {
    OrderedJson j;
    j["schema"] = kReportSchema;
    j["table"] = which;
    j["rows"] = jrows;
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hermite-Pade approximants to the exponential: "
               "solvers, minor-gcd reports, Siegel bounds, certificates"};
  app.require_subcommand(1);

  std::string format = "text";

  auto* tame = app.add_subcommand("tame", "solve the classical system");
  int l0 = 0;
  std::string tame_l, tame_point, tame_format = "text";
  tame->add_option("--l0", l0, "order parameter l0 (>= 0)");
  tame->add_option("--l", tame_l, "comma-separated l_1..l_m")->required();
  tame->add_option("--point", tame_point, "integer point a_1..a_m");
  tame->add_option("--format", tame_format, "text|json|csv");

  auto* twin = app.add_subcommand("twin", "solve the twin system (nu = l)");
  std::string twin_l, twin_format = "csv";
  twin->add_option("--l", twin_l, "comma-separated l_1..l_m")->required();
  twin->add_option("--format", twin_format, "text|json|csv");

  auto* gm = app.add_subcommand("gcd-minors", "minor gcd report");
  std::string gm_l, gm_nu, gm_conv = "binomial", gm_a, gm_format = "json";
  gm->add_option("--l", gm_l, "comma-separated l_1..l_m")->required();
  gm->add_option("--nu", gm_nu, "comma-separated nu_1..nu_m (default l)");
  gm->add_option("--convention", gm_conv, "binomial|falling");
  gm->add_option("--a", gm_a, "integer point (specialized mode)");
  gm->add_option("--format", gm_format, "json|text");

  auto* sg = app.add_subcommand("siegel", "small kernel vector and bounds");
  std::string sg_a, sg_l, sg_nu, sg_format = "json";
  long sg_budget = 0;
  sg->add_option("--a", sg_a, "integer point a_1..a_m")->required();
  sg->add_option("--l", sg_l, "comma-separated l_1..l_m")->required();
  sg->add_option("--nu", sg_nu, "comma-separated nu_1..nu_m")->required();
  sg->add_option("--budget", sg_budget, "sup-norm search budget");
  sg->add_option("--format", sg_format, "json|text");

  auto* ct = app.add_subcommand("certify", "randomized certificate battery");
  uint64_t ct_seed = 1;
  int ct_trials = 25;
  ct->add_option("--seed", ct_seed, "random seed");
  ct->add_option("--trials", ct_trials, "trials per certificate");

  auto* tb = app.add_subcommand("tables", "regenerate reference tables");
  int tb_which = 0;
  std::string tb_format;
  tb->add_option("which", tb_which, "table number: 1, 2 or 3")->required();
  tb->add_option("--format", tb_format, "text|csv|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (tame->parsed()) return run_tame(l0, tame_l, tame_point, tame_format);
    if (twin->parsed()) return run_twin(twin_l, twin_format);
    if (gm->parsed())
      return run_gcd_minors(gm_l, gm_nu, gm_conv, gm_a, gm_format);
    if (sg->parsed())
      return run_siegel(sg_a, sg_l, sg_nu, sg_budget, sg_format);
    if (ct->parsed()) return run_certify(ct_seed, ct_trials);
    if (tb->parsed()) return run_tables(tb_which, tb_format);
  } catch (const NotDivisible& e) {
    std::cerr << "certificate falsified: " << e.what() << "\n";
    return 2;
  } catch (const DivisibilityFalsified& e) {
    std::cerr << "certificate falsified: " << e.what() << "\n";
    return 2;
  } catch (const IdentityFalsified& e) {
    std::cerr << "certificate falsified: " << e.what() << "\n";
    return 2;
  } catch (const CoefficientNonZero& e) {
    std::cerr << "certificate falsified: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
