#pragma once

// Command-line surface. cli_dispatch() is the whole program minus main(), so tests can drive it.

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gsp4/io.hpp"
#include "gsp4/weil.hpp"

namespace gsp4 {
namespace cli {

/// Round to 15 significant digits so JSON numbers print the same digits as the text output.
inline double fnum(double x) {
  if (!std::isfinite(x)) return x;
  return std::stod(format_double(x));
}

inline Json jval(const Rational& x) { return x.str(); }
inline Json jval(const Surd& x) { return x.str(); }
inline Json jval(const Complex& x) { return Json::array({fnum(x.real()), fnum(x.imag())}); }
inline Json jval(double x) { return std::isfinite(x) ? Json(fnum(x)) : Json(format_double(x)); }

template <class T>
Json jlist(const std::vector<T>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(jval(x));
  return a;
}

inline std::string tstr(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array() && v.size() == 2 && v[0].is_number()) {
    return ScalarTraits<Complex>::str({v[0].get<double>(), v[1].get<double>()});
  }
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_null()) return "-";
  return v.dump();
}

/// Two-column or multi-column plain table.
inline void table(std::ostream& out, const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w(head.size());
  for (std::size_t i = 0; i < head.size(); ++i) w[i] = head[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      out << r[i];
      if (i + 1 < r.size()) out << std::string(w[i] - r[i].size() + 2, ' ');
    }
    out << "\n";
  };
  line(head);
  for (const auto& r : rows) line(r);
}

/// Thrown for argument combinations CLI11 cannot express; reported like a parse error.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::string form, form1, form2, elliptic, rep, expr, tensor_expr, eval;
  std::uint64_t p = 0, level = 0, terms = 0;
  unsigned max_power = 4;
  int k = 0, k1 = 0, k2 = 0;
  long long twist = 0;
  double x = 0;
  bool normalized = false;
};

// --------------------------------------------------------------------------------------------

inline int run_euler(const Options& o, Json& doc, std::ostream& out) {
  auto rec = load_eigenform(o.form);
  const std::size_t r = o.terms ? o.terms : 6;
  const int k = rec.weight;
  doc["label"] = rec.label;
  doc["p"] = o.p;
  doc["rep"] = o.rep;
  Json recip, series;
  std::string series_kind, norm;
  if (o.rep == "spin") {
    if (rec.is_eigenvalue_shape()) {
      const auto& sys = rec.eigenvalues();
      if (o.normalized) {
        auto f = analytic_spin_factor(sys, o.p);
        recip = jlist(f.reciprocal.coefficients());
        series = jlist(f.expand(r).coefficients());
        series_kind = "a";
      } else {
        const auto& d = sys.at(o.p);
        recip = jlist(spin_reciprocal_eigen(d.lambda_p, d.lambda_p2, o.p, k).reciprocal.coefficients());
        series = jlist(eigen_series(sys, o.p, r).coefficients());
        series_kind = "lambda";
      }
    } else {
      const auto& m = std::get<SatakeForm<Complex>>(rec.data).at(o.p);
      auto f = spin_reciprocal_satake(m, o.p);
      if (o.normalized) {
        recip = jlist(f.reciprocal.coefficients());
        series = jlist(f.expand(r).coefficients());
        series_kind = "a";
      } else {
        recip = jlist(renormalize(f, k, Normalization::Arithmetic).reciprocal.coefficients());
        auto ev = eigenvalues_from_normalized(NormalizedSatake<Complex>{o.p, m.values[0], m.values[2]}, k);
        series = jlist(eigen_series_local(ev.first, ev.second, o.p, k, r).coefficients());
        series_kind = "lambda";
      }
    }
    norm = o.normalized ? "analytic" : "arithmetic";
  } else {
    if (rec.is_eigenvalue_shape()) {
      auto f = std_reciprocal_from_spin(analytic_spin_factor(rec.eigenvalues(), o.p));
      recip = jlist(f.reciprocal.coefficients());
      series = jlist(f.expand(r).coefficients());
    } else {
      const auto& m = std::get<SatakeForm<Complex>>(rec.data).at(o.p);
      auto c = denormalize(NormalizedSatake<Complex>{o.p, m.values[0], m.values[2]}, k);
      auto f = std_reciprocal(std_multiset(c), o.p);
      recip = jlist(f.reciprocal.coefficients());
      series = jlist(f.expand(r).coefficients());
    }
    series_kind = "b";
    norm = "analytic";
  }
  doc["normalization"] = norm;
  doc["reciprocal"] = recip;
  doc["series_kind"] = series_kind;
  doc["series"] = series;
  if (!o.json) {
    out << rec.label << "  p=" << o.p << "  rep=" << o.rep << "  normalization=" << norm << "\n";
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < series.size(); ++i)
      rows.push_back({std::to_string(i), i < recip.size() ? tstr(recip[i]) : "", tstr(series[i])});
    table(out, {"r", "reciprocal[r]", series_kind + "(p^r)"}, rows);
  }
  return 0;
}

inline int run_eigs(const Options& o, Json& doc, std::ostream& out) {
  auto rec = load_eigenform(o.form);
  const auto& sys = rec.eigenvalues();
  auto recursion = lambda_prime_powers_recursive(sys, o.p, o.max_power, true);
  auto series = eigen_series(sys, o.p, o.max_power);
  const auto& tab = sys.at(o.p).tabulated;
  bool agree = true;
  Json rows = Json::array();
  std::vector<std::vector<std::string>> trows;
  for (unsigned i = 1; i <= o.max_power; ++i) {
    bool ok = recursion[i] == series[i];
    Json row{{"r", i}, {"recursion", jval(recursion[i])}, {"series", jval(series[i])}};
    auto it = tab.find(i);
    if (it != tab.end()) {
      row["tabulated"] = jval(it->second);
      ok = ok && it->second == series[i];
    }
    row["agree"] = ok;
    agree = agree && ok;
    trows.push_back({std::to_string(i), recursion[i].str(), series[i].str(),
                     it != tab.end() ? it->second.str() : "-", ok ? "yes" : "NO"});
    rows.push_back(std::move(row));
  }
  doc["label"] = rec.label;
  doc["p"] = o.p;
  doc["values"] = rows;
  doc["agreement"] = agree;
  if (!o.json) {
    out << rec.label << "  p=" << o.p << "\n";
    table(out, {"r", "recursion", "series", "tabulated", "agree"}, trows);
    out << "agreement=" << (agree ? "true" : "false") << "\n";
  }
  return agree ? 0 : 2;
}

inline int run_distinguish(const Options& o, Json& doc, std::ostream& out) {
  auto a = load_eigenform(o.form1);
  auto b = load_eigenform(o.form2);
  const auto& f = a.eigenvalues();
  const auto& g = b.eigenvalues();
  std::uint64_t n = o.level ? o.level : std::lcm(f.level(), g.level());
  auto r = distinguish_level(f, g, n);
  doc["form1"] = a.label;
  doc["form2"] = b.label;
  doc["level"] = r.level;
  doc["p"] = r.p;
  doc["index"] = r.index ? Json(*r.index) : Json(nullptr);
  doc["n"] = r.n ? Json(*r.n) : Json(nullptr);
  doc["bound"] = jval(r.bound);
  doc["within_bound"] = r.within_bound ? Json(*r.within_bound) : Json(nullptr);
  doc["borderline"] = r.borderline;
  Json vals = Json::array();
  for (std::size_t i = 0; i < r.values.size(); ++i)
    vals.push_back({{"r", i + 1}, {"lambda1", jval(r.values[i].first)}, {"lambda2", jval(r.values[i].second)}});
  doc["values"] = vals;
  if (!o.json) {
    out << a.label << " vs " << b.label << "  N=" << r.level << "  p=" << r.p << "\n";
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < r.values.size(); ++i)
      rows.push_back({std::to_string(i + 1), r.values[i].first.str(), r.values[i].second.str()});
    table(out, {"i", "lambda_1(p^i)", "lambda_2(p^i)"}, rows);
    if (r.index)
      out << "index=" << *r.index << " n=" << *r.n << " bound=" << format_double(r.bound)
          << " within_bound=" << (*r.within_bound ? "true" : "false") << (r.borderline ? " (borderline)" : "") << "\n";
    else
      out << "index=none (forms agree at p, p^2, p^3, p^4)\n";
  }
  return 0;
}

inline int run_sk_lift(const Options& o, Json& doc, std::ostream& out) {
  auto rec = load_elliptic(o.elliptic);
  const auto& f = rec.form;
  check_lift_weight(f, o.k);
  doc["label"] = rec.label;
  doc["k"] = o.k;
  if (o.terms) {
    DirichletSeries<Surd> c = o.twist ? sk_twisted_coefficients(f, QuadChar(o.twist), o.terms) : sk_spin_coefficients(f, o.terms);
    std::vector<Surd> v;
    for (std::uint64_t n = 1; n <= o.terms; ++n) v.push_back(c[n]);
    doc["mode"] = o.twist ? "twisted" : "spin";
    if (o.twist) doc["twist"] = o.twist;
    doc["coefficients"] = jlist(v);
    if (!o.json) {
      out << rec.label << " lifted to k=" << o.k << (o.twist ? "  twist d=" + std::to_string(o.twist) : std::string()) << "\n";
      std::vector<std::vector<std::string>> rows;
      for (std::uint64_t n = 1; n <= o.terms; ++n) rows.push_back({std::to_string(n), v[n - 1].str()});
      table(out, {"n", o.twist ? "a_twisted(n)" : "a(n)"}, rows);
    }
    return 0;
  }
  const std::uint64_t p = o.p ? o.p : 2;
  if (!is_prime(p)) fail(ErrorCode::DomainError, std::to_string(p) + " is not prime");
  auto sys = sk_lift_system(f, o.k, p);
  const auto& d = sys.at(p);
  auto [a, b] = sk_traces(f, p);
  auto lf = sk_local_factor(f, p);
  doc["mode"] = "eigenvalues";
  doc["p"] = p;
  doc["lambda_p"] = jval(d.lambda_p);
  doc["lambda_p2"] = jval(d.lambda_p2);
  doc["traces"] = Json::array({jval(a), jval(b)});
  doc["analytic_reciprocal"] = jlist(lf.reciprocal.coefficients());
  if (!o.json) {
    out << rec.label << " lifted to k=" << o.k << "  p=" << p << "\n";
    table(out, {"quantity", "value"},
          {{"lambda(p)", d.lambda_p.str()},
           {"lambda(p^2)", d.lambda_p2.str()},
           {"A", a.str()},
           {"B", b.str()},
           {"reciprocal", lf.reciprocal.str()}});
  }
  return 0;
}

inline Complex parse_complex_arg(const std::string& s) {
  auto comma = s.find(',');
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) {
      double re = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {re, 0};
    }
    std::string a = s.substr(0, comma), b = s.substr(comma + 1);
    double re = std::stod(a, &used);
    if (used != a.size()) throw std::invalid_argument(s);
    double im = std::stod(b, &used);
    if (used != b.size()) throw std::invalid_argument(s);
    return {re, im};
  } catch (const std::exception&) {
    throw UsageError("--eval: expected RE,IM, got '" + s + "'");
  }
}

inline Json atoms_json(const std::vector<GammaAtom>& atoms) {
  Json a = Json::array();
  for (const auto& x : atoms) a.push_back(x.str());
  return a;
}

inline int run_archimedean(const Options& o, Json& doc, std::ostream& out) {
  RepPair pair = o.rep == "rho4xrho4" ? RepPair::SpinSpin : RepPair::StdStd;
  auto atoms = rankin_arch_factors(o.k1, o.k2, pair);
  doc["k1"] = o.k1;
  doc["k2"] = o.k2;
  doc["rep"] = o.rep;
  doc["atoms"] = atoms_json(atoms);
  doc["degree"] = total_degree(atoms);
  std::optional<GammaValue> v;
  if (!o.eval.empty()) {
    Complex s = parse_complex_arg(o.eval);
    v = gamma_eval(atoms, s);
    doc["eval"] = {{"s", jval(s)}, {"log_modulus", jval(v->log_modulus)}, {"phase", jval(v->phase)}, {"value", jval(v->value)}};
  }
  if (!o.json) {
    out << o.rep << "  k1=" << o.k1 << " k2=" << o.k2 << "  degree=" << total_degree(atoms) << "\n";
    for (const auto& a : atoms) out << "  " << a.str() << "\n";
    if (v)
      out << "log|G(s)|=" << format_double(v->log_modulus) << " arg=" << format_double(v->phase)
          << " G(s)=" << ScalarTraits<Complex>::str(v->value) << "\n";
  }
  return 0;
}

inline int run_weil(const Options& o, Json& doc, std::ostream& out) {
  auto a = parse_weil(o.expr);
  doc["expr"] = a.str();
  doc["expr_dimension"] = a.dimension();
  WeilRepSum result = a;
  if (!o.tensor_expr.empty()) {
    auto b = parse_weil(o.tensor_expr);
    result = tensor(a, b);
    doc["tensor"] = b.str();
  }
  auto atoms = l_factor(result);
  doc["decomposition"] = result.str();
  doc["dimension"] = result.dimension();
  doc["atoms"] = atoms_json(atoms);
  doc["degree"] = total_degree(atoms);
  if (!o.json) {
    out << "decomposition: " << result.str() << "  (dimension " << result.dimension() << ")\n";
    out << "gamma factors:";
    for (const auto& x : atoms) out << " " << x.str();
    out << "\n";
  }
  return 0;
}

inline int run_rankin(const Options& o, Json& doc, std::ostream& out) {
  if (!(o.x > 1)) fail(ErrorCode::DomainError, "x must exceed 1");
  auto a = load_eigenform(o.form1);
  auto b = load_eigenform(o.form2);
  const double tol = default_tolerance();
  auto f = satake_form_of(a, tol);
  auto g = satake_form_of(b, tol);
  const double x2 = o.x * o.x;
  const auto bound = static_cast<std::uint64_t>(std::ceil(x2) - 1);
  auto ff = rankin_coefficients(f, f, bound);
  auto fg = rankin_coefficients(f, g, bound);
  double s_ff = weighted_prime_sum(ff, o.x);
  double s_fg = weighted_prime_sum(fg, o.x);
  double main = explicit_main_term(o.x);
  Json rows = Json::array();
  std::vector<std::vector<std::string>> trows;
  for (std::uint64_t n = 2; n <= bound; ++n) {
    if (prime_power(n).first == 0) continue;
    if (ff[n] == 0.0 && fg[n] == 0.0) continue;
    rows.push_back({{"n", n}, {"lambda_ff", jval(ff[n])}, {"lambda_fg", jval(fg[n])}});
    trows.push_back({std::to_string(n), format_double(ff[n]), format_double(fg[n])});
  }
  doc["form1"] = a.label;
  doc["form2"] = b.label;
  doc["x"] = jval(o.x);
  doc["lambda"] = rows;
  doc["sum_ff"] = jval(s_ff);
  doc["sum_fg"] = jval(s_fg);
  doc["main_term"] = jval(main);
  doc["difference_ff"] = jval(s_ff - main);
  doc["difference_fg"] = jval(s_fg - main);
  if (!o.json) {
    table(out, {"n", "Lambda_FxF(n)", "Lambda_FxG(n)"}, trows);
    out << "sum_FxF=" << format_double(s_ff) << " sum_FxG=" << format_double(s_fg) << " main=" << format_double(main)
        << " sum_FxF-main=" << format_double(s_ff - main) << " sum_FxG-main=" << format_double(s_fg - main) << "\n";
  }
  return 0;
}

inline int run_coprime_prime(const Options& o, Json& doc, std::ostream& out) {
  auto r = smallest_coprime_prime(o.level);
  doc["level"] = o.level;
  doc["p"] = r.p;
  doc["bound"] = jval(r.bound);
  doc["within_bound"] = r.within;
  doc["borderline"] = r.borderline;
  if (!o.json) out << "p=" << r.p << " bound=" << format_double(r.bound) << (r.borderline ? " (borderline)" : "") << "\n";
  return 0;
}

}  // namespace cli

/// Runs one invocation. args excludes the program name. Exit codes: 0 success, 1 usage, 2 domain.
inline int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace cli;
  Options o;
  CLI::App app{"gsp4: degree-2 Siegel eigenform L-factors, lifts and distinguishing bounds", "gsp4"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "gsp4 0.1.0");

  auto add_json = [&](CLI::App* s) { s->add_flag("--json", o.json, "machine-readable output"); };
  CLI::Validator prime(
      [](std::string& s) -> std::string {
        std::uint64_t v = 0;
        std::size_t used = 0;
        try {
          v = std::stoull(s, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used == 0 || used != s.size() || !is_prime(v)) return "value " + s + " is not a prime";
        return {};
      },
      "PRIME");

  auto* euler = app.add_subcommand("euler", "local L-factor and its expansion at p");
  euler->add_option("--form", o.form, "eigenform record")->required()->check(CLI::ExistingFile);
  euler->add_option("--p", o.p, "good prime")->required()->check(prime);
  euler->add_option("--rep", o.rep, "spin or std")->required()->check(CLI::IsMember({"spin", "std"}));
  euler->add_option("--terms", o.terms, "series order (default 6)")->check(CLI::Range(1, 200));
  euler->add_flag("--normalized", o.normalized, "analytic normalization (spin)");
  add_json(euler);

  auto* eigs = app.add_subcommand("eigs", "lambda(p^i) by recursion and by series");
  eigs->add_option("--form", o.form, "eigenform record")->required()->check(CLI::ExistingFile);
  eigs->add_option("--p", o.p, "good prime")->required()->check(prime);
  eigs->add_option("--max-power", o.max_power, "largest i (default 4)")->check(CLI::Range(1, 200));
  add_json(eigs);

  auto* dist = app.add_subcommand("distinguish", "first distinguishing prime power");
  dist->add_option("--form1", o.form1, "eigenform record")->required()->check(CLI::ExistingFile);
  dist->add_option("--form2", o.form2, "eigenform record")->required()->check(CLI::ExistingFile);
  dist->add_option("--level", o.level, "N (default lcm of the levels)")->check(CLI::PositiveNumber);
  add_json(dist);

  auto* sk = app.add_subcommand("sk-lift", "Saito-Kurokawa lift of an elliptic eigenform");
  sk->add_option("--elliptic", o.elliptic, "elliptic record")->required()->check(CLI::ExistingFile);
  sk->add_option("--k", o.k, "Siegel weight")->required();
  auto* skp = sk->add_option("--p", o.p, "prime for lift eigenvalues (default 2)")->check(prime);
  auto* skt = sk->add_option("--terms", o.terms, "number of spin coefficients")->check(CLI::PositiveNumber);
  skp->excludes(skt);
  sk->add_option("--twist", o.twist, "fundamental discriminant d (with --terms)")->needs(skt);
  add_json(sk);

  auto* arch = app.add_subcommand("archimedean", "Gamma factors of a Rankin-Selberg convolution");
  arch->add_option("--k1", o.k1, "weight of F")->required()->check(CLI::Range(3, 100000));
  arch->add_option("--k2", o.k2, "weight of G")->required()->check(CLI::Range(3, 100000));
  arch->add_option("--rep", o.rep, "rho4xrho4 or rho5xrho5")->required()->check(CLI::IsMember({"rho4xrho4", "rho5xrho5"}));
  arch->add_option("--eval", o.eval, "evaluate at s = RE,IM");
  add_json(arch);

  auto* weil = app.add_subcommand("weil", "Weil group tensor products and Gamma factors");
  weil->add_option("--expr", o.expr, "e.g. phi(17)+phi(1)")->required();
  weil->add_option("--tensor", o.tensor_expr, "second factor");
  add_json(weil);

  auto* rk = app.add_subcommand("rankin", "Lambda coefficients and the weighted prime sum");
  rk->add_option("--form1", o.form1, "eigenform record")->required()->check(CLI::ExistingFile);
  rk->add_option("--form2", o.form2, "eigenform record")->required()->check(CLI::ExistingFile);
  rk->add_option("--x", o.x, "x > 1")->required();
  add_json(rk);

  auto* cp = app.add_subcommand("coprime-prime", "smallest prime not dividing N");
  cp->add_option("--level", o.level, "N")->required()->check(CLI::PositiveNumber);
  add_json(cp);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    auto subs = app.get_subcommands();
    std::string synopsis = subs.empty() ? "gsp4 <euler|eigs|distinguish|sk-lift|archimedean|weil|rankin|coprime-prime> [options]"
                                        : "gsp4 " + subs.front()->get_name() + " [options]  (see gsp4 " + subs.front()->get_name() + " --help)";
    err << "synopsis: " << synopsis << "\n";
    return 1;
  }

  auto* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  Json doc;
  doc["command"] = name;
  std::ostringstream text;
  int code = 0;
  try {
    if (name == "euler") code = run_euler(o, doc, text);
    else if (name == "eigs") code = run_eigs(o, doc, text);
    else if (name == "distinguish") code = run_distinguish(o, doc, text);
    else if (name == "sk-lift") code = run_sk_lift(o, doc, text);
    else if (name == "archimedean") code = run_archimedean(o, doc, text);
    else if (name == "weil") code = run_weil(o, doc, text);
    else if (name == "rankin") code = run_rankin(o, doc, text);
    else code = run_coprime_prime(o, doc, text);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nsynopsis: gsp4 " << name << " [options]  (see gsp4 " << name << " --help)\n";
    return 1;
  } catch (const Error& e) {
    if (o.json) out << Json{{"command", name}, {"error", std::string(error_name(e.code()))}, {"message", e.what()}}.dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (o.json) out << doc.dump(2) << "\n";
  else out << text.str();
  return code;
}

inline int cli_dispatch(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cli_dispatch(args, out, err);
}

}  // namespace gsp4
