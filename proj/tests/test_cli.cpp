#include <sstream>

#include <gtest/gtest.h>

#include "gsp4/cli.hpp"
#include "oracles.hpp"

using namespace gsp4;

namespace {

struct Run {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(GSP4_FIXTURES) + "/" + name; }

void expect_keys(const Json& j, std::initializer_list<const char*> keys) {
  for (const char* k : keys) EXPECT_TRUE(j.contains(k)) << "missing key " << k << " in " << j.dump();
}

bool is_rational_string(const Json& v) {
  if (!v.is_string()) return false;
  try {
    parse_rational(v.get<std::string>());
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

TEST(Cli, CoprimePrime) {
  auto r = run({"coprime-prime", "--level", "30"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "p=7 bound=8.80239476332431\n");
  auto j = run({"coprime-prime", "--level", "1", "--json"}).json();
  EXPECT_EQ(j["command"], "coprime-prime");
  EXPECT_EQ(j["p"], 2);
  EXPECT_EQ(j["bound"], 2.0);
  EXPECT_EQ(j["borderline"], true);
}

TEST(Cli, ArchimedeanEqualWeights) {
  auto j = run({"archimedean", "--k1", "10", "--k2", "10", "--rep", "rho4xrho4", "--json"}).json();
  EXPECT_EQ(j["degree"], 16);
  std::vector<std::string> atoms = j["atoms"];
  std::sort(atoms.begin(), atoms.end());
  EXPECT_EQ(atoms, oracle::spin_spin_closed_form(10, 10));
  auto t = run({"archimedean", "--k1", "10", "--k2", "10", "--rep", "rho4xrho4"});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("degree=16"), std::string::npos);
  EXPECT_NE(t.out.find("  Gamma_C(s+17)\n"), std::string::npos);

  auto e = run({"archimedean", "--k1", "12", "--k2", "10", "--rep", "rho5xrho5", "--eval", "0.5,1", "--json"}).json();
  EXPECT_EQ(e["degree"], 25);
  expect_keys(e["eval"], {"s", "log_modulus", "phase", "value"});
  auto direct = gamma_eval(rankin_arch_factors(12, 10, RepPair::StdStd), Complex(0.5, 1));
  EXPECT_NEAR(e["eval"]["log_modulus"].get<double>(), direct.log_modulus, 1e-12 * std::abs(direct.log_modulus));
  EXPECT_EQ(run({"archimedean", "--k1", "1", "--k2", "1", "--rep", "rho4xrho4", "--eval", "0"}).code, 1);
}

TEST(Cli, EigsCorruptedInput) {
  auto bad = run({"eigs", "--form", fixture("sk_k10_corrupted.json"), "--p", "2", "--json"});
  EXPECT_EQ(bad.code, 2);
  auto j = bad.json();
  EXPECT_EQ(j["agreement"], false);
  EXPECT_EQ(j["values"][2]["agree"], false);
  EXPECT_EQ(j["values"][0]["agree"], true);
  auto text = run({"eigs", "--form", fixture("sk_k10_corrupted.json"), "--p", "2"});
  EXPECT_EQ(text.code, 2);
  EXPECT_NE(text.out.find("agreement=false"), std::string::npos);

  for (std::uint64_t p : {2u, 3u, 47u, 97u}) {
    auto good = run({"eigs", "--form", fixture("sk_k10.json"), "--p", std::to_string(p), "--max-power", "8", "--json"});
    EXPECT_EQ(good.code, 0) << p;
    EXPECT_EQ(good.json()["agreement"], true);
    EXPECT_EQ(good.json()["values"].size(), 8u);
  }
}

TEST(Cli, UsageErrors) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"coprime-prime"},
           {"coprime-prime", "--level", "0"},
           {"coprime-prime", "--level", "30", "--bogus"},
           {"euler", "--form", fixture("minimal.json"), "--p", "4", "--rep", "spin"},
           {"euler", "--form", fixture("minimal.json"), "--p", "2", "--rep", "adjoint"},
           {"euler", "--form", "/nonexistent.json", "--p", "2", "--rep", "spin"},
           {"sk-lift", "--elliptic", fixture("elliptic_w18.json"), "--k", "10", "--p", "2", "--terms", "5"},
           {"sk-lift", "--elliptic", fixture("elliptic_w18.json"), "--k", "10", "--twist", "-4"},
           {"archimedean", "--k1", "10", "--k2", "10", "--rep", "rho4xrho4", "--eval", "a,b"},
       }) {
    auto r = run(args);
    EXPECT_EQ(r.code, 1) << r.err;
    EXPECT_NE(r.err.find("usage error"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("synopsis: gsp4"), std::string::npos) << r.err;
  }
  auto r = run({"coprime-prime", "--level", "3", "--bogus"});
  EXPECT_NE(r.err.find("--bogus"), std::string::npos);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, DomainErrors) {
  auto r = run({"euler", "--form", fixture("minimal.json"), "--p", "3", "--rep", "spin", "--json"});
  EXPECT_EQ(r.code, 2);
  auto j = r.json();
  EXPECT_EQ(j["command"], "euler");
  EXPECT_EQ(j["error"], "UnknownPrime");
  EXPECT_NE(r.err.find("error:"), std::string::npos);
  EXPECT_EQ(run({"sk-lift", "--elliptic", fixture("elliptic_w18.json"), "--k", "11"}).code, 2);
  EXPECT_EQ(run({"sk-lift", "--elliptic", fixture("elliptic_w18.json"), "--k", "10", "--terms", "5", "--twist", "12"}).code, 0);
  EXPECT_EQ(run({"sk-lift", "--elliptic", fixture("elliptic_w18.json"), "--k", "10", "--terms", "5", "--twist", "-12"}).code, 2);
  EXPECT_EQ(run({"sk-lift", "--elliptic", fixture("elliptic_w18.json"), "--k", "10", "--terms", "500"}).code, 2);
  EXPECT_EQ(run({"weil", "--expr", "phi(0)"}).code, 2);
  EXPECT_EQ(run({"rankin", "--form1", fixture("sk_k10.json"), "--form2", fixture("sk_k12.json"), "--x", "20"}).code, 2);
  EXPECT_EQ(run({"eigs", "--form", fixture("sk_k10_satake.json"), "--p", "2"}).code, 2);
}

TEST(Cli, ExactValuesAreStrings) {
  auto j = run({"euler", "--form", fixture("sk_k10.json"), "--p", "2", "--rep", "spin", "--json"}).json();
  EXPECT_EQ(j["reciprocal"][1], "-240");
  EXPECT_EQ(j["series"][1], "240");
  EXPECT_EQ(j["series"][3], "98365440");
  for (const auto& v : j["reciprocal"]) EXPECT_TRUE(is_rational_string(v));
  auto n = run({"euler", "--form", fixture("sk_k10.json"), "--p", "2", "--rep", "spin", "--normalized", "--json"}).json();
  EXPECT_EQ(n["normalization"], "analytic");
  EXPECT_TRUE(n["series"][1].is_string());
  auto s = run({"euler", "--form", fixture("sk_k10.json"), "--p", "3", "--rep", "std", "--terms", "4", "--json"}).json();
  EXPECT_EQ(s["series_kind"], "b");
  EXPECT_EQ(s["reciprocal"].size(), 6u);
  for (const auto& v : s["reciprocal"]) EXPECT_TRUE(is_rational_string(v));
  auto c = run({"euler", "--form", fixture("sk_k10_satake.json"), "--p", "3", "--rep", "std", "--json"}).json();
  for (const auto& v : c["reciprocal"]) EXPECT_TRUE(v.is_array() && v.size() == 2);
}

TEST(Cli, FloatsRoundedTo15Digits) {
  EXPECT_EQ(cli::fnum(0.1 + 0.2), 0.3);
  EXPECT_EQ(cli::fnum(1.0 / 3.0), 0.333333333333333);
  auto j = run({"coprime-prime", "--level", "30", "--json"}).json();
  EXPECT_EQ(j["bound"].get<double>(), 8.80239476332431);
}

TEST(Cli, SkLiftAndDistinguish) {
  auto j = run({"sk-lift", "--elliptic", fixture("elliptic_w18.json"), "--k", "10", "--json"}).json();
  EXPECT_EQ(j["lambda_p"], "240");
  EXPECT_EQ(j["mode"], "eigenvalues");
  auto t = run({"sk-lift", "--elliptic", fixture("elliptic_w18.json"), "--k", "10", "--terms", "12", "--twist", "-4", "--json"}).json();
  EXPECT_EQ(t["coefficients"].size(), 12u);
  EXPECT_EQ(t["coefficients"][1], "0");
  auto d = run({"distinguish", "--form1", fixture("sk_k10.json"), "--form2", fixture("sk_k12.json"), "--json"}).json();
  EXPECT_EQ(d["p"], 2);
  EXPECT_EQ(d["index"], 1);
  EXPECT_EQ(d["n"], 2);
  EXPECT_EQ(d["within_bound"], true);
  auto same = run({"distinguish", "--form1", fixture("sk_k10.json"), "--form2", fixture("sk_k10.json"), "--json"}).json();
  EXPECT_TRUE(same["index"].is_null());
  EXPECT_TRUE(same["within_bound"].is_null());
  auto lvl = run({"distinguish", "--form1", fixture("sk_k10.json"), "--form2", fixture("sk_k12.json"), "--level", "30", "--json"}).json();
  EXPECT_EQ(lvl["p"], 7);
}

TEST(Cli, WeilAndRankin) {
  auto w = run({"weil", "--expr", "phi(1)", "--tensor", "phi(1)", "--json"}).json();
  EXPECT_EQ(w["decomposition"], "phi(2) + phi(+) + phi(-)");
  EXPECT_EQ(w["dimension"], 4);
  EXPECT_EQ(w["atoms"], Json::array({"Gamma_C(s+1)", "Gamma_R(s)", "Gamma_R(s+1)"}));
  auto r = run({"rankin", "--form1", fixture("sk_k10.json"), "--form2", fixture("sk_k12.json"), "--x", "3", "--json"}).json();
  EXPECT_GE(r["sum_ff"].get<double>(), 0.0);
  EXPECT_DOUBLE_EQ(r["main_term"].get<double>(), cli::fnum(explicit_main_term(3)));
  EXPECT_NEAR(r["difference_ff"].get<double>(), r["sum_ff"].get<double>() - r["main_term"].get<double>(), 1e-12);
  for (const auto& row : r["lambda"]) {
    auto pp = prime_power(row["n"].get<std::uint64_t>());
    EXPECT_NE(pp.first, 0u);
  }
}

TEST(Cli, JsonSchemaOverFixtures) {
  const std::vector<std::string> forms = {"minimal.json", "sk_k10.json", "sk_k12.json", "sk_k10_satake.json"};
  for (const auto& f : forms) {
    for (const char* rep : {"spin", "std"}) {
      auto r = run({"euler", "--form", fixture(f), "--p", "2", "--rep", rep, "--json"});
      ASSERT_EQ(r.code, 0) << f << " " << rep << " " << r.err;
      auto j = r.json();
      EXPECT_EQ(j.begin().key(), "command");
      expect_keys(j, {"command", "label", "p", "rep", "normalization", "reciprocal", "series_kind", "series"});
    }
  }
  for (const char* f : {"sk_k10.json", "sk_k12.json", "sk_k10_corrupted.json", "minimal.json"}) {
    auto j = run({"eigs", "--form", fixture(f), "--p", "2", "--json"}).json();
    expect_keys(j, {"command", "label", "p", "values", "agreement"});
  }
  for (const char* f : {"sk_k12.json", "sk_k10_satake.json"}) {
    auto j = run({"rankin", "--form1", fixture("sk_k10.json"), "--form2", fixture(f), "--x", "5", "--json"}).json();
    expect_keys(j, {"command", "form1", "form2", "x", "lambda", "sum_ff", "sum_fg", "main_term", "difference_ff", "difference_fg"});
  }
  for (int w : {12, 16, 18, 20, 22, 26}) {
    auto el = fixture("elliptic_w" + std::to_string(w) + ".json");
    auto j = run({"sk-lift", "--elliptic", el, "--k", std::to_string(w / 2 + 1), "--json"}).json();
    expect_keys(j, {"command", "label", "k", "mode", "p", "lambda_p", "lambda_p2", "traces", "analytic_reciprocal"});
    auto c = run({"sk-lift", "--elliptic", el, "--k", std::to_string(w / 2 + 1), "--terms", "20", "--json"}).json();
    expect_keys(c, {"command", "label", "k", "mode", "coefficients"});
  }
  expect_keys(run({"distinguish", "--form1", fixture("minimal.json"), "--form2", fixture("sk_k10.json"), "--json"}).json(),
              {"command", "form1", "form2", "level", "p", "index", "n", "bound", "within_bound", "borderline", "values"});
  expect_keys(run({"archimedean", "--k1", "7", "--k2", "5", "--rep", "rho4xrho4", "--json"}).json(),
              {"command", "k1", "k2", "rep", "atoms", "degree"});
  expect_keys(run({"weil", "--expr", "phi(3)", "--json"}).json(),
              {"command", "expr", "expr_dimension", "decomposition", "dimension", "atoms", "degree"});
  expect_keys(run({"coprime-prime", "--level", "210", "--json"}).json(),
              {"command", "level", "p", "bound", "within_bound", "borderline"});
}
