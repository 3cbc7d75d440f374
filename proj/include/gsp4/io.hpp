#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "gsp4/distinguish.hpp"
#include "gsp4/saito_kurokawa.hpp"

namespace gsp4 {

using Json = nlohmann::ordered_json;

/// One Siegel eigenform as stored on disk. Exactly one of the two per-prime shapes:
///   {"p": 2, "lambda_p": "<rational>", "lambda_p2": "<rational>" [, "lambda_p3": ..., "lambda_p4": ...]}
///   {"p": 2, "alpha": [re, im], "beta": [re, im]}
struct EigenformRecord {
  std::string label;
  int weight = 0;
  std::uint64_t level = 1;
  std::string type_tag = "unknown";  // "P", "G" or "unknown"
  std::variant<EigenvalueSystem, SatakeForm<Complex>> data;

  bool is_eigenvalue_shape() const { return std::holds_alternative<EigenvalueSystem>(data); }
  const EigenvalueSystem& eigenvalues() const {
    if (!is_eigenvalue_shape())
      fail(ErrorCode::NotExact, "record '" + label + "' holds floating Satake data; exact eigenvalues are required");
    return std::get<EigenvalueSystem>(data);
  }
};

struct EllipticRecord {
  std::string label;
  EllipticEigenform form;
};

namespace detail {

inline Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::ParseError, source + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline const Json& field(const Json& obj, const char* name, const std::string& where) {
  if (!obj.is_object()) fail(ErrorCode::SchemaError, where + ": expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) fail(ErrorCode::SchemaError, where + ": missing field '" + name + "'");
  return *it;
}

inline long long int_field(const Json& obj, const char* name, const std::string& where) {
  const Json& v = field(obj, name, where);
  if (!v.is_number_integer()) fail(ErrorCode::SchemaError, where + "." + name + ": expected an integer");
  return v.get<long long>();
}

inline std::string string_field(const Json& obj, const char* name, const std::string& where) {
  const Json& v = field(obj, name, where);
  if (!v.is_string()) fail(ErrorCode::SchemaError, where + "." + name + ": expected a string");
  return v.get<std::string>();
}

inline Rational rational_field(const Json& obj, const char* name, const std::string& where) {
  std::string s = string_field(obj, name, where);
  try {
    return parse_rational(s);
  } catch (const Error& e) {
    fail(ErrorCode::SchemaError, where + "." + name + ": " + e.what());
  }
}

inline Complex complex_field(const Json& obj, const char* name, const std::string& where) {
  const Json& v = field(obj, name, where);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    fail(ErrorCode::SchemaError, where + "." + name + ": expected [re, im]");
  return {v[0].get<double>(), v[1].get<double>()};
}

}  // namespace detail

inline EigenformRecord parse_eigenform(const std::string& text, const std::string& source = "<input>") {
  using namespace detail;
  Json j = parse_json_text(text, source);
  const std::string where = source;
  EigenformRecord rec{"", 0, 1, "unknown", SatakeForm<Complex>{}};
  rec.label = string_field(j, "label", where);
  long long w = int_field(j, "weight", where);
  long long lvl = int_field(j, "level", where);
  if (lvl < 1) fail(ErrorCode::SchemaError, where + ".level: must be >= 1");
  if (w <= 2) fail(ErrorCode::InvariantError, where + ".weight: must exceed 2");
  rec.weight = static_cast<int>(w);
  rec.level = static_cast<std::uint64_t>(lvl);
  if (j.contains("type")) {
    rec.type_tag = string_field(j, "type", where);
    if (rec.type_tag != "P" && rec.type_tag != "G" && rec.type_tag != "unknown")
      fail(ErrorCode::SchemaError, where + ".type: expected \"P\", \"G\" or \"unknown\"");
  }
  const Json& pd = field(j, "prime_data", where);
  if (!pd.is_array()) fail(ErrorCode::SchemaError, where + ".prime_data: expected an array");

  int shape = 0;  // 1 eigenvalues, 2 Satake
  std::uint64_t prev = 0;
  std::map<std::uint64_t, EigenvalueSystem::PrimeData> eig;
  SatakeForm<Complex> sat{rec.weight, rec.level, {}};
  for (std::size_t i = 0; i < pd.size(); ++i) {
    const std::string at = where + ".prime_data[" + std::to_string(i) + "]";
    const Json& e = pd[i];
    long long pv = int_field(e, "p", at);
    if (pv < 2 || !is_prime(static_cast<std::uint64_t>(pv))) fail(ErrorCode::InvariantError, at + ".p: " + std::to_string(pv) + " is not prime");
    auto p = static_cast<std::uint64_t>(pv);
    if (p <= prev) fail(ErrorCode::InvariantError, at + ".p: primes must be strictly increasing");
    if (std::gcd(p, rec.level) != 1)
      fail(ErrorCode::InvariantError, at + ".p: prime " + std::to_string(p) + " divides level " + std::to_string(rec.level));
    prev = p;
    int this_shape = e.contains("lambda_p") ? 1 : (e.contains("alpha") ? 2 : 0);
    if (this_shape == 0) fail(ErrorCode::SchemaError, at + ": needs lambda_p/lambda_p2 or alpha/beta");
    if (e.contains("lambda_p") && e.contains("alpha")) fail(ErrorCode::SchemaError, at + ": mixes both prime-data shapes");
    if (shape != 0 && this_shape != shape) fail(ErrorCode::SchemaError, at + ": record mixes prime-data shapes");
    shape = this_shape;
    if (shape == 1) {
      EigenvalueSystem::PrimeData d{rational_field(e, "lambda_p", at), rational_field(e, "lambda_p2", at), {}};
      if (e.contains("lambda_p3")) d.tabulated[3] = rational_field(e, "lambda_p3", at);
      if (e.contains("lambda_p4")) d.tabulated[4] = rational_field(e, "lambda_p4", at);
      eig.emplace(p, std::move(d));
    } else {
      Complex a = complex_field(e, "alpha", at);
      Complex b = complex_field(e, "beta", at);
      if (std::abs(a) == 0 || std::abs(b) == 0) fail(ErrorCode::InvariantError, at + ": alpha, beta must be nonzero");
      SpinMultiset<Complex> m{{a, 1.0 / a, b, 1.0 / b}};
      if (!ScalarTraits<Complex>::equal(m.product(), Complex(1, 0), 1e-9))
        fail(ErrorCode::InvariantError, at + ": spin parameters do not multiply to 1");
      sat.params.emplace(p, m);
    }
  }
  if (shape == 2) {
    rec.data = std::move(sat);
  } else {
    rec.data = EigenvalueSystem(rec.weight, rec.level, std::move(eig));
  }
  return rec;
}

inline EigenformRecord load_eigenform(const std::string& path) { return parse_eigenform(detail::read_file(path), path); }

inline Json to_json(const EigenformRecord& rec) {
  Json j;
  j["label"] = rec.label;
  j["weight"] = rec.weight;
  j["level"] = rec.level;
  j["type"] = rec.type_tag;
  Json pd = Json::array();
  if (rec.is_eigenvalue_shape()) {
    for (const auto& [p, d] : rec.eigenvalues().data()) {
      Json e;
      e["p"] = p;
      e["lambda_p"] = d.lambda_p.str();
      e["lambda_p2"] = d.lambda_p2.str();
      for (const auto& [r, v] : d.tabulated) e["lambda_p" + std::to_string(r)] = v.str();
      pd.push_back(std::move(e));
    }
  } else {
    for (const auto& [p, m] : std::get<SatakeForm<Complex>>(rec.data).params) {
      Json e;
      e["p"] = p;
      e["alpha"] = {m.values[0].real(), m.values[0].imag()};
      e["beta"] = {m.values[2].real(), m.values[2].imag()};
      pd.push_back(std::move(e));
    }
  }
  j["prime_data"] = std::move(pd);
  return j;
}

inline void save_eigenform(const EigenformRecord& rec, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::ParseError, "cannot write " + path);
  out << to_json(rec).dump(2) << "\n";
}

/// {"label": ..., "weight": w, "coefficients": ["1", "<lambda_f(2)>", ...]} with integer strings.
inline EllipticRecord parse_elliptic(const std::string& text, const std::string& source = "<input>") {
  using namespace detail;
  Json j = parse_json_text(text, source);
  std::string label = string_field(j, "label", source);
  long long w = int_field(j, "weight", source);
  const Json& c = field(j, "coefficients", source);
  if (!c.is_array() || c.empty()) fail(ErrorCode::SchemaError, source + ".coefficients: expected a non-empty array");
  std::vector<Rational> raw;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::string at = source + ".coefficients[" + std::to_string(i) + "]";
    if (!c[i].is_string()) fail(ErrorCode::SchemaError, at + ": expected an integer string");
    Rational q;
    try {
      q = parse_rational(c[i].get<std::string>());
    } catch (const Error& e) {
      fail(ErrorCode::SchemaError, at + ": " + e.what());
    }
    if (boost::multiprecision::denominator(q) != 1) fail(ErrorCode::SchemaError, at + ": expected an integer");
    raw.push_back(q);
  }
  if (w < 12 || w % 2 != 0) fail(ErrorCode::InvariantError, source + ".weight: must be even and >= 12");
  return EllipticRecord{label, EllipticEigenform(static_cast<int>(w), std::move(raw))};
}

inline EllipticRecord load_elliptic(const std::string& path) { return parse_elliptic(detail::read_file(path), path); }

inline Json to_json(const EllipticRecord& rec) {
  Json j;
  j["label"] = rec.label;
  j["weight"] = rec.form.weight();
  Json c = Json::array();
  for (std::uint64_t n = 1; n <= rec.form.bound(); ++n) c.push_back(rec.form.lambda(n).str());
  j["coefficients"] = std::move(c);
  return j;
}

/// Normalized spin parameters of a record: taken as stored, or recovered from lambda(p), lambda(p^2).
inline SatakeForm<Complex> satake_form_of(const EigenformRecord& rec, double tol = default_tolerance()) {
  if (!rec.is_eigenvalue_shape()) return std::get<SatakeForm<Complex>>(rec.data);
  SatakeForm<Complex> f{rec.weight, rec.level, {}};
  for (const auto& [p, d] : rec.eigenvalues().data()) {
    auto n = from_eigenvalues(Complex(to_double(d.lambda_p), 0), Complex(to_double(d.lambda_p2), 0), p, rec.weight, tol);
    f.params.emplace(p, spin_multiset(n));
  }
  return f;
}

}  // namespace gsp4
