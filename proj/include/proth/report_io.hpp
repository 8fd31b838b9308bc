#pragma once

// Serializers for the library's report types: human-readable text, JSON
// with a fixed key order, and RFC-4180-style CSV (LF line endings, header
// row mandatory). Integers are emitted as JSON numbers only when they fit
// a 53-bit mantissa; the decimal-string companion field ("frobenius_str")
// is always emitted, since closed-form values outgrow doubles quickly.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "proth/verify.hpp"

namespace proth {

using ordered_json = nlohmann::ordered_json;

enum class OutputFormat { text, json, csv };

inline OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::text;
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  throw unsupported_format_error("unknown format: " + s);
}

namespace io_detail {

constexpr std::int64_t kMantissaMax = 9007199254740991;  // 2^53 - 1

inline ordered_json num(const BigInt& v) {
  if (v <= kMantissaMax && v >= -kMantissaMax)
    return ordered_json(v.convert_to<std::int64_t>());
  return ordered_json(v.str());
}

inline ordered_json num(const Int& v) { return num(BigInt(v.str())); }

template <typename T>
ordered_json num_array(const std::vector<T>& xs) {
  ordered_json a = ordered_json::array();
  for (const T& x : xs) a.push_back(num(x));
  return a;
}

// RFC 4180: quote fields containing comma, quote or newline; double
// embedded quotes.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace io_detail

// Everything `describe` reports for one (n, k): the closed forms, plus
// the Wilf numbers from the engine when the instance is within the
// engine ceiling (they need nu, which has no closed form).
struct DescribeReport {
  ProthParams params;
  std::vector<BigInt> generators;
  long embedding_dimension = 0;
  BigInt frobenius;
  std::vector<BigInt> pseudo_frobenius;
  long type = 0;
  BigInt genus_bound;
  BigInt apery_cardinality;
  std::optional<WilfReport> wilf;
};

inline DescribeReport describe(const ProthParams& p,
                               const VerifyConfig& cfg = {}) {
  detail::require_closed_form(p);
  DescribeReport d;
  d.params = p;
  d.generators = minimal_generating_set(p).s;
  d.embedding_dimension = embedding_dimension(p);
  d.frobenius = frobenius_closed_form(p);
  d.pseudo_frobenius = pf_closed_form(p);
  d.type = type_closed_form(p);
  d.genus_bound = genus_lower_bound(p);
  d.apery_cardinality = generator(p, 0);
  if (generator(p, 0) <= cfg.max_s0 && d.frobenius <= cfg.max_frobenius) {
    const auto S = GeneratorSet::from(detail::to_engine(d.generators));
    d.wilf = wilf_check(S);
  }
  return d;
}

inline ordered_json to_json(const DescribeReport& d) {
  ordered_json j;
  j["n"] = d.params.n;
  j["k"] = d.params.k;
  j["r"] = d.params.r;
  j["generators"] = io_detail::num_array(d.generators);
  j["embedding_dimension"] = d.embedding_dimension;
  j["frobenius"] = io_detail::num(d.frobenius);
  j["frobenius_str"] = d.frobenius.str();
  j["pseudo_frobenius"] = io_detail::num_array(d.pseudo_frobenius);
  j["type"] = d.type;
  j["genus_bound"] = io_detail::num(d.genus_bound);
  j["apery_cardinality"] = io_detail::num(d.apery_cardinality);
  if (d.wilf) {
    ordered_json w;
    w["lhs"] = io_detail::num(d.wilf->lhs);
    w["rhs"] = io_detail::num(d.wilf->rhs_e);
    w["holds"] = d.wilf->holds;
    j["wilf"] = w;
  } else {
    j["wilf"] = nullptr;
  }
  return j;
}

inline std::string to_text(const DescribeReport& d) {
  std::ostringstream os;
  os << "P_" << d.params.k << "(" << d.params.n << ")  (r = " << d.params.r
     << ")\n";
  os << "  generators:          " << detail::join_big(d.generators) << "\n";
  os << "  embedding dimension: " << d.embedding_dimension << "\n";
  os << "  frobenius:           " << d.frobenius.str() << "\n";
  os << "  pseudo-frobenius:    " << detail::join_big(d.pseudo_frobenius)
     << "\n";
  os << "  type:                " << d.type << "\n";
  os << "  genus lower bound:   " << d.genus_bound.str() << "\n";
  os << "  apery cardinality:   " << d.apery_cardinality.str() << "\n";
  if (d.wilf)
    os << "  wilf:                " << d.wilf->lhs.str() << " <= "
       << d.wilf->rhs_e.str() << " (" << (d.wilf->holds ? "holds" : "fails")
       << ")\n";
  else
    os << "  wilf:                not computed (beyond engine ceiling)\n";
  return os.str();
}

inline ordered_json to_json(const VerificationReport& r) {
  ordered_json j;
  j["n"] = r.params.n;
  j["k"] = r.params.k;
  j["r"] = r.params.r;
  j["overall_pass"] = r.overall_pass;
  j["elapsed_ms"] = r.elapsed_ms;
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["expected"] = c.expected;
    cj["actual"] = c.actual;
    cj["pass"] = c.pass;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  return j;
}

// One row per check.
inline std::string to_csv(const VerificationReport& r) {
  std::ostringstream os;
  os << "n,k,name,expected,actual,pass\n";
  for (const auto& c : r.checks)
    os << r.params.n << "," << r.params.k << "," << io_detail::csv_field(c.name)
       << "," << io_detail::csv_field(c.expected) << ","
       << io_detail::csv_field(c.actual) << "," << (c.pass ? "true" : "false")
       << "\n";
  return os.str();
}

inline std::string to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "cross-check P_" << r.params.k << "(" << r.params.n << "): "
     << (r.overall_pass ? "PASS" : "FAIL") << "\n";
  for (const auto& c : r.checks) {
    os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
    if (!c.pass) os << "  expected " << c.expected << ", got " << c.actual;
    os << "\n";
  }
  return os.str();
}

inline ordered_json to_json(const SweepSummary& s) {
  ordered_json j;
  ordered_json grid = ordered_json::array();
  for (const auto& [n, k] : s.grid) {
    ordered_json g;
    g["n"] = n;
    g["k"] = k;
    grid.push_back(g);
  }
  j["grid"] = grid;
  ordered_json reports = ordered_json::array();
  for (const auto& r : s.reports) {
    // elapsed differs run to run; keep sweep JSON byte-reproducible
    ordered_json rj = to_json(r);
    rj.erase("elapsed_ms");
    reports.push_back(rj);
  }
  j["reports"] = reports;
  j["skipped"] = s.skipped;
  j["failures"] = s.failures;
  return j;
}

inline std::string to_csv(const SweepSummary& s) {
  std::ostringstream os;
  os << "n,k,r,checks,passed,overall_pass\n";
  for (const auto& r : s.reports) {
    std::size_t passed = 0;
    for (const auto& c : r.checks) passed += c.pass ? 1 : 0;
    os << r.params.n << "," << r.params.k << "," << r.params.r << ","
       << r.checks.size() << "," << passed << ","
       << (r.overall_pass ? "true" : "false") << "\n";
  }
  return os.str();
}

inline std::string to_text(const SweepSummary& s) {
  std::ostringstream os;
  os << s.reports.size() << " points, " << s.failures << " failures\n";
  for (const auto& r : s.reports)
    os << "  (n=" << r.params.n << ", k=" << r.params.k << ") "
       << (r.overall_pass ? "pass" : "FAIL") << "\n";
  for (const auto& sk : s.skipped) os << "  " << sk << "\n";
  return os.str();
}

inline ordered_json to_json(const ExploreResult& e) {
  ordered_json j;
  j["n"] = e.params.n;
  j["k"] = e.params.k;
  j["r"] = e.params.r;
  j["embedding_dimension"] = io_detail::num(e.summary.embedding_dimension);
  j["frobenius"] = io_detail::num(e.summary.frobenius);
  j["frobenius_str"] = e.summary.frobenius.str();
  j["genus"] = io_detail::num(e.summary.genus);
  j["type"] = io_detail::num(e.summary.type);
  j["nu"] = io_detail::num(e.summary.nu);
  j["pseudo_frobenius"] = io_detail::num_array(e.summary.pseudo_frobenius);
  j["frobenius_formula"] = io_detail::num(e.frobenius_formula);
  j["frobenius_formula_str"] = e.frobenius_formula.str();
  j["formula_matches"] = e.formula_matches;
  return j;
}

inline std::string to_text(const ExploreResult& e) {
  std::ostringstream os;
  os << "P_" << e.params.k << "(" << e.params.n << ")  (r = " << e.params.r
     << ", engine only)\n";
  os << "  embedding dimension: " << e.summary.embedding_dimension.str()
     << "\n";
  os << "  frobenius:           " << e.summary.frobenius.str() << "\n";
  os << "  genus:               " << e.summary.genus.str() << "\n";
  os << "  type:                " << e.summary.type.str() << "\n";
  os << "  nu:                  " << e.summary.nu.str() << "\n";
  os << "  pseudo-frobenius:    "
     << detail::join(e.summary.pseudo_frobenius) << "\n";
  os << "  2s1+sn+s(n+r)-s0:    " << e.frobenius_formula.str() << "  ("
     << (e.formula_matches ? "matches engine" : "does not match engine")
     << ")\n";
  return os.str();
}

}  // namespace proth
