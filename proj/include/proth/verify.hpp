#pragma once

// Cross-verification of the closed forms against the generic engine.
// For one parameter point, cross_check runs the engine on the Proth
// generators and compares every closed-form result; sweep aggregates a
// grid of (n, r) points with k = 2^r + 1. Grid points are independent
// and may run on worker threads; reports are always merged in (n, r)
// order, so output is deterministic.

#include <atomic>
#include <chrono>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "proth/engine.hpp"
#include "proth/family.hpp"

namespace proth {

struct VerifyConfig {
  BigInt max_s0 = 1'000'000;
  BigInt max_frobenius = 1'000'000'000;
  unsigned jobs = 0;  // 0 = hardware concurrency
};

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerificationReport {
  ProthParams params;
  std::vector<Check> checks;
  std::int64_t elapsed_ms = 0;
  bool overall_pass = false;
};

struct SweepSummary {
  std::vector<std::pair<long, long>> grid;  // (n, k) points evaluated
  std::vector<VerificationReport> reports;
  std::vector<std::string> skipped;  // notations for invalid grid points
  std::size_t failures = 0;
};

namespace detail {

inline std::string join(const std::vector<Int>& xs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < xs.size(); ++i)
    os << (i ? "," : "") << xs[i].str();
  os << '}';
  return os.str();
}

inline std::string join_big(const std::vector<BigInt>& xs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < xs.size(); ++i)
    os << (i ? "," : "") << xs[i].str();
  os << '}';
  return os.str();
}

inline Int to_engine(const BigInt& v) {
  static const BigInt engine_max = (BigInt(1) << 127) - 1;
  if (v > engine_max)
    throw engine_scale_exceeded_error("value " + v.str() +
                                      " exceeds engine width");
  return Int(v.str());
}

inline std::vector<Int> to_engine(const std::vector<BigInt>& vs) {
  std::vector<Int> out;
  out.reserve(vs.size());
  for (const BigInt& v : vs) out.push_back(to_engine(v));
  return out;
}

}  // namespace detail

inline VerificationReport cross_check(const ProthParams& p,
                                      const VerifyConfig& cfg = {}) {
  if (!p.closed_form_available)
    throw closed_form_unavailable_error(
        "cross_check needs k = 2^r + 1; got k = " + std::to_string(p.k));
  const BigInt s0 = generator(p, 0);
  const BigInt f_closed = frobenius_closed_form(p);
  if (s0 > cfg.max_s0 || f_closed > cfg.max_frobenius)
    throw engine_scale_exceeded_error(
        "instance (n=" + std::to_string(p.n) + ", k=" + std::to_string(p.k) +
        ") exceeds the configured engine ceiling");

  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.params = p;

  const auto gens = minimal_generating_set(p);
  const auto S = GeneratorSet::from(detail::to_engine(gens.s));
  const auto table = base_table(S);

  auto add = [&](std::string name, std::string expected, std::string actual) {
    bool pass = expected == actual;
    rep.checks.push_back({std::move(name), std::move(expected),
                          std::move(actual), pass});
  };

  // embedding_dimension / minimal_generators
  const auto min_gens = minimal_generators(S);
  add("embedding_dimension", std::to_string(embedding_dimension(p)),
      std::to_string(min_gens.size()));
  add("minimal_generators", detail::join(S.generators()),
      detail::join(min_gens.generators()));

  // apery_set / apery_cardinality
  const auto ap_closed = apery_closed_form(p);
  std::vector<Int> ap_engine(table.w);
  std::sort(ap_engine.begin(), ap_engine.end());
  add("apery_set", detail::join_big(ap_closed), detail::join(ap_engine));
  add("apery_cardinality", s0.str(), std::to_string(ap_engine.size()));

  // frobenius
  const Int f_engine = frobenius(S);
  add("frobenius", f_closed.str(), f_engine.str());

  // pf_set / type
  const auto pf_c = pf_closed_form(p);
  const auto pf_e = pseudo_frobenius(S);
  add("pf_set", detail::join_big(pf_c), detail::join(pf_e));
  add("type", std::to_string(type_closed_form(p)),
      std::to_string(pf_e.size()));

  // genus_bound: engine genus >= bound and 2*bound == F+1
  const Int g_engine = genus(S);
  const BigInt bound = genus_lower_bound(p);
  const bool genus_ok = BigInt(g_engine.str()) >= bound &&
                        2 * bound == f_closed + 1;
  add("genus_bound", "genus>=" + bound.str(),
      genus_ok ? "genus>=" + bound.str() : "genus=" + g_engine.str());

  // wilf: F+1 <= (n+r)*nu <= (n+r+1)*nu, with t+1 = n+r and e = n+r+1
  const auto wr = wilf_check(S);
  const Int nu = f_engine + 1 - g_engine;
  const bool wilf_ok = wr.holds && wr.lhs <= wr.rhs_t &&
                       wr.rhs_t == Int(p.n + p.r) * nu &&
                       wr.rhs_e == Int(p.n + p.r + 1) * nu;
  add("wilf", "holds", wilf_ok ? "holds" : "fails");

  // w1_w2
  const auto [w1, w2] = w12_closed_form(p);
  const bool w12_ok = table.w[1] == detail::to_engine(w1) &&
                      table.w[2] == detail::to_engine(w2) &&
                      w1 - w2 == generator(p, 1) && w2 - 2 == s0 * s0 &&
                      w1 - 1 == s0 * s0 + 2 * s0;
  add("w1_w2", w1.str() + "," + w2.str(),
      w12_ok ? w1.str() + "," + w2.str()
             : table.w[1].str() + "," + table.w[2].str());

  // tuple_injectivity: value() is injective on P(r,n) \ F
  std::set<BigInt> distinct(ap_closed.begin(), ap_closed.end());
  add("tuple_injectivity", std::to_string(ap_closed.size()),
      std::to_string(distinct.size()));

  // rewrite_identities, including 2 s_{n+r} - 1 = alpha s_0 + beta s_1
  bool ids_ok = true;
  for (long i = 1; i <= p.n + p.r && ids_ok; ++i)
    for (long j = i; j <= p.n + p.r && ids_ok; ++j)
      ids_ok = check_rewrite_identity(p, i, j);
  const auto rc = rewrite_constants(p);
  ids_ok = ids_ok && 2 * generator(p, p.n + p.r) - 1 ==
                         rc.alpha * generator(p, 0) + rc.beta * generator(p, 1);
  add("rewrite_identities", "all hold", ids_ok ? "all hold" : "violated");

  // monotone_w: w(i+1) <= w(i) + 1 for 1 <= i <= s0 - 2
  bool mono_ok = true;
  for (std::size_t i = 1; i + 1 < table.w.size(); ++i)
    if (table.w[i + 1] > table.w[i] + 1) mono_ok = false;
  add("monotone_w", "w(i+1)<=w(i)+1", mono_ok ? "w(i+1)<=w(i)+1" : "violated");

  rep.overall_pass = true;
  for (const auto& c : rep.checks) rep.overall_pass = rep.overall_pass && c.pass;
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return rep;
}

// Reduced report for points without a closed form (arbitrary odd k):
// only the properties that hold for every k are checked.
inline VerificationReport engine_only_check(const ProthParams& p,
                                            const VerifyConfig& cfg = {}) {
  const BigInt s0 = generator(p, 0);
  const BigInt formula = 2 * generator(p, 1) + generator(p, p.n) +
                         generator(p, p.n + p.r) - s0;
  if (s0 > cfg.max_s0 || formula > cfg.max_frobenius)
    throw engine_scale_exceeded_error(
        "instance (n=" + std::to_string(p.n) + ", k=" + std::to_string(p.k) +
        ") exceeds the configured engine ceiling");

  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.params = p;
  const auto gens = minimal_generating_set(p);
  const auto S = GeneratorSet::from(detail::to_engine(gens.s));
  const auto table = base_table(S);
  auto add = [&](std::string name, std::string expected, std::string actual) {
    bool pass = expected == actual;
    rep.checks.push_back({std::move(name), std::move(expected),
                          std::move(actual), pass});
  };

  const auto min_gens = minimal_generators(S);
  add("embedding_dimension", std::to_string(embedding_dimension(p)),
      std::to_string(min_gens.size()));
  add("minimal_generators", detail::join(S.generators()),
      detail::join(min_gens.generators()));

  const auto wr = wilf_check(S);
  add("wilf", "holds",
      (wr.holds && wr.lhs <= wr.rhs_t) ? "holds" : "fails");

  bool mono_ok = true;
  for (std::size_t i = 1; i + 1 < table.w.size(); ++i)
    if (table.w[i + 1] > table.w[i] + 1) mono_ok = false;
  add("monotone_w", "w(i+1)<=w(i)+1", mono_ok ? "w(i+1)<=w(i)+1" : "violated");

  rep.overall_pass = true;
  for (const auto& c : rep.checks) rep.overall_pass = rep.overall_pass && c.pass;
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return rep;
}

inline SweepSummary sweep(long n_lo, long n_hi, long r_lo, long r_hi,
                          const VerifyConfig& cfg = {}) {
  SweepSummary out;
  struct Point {
    long n, k;
    ProthParams p;
  };
  std::vector<Point> points;
  for (long n = n_lo; n <= n_hi; ++n)
    for (long r = r_lo; r <= r_hi; ++r) {
      const long k = (1L << r) + 1;
      try {
        points.push_back({n, k, proth_params(n, k)});
      } catch (const error& e) {
        out.skipped.push_back("(n=" + std::to_string(n) +
                              ", k=" + std::to_string(k) +
                              ") skipped: " + e.code());
      }
    }

  unsigned jobs = cfg.jobs ? cfg.jobs : std::thread::hardware_concurrency();
  if (jobs == 0) jobs = 1;
  std::vector<std::optional<VerificationReport>> results(points.size());
  std::vector<std::string> errors(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= points.size()) return;
      try {
        results[i] = cross_check(points[i].p, cfg);
      } catch (const error& e) {
        errors[i] = e.code();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (std::size_t i = 0; i < points.size(); ++i) {
    out.grid.emplace_back(points[i].n, points[i].k);
    if (results[i]) {
      out.reports.push_back(std::move(*results[i]));
      if (!out.reports.back().overall_pass) ++out.failures;
    } else {
      out.skipped.push_back("(n=" + std::to_string(points[i].n) +
                            ", k=" + std::to_string(points[i].k) +
                            ") skipped: " + errors[i]);
    }
  }
  return out;
}

// Sweep over every odd k in [3, 2^n - 1] for each n. Closed-form points
// (k = 2^r + 1) get the full cross_check; the rest get the engine-only
// report. Points over the engine ceiling are skipped with a notation.
inline SweepSummary sweep_all_odd(long n_lo, long n_hi,
                                  const VerifyConfig& cfg = {}) {
  SweepSummary out;
  for (long n = n_lo; n <= n_hi; ++n) {
    for (long k = 3; k < (1L << n); k += 2) {
      ProthParams p;
      try {
        p = proth_params(n, k);
      } catch (const error& e) {
        out.skipped.push_back("(n=" + std::to_string(n) +
                              ", k=" + std::to_string(k) +
                              ") skipped: " + e.code());
        continue;
      }
      out.grid.emplace_back(n, k);
      try {
        out.reports.push_back(p.closed_form_available
                                  ? cross_check(p, cfg)
                                  : engine_only_check(p, cfg));
        if (!out.reports.back().overall_pass) ++out.failures;
      } catch (const error& e) {
        out.skipped.push_back("(n=" + std::to_string(n) +
                              ", k=" + std::to_string(k) +
                              ") skipped: " + e.code());
      }
    }
  }
  return out;
}

// Engine-only probe of P_k(n) for arbitrary odd k: no closed form is
// claimed; we record whether the k = 2^r+1 Frobenius formula happens to
// hold at this point.
struct ExploreResult {
  ProthParams params;
  SemigroupSummary summary;
  BigInt frobenius_formula;  // 2 s_1 + s_n + s_{n+r} - s_0
  bool formula_matches = false;
};

inline ExploreResult explore_arbitrary_k(const ProthParams& p,
                                         const VerifyConfig& cfg = {}) {
  const BigInt s0 = generator(p, 0);
  const BigInt formula = 2 * generator(p, 1) + generator(p, p.n) +
                         generator(p, p.n + p.r) - s0;
  if (s0 > cfg.max_s0 || formula > cfg.max_frobenius)
    throw engine_scale_exceeded_error(
        "instance (n=" + std::to_string(p.n) + ", k=" + std::to_string(p.k) +
        ") exceeds the configured engine ceiling");
  const auto gens = minimal_generating_set(p);
  const auto S = GeneratorSet::from(detail::to_engine(gens.s));
  ExploreResult out;
  out.params = p;
  out.summary = summarize(S);
  out.frobenius_formula = formula;
  out.formula_matches = BigInt(out.summary.frobenius.str()) == formula;
  return out;
}

}  // namespace proth
