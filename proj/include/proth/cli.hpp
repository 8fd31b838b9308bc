#pragma once

// Command-line front end. Exit codes: 0 success, 1 a verification command
// found mismatches, 2 invalid input or usage. Library errors become
// single-line diagnostics on the error stream.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "proth/report_io.hpp"

namespace proth::cli {

namespace cli_detail {

inline std::pair<long, long> parse_range(const std::string& s) {
  const auto pos = s.find("..");
  if (pos == std::string::npos) {
    const long v = std::stol(s);
    return {v, v};
  }
  return {std::stol(s.substr(0, pos)), std::stol(s.substr(pos + 2))};
}

inline std::vector<Int> parse_gens(const std::string& s) {
  std::vector<Int> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(Int(cur));
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  return out;
}

inline unsigned default_jobs() {
  if (const char* env = std::getenv("PROTH_JOBS")) {
    const long v = std::atol(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 0;  // verify module resolves 0 to hardware concurrency
}

}  // namespace cli_detail

inline int run(const std::vector<std::string>& argv, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"exact toolkit for Proth numerical semigroups P_k(n)"};
  app.require_subcommand(1);

  long n = 0, k = 0;
  std::string n_range, r_range, gens_str, format = "text";
  std::string k_mode = "closed", x_str, source = "closed-form";
  std::string max_s0 = "1000000", max_frob = "1000000000";
  unsigned jobs = cli_detail::default_jobs();

  auto add_common = [&](CLI::App* sub, bool with_format = true) {
    if (with_format)
      sub->add_option("--format", format, "output format")
          ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--jobs", jobs, "worker count (env PROTH_JOBS)");
    sub->add_option("--max-s0", max_s0, "engine ceiling on s0");
    sub->add_option("--max-frobenius", max_frob,
                    "engine ceiling on the Frobenius number");
  };

  auto* c_desc = app.add_subcommand("describe", "closed forms for one (n,k)");
  c_desc->add_option("--n", n)->required();
  c_desc->add_option("--k", k)->required();
  add_common(c_desc);

  auto* c_apery = app.add_subcommand("apery", "Apery table of P_k(n)");
  c_apery->add_option("--n", n)->required();
  c_apery->add_option("--k", k)->required();
  bool use_engine = false, use_closed = false;
  c_apery->add_flag("--engine", use_engine, "compute with the generic engine");
  c_apery->add_flag("--closed-form", use_closed, "use the closed form");
  add_common(c_apery);

  auto* c_frob = app.add_subcommand("frobenius", "Frobenius number");
  c_frob->add_option("--gens", gens_str, "comma-separated generator list");
  c_frob->add_option("--n", n);
  c_frob->add_option("--k", k);
  add_common(c_frob);

  auto* c_pf = app.add_subcommand("pf", "pseudo-Frobenius set");
  c_pf->add_option("--gens", gens_str, "comma-separated generator list");
  c_pf->add_option("--n", n);
  c_pf->add_option("--k", k);
  add_common(c_pf);

  auto* c_gaps = app.add_subcommand("gaps", "gap list of a semigroup");
  c_gaps->add_option("--gens", gens_str)->required();
  add_common(c_gaps);

  auto* c_member = app.add_subcommand("member", "membership test");
  c_member->add_option("--gens", gens_str)->required();
  c_member->add_option("--x", x_str)->required();
  add_common(c_member);

  auto* c_verify =
      app.add_subcommand("verify", "cross-check closed forms on a grid");
  c_verify->add_option("--n", n_range, "n range, lo..hi")->required();
  c_verify->add_option("--r", r_range, "r range, lo..hi")->required();
  add_common(c_verify);

  auto* c_sweep = app.add_subcommand("sweep", "sweep a parameter grid");
  c_sweep->add_option("--n", n_range, "n range, lo..hi")->required();
  c_sweep->add_option("--r", r_range, "r range, lo..hi (closed mode)");
  c_sweep->add_option("--k-mode", k_mode, "closed | all-odd")
      ->check(CLI::IsMember({"closed", "all-odd"}));
  add_common(c_sweep);

  auto* c_explore =
      app.add_subcommand("explore", "engine-only probe for arbitrary odd k");
  c_explore->add_option("--n", n)->required();
  c_explore->add_option("--k", k)->required();
  add_common(c_explore);

  try {
    std::vector<std::string> args(argv.rbegin(), argv.rend());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    const auto fmt = parse_format(format);
    VerifyConfig cfg;
    cfg.max_s0 = BigInt(max_s0);
    cfg.max_frobenius = BigInt(max_frob);
    cfg.jobs = jobs;

    if (*c_desc) {
      const auto d = describe(proth_params(n, k), cfg);
      if (fmt == OutputFormat::csv)
        throw unsupported_format_error("describe output is not tabular");
      if (fmt == OutputFormat::json)
        out << to_json(d).dump(2) << "\n";
      else
        out << to_text(d);
      return 0;
    }

    if (*c_apery) {
      const auto p = proth_params(n, k);
      if (use_engine && use_closed)
        throw unsupported_format_error("--engine and --closed-form are "
                                       "mutually exclusive");
      std::vector<BigInt> values;
      if (use_engine) {
        const auto s = minimal_generating_set(p);
        const BigInt f = 2 * s.s[1] + s.s[p.n] + s.s[p.n + p.r] - s.s[0];
        if (s.s[0] > cfg.max_s0 || f > cfg.max_frobenius)
          throw engine_scale_exceeded_error("instance exceeds engine ceiling");
        const auto S = GeneratorSet::from(detail::to_engine(s.s));
        for (const Int& w : base_table(S).w) values.emplace_back(w.str());
        std::sort(values.begin(), values.end());
      } else {
        values = apery_closed_form(p);
      }
      const BigInt s0 = generator(p, 0);
      if (fmt == OutputFormat::csv) {
        out << "i,w\n";
        for (const BigInt& v : values) out << BigInt(v % s0).str() << ","
                                           << v.str() << "\n";
      } else if (fmt == OutputFormat::json) {
        ordered_json j;
        j["n"] = p.n;
        j["k"] = p.k;
        j["modulus"] = io_detail::num(s0);
        j["values"] = io_detail::num_array(values);
        out << j.dump(2) << "\n";
      } else {
        out << "Ap(P_" << p.k << "(" << p.n << "), " << s0.str() << "), "
            << values.size() << " elements:\n";
        for (const BigInt& v : values)
          out << "  w(" << BigInt(v % s0).str() << ") = " << v.str() << "\n";
      }
      return 0;
    }

    if (*c_frob || *c_pf) {
      BigInt f;
      std::vector<BigInt> pf;
      if (!gens_str.empty()) {
        const auto S = GeneratorSet::from(cli_detail::parse_gens(gens_str));
        if (*c_frob) f = BigInt(frobenius(S).str());
        else
          for (const Int& v : pseudo_frobenius(S)) pf.emplace_back(v.str());
      } else {
        const auto p = proth_params(n, k);
        if (p.closed_form_available) {
          if (*c_frob) f = frobenius_closed_form(p);
          else pf = pf_closed_form(p);
        } else {
          const auto e = explore_arbitrary_k(p, cfg);
          if (*c_frob) f = BigInt(e.summary.frobenius.str());
          else
            for (const Int& v : e.summary.pseudo_frobenius)
              pf.emplace_back(v.str());
        }
      }
      if (fmt == OutputFormat::csv) {
        if (*c_frob)
          throw unsupported_format_error("frobenius output is not tabular");
        out << "pf\n";
        for (const BigInt& v : pf) out << v.str() << "\n";
      } else if (fmt == OutputFormat::json) {
        ordered_json j;
        if (*c_frob) {
          j["frobenius"] = io_detail::num(f);
          j["frobenius_str"] = f.str();
        } else {
          j["pseudo_frobenius"] = io_detail::num_array(pf);
          j["type"] = pf.size();
        }
        out << j.dump(2) << "\n";
      } else {
        if (*c_frob) out << f.str() << "\n";
        else out << detail::join_big(pf) << "\n";
      }
      return 0;
    }

    if (*c_gaps) {
      const auto S = GeneratorSet::from(cli_detail::parse_gens(gens_str));
      const auto gs = gaps(S);
      if (fmt == OutputFormat::csv) {
        out << "gap\n";
        for (const Int& g : gs) out << g.str() << "\n";
      } else if (fmt == OutputFormat::json) {
        ordered_json j;
        j["gaps"] = io_detail::num_array(gs);
        j["genus"] = gs.size();
        out << j.dump(2) << "\n";
      } else {
        out << detail::join(gs) << "\n";
      }
      return 0;
    }

    if (*c_member) {
      const auto S = GeneratorSet::from(cli_detail::parse_gens(gens_str));
      const bool in = membership(S, Int(x_str));
      if (fmt == OutputFormat::json) {
        ordered_json j;
        j["x"] = io_detail::num(Int(x_str));
        j["member"] = in;
        out << j.dump(2) << "\n";
      } else if (fmt == OutputFormat::csv) {
        throw unsupported_format_error("member output is not tabular");
      } else {
        out << (in ? "true" : "false") << "\n";
      }
      return 0;
    }

    if (*c_verify || *c_sweep) {
      const auto [n_lo, n_hi] = cli_detail::parse_range(n_range);
      SweepSummary s;
      if (*c_sweep && k_mode == "all-odd") {
        s = sweep_all_odd(n_lo, n_hi, cfg);
      } else {
        if (r_range.empty())
          throw unsupported_format_error("--r is required in closed mode");
        const auto [r_lo, r_hi] = cli_detail::parse_range(r_range);
        s = sweep(n_lo, n_hi, r_lo, r_hi, cfg);
      }
      if (fmt == OutputFormat::json)
        out << to_json(s).dump(2) << "\n";
      else if (fmt == OutputFormat::csv)
        out << to_csv(s);
      else
        out << to_text(s);
      return s.failures == 0 ? 0 : 1;
    }

    if (*c_explore) {
      const auto e = explore_arbitrary_k(proth_params(n, k), cfg);
      if (fmt == OutputFormat::csv)
        throw unsupported_format_error("explore output is not tabular");
      if (fmt == OutputFormat::json)
        out << to_json(e).dump(2) << "\n";
      else
        out << to_text(e);
      return 0;
    }
  } catch (const error& e) {
    err << e.code() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace proth::cli
