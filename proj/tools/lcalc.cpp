#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lcalc/lcalc.hpp"

namespace {

using nlohmann::ordered_json;

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) out.push_back(cur);
  if (!s.empty() && s.back() == ',') out.emplace_back();
  return out;
}

lcalc::SatakeSet parse_param_set(const std::string& text) {
  std::vector<lcalc::Monomial> entries;
  for (const auto& tok : split_csv(text))
    entries.push_back(lcalc::parse_monomial(tok));
  return lcalc::SatakeSet(entries);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& tok : split_csv(text)) {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    while (used < tok.size() &&
           std::isspace(static_cast<unsigned char>(tok[used])))
      ++used;
    if (used != tok.size())
      throw std::invalid_argument("malformed integer '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

lcalc::ArgForm parse_arg_form(const std::string& text) {
  std::vector<int> v = parse_int_list(text);
  if (v.size() != 2)
    throw std::invalid_argument("--arg expects MU,TWO_NU");
  return lcalc::ArgForm(v[0], v[1]);
}

lcalc::GroupKind group_of(const std::string& s) {
  if (s == "sp") return lcalc::GroupKind::Sp;
  if (s == "so") return lcalc::GroupKind::SO;
  return lcalc::GroupKind::GL;
}

std::string join_parts(const std::vector<int>& parts) {
  std::string s;
  for (int p : parts) {
    if (!s.empty()) s += ",";
    s += std::to_string(p);
  }
  return s;
}

std::uint64_t env_seed() {
  const char* env = std::getenv("LCALC_SEED");
  if (!env) return 0;
  std::size_t used = 0;
  std::string text(env);
  std::uint64_t v = std::stoull(text, &used);
  if (used != text.size())
    throw std::invalid_argument("malformed LCALC_SEED '" + text + "'");
  return v;
}

struct CheckLine {
  std::string name;
  bool pass;
};

int emit_formula(const std::string& command, const lcalc::FactoredLFunction& f,
                 const std::string& format,
                 const std::vector<CheckLine>& checks) {
  bool ok = true;
  for (const auto& c : checks) ok = ok && c.pass;
  if (format == "json") {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = command;
    j["text"] = lcalc::to_text(f);
    j["latex"] = lcalc::to_latex(f);
    if (!checks.empty()) {
      ordered_json cj;
      for (const auto& c : checks) cj[c.name] = c.pass ? "PASS" : "FAIL";
      j["checks"] = cj;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (format == "latex" ? lcalc::to_latex(f) : lcalc::to_text(f))
              << "\n";
    for (const auto& c : checks)
      std::cout << c.name << ": " << (c.pass ? "PASS" : "FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

void print_suite_text(const lcalc::SuiteReport& rep) {
  std::cout << "== " << rep.suite << " (seed " << rep.seed << ") ==\n";
  for (const auto& c : rep.cases) {
    std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.identity << "  "
              << c.digest << "  [" << c.elapsed_ms << " ms]\n";
    if (!c.pass && !c.witness.empty())
      std::cout << "      witness: " << c.witness << "\n";
  }
  std::cout << "-- " << rep.suite << ": " << rep.passed() << "/" << rep.total()
            << " passed\n";
}

ordered_json suite_json(const lcalc::SuiteReport& rep) {
  ordered_json cases = ordered_json::array();
  for (const auto& c : rep.cases) {
    ordered_json cj;
    cj["identity"] = c.identity;
    cj["digest"] = c.digest;
    cj["status"] = c.pass ? "pass" : "fail";
    if (!c.pass && !c.witness.empty()) cj["witness"] = c.witness;
    cases.push_back(std::move(cj));
  }
  ordered_json totals;
  totals["cases"] = rep.total();
  totals["passed"] = rep.passed();
  totals["failed"] = rep.failed();
  ordered_json j;
  j["suite"] = rep.suite;
  j["totals"] = std::move(totals);
  j["cases"] = std::move(cases);
  return j;
}

int run_verify(const std::string& suite, const lcalc::VerifyOptions& opts,
               const std::string& format) {
  std::vector<std::string> names;
  if (suite == "all")
    names = lcalc::suite_names();
  else
    names.push_back(suite);
  std::vector<lcalc::SuiteReport> reports;
  reports.reserve(names.size());
  for (const auto& name : names) reports.push_back(lcalc::run_suite(name, opts));
  bool ok = true;
  for (const auto& rep : reports) ok = ok && rep.all_pass();
  if (format == "json") {
    ordered_json j;
    j["schema"] = 1;
    j["seed"] = opts.seed;
    ordered_json suites = ordered_json::array();
    for (const auto& rep : reports) suites.push_back(suite_json(rep));
    j["suites"] = std::move(suites);
    std::cout << j.dump(2) << "\n";
  } else {
    int cases = 0, passed = 0;
    for (const auto& rep : reports) {
      print_suite_text(rep);
      cases += rep.total();
      passed += rep.passed();
    }
    if (reports.size() > 1)
      std::cout << "== total: " << passed << "/" << cases << " passed ==\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact unramified L-factors, zeta closed forms and identity "
               "verification"};
  app.require_subcommand(1);

  auto* lf = app.add_subcommand("lfactor", "print a local L-factor");
  std::string lf_kind, lf_tau, lf_tauprime, lf_arg, lf_format = "text";
  lf->add_option("--kind", lf_kind, "rs, std, sym2 or wedge2")
      ->required()
      ->check(CLI::IsMember({"rs", "std", "sym2", "wedge2"}));
  lf->add_option("--tau", lf_tau, "parameters, comma separated")->required();
  lf->add_option("--tauprime", lf_tauprime, "second parameter set (rs only)");
  lf->add_option("--arg", lf_arg, "argument a*s + nu/2 as MU,TWO_NU")
      ->required();
  lf->add_option("--format", lf_format, "text, json or latex")
      ->check(CLI::IsMember({"text", "json", "latex"}));

  auto* zt = app.add_subcommand("zeta", "closed form of the unramified zeta");
  std::string zt_group, zt_pi, zt_tau, zt_tauprime, zt_check,
      zt_format = "text";
  int zt_n = 0, zt_k = 0;
  zt->add_option("--group", zt_group, "sp, so or gl")
      ->required()
      ->check(CLI::IsMember({"sp", "so", "gl"}));
  zt->add_option("--n", zt_n, "rank")->required()->check(CLI::PositiveNumber);
  zt->add_option("--k", zt_k, "twist rank")
      ->required()
      ->check(CLI::PositiveNumber);
  zt->add_option("--pi", zt_pi, "pi parameters (default symbolic b1..bn)");
  zt->add_option("--tau", zt_tau, "tau parameters (default symbolic x1..xk)");
  zt->add_option("--tauprime", zt_tauprime,
                 "tau' parameters, gl only (default symbolic y1..yk)");
  zt->add_option("--check", zt_check, "also verify the reduction identity")
      ->check(CLI::IsMember({"reduction"}));
  zt->add_option("--format", zt_format, "text, json or latex")
      ->check(CLI::IsMember({"text", "json", "latex"}));

  auto* dt = app.add_subcommand("dtau", "intertwining proportionality factor");
  std::string dt_group, dt_tau, dt_check, dt_format = "text";
  int dt_n = 0, dt_k = 0;
  dt->add_option("--group", dt_group, "sp or so")
      ->required()
      ->check(CLI::IsMember({"sp", "so"}));
  dt->add_option("--n", dt_n, "rank")->required()->check(CLI::PositiveNumber);
  dt->add_option("--k", dt_k, "twist rank")
      ->required()
      ->check(CLI::PositiveNumber);
  dt->add_option("--tau", dt_tau, "tau parameters (default symbolic x1..xk)");
  dt->add_option("--check", dt_check,
                 "also verify the telescoped product form")
      ->check(CLI::IsMember({"gk"}));
  dt->add_option("--format", dt_format, "text, json or latex")
      ->check(CLI::IsMember({"text", "json", "latex"}));

  auto* ob = app.add_subcommand("orbit", "partition and orbit combinatorics");
  ob->require_subcommand(1);
  auto* ob_dom = ob->add_subcommand("dominance", "compare two partitions");
  std::string dom_a, dom_b;
  ob_dom->add_option("first", dom_a, "partition, e.g. 2,2")->required();
  ob_dom->add_option("second", dom_b, "partition, e.g. 2,1,1")->required();
  auto* ob_dim =
      ob->add_subcommand("dim-bound", "semi-Whittaker dimension bound");
  int dim_k = 0, dim_c = 0;
  std::string dim_lambda;
  ob_dim->add_option("--k", dim_k)->required()->check(CLI::PositiveNumber);
  ob_dim->add_option("--c", dim_c)->required()->check(CLI::PositiveNumber);
  ob_dim->add_option("--lambda", dim_lambda, "composition of k*c")->required();
  auto* ob_dbl =
      ob->add_subcommand("doubling-orbit", "the orbit ((2k-1)^c 1^c)");
  std::string dbl_group;
  int dbl_k = 0, dbl_c = 0;
  ob_dbl->add_option("--group", dbl_group, "sp, so or gl")
      ->required()
      ->check(CLI::IsMember({"sp", "so", "gl"}));
  ob_dbl->add_option("--k", dbl_k)->required()->check(CLI::PositiveNumber);
  ob_dbl->add_option("--c", dbl_c)->required()->check(CLI::PositiveNumber);
  auto* ob_val = ob->add_subcommand("validity", "nilpotent orbit parity test");
  std::string val_group, val_lambda;
  ob_val->add_option("--group", val_group, "sp, so or gl")
      ->required()
      ->check(CLI::IsMember({"sp", "so", "gl"}));
  ob_val->add_option("--lambda", val_lambda, "partition")->required();

  auto* vf = app.add_subcommand("verify", "run an identity suite");
  std::string vf_suite, vf_format = "text";
  lcalc::VerifyOptions vf_opts;
  vf->add_option("suite", vf_suite,
                 "algebra, satake, symmfunc, orbits, doubling or all")
      ->required()
      ->check(CLI::IsMember(
          {"algebra", "satake", "symmfunc", "orbits", "doubling", "all"}));
  vf->add_option("--trunc", vf_opts.trunc, "series truncation bound")
      ->check(CLI::PositiveNumber);
  auto* vf_seed = vf->add_option("--seed", vf_opts.seed, "sampler seed");
  vf->add_option("--max-n", vf_opts.max_n, "symbolic rank bound")
      ->check(CLI::PositiveNumber);
  vf->add_option("--max-k", vf_opts.max_k, "symbolic twist bound")
      ->check(CLI::PositiveNumber);
  vf->add_flag("--numeric", vf_opts.numeric,
               "sampled rational parameters instead of symbolic ones");
  vf->add_flag("--inject-failure", vf_opts.inject_failure)->group("");
  vf->add_option("--format", vf_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*lf) {
      lcalc::SatakeSet tau = parse_param_set(lf_tau);
      lcalc::ArgForm arg = parse_arg_form(lf_arg);
      lcalc::FactoredLFunction f;
      if (lf_kind == "rs") {
        if (lf_tauprime.empty())
          throw std::invalid_argument("--kind rs needs --tauprime");
        f = lcalc::l_rankin_selberg(tau, parse_param_set(lf_tauprime), arg);
      } else if (!lf_tauprime.empty()) {
        throw std::invalid_argument("--tauprime only applies to --kind rs");
      } else if (lf_kind == "std") {
        f = lcalc::l_standard(tau, arg);
      } else if (lf_kind == "sym2") {
        f = lcalc::l_sym2(tau, arg);
      } else {
        f = lcalc::l_wedge2(tau, arg);
      }
      return emit_formula("lfactor", f, lf_format, {});
    }

    if (*zt) {
      lcalc::GroupKind g = group_of(zt_group);
      lcalc::SatakeSet pi = zt_pi.empty()
                                ? lcalc::SatakeSet::symbols("b", zt_n)
                                : parse_param_set(zt_pi);
      lcalc::SatakeSet tau = zt_tau.empty()
                                 ? lcalc::SatakeSet::symbols("x", zt_k)
                                 : parse_param_set(zt_tau);
      lcalc::FactoredLFunction f;
      if (g == lcalc::GroupKind::GL) {
        lcalc::SatakeSet tauPrime =
            zt_tauprime.empty() ? lcalc::SatakeSet::symbols("y", zt_k)
                                : parse_param_set(zt_tauprime);
        f = lcalc::z_gl_closed(zt_n, zt_k, pi, tau, tauPrime).value;
      } else {
        if (!zt_tauprime.empty())
          throw std::invalid_argument("--tauprime only applies to --group gl");
        f = lcalc::z_classical_closed(lcalc::GroupData(g, zt_n), zt_n, zt_k, pi,
                                      tau)
                .value;
      }
      std::vector<CheckLine> checks;
      if (zt_check == "reduction") {
        bool ok = true;
        lcalc::SatakeSet xs = lcalc::SatakeSet::symbols("x", zt_k);
        lcalc::SatakeSet ys = lcalc::SatakeSet::symbols("y", zt_k);
        if (g == lcalc::GroupKind::GL) {
          if (zt_n == 1) {
            ok = lcalc::verify_prop_gl1(zt_k, lcalc::VarId::param("b1"), xs,
                                        ys);
          } else {
            for (int a = 1; a < zt_n; ++a)
              ok = ok && lcalc::verify_gl_reduction(
                             zt_n, a, zt_n - a, zt_k,
                             lcalc::SatakeSet::symbols("b", a),
                             lcalc::SatakeSet::symbols("c", zt_n - a), xs, ys);
          }
        } else {
          ok = lcalc::verify_classical_reduction(
              lcalc::GroupData(g, zt_n), zt_n, zt_k,
              lcalc::SatakeSet::symbols("b", zt_n), xs);
        }
        checks.push_back({"reduction", ok});
      }
      return emit_formula("zeta", f, zt_format, checks);
    }

    if (*dt) {
      lcalc::GroupData group(group_of(dt_group), dt_n);
      lcalc::SatakeSet tau = dt_tau.empty()
                                 ? lcalc::SatakeSet::symbols("x", dt_k)
                                 : parse_param_set(dt_tau);
      lcalc::FactoredLFunction f = lcalc::d_tau_closed(group, dt_n, dt_k, tau);
      std::vector<CheckLine> checks;
      if (dt_check == "gk")
        checks.push_back(
            {"gk", lcalc::rf_equal(lcalc::d_tau_gk(group, dt_n, dt_k, tau), f)});
      return emit_formula("dtau", f, dt_format, checks);
    }

    if (*ob_dom) {
      lcalc::Partition a(parse_int_list(dom_a)), b(parse_int_list(dom_b));
      std::cout << lcalc::to_string(lcalc::dominance_compare(a, b)) << "\n";
      return 0;
    }
    if (*ob_dim) {
      lcalc::Composition lam(parse_int_list(dim_lambda));
      std::cout << lcalc::semi_whittaker_dim_bound(dim_k, dim_c, lam) << "\n";
      return 0;
    }
    if (*ob_dbl) {
      lcalc::Partition orbit = lcalc::doubling_orbit(
          lcalc::GroupData(group_of(dbl_group), std::max(1, dbl_k * dbl_c)),
          dbl_k, dbl_c);
      std::cout << join_parts(orbit.parts) << "\n";
      return 0;
    }
    if (*ob_val) {
      lcalc::Partition lam(parse_int_list(val_lambda));
      bool ok = lcalc::valid_nilpotent_orbit(
          lcalc::GroupData(group_of(val_group), 1), lam);
      std::cout << (ok ? "VALID" : "INVALID") << "\n";
      return 0;
    }

    if (*vf) {
      if (!*vf_seed) vf_opts.seed = env_seed();
      return run_verify(vf_suite, vf_opts, vf_format);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
