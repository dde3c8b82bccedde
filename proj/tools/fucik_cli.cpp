// fucik: command-line front end for the Fucik eigenfunction library.
//
// Exit codes: 0 success, 1 a check failed (or a numerical routine did not
// converge), 2 usage error.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fucik/fucik.hpp"
#include "report.hpp"
#include "suites.hpp"

namespace {

using fucik::cli::Cell;
using fucik::cli::Json;
using fucik::cli::SuiteCheck;
using fucik::cli::Table;

constexpr const char* tool_version = "1.0.0";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Report {
  Json parameters = Json::object();
  Json result = Json::object();
  std::optional<Table> table;
  std::vector<SuiteCheck> checks;

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.pass; });
  }
};

std::string text(auto value) { return std::string(fucik::to_string(value)); }

Json point_json(const fucik::FucikPoint& p) {
  const auto b = p.bumps();
  return Json{{"n", p.n},
              {"alpha", p.alpha},
              {"beta", p.beta},
              {"parity", text(p.parity)},
              {"case", text(p.dominance)},
              {"residual", fucik::curve_residual(p)},
              {"l1", b.l1},
              {"l2", b.l2},
              {"l", b.l}};
}

// --n with --alpha, --beta, both, --gamma, or --diagonal.
struct PointOptions {
  int n = 2;
  std::optional<double> alpha, beta, gamma;
  bool diagonal = false;

  void add(CLI::App* app) {
    app->add_option("--n", n, "curve index")->required()->check(CLI::PositiveNumber);
    app->add_option("--alpha", alpha, "alpha coordinate (> 1)");
    app->add_option("--beta", beta, "beta coordinate (> 1)");
    app->add_option("--gamma", gamma, "gamma-line parameter (>= 4)");
    app->add_flag("--diagonal", diagonal, "use the diagonal point (n^2, n^2)");
  }

  fucik::FucikPoint resolve() const {
    const int given = (alpha || beta ? 1 : 0) + (gamma ? 1 : 0) + (diagonal ? 1 : 0);
    if (given != 1) throw UsageError("give exactly one of --alpha/--beta, --gamma or --diagonal");
    if (diagonal) return fucik::diagonal_point(n);
    if (gamma) {
      return n % 2 == 0 ? fucik::gamma_line_point(n, *gamma) : fucik::gamma_line_odd_point(n, *gamma);
    }
    if (alpha && beta) return fucik::make_point(n, *alpha, *beta);
    if (alpha) return fucik::complete_point(n, fucik::Alpha{*alpha});
    return fucik::complete_point(n, fucik::Beta{*beta});
  }

  Json echo() const {
    Json j{{"n", n}};
    if (alpha) j["alpha"] = *alpha;
    if (beta) j["beta"] = *beta;
    if (gamma) j["gamma"] = *gamma;
    if (diagonal) j["diagonal"] = true;
    return j;
  }
};

// Options describing a SystemSpec.
struct SystemOptions {
  std::string mode;
  std::vector<std::string> entries;
  double epsilon = 0.5;
  std::optional<double> even_c, odd_c, even_fraction, odd_fraction, gamma;
  std::string odd_branch = "diagonal";
  std::string even_dominance = "alpha";
  bool uniform_odd_cap = false;
  CLI::App* app = nullptr;

  void add(CLI::App* a) {
    app = a;
    a->add_option("--mode", mode, "system shape")->required()->check(CLI::IsMember({"finite", "power", "gamma"}));
    a->add_option("--entry", entries, "finite mode: N:alpha=VALUE or N:beta=VALUE (repeatable)");
    a->add_option("--epsilon", epsilon, "power mode: exponent epsilon > 0");
    a->add_option("--even-c", even_c, "power mode: constant c_n for even n");
    a->add_option("--odd-c", odd_c, "power mode: constant c_n for odd n");
    a->add_option("--even-cap-fraction", even_fraction, "power mode: c_n as a fraction of the even cap");
    a->add_option("--odd-cap-fraction", odd_fraction, "power mode: c_n as a fraction of the odd cap");
    a->add_option("--odd-branch", odd_branch, "power mode: odd entries")
        ->check(CLI::IsMember({"diagonal", "alpha", "beta"}));
    a->add_option("--even-dominance", even_dominance, "power mode: dominant coordinate for even n")
        ->check(CLI::IsMember({"alpha", "beta"}));
    a->add_flag("--uniform-odd-cap", uniform_odd_cap, "power mode: use the n-independent odd caps");
    a->add_option("--gamma", gamma, "gamma mode: gamma in [4, 5.682]");
  }

  bool given(const char* name) const { return app->count(name) > 0; }

  void forbid(std::initializer_list<const char*> names) const {
    for (const char* name : names) {
      if (given(name)) throw UsageError(std::string(name) + " is not valid with --mode " + mode);
    }
  }

  static fucik::FucikPoint parse_entry(const std::string& text) {
    const auto colon = text.find(':');
    const auto eq = text.find('=');
    if (colon == std::string::npos || eq == std::string::npos || eq < colon) {
      throw UsageError("--entry expects N:alpha=VALUE or N:beta=VALUE, got '" + text + "'");
    }
    try {
      const int n = std::stoi(text.substr(0, colon));
      const std::string key = text.substr(colon + 1, eq - colon - 1);
      const double v = std::stod(text.substr(eq + 1));
      if (key == "alpha") return n == 1 ? fucik::make_point(1, v, v) : fucik::complete_point(n, fucik::Alpha{v});
      if (key == "beta") return n == 1 ? fucik::make_point(1, v, v) : fucik::complete_point(n, fucik::Beta{v});
    } catch (const std::logic_error&) {
      throw UsageError("cannot parse --entry '" + text + "'");
    }
    throw UsageError("--entry key must be alpha or beta, got '" + text + "'");
  }

  fucik::SystemSpec resolve() const {
    using namespace fucik;
    if (mode == "finite") {
      forbid({"--epsilon", "--even-c", "--odd-c", "--even-cap-fraction", "--odd-cap-fraction", "--odd-branch",
              "--even-dominance", "--uniform-odd-cap", "--gamma"});
      FinitePerturbation f;
      for (const auto& e : entries) f.entries.push_back(parse_entry(e));
      return f;
    }
    if (mode == "gamma") {
      forbid({"--entry", "--epsilon", "--even-c", "--odd-c", "--even-cap-fraction", "--odd-cap-fraction",
              "--odd-branch", "--even-dominance", "--uniform-odd-cap"});
      if (!gamma) throw UsageError("--mode gamma needs --gamma");
      return GammaLine{*gamma};
    }
    forbid({"--entry", "--gamma"});
    if (even_c && even_fraction) throw UsageError("give at most one of --even-c and --even-cap-fraction");
    if (odd_c && odd_fraction) throw UsageError("give at most one of --odd-c and --odd-cap-fraction");
    PowerFamily p;
    p.epsilon = epsilon;
    p.even_rule = even_fraction ? CnRule{CnRule::Kind::cap_fraction, *even_fraction, false}
                                : CnRule{CnRule::Kind::constant, even_c.value_or(0.0), false};
    p.odd_rule = odd_fraction ? CnRule{CnRule::Kind::cap_fraction, *odd_fraction, uniform_odd_cap}
                              : CnRule{CnRule::Kind::constant, odd_c.value_or(0.0), uniform_odd_cap};
    p.odd_branch = odd_branch == "alpha"  ? OddBranch::alpha_dominant
                   : odd_branch == "beta" ? OddBranch::beta_dominant
                                          : OddBranch::diagonal;
    p.even_dominance = even_dominance == "beta" ? Dominance::beta_dominant : Dominance::alpha_dominant;
    return p;
  }

  Json echo() const {
    Json j{{"mode", mode}};
    if (mode == "finite") {
      j["entries"] = entries;
    } else if (mode == "gamma") {
      j["gamma"] = gamma.value_or(NAN);
    } else {
      j["epsilon"] = epsilon;
      if (even_c) j["even_c"] = *even_c;
      if (even_fraction) j["even_cap_fraction"] = *even_fraction;
      if (odd_c) j["odd_c"] = *odd_c;
      if (odd_fraction) j["odd_cap_fraction"] = *odd_fraction;
      j["odd_branch"] = odd_branch;
      j["even_dominance"] = even_dominance;
      j["uniform_odd_cap"] = uniform_odd_cap;
    }
    return j;
  }
};

Json nearness_json(const fucik::NearnessReport& r) {
  return Json{{"partial_sum", r.partial_sum},
              {"tail_bound", r.tail_bound},
              {"total_upper", r.total_upper},
              {"threshold", r.threshold},
              {"verdict", text(r.verdict)},
              {"r", r.r},
              {"explicit_terms", r.explicit_terms}};
}

fucik::CapBranch parse_branch(const std::string& s) {
  using fucik::CapBranch;
  if (s == "even") return CapBranch::even;
  if (s == "odd_alpha_dominant") return CapBranch::odd_alpha_dominant;
  if (s == "odd_beta_dominant") return CapBranch::odd_beta_dominant;
  if (s == "odd_alpha_uniform") return CapBranch::odd_alpha_uniform;
  return CapBranch::odd_beta_uniform;
}

const std::vector<std::string> branch_names = {"even", "odd_alpha_dominant", "odd_beta_dominant",
                                               "odd_alpha_uniform", "odd_beta_uniform"};

Table region_table(double epsilon, const std::string& branch, int n_from, int n_to) {
  Table t{{"n", "boundary"}, {}};
  for (const auto& [n, b] : fucik::region_boundary(epsilon, parse_branch(branch), n_from, n_to)) {
    t.rows.push_back({static_cast<long long>(n), b});
  }
  return t;
}

int run(int argc, char** argv) {
  CLI::App app{"Fucik eigenfunctions: closed forms, nearness criteria and Riesz-basis diagnostics"};
  app.require_subcommand(1);
  std::string format = "json";
  std::string output;
  bool timing = false;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("-o,--output", output, "output file (default: stdout)");
  app.add_flag("--timing", timing, "include wall time in JSON output");
  app.set_version_flag("--version", tool_version);

  Report report;
  std::string command;
  std::function<void()> action;

  // point
  PointOptions point_opts;
  auto* point = app.add_subcommand("point", "construct and classify a point of Gamma_n");
  point_opts.add(point);
  point->callback([&] {
    action = [&] {
      report.parameters = point_opts.echo();
      report.result = point_json(point_opts.resolve());
    };
  });

  // eval
  PointOptions eval_opts;
  int eval_samples = 201;
  auto* eval = app.add_subcommand("eval", "sample f^n and sin(n x) on a uniform grid of [0, pi]");
  eval_opts.add(eval);
  eval->add_option("--samples", eval_samples, "grid points (>= 2)")->check(CLI::Range(2, 10000000));
  eval->callback([&] {
    action = [&] {
      const auto p = eval_opts.resolve();
      const fucik::FucikEigenfunction f(p);
      Table t{{"x", "f", "sine"}, {}};
      for (int i = 0; i < eval_samples; ++i) {
        const double x = fucik::pi * i / (eval_samples - 1);
        t.rows.push_back({x, f(x), std::sin(p.n * x)});
      }
      report.parameters = eval_opts.echo();
      report.parameters["samples"] = eval_samples;
      report.result = Json{{"point", point_json(p)}, {"samples", t.json()}};
      report.table = std::move(t);
    };
  });

  // distance
  PointOptions dist_opts;
  std::optional<int> dist_m;
  auto* distance = app.add_subcommand("distance", "norms, distance to sin(n x), scalar products and C_n");
  dist_opts.add(distance);
  distance->add_option("--m", dist_m, "also report <f^n, sin(m x)>")->check(CLI::Range(1, fucik::max_cross_index));
  distance->callback([&] {
    action = [&] {
      const auto p = dist_opts.resolve();
      const auto nsq = fucik::norm_sq(p);
      const auto dsq = fucik::dist_sq_to_sine(p);
      const auto inn = fucik::inner_same_index(p);
      Json r{{"point", point_json(p)},
             {"norm_sq", nsq.value},
             {"norm_sq_case", text(nsq.formula_case)},
             {"dist_sq", dsq.value},
             {"dist_sq_case", text(dsq.formula_case)},
             {"inner", inn.value},
             {"inner_case", text(inn.formula_case)},
             {"singularity_distance", dsq.singularity_distance}};
      if (p.n >= 2) {
        r["bound_Cn"] = fucik::bound_Cn(p);
        r["kato_term"] = fucik::kato_weakened_term(p);
      }
      if (dist_m) {
        const auto c = fucik::inner_with_sine(p, *dist_m);
        r["m"] = *dist_m;
        r["inner_m"] = c.value;
        r["inner_m_case"] = text(c.formula_case);
      }
      report.parameters = dist_opts.echo();
      if (dist_m) report.parameters["m"] = *dist_m;
      report.result = std::move(r);
    };
  });

  // verify
  std::string suite = "all";
  int nmax = 20;
  std::optional<double> tol;
  auto* verify = app.add_subcommand("verify", "run verification suites against the quadrature oracle");
  verify->add_option("--suite", suite, "suite name")
      ->check(CLI::IsMember({"closedform", "vanishing", "bounds", "dilation", "paleywiener", "all"}));
  verify->add_option("--nmax", nmax, "largest curve index")->check(CLI::Range(2, 200));
  verify->add_option("--tol", tol, "lower the suite tolerances (never raises them)")->check(CLI::PositiveNumber);
  verify->callback([&] {
    action = [&] {
      using namespace fucik::cli;
      const auto eff = [&](double d) { return tol ? std::min(*tol, d) : d; };
      const auto append = [&](std::vector<SuiteCheck> v) {
        report.checks.insert(report.checks.end(), v.begin(), v.end());
      };
      const bool all = suite == "all";
      if (all || suite == "closedform") append(suite_closedform(nmax, eff(SuiteDefaults::closedform)));
      if (all || suite == "vanishing") append(suite_vanishing(nmax, eff(SuiteDefaults::vanishing)));
      if (all || suite == "bounds") append(suite_bounds(nmax));
      if (all || suite == "dilation") append(suite_dilation(nmax, 5.0, eff(SuiteDefaults::dilation)));
      if (all || suite == "paleywiener") append(suite_paleywiener(100, eff(SuiteDefaults::paleywiener)));
      report.parameters = Json{{"suite", suite}, {"nmax", nmax}};
      if (tol) report.parameters["tol"] = *tol;
      Table t{{"check", "samples", "max_delta", "tolerance", "pass"}, {}};
      for (const auto& c : report.checks) {
        t.rows.push_back({c.name, c.samples, c.max_delta, c.tolerance, std::string(c.pass ? "true" : "false")});
      }
      report.result = Json{{"all_pass", report.all_pass()}};
      report.table = std::move(t);
    };
  });

  // check-theorem1 / check-theorem2
  SystemOptions t1_opts, t2_opts;
  int t1_terms = fucik::default_explicit_terms, t2_terms = fucik::default_explicit_terms;
  bool t1_require = false, t2_require = false;
  auto* t1 = app.add_subcommand("check-theorem1", "summation test sum C_n < pi/2");
  t1_opts.add(t1);
  t1->add_option("--terms", t1_terms, "indices summed explicitly")->check(CLI::Range(2, 1000000));
  t1->add_flag("--require-certified", t1_require, "exit 1 unless the verdict is certified");
  auto* t2 = app.add_subcommand("check-theorem2", "convergence test for systems with diagonal odd entries");
  t2_opts.add(t2);
  t2->add_option("--terms", t2_terms, "indices summed explicitly")->check(CLI::Range(2, 1000000));
  t2->add_flag("--require-certified", t2_require, "exit 1 unless the verdict is certified");
  const auto nearness_action = [&](SystemOptions& opts, int& terms, bool& require, bool first) {
    return [&, first] {
      action = [&, first] {
        const auto spec = opts.resolve();
        const auto r = first ? fucik::theorem1_check(spec, terms) : fucik::theorem2_check(spec, terms);
        report.parameters = opts.echo();
        report.parameters["terms"] = terms;
        report.result = nearness_json(r);
        if (require) {
          const bool ok = r.verdict == fucik::Verdict::riesz_basis_certified;
          report.checks.push_back({"verdict_certified", 1, ok ? 0.0 : 1.0, 0.0, ok});
        }
      };
    };
  };
  t1->callback(nearness_action(t1_opts, t1_terms, t1_require, true));
  t2->callback(nearness_action(t2_opts, t2_terms, t2_require, false));

  // gamma-scan
  double g_from = 4.0, g_to = 5.7, g_step = 0.01;
  auto* gscan = app.add_subcommand("gamma-scan", "E(gamma) on a uniform grid");
  gscan->add_option("--from", g_from, "first gamma (>= 4)");
  gscan->add_option("--to", g_to, "last gamma (< 9)");
  gscan->add_option("--step", g_step, "grid step")->check(CLI::PositiveNumber);
  gscan->callback([&] {
    action = [&] {
      if (!(g_from >= 4.0) || !(g_to < fucik::coefficient_bound_gamma_limit) || g_to < g_from) {
        throw UsageError("need 4 <= --from <= --to < 9");
      }
      const long long count = static_cast<long long>(std::floor((g_to - g_from) / g_step + 1e-9)) + 1;
      if (count > 10000000) throw UsageError("grid too large");
      Table t{{"gamma", "E", "below_one"}, {}};
      for (long long i = 0; i < count; ++i) {
        const double g = g_from + static_cast<double>(i) * g_step;
        const double e = fucik::E_gamma(g);
        t.rows.push_back({g, e, static_cast<long long>(e < 1.0)});
      }
      report.parameters = Json{{"from", g_from}, {"to", g_to}, {"step", g_step}};
      report.result = Json{{"gamma_admissible_max", fucik::gamma_admissible_max(1e-10)}, {"scan", t.json()}};
      report.table = std::move(t);
    };
  });

  // region
  double r_eps = 0.5;
  std::string r_branch = "even";
  int r_from = 2, r_to = 10;
  auto* region = app.add_subcommand("region", "boundary n + sqrt(cap_n) n^{(1-eps)/2} of the corollary region");
  region->add_option("--epsilon", r_eps, "epsilon > 0")->check(CLI::PositiveNumber);
  region->add_option("--branch", r_branch, "cap branch")->check(CLI::IsMember(branch_names));
  region->add_option("--n-from", r_from, "first index")->check(CLI::PositiveNumber);
  region->add_option("--n-to", r_to, "last index")->check(CLI::PositiveNumber);
  region->callback([&] {
    action = [&] {
      if (r_to < r_from) throw UsageError("--n-to must be >= --n-from");
      auto t = region_table(r_eps, r_branch, r_from, r_to);
      report.parameters = Json{{"epsilon", r_eps}, {"branch", r_branch}, {"n_from", r_from}, {"n_to", r_to}};
      report.result = Json{{"boundary", t.json()}};
      report.table = std::move(t);
    };
  });

  // gram
  SystemOptions gram_opts;
  std::vector<int> gram_ns;
  bool gram_matrix = false;
  auto* gram = app.add_subcommand("gram", "extreme eigenvalues of normalized truncated Gram matrices");
  gram_opts.add(gram);
  gram->add_option("--N", gram_ns, "truncation orders, ascending (repeatable)")
      ->required()
      ->check(CLI::Range(1, fucik::max_gram_order));
  gram->add_flag("--matrix", gram_matrix, "emit the entries of the largest truncation instead");
  gram->callback([&] {
    action = [&] {
      const auto spec = gram_opts.resolve();
      report.parameters = gram_opts.echo();
      report.parameters["N"] = gram_ns;
      if (gram_matrix) {
        const auto g = fucik::build_gram(spec, gram_ns.back());
        Table t{{"i", "j", "entry"}, {}};
        for (int i = 0; i < g.N; ++i) {
          for (int j = 0; j < g.N; ++j) t.rows.push_back({static_cast<long long>(i + 1), static_cast<long long>(j + 1), g.entries(i, j)});
        }
        report.result = Json{{"N", g.N}, {"lambda_min", g.lambda_min}, {"lambda_max", g.lambda_max}, {"entries", t.json()}};
        report.table = std::move(t);
        return;
      }
      Table t{{"N", "lambda_min", "lambda_max"}, {}};
      for (const auto& row : fucik::riesz_scan(spec, gram_ns)) {
        t.rows.push_back({static_cast<long long>(row.N), row.lambda_min, row.lambda_max});
      }
      report.result = Json{{"scan", t.json()}};
      report.table = std::move(t);
    };
  });

  // figure
  std::string kind;
  int f_nmax = 4, f_samples = 200, f_n_to = 40;
  double f_eps = 0.5, f_c = 0.4, f_gamma = 5.6;
  std::string f_branch = "odd_alpha_uniform";
  PointOptions f_point;
  f_point.n = 3;
  auto* figure = app.add_subcommand("figure", "CSV data for figures");
  figure->add_option("--kind", kind, "figure kind")
      ->required()
      ->check(CLI::IsMember({"spectrum_curves", "eigenfunction_profile", "region", "comparison"}));
  figure->add_option("--nmax", f_nmax, "spectrum_curves: largest index")->check(CLI::Range(2, 200));
  figure->add_option("--samples", f_samples, "samples per curve or profile")->check(CLI::Range(2, 1000000));
  figure->add_option("--n", f_point.n, "eigenfunction_profile: index")->check(CLI::PositiveNumber);
  figure->add_option("--alpha", f_point.alpha, "eigenfunction_profile: alpha");
  figure->add_option("--beta", f_point.beta, "eigenfunction_profile: beta");
  figure->add_flag("--diagonal", f_point.diagonal, "eigenfunction_profile: diagonal point");
  figure->add_option("--epsilon", f_eps, "region/comparison: epsilon")->check(CLI::PositiveNumber);
  figure->add_option("--branch", f_branch, "region: cap branch")->check(CLI::IsMember(branch_names));
  figure->add_option("--c", f_c, "comparison: constant c")->check(CLI::NonNegativeNumber);
  figure->add_option("--gamma", f_gamma, "comparison: gamma-line parameter");
  figure->add_option("--n-to", f_n_to, "region/comparison: last index")->check(CLI::Range(2, 1000000));
  figure->callback([&] {
    action = [&] {
      report.parameters = Json{{"kind", kind}};
      Table t;
      if (kind == "spectrum_curves") {
        t.columns = {"n", "alpha", "beta", "residual"};
        for (int n = 2; n <= f_nmax; ++n) {
          for (const auto& p : fucik::sample_curve(n, f_samples, 1e-4, 4.0)) {
            t.rows.push_back({static_cast<long long>(n), p.alpha, p.beta, fucik::curve_residual(p)});
          }
        }
        report.parameters["nmax"] = f_nmax;
        report.parameters["samples"] = f_samples;
      } else if (kind == "eigenfunction_profile") {
        if (!f_point.alpha && !f_point.beta) f_point.diagonal = true;
        const auto p = f_point.resolve();
        const fucik::FucikEigenfunction f(p);
        t.columns = {"x", "f", "sine"};
        for (int i = 0; i < f_samples; ++i) {
          const double x = fucik::pi * i / (f_samples - 1);
          t.rows.push_back({x, f(x), std::sin(p.n * x)});
        }
        report.parameters["point"] = f_point.echo();
        report.parameters["samples"] = f_samples;
      } else if (kind == "region") {
        t = region_table(f_eps, f_branch, 2, f_n_to);
        report.parameters["epsilon"] = f_eps;
        report.parameters["branch"] = f_branch;
        report.parameters["n_to"] = f_n_to;
      } else {
        // Even n: the corollary region max <= n + sqrt(c) n^{(1-eps)/2} against the gamma line.
        t.columns = {"n", "region_boundary", "gamma_line_sqrt_alpha", "outside"};
        for (int n = 2; n <= f_n_to; n += 2) {
          const double boundary = n + std::sqrt(f_c) * std::pow(static_cast<double>(n), 0.5 * (1.0 - f_eps));
          const auto p = fucik::gamma_line_point(n, f_gamma);
          const double s = std::max(p.sqrt_alpha(), p.sqrt_beta());
          t.rows.push_back({static_cast<long long>(n), boundary, s, static_cast<long long>(s > boundary)});
        }
        report.parameters["epsilon"] = f_eps;
        report.parameters["c"] = f_c;
        report.parameters["gamma"] = f_gamma;
        report.parameters["n_to"] = f_n_to;
      }
      report.result = Json{{"data", t.json()}};
      report.table = std::move(t);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  command = app.get_subcommands().front()->get_name();

  const auto start = std::chrono::steady_clock::now();
  try {
    action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const fucik::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const auto code = e.code();
    const bool runtime = code == fucik::ErrorCode::no_convergence ||
                         code == fucik::ErrorCode::entry_quadrature_failure;
    return runtime ? 1 : 2;
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::string payload;
  if (format == "csv") {
    if (report.table) {
      payload = report.table->csv();
    } else {
      Table t;
      std::vector<Cell> row;
      for (const auto& [k, v] : report.result.items()) {
        if (v.is_structured()) continue;
        t.columns.push_back(k);
        row.emplace_back(fucik::cli::scalar_text(v));
      }
      t.rows.push_back(std::move(row));
      payload = t.csv();
    }
  } else {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      checks.push_back(Json{{"name", c.name},
                            {"samples", c.samples},
                            {"max_delta", c.max_delta},
                            {"tolerance", c.tolerance},
                            {"pass", c.pass}});
    }
    Json doc{{"schema", "1"},
             {"tool", "fucik"},
             {"version", tool_version},
             {"command", command},
             {"parameters", std::move(report.parameters)},
             {"result", std::move(report.result)},
             {"checks", std::move(checks)},
             {"status", report.all_pass() ? "pass" : "fail"}};
    if (timing) doc["wall_time_s"] = wall;
    fucik::cli::stringify_nonfinite(doc);
    payload = doc.dump(2) + "\n";
  }
  try {
    fucik::cli::emit(payload, output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
