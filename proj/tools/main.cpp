#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "grunsky/errors.hpp"
#include "grunsky/json_io.hpp"
#include "grunsky/verify.hpp"

namespace {

using namespace grunsky;

struct TValue {
  Complex t{0.0};
  bool normalized = false;
};

TValue parse_t(std::string text) {
  TValue out;
  const std::string suffix = "-normalized";
  if (text.size() > suffix.size() &&
      text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0) {
    out.normalized = true;
    text.erase(text.size() - suffix.size());
  }
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) {
      out.t = Complex(std::stod(text), 0.0);
    } else {
      out.t = Complex(std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1)));
    }
  } catch (const std::exception&) {
    throw ValidationError(detail::str("--t: cannot parse complex value '", text,
                                      "' (expected RE,IM)"));
  }
  return out;
}

std::vector<double> parse_grid(const std::string& csv) {
  std::vector<double> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ValidationError(detail::str("--t-grid: cannot parse '", item, "'"));
    }
  }
  if (out.empty()) throw ValidationError("--t-grid: empty grid");
  return out;
}

std::string iso_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct Options {
  std::string family;
  std::string coeffs;
  std::string t_text = "0.5,0";
  std::string t_grid_text;
  std::vector<int> n_list = default_n_ladder();
  std::string out_path;
  std::string csv_path;
  std::uint64_t seed = 0;
  int budget = 256;
  int grid_size = 32;
  double k_bound = -1.0;  // < 0 means unset
  bool n_given = false;
};

void add_common(CLI::App* cmd, Options& opt, bool with_grid = false) {
  cmd->add_option("--family", opt.family, "family spec: joukowski | power:3 | power:5 ...");
  cmd->add_option("--coeffs", opt.coeffs, "coefficient file (JSON {b0, tail})");
  cmd->add_option("--t", opt.t_text, "complex parameter RE,IM (suffix -normalized for alpha)");
  cmd->add_option("--t-grid", opt.t_grid_text, "CSV of parameter magnitudes");
  cmd->add_option("--N", opt.n_list, "truncation ladder (CSV)")
      ->delimiter(',')
      ->each([&opt](const std::string&) { opt.n_given = true; });
  cmd->add_option("--out", opt.out_path, "write the JSON report here (default stdout)");
  cmd->add_option("--csv", opt.csv_path, "also write a flat CSV table");
  cmd->add_option("--seed", opt.seed, "random seed (default 0, reproducible)");
  cmd->add_option("--budget", opt.budget, "random candidates for the metric optimizer");
  if (with_grid) cmd->add_option("--grid", opt.grid_size, "integration grid size");
}

int max_n(const Options& opt) {
  if (opt.n_list.empty()) throw ValidationError("--N: empty ladder");
  int m = 0;
  for (const int n : opt.n_list) {
    if (n < 1) throw ValidationError("--N: values must be >= 1");
    m = std::max(m, n);
  }
  return m;
}

FamilySpec family_from(const Options& opt, Complex t) {
  if (opt.family.empty()) {
    throw ValidationError("this command needs --family (a Beltrami coefficient source)");
  }
  if (!opt.coeffs.empty()) {
    throw ValidationError("give exactly one input source: --family or --coeffs");
  }
  return parse_family(opt.family, t);
}

// Resolves the map source (family XOR coefficient file). Coefficient files
// describe maps with finitely many nonzero coefficients, so zero-padding the
// tail to the length the truncation needs is exact.
LaurentMap map_from(const Options& opt, Complex t, int n_max, std::string& source_label) {
  const bool have_family = !opt.family.empty();
  const bool have_coeffs = !opt.coeffs.empty();
  if (have_family == have_coeffs) {
    throw ValidationError("give exactly one input source: --family or --coeffs");
  }
  if (have_family) {
    source_label = opt.family;
    return family_map(parse_family(opt.family, t), 2 * n_max - 1);
  }
  source_label = opt.coeffs;
  return read_laurent_map(opt.coeffs).padded(2 * n_max - 1);
}

void emit(const Options& opt, const Json& report, const std::string& csv) {
  if (opt.out_path.empty()) {
    write_json_17(report, std::cout);
  } else {
    std::ofstream out(opt.out_path);
    if (!out) throw ValidationError(detail::str("cannot write --out file '", opt.out_path, "'"));
    write_json_17(report, out);
  }
  if (!opt.csv_path.empty()) {
    std::ofstream out(opt.csv_path);
    if (!out) throw ValidationError(detail::str("cannot write --csv file '", opt.csv_path, "'"));
    out << csv;
  }
}

Json report_shell(const std::string& command, Json config, Json results) {
  Json report;
  report["schema_version"] = 1;
  report["command"] = command;
  report["config"] = std::move(config);
  report["results"] = std::move(results);
  report["metadata"] = Json{{"timestamp", iso_timestamp()}};
  return report;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void run_coefficients(const Options& opt) {
  const TValue tv = parse_t(opt.t_text);
  const int N = max_n(opt);
  std::string source;
  const LaurentMap map = map_from(opt, tv.t, N, source);
  const GrunskyTable table = grunsky_coefficients(map, N);
  const GrunskyMatrix matrix = grunsky_matrix(table);

  Json alpha = Json::array();
  Json weighted = Json::array();
  for (int m = 0; m < N; ++m) {
    Json row_a = Json::array(), row_g = Json::array();
    for (int n = 0; n < N; ++n) {
      row_a.push_back(complex_to_json(table.alpha(m, n)));
      row_g.push_back(complex_to_json(matrix.entries(m, n)));
    }
    alpha.push_back(std::move(row_a));
    weighted.push_back(std::move(row_g));
  }
  Json results{{"N", N}, {"alpha", std::move(alpha)}, {"G", std::move(weighted)}};

  std::ostringstream csv;
  csv << "m,n,alpha_re,alpha_im\n";
  for (int m = 1; m <= N; ++m)
    for (int n = 1; n <= N; ++n)
      csv << m << "," << n << "," << fmt17(table.alpha(m - 1, n - 1).real()) << ","
          << fmt17(table.alpha(m - 1, n - 1).imag()) << "\n";

  Json config{{"source", source}, {"t", complex_to_json(tv.t)}, {"N", N},
              {"seed", opt.seed}};
  emit(opt, report_shell("coefficients", config, results), csv.str());
}

void run_norm(const Options& opt) {
  const TValue tv = parse_t(opt.t_text);
  const int n_max = max_n(opt);
  std::string source;
  const LaurentMap map = map_from(opt, tv.t, n_max, source);
  NormOptions norm_options;
  norm_options.seed = opt.seed;
  ConvergenceReport report = grunsky_norm(map, opt.n_list, norm_options);
  if (opt.k_bound >= 0.0) report.k_bound = opt.k_bound;

  Json rows = Json::array();
  bool all_converged = true;
  for (const auto& row : report.rows) {
    rows.push_back(Json{{"N", row.N},
                        {"kappa", row.kappa},
                        {"residual", row.residual},
                        {"converged", row.converged}});
    all_converged = all_converged && row.converged;
  }
  Json results{{"rows", std::move(rows)},
               {"univalence_violated", report.univalence_violated}};
  if (report.k_bound) {
    results["k_bound"] = *report.k_bound;
    results["qc_bound_ok"] = qc_bound_check(report, *report.k_bound);
  }

  std::ostringstream csv;
  csv << "N,kappa,residual\n";
  for (const auto& row : report.rows)
    csv << row.N << "," << fmt17(row.kappa) << "," << fmt17(row.residual) << "\n";

  Json config{{"source", source}, {"t", complex_to_json(tv.t)}, {"N", opt.n_list},
              {"seed", opt.seed}};
  emit(opt, report_shell("norm", config, results), csv.str());
  if (!all_converged) {
    throw ConvergenceError("norm: the bilinear-norm iteration did not converge");
  }
}

void run_alpha(const Options& opt) {
  const TValue tv = parse_t(opt.t_text);
  const FamilySpec family = family_from(opt, tv.t);
  BeltramiSpec mu = family_beltrami(family);
  if (tv.normalized) mu = mu.normalized();

  NormOptions norm_options;
  norm_options.seed = opt.seed;
  Json rows = Json::array();
  SymmetricNormResult last;
  int n_max = 0;
  std::vector<int> ladder = opt.n_list;
  std::sort(ladder.begin(), ladder.end());
  for (const int N : ladder) {
    const auto res = alpha_norm(mu, N, norm_options);
    rows.push_back(Json{{"N", N},
                        {"sigma", res.sigma},
                        {"residual", res.residual},
                        {"converged", res.converged}});
    if (N >= n_max) {
      n_max = N;
      last = res;
    }
  }
  const ExtremalDifferential extremal = extremal_omega(last, n_max);

  Json results{{"sigma", last.sigma}, {"rows", std::move(rows)}};
  results["degenerate"] = extremal.degenerate;
  if (!extremal.degenerate) {
    Json omega = Json::array(), psi = Json::array(), argmax = Json::array();
    for (const Complex& c : extremal.omega) omega.push_back(complex_to_json(c));
    for (const Complex& c : extremal.psi) psi.push_back(complex_to_json(c));
    for (int i = 0; i < last.argmax_x.size(); ++i)
      argmax.push_back(complex_to_json(last.argmax_x(i)));
    results["omega"] = std::move(omega);
    results["psi"] = std::move(psi);
    results["argmax_x"] = std::move(argmax);
    results["psi_a1_norm"] = extremal.psi_a1_norm;
    const Complex paired = pairing(mu, extremal.psi);
    results["pairing_abs"] = std::abs(paired);
  }

  std::ostringstream csv;
  csv << "N,sigma\n";
  for (const auto& row : results["rows"])
    csv << row["N"].get<int>() << "," << fmt17(row["sigma"].get<double>()) << "\n";

  Json config{{"family", family.label()}, {"t", complex_to_json(tv.t)},
              {"normalized", tv.normalized}, {"N", ladder}, {"seed", opt.seed}};
  emit(opt, report_shell("alpha", config, results), csv.str());
  if (!last.converged) throw ConvergenceError("alpha: norm iteration did not converge");
}

void run_verify(const Options& opt) {
  const TValue tv = parse_t(opt.t_text);
  const FamilySpec family = family_from(opt, tv.t);
  const std::vector<double> grid =
      opt.t_grid_text.empty() ? default_t_grid() : parse_grid(opt.t_grid_text);
  const int N = max_n(opt);
  NormOptions norm_options;
  norm_options.seed = opt.seed;
  const VerificationReport report = verify_theorem1(family, grid, N, norm_options);

  Json rows = Json::array();
  for (const auto& row : report.rows) {
    rows.push_back(Json{{"r", row.r},
                        {"kappa_N", row.kappa},
                        {"alpha", row.alpha},
                        {"lower", row.lower},
                        {"upper", row.upper},
                        {"residual_theorem1", row.residual_theorem1},
                        {"residual_upper", row.residual_upper},
                        {"sandwich_ok", row.sandwich_ok}});
  }
  Json results{{"family", family.label()},
               {"N", N},
               {"rows", std::move(rows)},
               {"all_sandwich_ok", report.all_sandwich_ok()}};

  std::ostringstream csv;
  csv << "r,kappa,alpha,lower,upper,residual_theorem1,residual_upper,sandwich_ok\n";
  for (const auto& row : report.rows)
    csv << fmt17(row.r) << "," << fmt17(row.kappa) << "," << fmt17(row.alpha) << ","
        << fmt17(row.lower) << "," << fmt17(row.upper) << ","
        << fmt17(row.residual_theorem1) << "," << fmt17(row.residual_upper) << ","
        << (row.sandwich_ok ? 1 : 0) << "\n";

  Json config{{"family", family.label()}, {"t_grid", grid}, {"N", N},
              {"seed", opt.seed}};
  emit(opt, report_shell("verify", config, results), csv.str());
  if (!report.all_sandwich_ok()) {
    throw InvariantViolation("verify: a sandwich inequality row failed");
  }
}

void run_metric(const Options& opt) {
  const TValue tv = parse_t(opt.t_text);
  if (tv.t.imag() != 0.0) {
    throw ValidationError("metric: --t must be real (phases are handled by rotation)");
  }
  const FamilySpec family = family_from(opt, tv.t);
  const int N = max_n(opt);
  const MetricSample sample =
      metric_lambda_kappa(family, tv.t.real(), N, opt.budget, opt.seed);

  Json x = Json::array();
  for (int i = 0; i < sample.achieving_x.size(); ++i)
    x.push_back(complex_to_json(sample.achieving_x(i)));
  Json results{{"r", sample.r},
               {"lambda_est", sample.lambda_est},
               {"achieving_x", std::move(x)},
               {"budget", sample.optimizer_budget}};

  std::ostringstream csv;
  csv << "r,lambda_est\n" << fmt17(sample.r) << "," << fmt17(sample.lambda_est) << "\n";

  Json config{{"family", family.label()}, {"t", complex_to_json(tv.t)}, {"N", N},
              {"budget", opt.budget}, {"seed", opt.seed}};
  emit(opt, report_shell("metric", config, results), csv.str());
}

void run_lemma4(const Options& opt) {
  const TValue tv = parse_t(opt.t_text);
  if (tv.t.imag() != 0.0) throw ValidationError("lemma4: --t (r_max) must be real");
  const FamilySpec family = family_from(opt, tv.t);
  const int N = opt.n_given ? max_n(opt) : 16;
  const Lemma4Result res = lemma4_check(family, tv.t.real(), opt.grid_size, N,
                                        opt.budget, opt.seed);

  Json nodes = Json::array();
  for (const auto& [t, lambda] : res.nodes)
    nodes.push_back(Json{{"t", t}, {"lambda", lambda}});
  Json results{{"r_max", res.r_max}, {"grid_size", res.grid_size}, {"N", res.N},
               {"lhs_atanh_kappa", res.lhs}, {"rhs_integral", res.rhs},
               {"residual", res.residual}, {"nodes", std::move(nodes)}};

  std::ostringstream csv;
  csv << "t,lambda\n";
  for (const auto& [t, lambda] : res.nodes)
    csv << fmt17(t) << "," << fmt17(lambda) << "\n";

  Json config{{"family", family.label()}, {"r_max", tv.t.real()},
              {"grid", opt.grid_size}, {"N", N}, {"budget", opt.budget},
              {"seed", opt.seed}};
  emit(opt, report_shell("lemma4", config, results), csv.str());
}

void run_fredholm(const Options& opt) {
  const TValue tv = parse_t(opt.t_text);
  const int N = max_n(opt);
  NormOptions norm_options;
  norm_options.seed = opt.seed;

  FredholmResult res;
  std::string source;
  if (!opt.family.empty() && opt.coeffs.empty()) {
    source = opt.family;
    res = fredholm_eigenvalue(parse_family(opt.family, tv.t), N, norm_options);
  } else {
    const LaurentMap map = map_from(opt, tv.t, N, source);
    res = fredholm_eigenvalue(map, N, norm_options);
  }

  Json results{{"kappa", res.kappa}, {"is_circle", res.circle}};
  results["rho"] = res.circle ? Json(nullptr) : Json(res.rho);
  if (res.rho_abelian) results["rho_abelian"] = *res.rho_abelian;

  std::ostringstream csv;
  csv << "kappa,rho,rho_abelian\n"
      << fmt17(res.kappa) << "," << (res.circle ? "inf" : fmt17(res.rho)) << ","
      << (res.rho_abelian ? fmt17(*res.rho_abelian) : "") << "\n";

  Json config{{"source", source}, {"t", complex_to_json(tv.t)}, {"N", N},
              {"seed", opt.seed}};
  emit(opt, report_shell("fredholm", config, results), csv.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grunsky coefficients, Grunsky norms, and abelian-differential bounds"};
  app.require_subcommand(1);

  Options opt;
  auto* coefficients = app.add_subcommand("coefficients", "Grunsky coefficient table");
  add_common(coefficients, opt);
  auto* norm = app.add_subcommand("norm", "truncated Grunsky norm ladder");
  add_common(norm, opt);
  norm->add_option("--k", opt.k_bound, "reference dilatation for the qc bound check");
  auto* alpha = app.add_subcommand("alpha", "abelian-differential supremum");
  add_common(alpha, opt);
  auto* verify = app.add_subcommand("verify", "sandwich comparison along a Teichmueller disk");
  add_common(verify, opt);
  auto* metric = app.add_subcommand("metric", "envelope metric lambda_kappa at r");
  add_common(metric, opt);
  auto* lemma4 = app.add_subcommand("lemma4", "integrated-metric residual");
  add_common(lemma4, opt, /*with_grid=*/true);
  auto* fredholm = app.add_subcommand("fredholm", "first Fredholm eigenvalue via reciprocity");
  add_common(fredholm, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (coefficients->parsed()) run_coefficients(opt);
    if (norm->parsed()) run_norm(opt);
    if (alpha->parsed()) run_alpha(opt);
    if (verify->parsed()) run_verify(opt);
    if (metric->parsed()) run_metric(opt);
    if (lemma4->parsed()) run_lemma4(opt);
    if (fredholm->parsed()) run_fredholm(opt);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InvariantViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
