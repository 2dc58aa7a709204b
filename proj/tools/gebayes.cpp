// Command-line front end: fit / sample / simulate / diagnose.
//
// Exit codes: 0 success, 1 I/O or parse error, 2 posterior propriety
// violation, 3 numerical non-convergence.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gebayes/dataset.hpp"
#include "gebayes/errors.hpp"
#include "gebayes/fit.hpp"
#include "gebayes/rou_sampler.hpp"
#include "gebayes/sample_io.hpp"
#include "gebayes/simulation.hpp"

namespace {

struct CommonOpts {
  std::string data = "bearings";
  double a = 1.0;
  double b = 1.0;
  double r = 1.0;
  std::uint64_t M = 10000;
  std::uint64_t seed = 42;
  std::string estimator = "median";
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--data", o.data, "data file (one value per line) or built-in name 'bearings'");
  cmd->add_option("--a", o.a, "prior exponent on alpha");
  cmd->add_option("--b", o.b, "prior exponent on lambda");
  cmd->add_option("--r", o.r, "ratio-of-uniforms exponent")->check(CLI::NonNegativeNumber);
  cmd->add_option("--M", o.M, "number of posterior draws")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "random seed");
  cmd->add_option("--estimator", o.estimator, "point estimator for the Bayes fit")
      ->check(CLI::IsMember({"median", "mean"}));
}

gebayes::FitOptions fit_options(const CommonOpts& o) {
  gebayes::FitOptions opts;
  opts.prior = {o.a, o.b};
  opts.r = o.r;
  opts.draws = o.M;
  opts.seed = o.seed;
  opts.estimator = o.estimator == "mean" ? gebayes::PointEstimator::mean
                                         : gebayes::PointEstimator::median;
  return opts;
}

void write_text_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) {
    throw gebayes::parse_error("cannot open '" + path.string() + "' for writing");
  }
  out << body;
  if (!out) {
    throw gebayes::parse_error("failed while writing '" + path.string() + "'");
  }
}

int run_fit_cmd(const CommonOpts& o) {
  const gebayes::Dataset data = gebayes::load_dataset(o.data);
  const gebayes::FitReport report = gebayes::run_fit(data, fit_options(o));
  std::cout << gebayes::fit_report_text(report);
  if (!o.out.empty()) {
    write_text_file(o.out, gebayes::fit_report_json(report));
    std::cout << "wrote " << o.out << "\n";
  }
  return 0;
}

int run_sample_cmd(const CommonOpts& o) {
  const gebayes::Dataset data = gebayes::load_dataset(o.data);
  const gebayes::FitOptions opts = fit_options(o);
  gebayes::RandomStream rng(opts.seed);
  const gebayes::PosteriorSample sample =
      gebayes::sample_posterior(data, opts.prior, opts.r, opts.draws, rng);

  const std::filesystem::path path = o.out.empty() ? "samples.csv" : o.out;
  gebayes::write_sample_file(path, sample);

  const gebayes::SampleDiagnostics diag = gebayes::diagnose_sample(sample);
  std::filesystem::path acf_path = path;
  acf_path.replace_filename(path.stem().string() + "_acf.csv");
  write_text_file(acf_path, gebayes::acf_table_csv(diag));
  std::filesystem::path summary_path = path;
  summary_path.replace_filename(path.stem().string() + "_summary.json");
  write_text_file(summary_path, gebayes::sample_diagnostics_json(diag));

  std::cout << "wrote " << path.string() << " (" << sample.lambdas.size()
            << " draws, acceptance_rate = " << sample.acceptance_rate << "), "
            << acf_path.string() << ", " << summary_path.string() << "\n";
  return 0;
}

int run_simulate_cmd(const CommonOpts& o, const gebayes::SimConfig& grid_cfg,
                     int replications, int threads) {
  gebayes::SimConfig cfg = grid_cfg;
  cfg.replications = replications;
  cfg.posterior_draws = o.M;
  cfg.prior = {o.a, o.b};
  cfg.r = o.r;
  cfg.base_seed = o.seed;
  cfg.estimator = o.estimator == "mean" ? gebayes::PointEstimator::mean
                                        : gebayes::PointEstimator::median;
  cfg.threads = threads;

  const auto results = gebayes::run_simulation(cfg);
  const std::filesystem::path path = o.out.empty() ? "simulation.csv" : o.out;
  write_text_file(path, gebayes::simulation_csv(results));
  std::cout << "wrote " << path.string() << " (" << results.size() << " cells)\n";
  return 0;
}

int run_diagnose_cmd(const std::string& in, const std::string& out) {
  const gebayes::PosteriorSample sample = gebayes::read_sample_file(in);
  const gebayes::SampleDiagnostics diag = gebayes::diagnose_sample(sample);
  std::cout << gebayes::sample_diagnostics_text(diag);
  if (!out.empty()) {
    write_text_file(out, gebayes::sample_diagnostics_json(diag));
    std::cout << "wrote " << out << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Objective Bayesian and maximum likelihood inference for the "
      "two-parameter generalized exponential distribution"};
  app.require_subcommand(1);

  CommonOpts fit_opts;
  CLI::App* fit = app.add_subcommand(
      "fit", "Bayes and MLE point estimates with goodness-of-fit diagnostics");
  add_common(fit, fit_opts);
  fit->add_option("--out", fit_opts.out, "write the machine-readable JSON report here");

  CommonOpts sample_opts;
  CLI::App* sample = app.add_subcommand(
      "sample", "draw posterior samples and write them with trace/ACF series");
  add_common(sample, sample_opts);
  sample->add_option("--out", sample_opts.out, "sample CSV path (default samples.csv)");

  CommonOpts sim_opts;
  gebayes::SimConfig sim_cfg;
  int replications = 200;
  int threads = 0;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Bayes-vs-MLE scaled bias / scaled RMSE study over a grid");
  add_common(simulate, sim_opts);
  simulate->add_option("--n-grid", sim_cfg.n_grid, "sample sizes")->delimiter(',');
  simulate->add_option("--alpha-grid", sim_cfg.alpha_grid, "true alpha values")->delimiter(',');
  simulate->add_option("--lambda-grid", sim_cfg.lambda_grid, "true lambda values")->delimiter(',');
  simulate->add_option("--N", replications, "replications per cell")->check(CLI::PositiveNumber);
  simulate->add_option("--threads", threads, "worker threads (0 = auto)");
  simulate->add_option("--out", sim_opts.out, "output CSV path (default simulation.csv)");

  std::string diag_in, diag_out;
  CLI::App* diagnose = app.add_subcommand(
      "diagnose", "recompute diagnostics from a stored sample file");
  diagnose->add_option("--in", diag_in, "sample file produced by 'sample'")->required();
  diagnose->add_option("--out", diag_out, "write the JSON diagnostics here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (fit->parsed()) return run_fit_cmd(fit_opts);
    if (sample->parsed()) return run_sample_cmd(sample_opts);
    if (simulate->parsed()) return run_simulate_cmd(sim_opts, sim_cfg, replications, threads);
    if (diagnose->parsed()) return run_diagnose_cmd(diag_in, diag_out);
  } catch (const gebayes::propriety_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gebayes::numerical_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const gebayes::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
