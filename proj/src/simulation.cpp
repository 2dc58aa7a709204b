#include "gebayes/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "gebayes/ge_dist.hpp"
#include "gebayes/mle.hpp"
#include "gebayes/rou_sampler.hpp"

namespace gebayes {

namespace {

struct Replication {
  double bayes_alpha = 0.0;
  double bayes_lambda = 0.0;
  double mle_alpha = 0.0;
  double mle_lambda = 0.0;
  bool ok = false;
};

// Cell identity is derived from the cell's values rather than its grid
// position, so a cell re-run in isolation reproduces the full run exactly.
std::uint64_t cell_key(int n, double alpha_true, double lambda_true) {
  std::uint64_t k = mix_bits(static_cast<std::uint64_t>(n));
  k = mix_bits(k ^ std::bit_cast<std::uint64_t>(alpha_true));
  k = mix_bits(k ^ std::bit_cast<std::uint64_t>(lambda_true));
  return k;
}

Replication run_replication(const SimConfig& cfg, int n, double alpha_true,
                            double lambda_true, int replication) {
  Replication rep;
  RandomStream rng(mix_seed(cfg.base_seed, cell_key(n, alpha_true, lambda_true),
                            static_cast<std::uint64_t>(replication)));
  try {
    const GEParams truth(alpha_true, lambda_true);
    Dataset data(ge_sample(truth, static_cast<std::size_t>(n), rng));

    const MleFit mle = fit_mle(data);
    if (!mle.converged) return rep;

    const PosteriorSample sample =
        sample_posterior(data, cfg.prior, cfg.r, cfg.posterior_draws, rng);
    rep.bayes_alpha = point_estimate(sample.alphas, cfg.estimator);
    rep.bayes_lambda = point_estimate(sample.lambdas, cfg.estimator);
    rep.mle_alpha = mle.alpha_hat;
    rep.mle_lambda = mle.lambda_hat;
    rep.ok = true;
  } catch (const std::exception&) {
    // counted as a failed replication; the pair is excluded from both
    // estimators' aggregates
    rep.ok = false;
  }
  return rep;
}

std::string g10(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace

std::vector<SimCellResult> run_simulation(const SimConfig& cfg) {
  if (cfg.n_grid.empty() || cfg.alpha_grid.empty() || cfg.lambda_grid.empty()) {
    throw std::invalid_argument("run_simulation: empty grid");
  }
  for (int n : cfg.n_grid) {
    if (n < 2) throw std::invalid_argument("run_simulation: n must be at least 2");
  }
  if (cfg.replications < 1 || cfg.posterior_draws < 1) {
    throw std::invalid_argument("run_simulation: N and M must be at least 1");
  }

  const int hw = static_cast<int>(std::thread::hardware_concurrency());
  const int threads =
      std::max(1, std::min(cfg.threads > 0 ? cfg.threads : (hw > 0 ? hw : 1),
                           cfg.replications));

  std::vector<SimCellResult> results;
  for (int n : cfg.n_grid) {
    for (double alpha_true : cfg.alpha_grid) {
      for (double lambda_true : cfg.lambda_grid) {
        std::vector<Replication> reps(static_cast<std::size_t>(cfg.replications));
        if (threads == 1) {
          for (int j = 0; j < cfg.replications; ++j) {
            reps[static_cast<std::size_t>(j)] =
                run_replication(cfg, n, alpha_true, lambda_true, j);
          }
        } else {
          std::atomic<int> next{0};
          std::vector<std::thread> pool;
          pool.reserve(static_cast<std::size_t>(threads));
          for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&]() {
              for (int j = next.fetch_add(1); j < cfg.replications;
                   j = next.fetch_add(1)) {
                reps[static_cast<std::size_t>(j)] =
                    run_replication(cfg, n, alpha_true, lambda_true, j);
              }
            });
          }
          for (auto& th : pool) th.join();
        }

        // aggregate in replication order
        std::vector<double> ba, bl, ma, ml;
        for (const Replication& rep : reps) {
          if (!rep.ok) continue;
          ba.push_back(rep.bayes_alpha);
          bl.push_back(rep.bayes_lambda);
          ma.push_back(rep.mle_alpha);
          ml.push_back(rep.mle_lambda);
        }
        SimCellResult cell;
        cell.n = n;
        cell.alpha_true = alpha_true;
        cell.lambda_true = lambda_true;
        cell.failures = cfg.replications - static_cast<int>(ba.size());
        if (!ba.empty()) {
          cell.bayes_alpha = scaled_errors(ba, alpha_true);
          cell.mle_alpha = scaled_errors(ma, alpha_true);
          cell.bayes_lambda = scaled_errors(bl, lambda_true);
          cell.mle_lambda = scaled_errors(ml, lambda_true);
        } else {
          cell.bayes_alpha = cell.mle_alpha = cell.bayes_lambda = cell.mle_lambda =
              ScaledErrors{0.0, 0.0};
        }
        results.push_back(cell);
      }
    }
  }
  return results;
}

std::string simulation_csv(const std::vector<SimCellResult>& results) {
  std::ostringstream os;
  os << "n,alpha_true,lambda_true,sbias_bayes_alpha,srmse_bayes_alpha,"
        "sbias_mle_alpha,srmse_mle_alpha,sbias_bayes_lambda,srmse_bayes_lambda,"
        "sbias_mle_lambda,srmse_mle_lambda,failures\n";
  for (const SimCellResult& c : results) {
    os << c.n << ',' << g10(c.alpha_true) << ',' << g10(c.lambda_true) << ','
       << g10(c.bayes_alpha.sbias) << ',' << g10(c.bayes_alpha.srmse) << ','
       << g10(c.mle_alpha.sbias) << ',' << g10(c.mle_alpha.srmse) << ','
       << g10(c.bayes_lambda.sbias) << ',' << g10(c.bayes_lambda.srmse) << ','
       << g10(c.mle_lambda.sbias) << ',' << g10(c.mle_lambda.srmse) << ','
       << c.failures << "\n";
  }
  return os.str();
}

}  // namespace gebayes
