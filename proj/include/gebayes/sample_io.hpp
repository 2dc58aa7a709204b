#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "gebayes/rou_sampler.hpp"

namespace gebayes {

// Sample file layout: '#'-prefixed metadata lines (seed, r, M, a, b,
// acceptance_rate), a header row "alpha,lambda", then one CSV row per draw.
void write_sample_file(const std::filesystem::path& path, const PosteriorSample& sample);

// Parses a file produced by write_sample_file; throws parse_error with the
// offending line on malformed input.
PosteriorSample read_sample_file(const std::filesystem::path& path);

struct ChainSummary {
  double mean;
  double sd;
  std::vector<double> quantile_probs;
  std::vector<double> quantiles;
};

// Diagnostics recomputed from stored draws: Geweke z, ACF table and quantile
// summaries. Pure function of the sample.
struct SampleDiagnostics {
  double geweke_z_alpha;
  double geweke_z_lambda;
  std::vector<double> acf_alpha;   // lags 0..max_lag
  std::vector<double> acf_lambda;
  ChainSummary alpha;
  ChainSummary lambda;
};

SampleDiagnostics diagnose_sample(const PosteriorSample& sample, std::size_t max_lag = 20);

std::string sample_diagnostics_text(const SampleDiagnostics& d);
std::string sample_diagnostics_json(const SampleDiagnostics& d);

// ACF table as CSV with header "lag,acf_alpha,acf_lambda".
std::string acf_table_csv(const SampleDiagnostics& d);

}  // namespace gebayes
