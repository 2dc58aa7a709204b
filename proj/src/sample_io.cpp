#include "gebayes/sample_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "gebayes/diagnostics.hpp"
#include "gebayes/errors.hpp"

namespace gebayes {

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double(const std::string& text, const std::string& where) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0') {
    throw parse_error(where + ": cannot parse '" + text + "' as a number");
  }
  return v;
}

const std::vector<double> kQuantileProbs = {0.01, 0.025, 0.05, 0.25, 0.5,
                                            0.75, 0.95,  0.975, 0.99};

ChainSummary summarize_chain(std::span<const double> chain) {
  ChainSummary s;
  double mean = 0.0;
  for (double v : chain) mean += v;
  mean /= static_cast<double>(chain.size());
  double var = 0.0;
  for (double v : chain) var += (v - mean) * (v - mean);
  var /= static_cast<double>(chain.size() > 1 ? chain.size() - 1 : 1);
  s.mean = mean;
  s.sd = std::sqrt(var);
  s.quantile_probs = kQuantileProbs;
  for (double q : kQuantileProbs) s.quantiles.push_back(sample_quantile(chain, q));
  return s;
}

}  // namespace

void write_sample_file(const std::filesystem::path& path, const PosteriorSample& sample) {
  std::ofstream out(path);
  if (!out) {
    throw parse_error("cannot open '" + path.string() + "' for writing");
  }
  out << "# seed=" << sample.seed << "\n";
  out << "# r=" << g17(sample.r) << "\n";
  out << "# M=" << sample.lambdas.size() << "\n";
  out << "# a=" << g17(sample.prior.a) << "\n";
  out << "# b=" << g17(sample.prior.b) << "\n";
  out << "# acceptance_rate=" << g17(sample.acceptance_rate) << "\n";
  out << "alpha,lambda\n";
  for (std::size_t i = 0; i < sample.lambdas.size(); ++i) {
    out << g17(sample.alphas[i]) << ',' << g17(sample.lambdas[i]) << "\n";
  }
  if (!out) {
    throw parse_error("failed while writing '" + path.string() + "'");
  }
}

PosteriorSample read_sample_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw parse_error("cannot open sample file '" + path.string() + "'");
  }
  const std::string name = path.string();
  std::map<std::string, std::string> meta;
  std::string line;
  std::size_t line_no = 0;
  bool saw_header = false;

  PosteriorSample sample;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string where = name + ": line " + std::to_string(line_no);
    if (line.front() == '#') {
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        throw parse_error(where + ": metadata line without '='");
      }
      std::string key = line.substr(1, eq - 1);
      key.erase(0, key.find_first_not_of(' '));
      key.erase(key.find_last_not_of(' ') + 1);
      meta[key] = line.substr(eq + 1);
      continue;
    }
    if (!saw_header) {
      if (line != "alpha,lambda") {
        throw parse_error(where + ": expected header 'alpha,lambda', got '" + line + "'");
      }
      saw_header = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw parse_error(where + ": expected 'alpha,lambda' pair");
    }
    const double alpha = parse_double(line.substr(0, comma), where);
    const double lambda = parse_double(line.substr(comma + 1), where);
    if (!std::isfinite(alpha) || !std::isfinite(lambda) || alpha <= 0.0 ||
        lambda <= 0.0) {
      throw parse_error(where + ": draws must be positive and finite");
    }
    sample.alphas.push_back(alpha);
    sample.lambdas.push_back(lambda);
  }
  if (!saw_header) {
    throw parse_error(name + ": missing 'alpha,lambda' header");
  }
  for (const char* key : {"seed", "r", "M", "a", "b", "acceptance_rate"}) {
    if (!meta.count(key)) {
      throw parse_error(name + ": missing metadata line '# " + std::string(key) + "=...'");
    }
  }
  const auto m = static_cast<std::size_t>(parse_double(meta["M"], name + ": M"));
  if (m != sample.lambdas.size()) {
    throw parse_error(name + ": M=" + meta["M"] + " but found " +
                      std::to_string(sample.lambdas.size()) + " draws");
  }
  sample.seed = static_cast<std::uint64_t>(parse_double(meta["seed"], name + ": seed"));
  sample.r = parse_double(meta["r"], name + ": r");
  sample.prior.a = parse_double(meta["a"], name + ": a");
  sample.prior.b = parse_double(meta["b"], name + ": b");
  sample.acceptance_rate = parse_double(meta["acceptance_rate"], name + ": acceptance_rate");
  return sample;
}

SampleDiagnostics diagnose_sample(const PosteriorSample& sample, std::size_t max_lag) {
  SampleDiagnostics d;
  d.geweke_z_alpha = geweke_z(sample.alphas);
  d.geweke_z_lambda = geweke_z(sample.lambdas);
  d.acf_alpha = acf(sample.alphas, max_lag);
  d.acf_lambda = acf(sample.lambdas, max_lag);
  d.alpha = summarize_chain(sample.alphas);
  d.lambda = summarize_chain(sample.lambdas);
  return d;
}

std::string sample_diagnostics_text(const SampleDiagnostics& d) {
  std::ostringstream os;
  os.precision(6);
  os << "geweke_z_alpha = " << d.geweke_z_alpha
     << ", geweke_z_lambda = " << d.geweke_z_lambda << "\n\n";
  os << "chain    mean        sd\n";
  os << "alpha    " << d.alpha.mean << "    " << d.alpha.sd << "\n";
  os << "lambda   " << d.lambda.mean << "    " << d.lambda.sd << "\n\n";
  os << "quantile   alpha       lambda\n";
  for (std::size_t i = 0; i < d.alpha.quantile_probs.size(); ++i) {
    os << d.alpha.quantile_probs[i] << "      " << d.alpha.quantiles[i] << "    "
       << d.lambda.quantiles[i] << "\n";
  }
  os << "\nlag   acf_alpha   acf_lambda\n";
  for (std::size_t k = 0; k < d.acf_alpha.size(); ++k) {
    os << k << "   " << d.acf_alpha[k] << "   " << d.acf_lambda[k] << "\n";
  }
  return os.str();
}

std::string sample_diagnostics_json(const SampleDiagnostics& d) {
  nlohmann::json j;
  j["geweke_z_alpha"] = d.geweke_z_alpha;
  j["geweke_z_lambda"] = d.geweke_z_lambda;
  j["acf_alpha"] = d.acf_alpha;
  j["acf_lambda"] = d.acf_lambda;
  for (const auto* chain : {&d.alpha, &d.lambda}) {
    nlohmann::json c;
    c["mean"] = chain->mean;
    c["sd"] = chain->sd;
    c["quantile_probs"] = chain->quantile_probs;
    c["quantiles"] = chain->quantiles;
    j[chain == &d.alpha ? "alpha" : "lambda"] = c;
  }
  return j.dump(2) + "\n";
}

std::string acf_table_csv(const SampleDiagnostics& d) {
  std::ostringstream os;
  os << "lag,acf_alpha,acf_lambda\n";
  for (std::size_t k = 0; k < d.acf_alpha.size(); ++k) {
    os << k << ',' << g17(d.acf_alpha[k]) << ',' << g17(d.acf_lambda[k]) << "\n";
  }
  return os.str();
}

}  // namespace gebayes
