#include "gebayes/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "gebayes/errors.hpp"

namespace gebayes {

Dataset::Dataset(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 2) {
    throw std::invalid_argument("Dataset: at least 2 observations are required");
  }
  for (double v : values_) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("Dataset: observations must be positive and finite");
    }
  }
  const auto [mn, mx] = std::minmax_element(values_.begin(), values_.end());
  if (*mn == *mx) {
    throw std::invalid_argument("Dataset: observations must not all be equal");
  }
  log_values_.reserve(values_.size());
  for (double v : values_) {
    sum_ += v;
    log_values_.push_back(std::log(v));
  }
  min_log_value_ = *std::min_element(log_values_.begin(), log_values_.end());
}

const Dataset& Dataset::bearings() {
  static const Dataset data(std::vector<double>{
      17.88,  28.92,  33.00,  41.52,  42.12,  45.60,  48.40,  51.84,
      51.96,  54.12,  55.56,  67.80,  68.64,  68.64,  68.88,  84.12,
      93.12,  98.64,  105.12, 105.84, 127.92, 128.04, 173.40});
  return data;
}

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

Dataset load_dataset(const std::string& source) {
  if (source == "bearings") return Dataset::bearings();

  std::ifstream in(source);
  if (!in) {
    throw parse_error("cannot open data file '" + source + "'");
  }
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    char* end = nullptr;
    const double v = std::strtod(body.c_str(), &end);
    if (end == body.c_str() || *end != '\0') {
      throw parse_error(source + ": line " + std::to_string(line_no) +
                        ": cannot parse '" + body + "' as a number");
    }
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw parse_error(source + ": line " + std::to_string(line_no) +
                        ": value must be positive and finite");
    }
    values.push_back(v);
  }
  return Dataset(std::move(values));
}

}  // namespace gebayes
