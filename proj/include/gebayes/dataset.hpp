#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gebayes {

// Ordered collection of strictly positive observations with cached
// sufficient statistics. Requires n >= 2 and at least two distinct values.
class Dataset {
 public:
  explicit Dataset(std::vector<double> values);

  // Built-in ball bearing endurance data (n = 23, millions of revolutions).
  static const Dataset& bearings();

  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double sum() const noexcept { return sum_; }
  const std::vector<double>& log_values() const noexcept { return log_values_; }
  double min_log_value() const noexcept { return min_log_value_; }

 private:
  std::vector<double> values_;
  std::vector<double> log_values_;
  double sum_ = 0.0;
  double min_log_value_ = 0.0;
};

// Loads a dataset from a text file (one positive decimal per line, blank
// lines and '#' comments skipped) or from a built-in name ("bearings").
Dataset load_dataset(const std::string& source);

}  // namespace gebayes
