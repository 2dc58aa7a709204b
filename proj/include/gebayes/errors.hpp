#pragma once

#include <stdexcept>

namespace gebayes {

// Prior/sample-size conditions for a proper posterior are violated.
class propriety_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iterative numerical procedure could not meet its contract
// (unbracketed maximum, degenerate chain, rejection rate collapse, ...).
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file; the message carries the offending location.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gebayes
