#pragma once

#include <stdexcept>
#include <string>

namespace mcc {

/// Malformed instance, out-of-range argument, or an algorithm applied
/// outside its domain (wrong dimension, C not a subset of V, ...).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A resource guard tripped (enumeration budget, rank-table memory).
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mcc
