#pragma once

#include <stdexcept>
#include <string>

namespace laplace2sq {

// Raised when an operation would exceed its scan/enumeration budget.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace laplace2sq
