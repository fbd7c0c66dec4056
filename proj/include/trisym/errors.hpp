#pragma once

#include <stdexcept>
#include <string>

namespace trisym {

// Bad or inconsistent input data (maps to CLI exit code 2).
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured resource budget was exceeded (maps to CLI exit code 3).
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace trisym
