#pragma once

#include <stdexcept>
#include <string>

namespace topoadv {

/// A configurable resource limit was hit. Never silently truncates.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally invalid argument (bad complex, bad graph, bad word...).
struct InvalidInput : std::invalid_argument {
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// An input configuration was supplied that lies outside the condition;
/// distinct from a word merely not being admitted.
struct InputOutsideCondition : std::domain_error {
  explicit InputOutsideCondition(const std::string& what) : std::domain_error(what) {}
};

}  // namespace topoadv
