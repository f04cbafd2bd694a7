#pragma once

#include <stdexcept>
#include <string>

namespace pkm {

/// Violated operation precondition (maps to CLI exit code 2).
struct PreconditionError : std::invalid_argument {
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Conic solver failure that is not a clean infeasibility verdict (CLI exit code 3).
struct SolverError : std::runtime_error {
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

/// A constructive routine could not meet its stated guarantee.
struct ConstructionError : std::runtime_error {
  explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw PreconditionError(msg);
}

}  // namespace detail
}  // namespace pkm
