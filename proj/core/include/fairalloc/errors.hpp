#pragma once

#include <stdexcept>
#include <string>

namespace fairalloc {

// Input violates a model invariant or an operation precondition.
// The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// The operation is well-defined but not supported for this constraint kind or
// parameter regime (e.g. share computations on budget-constrained instances).
class UnsupportedError : public ValidationError {
 public:
  explicit UnsupportedError(const std::string& what) : ValidationError(what) {}
};

// The requested computation would exceed the configured state budget.  The
// message carries an exact size estimate.  The CLI maps this to exit code 3.
class ScaleRefusal : public std::runtime_error {
 public:
  ScaleRefusal(const std::string& what, std::string estimated_states)
      : std::runtime_error(what), estimated_states_(std::move(estimated_states)) {}

  // Decimal string: how many states the computation would have to visit.
  const std::string& estimated_states() const { return estimated_states_; }

 private:
  std::string estimated_states_;
};

}  // namespace fairalloc
