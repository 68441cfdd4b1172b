#pragma once

#include <stdexcept>
#include <string>

namespace cbirk {

/// Bad arguments: out-of-range letters, malformed permutations, non-reduced
/// words where a reduced one is required.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotSingleton : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A vector outside the projected affine span.
class InconsistentProjection : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// An enumeration would exceed its configured size limit.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A checked identity failed. `detail` holds a JSON diagnostic.
class TheoremViolation : public std::runtime_error {
 public:
  TheoremViolation(const std::string& what, std::string detail)
      : std::runtime_error(what), detail_(std::move(detail)) {}
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
};

}  // namespace cbirk
