#pragma once

#include <stdexcept>
#include <string>

namespace hup {

/// Base of every error raised by the library.  Callers that only need to
/// report failures can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the operation's domain (negative degree, empty fiber...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Nodes too close together to trust a solve or an elimination.
class IllConditionedError : public Error {
 public:
  IllConditionedError(const std::string& what, double min_gap)
      : Error(what + " (min node gap " + std::to_string(min_gap) + ")"),
        min_gap_(min_gap) {}
  double min_gap() const noexcept { return min_gap_; }

 private:
  double min_gap_;
};

/// h_c inverse requested below its minimum value.
class BelowMinimumError : public Error {
 public:
  using Error::Error;
};

/// Oscillatory quadrature refused: the phase would outrun the panel rule.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Witness requested from data that can only produce the zero measure.
class DegenerateWitnessError : public Error {
 public:
  using Error::Error;
};

/// Invalid witness support (gap around sqrt(h_min) or truncation radius).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

class CapExceededError : public Error {
 public:
  using Error::Error;
};

}  // namespace hup
