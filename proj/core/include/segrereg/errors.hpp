#ifndef SEGREREG_ERRORS_HPP
#define SEGREREG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace segrereg {

/// Raised when an input violates a structural hypothesis of the regularity
/// formulas (depth too small, more than one non-foldable dimension-1 factor).
/// Callers distinguish these from plain bad input: the data is well formed,
/// the theory just does not cover it.
class hypothesis_error : public std::runtime_error {
public:
  explicit hypothesis_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a computation would enumerate more than 2^cap subsets.
class cap_exceeded_error : public std::invalid_argument {
public:
  explicit cap_exceeded_error(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace segrereg

#endif
