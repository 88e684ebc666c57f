#ifndef VTUTTE_ERRORS_HPP
#define VTUTTE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vtutte {

/// Malformed tree, poset or polynomial text. `position()` is a 0-based
/// character offset for tree/polynomial input and a 1-based line number
/// for poset input.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// A brute-force routine was asked to run on an input larger than its
/// configured bound.
class OracleBoundError : public std::runtime_error {
public:
  OracleBoundError(const std::string& operation, std::size_t size, std::size_t bound)
      : std::runtime_error(operation + ": input size " + std::to_string(size) +
                           " exceeds oracle bound " + std::to_string(bound)),
        size_(size),
        bound_(bound) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t bound() const noexcept { return bound_; }

private:
  std::size_t size_;
  std::size_t bound_;
};

/// Numerical root finding failed (no sign change, non-finite values).
class SolverError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An internal identity that must hold exactly was violated.
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

inline constexpr std::size_t default_oracle_bound = 20;

} // namespace vtutte

#endif // VTUTTE_ERRORS_HPP
