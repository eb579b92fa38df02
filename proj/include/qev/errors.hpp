#pragma once

#include <stdexcept>
#include <string>

namespace qev {

/// A series or quadrature failed to meet its convergence criterion.
class NonConvergence : public std::runtime_error {
 public:
  explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// A truncated Fock expansion lost more norm than allowed.
class TruncationError : public std::runtime_error {
 public:
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qev
