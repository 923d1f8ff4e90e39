#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eil {

/// Malformed input: loops, out-of-range ids, unparsable files.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact computation would exceed its configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The operation is defined only on a restricted domain (e.g. connected,
/// girth >= 5) and the argument lies outside it.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Two exact engines disagree, or a certified inequality failed. Always a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Size limits for the exponential algorithms.
///
/// `vertices` caps every graph search (matchings, covers, decomposability).
/// `subset` caps the number of (polarized) variables handed to the Hochster
/// enumeration. Masks are 64-bit, so neither may exceed 64.
struct Budget {
  std::size_t vertices = 24;
  std::size_t subset = 20;
  std::size_t edges = 64;
  std::size_t generators = 20000;

  /// Defaults overridden by EIL_BUDGET_VERTICES / EIL_BUDGET_SUBSET.
  static Budget from_environment();

  void require_vertices(std::size_t n, const char* what) const;
  void require_subset(std::size_t n, const char* what) const;
  void require_edges(std::size_t m, const char* what) const;
};

}  // namespace eil
