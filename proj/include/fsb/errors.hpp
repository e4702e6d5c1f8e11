#pragma once

#include <stdexcept>
#include <string>

namespace fsb {

/// Objects or morphisms that do not fit together (mismatched sizes,
/// non-composable pairs, out-of-range letters).
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A requested size exceeds a configured enumeration bound.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A check that must hold by construction failed. Seeing one of these means
/// the implementation (or the mathematics it encodes) is wrong.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised by the KL cache loader and the recursion-convention guard.
class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConventionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fsb
