#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace webperm {

/// Exact integer used for every count, coefficient and matrix entry.
using BigInt = boost::multiprecision::cpp_int;

/// Raised when a request exceeds a configured size or node cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace webperm
