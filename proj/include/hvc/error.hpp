#pragma once

#include <stdexcept>
#include <string>

namespace hvc {

/// Raised for contract violations and numerical failures. The message is the
/// stable diagnostic (e.g. "point outside domain").
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hvc
