#pragma once

#include <stdexcept>
#include <string>

namespace adel {

/// Raised for violated preconditions: endpoint mismatches, unknown names,
/// invalid certificates, malformed input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace adel
