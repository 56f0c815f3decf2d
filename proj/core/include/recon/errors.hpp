#pragma once

#include <stdexcept>

namespace recon {

/// Raised when a requested computation exceeds the configured enumeration
/// budget; callers distinguish this from genuine verification failures.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace recon
