#pragma once

// Self-checks exposed through `mthv verify`. Each suite recomputes an
// identity by two routes over a finite window and reports the first mismatch.

#include <cstdint>
#include <string>
#include <vector>

#include "mthv/half_int.hpp"

namespace mthv {

struct SuiteOptions {
  std::uint64_t seed = 1;
  /// Truncation used by the membership and codimension suites.
  HalfInt level_cap = HalfInt::integer(2);
  HalfInt shift_cap = HalfInt::integer(2);
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::string detail;  // first failure, empty on success
};

/// jacobi, module, rho, membership, codim, shift
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace mthv
