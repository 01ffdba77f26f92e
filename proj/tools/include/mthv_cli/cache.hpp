#pragma once

// On-disk cache of generators found per level of M(c,h,l). One JSON file per
// (c, h, l, level, format version); writes go through a temporary file and a
// rename so readers never see partial entries.

#include <filesystem>
#include <optional>
#include <ostream>
#include <vector>

#include "mthv/algebra.hpp"
#include "mthv/analysis.hpp"
#include "mthv/pbw.hpp"

namespace mthv::cli {

class SingularCache {
 public:
  static constexpr int kFormatVersion = 1;

  /// With recheck, every cached generator is re-verified to be singular
  /// modulo the ones before it; failures count as corrupt entries.
  SingularCache(std::filesystem::path dir, const Params& params, bool recheck, std::ostream& warn);

  std::filesystem::path entry_path(HalfInt level) const;

  std::optional<std::vector<UEAElement>> lookup(HalfInt level);
  void store(HalfInt level, const std::vector<UEAElement>& generators);

  /// Hooks for maximal_submodule_generators.
  void attach(SearchOptions& options);

  std::size_t hits() const { return hits_; }
  std::size_t stored() const { return stored_; }
  std::size_t rejected() const { return rejected_; }
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::optional<std::vector<UEAElement>> read(HalfInt level, std::string* problem) const;

  std::filesystem::path dir_;
  Params params_;
  bool recheck_;
  std::ostream& warn_;
  std::vector<UEAElement> so_far_;
  std::size_t hits_ = 0, stored_ = 0, rejected_ = 0;
};

}  // namespace mthv::cli
