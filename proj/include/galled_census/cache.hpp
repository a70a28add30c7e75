#pragma once

#include <optional>
#include <string>

#include "galled_census/dup_trees.hpp"
#include "galled_census/one_component.hpp"

namespace galled {

inline constexpr int kCacheFormatVersion = 1;
inline constexpr const char* kEngineVersion = "galled-census 0.1.0";

// On-disk snapshot of the computed recurrence tables. JSON layout:
//   { "format_version": 1, "provenance": "...",
//     "n_table": { "2,0": "1", ... }, "b_table": { ... } }
// Values are decimal strings keyed by "n,k"; either table may be absent.
// Round-tripping reproduces the tables exactly.
struct CacheFile {
  std::optional<NTable> n_table;
  std::optional<BTable> b_table;
  std::string provenance = kEngineVersion;
};

// Throws std::runtime_error on malformed or version-mismatched files.
CacheFile load_cache(const std::string& path);

void save_cache(const std::string& path, const CacheFile& cache);

}  // namespace galled
