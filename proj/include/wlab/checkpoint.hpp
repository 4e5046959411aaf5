#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "wlab/search.hpp"

namespace wlab {

inline constexpr int kCheckpointSchema = 1;

struct Checkpoint {
  int schema_version = kCheckpointSchema;
  SearchKind kind = SearchKind::Wolstenholme;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::uint64_t last_completed_prime = 0;  // 0: nothing done yet
  bool completed = false;
  std::vector<SearchHit> hits;
  std::string updated_at;  // UTC, ISO 8601
};

std::string checkpoint_to_json(const Checkpoint& c);
// CheckpointCorrupt on malformed JSON, a missing or mistyped field, or an unknown schema.
Checkpoint checkpoint_from_json(const std::string& text);

// Writes `path`.tmp, then renames it over `path`.
void save_checkpoint(const std::filesystem::path& path, Checkpoint c);
Checkpoint load_checkpoint(const std::filesystem::path& path);

// $WLAB_CHECKPOINT_DIR/<kind>-<lo>-<hi>.json, or the same name in the working directory.
std::filesystem::path default_checkpoint_path(SearchKind kind, std::uint64_t lo, std::uint64_t hi);

std::string utc_timestamp();

}  // namespace wlab
