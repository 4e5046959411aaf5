#pragma once

// Range searches over primes: Wolstenholme primes (R_1 = 0 mod p^3) and primes for which the
// main congruence survives to p^8. Work is split into chunks of consecutive primes; each chunk
// is evaluated in parallel, merged in ascending order and checkpointed before the next one.

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wlab/montgomery.hpp"

namespace wlab {

enum class SearchKind { Wolstenholme, ModP8 };

const char* to_string(SearchKind k);
// Accepts "wolstenholme", "mod_p8" and "mod-p8".
SearchKind parse_search_kind(const std::string& s);

inline constexpr std::size_t kDefaultChunk = 256;

struct SearchTask {
  SearchKind kind = SearchKind::Wolstenholme;
  std::uint64_t lo = 5;
  std::uint64_t hi = 5;
  std::size_t chunk = kDefaultChunk;
  std::optional<std::filesystem::path> checkpoint_path;

  // InvalidInput unless 5 <= lo < hi and chunk >= 1 (and lo >= 7 for mod-p8).
  void validate() const;
};

struct SearchHit {
  std::uint64_t p = 0;
  SearchKind kind = SearchKind::Wolstenholme;
  // wolstenholme: v_p(R_1) saturated at 4. mod-p8: residual valuation of the main congruence in
  // Z/p^9.
  int indicator = 0;
  // Independent re-check. wolstenholme: v_p(C(2p-1,p-1) - 1) in Z/p^5. mod-p8: residual of the
  // registry's thm1.1 check at exponent 8.
  int recheck = 0;

  bool operator==(const SearchHit&) const = default;
};

// v_p(R_1) saturated at 4. Hit when >= 3. Requires p >= 5. Evaluated as 1 + v_p(S) for the
// paired sum S = R_1 / p, which only needs Z/p^3.
int wolstenholme_indicator(std::uint64_t p, Backend policy = Backend::Auto);

// v_p(C(2p-1,p-1) - 1 + 2p H_1 - 4p^2 H_2) in Z/p^9, saturated at 9. Hit when >= 8. Requires p >= 7.
int mod_p8_indicator(std::uint64_t p, Backend policy = Backend::Auto);

int indicator(SearchKind kind, std::uint64_t p, Backend policy = Backend::Auto);
bool is_hit(SearchKind kind, int indicator_value);
// Builds the hit record, running the re-check. InternalInconsistency if the re-check disagrees.
SearchHit confirm_hit(SearchKind kind, std::uint64_t p, int indicator_value, Backend policy = Backend::Auto);

struct SearchProgress {
  std::uint64_t last_completed_prime = 0;
  std::size_t primes_done = 0;
  std::size_t primes_total = 0;
  std::size_t hits = 0;
};

struct SearchOptions {
  int workers = 1;
  Backend policy = Backend::Auto;
  // Polled between chunks; a set flag ends the run after the current checkpoint.
  const std::atomic<bool>* stop = nullptr;
  std::function<void(const SearchProgress&)> on_progress;
  std::function<void(const SearchHit&)> on_hit;
};

struct SearchResult {
  std::vector<SearchHit> hits;
  std::uint64_t last_completed_prime = 0;
  bool completed = false;
};

SearchResult run_search(const SearchTask& task, const SearchOptions& options = {});

// Continues the task stored at `checkpoint_path`, writing further checkpoints to the same file.
// With `expected`, the stored kind and bounds must match it (TaskMismatch otherwise).
SearchResult resume(const std::filesystem::path& checkpoint_path, const SearchOptions& options = {},
                    const std::optional<SearchTask>& expected = std::nullopt);

}  // namespace wlab
