#include "wlab/search.hpp"

#include <algorithm>
#include <variant>

#include "wlab/checkpoint.hpp"
#include "wlab/congruence.hpp"
#include "wlab/error.hpp"
#include "wlab/kernels.hpp"
#include "wlab/parallel.hpp"
#include "wlab/sieve.hpp"

namespace wlab {

const char* to_string(SearchKind k) { return k == SearchKind::Wolstenholme ? "wolstenholme" : "mod_p8"; }

SearchKind parse_search_kind(const std::string& s) {
  if (s == "wolstenholme") return SearchKind::Wolstenholme;
  if (s == "mod_p8" || s == "mod-p8") return SearchKind::ModP8;
  throw Error(ErrorCode::InvalidInput, "unknown search kind '" + s + "'");
}

void SearchTask::validate() const {
  if (lo < 5 || lo >= hi) throw Error(ErrorCode::InvalidInput, "search range must satisfy 5 <= lo < hi");
  if (kind == SearchKind::ModP8 && lo < 7) throw Error(ErrorCode::InvalidInput, "mod-p8 search starts at 7");
  if (hi > (std::uint64_t{1} << 63)) throw Error(ErrorCode::InvalidInput, "upper bound above 2^63");
  if (chunk < 1) throw Error(ErrorCode::InvalidInput, "chunk must be >= 1");
}

namespace {

template <class Kernel>
int scaled_valuation(std::uint64_t p, int exponent, Backend policy, Kernel kernel) {
  const BigInt pb = from_u64(p);
  const AnyArith arith = make_arith(pow_big(pb, static_cast<unsigned long>(exponent)), policy);
  return std::visit([&](const auto& a) { return valuation(a.to_big(kernel(a)), pb, exponent); }, arith);
}

}  // namespace

int wolstenholme_indicator(std::uint64_t p, Backend policy) {
  if (p < 5) throw Error(ErrorCode::InvalidInput, "wolstenholme indicator needs p >= 5");
  const int v = scaled_valuation(p, 3, policy, [p](const auto& a) { return kernels::paired_harmonic_numerator(a, p); });
  return std::min(4, v + 1);
}

int mod_p8_indicator(std::uint64_t p, Backend policy) {
  if (p < 7) throw Error(ErrorCode::InvalidInput, "mod-p8 indicator needs p >= 7");
  return scaled_valuation(p, 9, policy, [p](const auto& a) { return kernels::theorem_residual_numerator(a, p); });
}

int indicator(SearchKind kind, std::uint64_t p, Backend policy) {
  return kind == SearchKind::Wolstenholme ? wolstenholme_indicator(p, policy) : mod_p8_indicator(p, policy);
}

bool is_hit(SearchKind kind, int v) { return kind == SearchKind::Wolstenholme ? v >= 3 : v >= 8; }

SearchHit confirm_hit(SearchKind kind, std::uint64_t p, int indicator_value, Backend policy) {
  SearchHit hit{p, kind, indicator_value, 0};
  const BigInt pb = from_u64(p);
  if (kind == SearchKind::Wolstenholme) {
    const Residue b = binom_central(pb, 5, policy);
    hit.recheck = (b - b.ring().one()).valuation();
    if (hit.recheck < 4) {
      throw Error(ErrorCode::InternalInconsistency, "R_1 indicator and binomial disagree at p = " + std::to_string(p));
    }
  } else {
    hit.recheck = check_theorem_main(pb, 8).residual_valuation;
    if (hit.recheck != indicator_value) {
      throw Error(ErrorCode::InternalInconsistency, "mod-p8 indicator and suite disagree at p = " + std::to_string(p));
    }
  }
  return hit;
}

namespace {

SearchResult continue_search(const SearchTask& task, Checkpoint state, const SearchOptions& options) {
  SearchResult result;
  result.hits = state.hits;
  result.last_completed_prime = state.last_completed_prime;
  if (state.completed) {
    result.completed = true;
    return result;
  }
  const std::uint64_t start = std::max(task.lo, state.last_completed_prime + 1);
  const auto primes = start <= task.hi ? primes_in(start, task.hi) : std::vector<std::uint64_t>{};

  SearchProgress progress;
  progress.primes_total = primes.size();
  progress.last_completed_prime = state.last_completed_prime;
  progress.hits = result.hits.size();

  auto persist = [&] {
    if (task.checkpoint_path) save_checkpoint(*task.checkpoint_path, state);
  };

  for (std::size_t begin = 0; begin < primes.size(); begin += task.chunk) {
    if (options.stop && options.stop->load()) return result;
    const std::size_t end = std::min(primes.size(), begin + task.chunk);
    const std::span<const std::uint64_t> chunk(primes.data() + begin, end - begin);
    const auto values = options.workers <= 1 ? indicator_sweep_serial(task.kind, chunk, options.policy)
                                             : indicator_sweep_parallel(task.kind, chunk, options.workers, options.policy);
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      if (!is_hit(task.kind, values[i])) continue;
      const SearchHit hit = confirm_hit(task.kind, chunk[i], values[i], options.policy);
      result.hits.push_back(hit);
      state.hits.push_back(hit);
      if (options.on_hit) options.on_hit(hit);
    }
    state.last_completed_prime = chunk.back();
    result.last_completed_prime = chunk.back();
    persist();
    progress.primes_done = end;
    progress.last_completed_prime = chunk.back();
    progress.hits = result.hits.size();
    if (options.on_progress) options.on_progress(progress);
  }
  state.completed = true;
  result.completed = true;
  persist();
  return result;
}

}  // namespace

SearchResult run_search(const SearchTask& task, const SearchOptions& options) {
  task.validate();
  Checkpoint fresh;
  fresh.kind = task.kind;
  fresh.lo = task.lo;
  fresh.hi = task.hi;
  return continue_search(task, std::move(fresh), options);
}

SearchResult resume(const std::filesystem::path& checkpoint_path, const SearchOptions& options,
                    const std::optional<SearchTask>& expected) {
  Checkpoint state = load_checkpoint(checkpoint_path);
  SearchTask task;
  task.kind = state.kind;
  task.lo = state.lo;
  task.hi = state.hi;
  task.checkpoint_path = checkpoint_path;
  if (expected) {
    if (expected->kind != state.kind || expected->lo != state.lo || expected->hi != state.hi) {
      throw Error(ErrorCode::TaskMismatch, "checkpoint describes a " + std::string(to_string(state.kind)) + " search over [" +
                                               std::to_string(state.lo) + ", " + std::to_string(state.hi) + "]");
    }
    task.chunk = expected->chunk;
  }
  try {
    task.validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::CheckpointCorrupt, std::string("stored task is invalid: ") + e.what());
  }
  const bool position_ok = state.last_completed_prime == 0 ||
                           (state.last_completed_prime >= state.lo && state.last_completed_prime <= state.hi);
  const bool hits_ok = std::all_of(state.hits.begin(), state.hits.end(), [&](const SearchHit& h) {
    return h.kind == state.kind && h.p >= state.lo && h.p <= state.last_completed_prime;
  });
  if (!position_ok || !hits_ok) throw Error(ErrorCode::CheckpointCorrupt, "checkpoint progress is inconsistent");
  return continue_search(task, std::move(state), options);
}

}  // namespace wlab
