#include "wlab/parallel.hpp"

#include <omp.h>

#include <exception>

#include "wlab/error.hpp"

namespace wlab {

void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& body) {
  if (workers < 1) throw Error(ErrorCode::InvalidInput, "workers must be >= 1");
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

namespace {

std::vector<CongruenceReport> reports_for(std::uint64_t p, const std::vector<std::string>& names,
                                          const SuiteOptions& options, Backend policy) {
  PrimeContext ctx(from_u64(p), policy);
  return run_suite(ctx, names, options);
}

std::vector<CongruenceReport> flatten(std::vector<std::vector<CongruenceReport>>& per_prime) {
  std::vector<CongruenceReport> out;
  for (auto& v : per_prime) {
    for (auto& r : v) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::vector<int> indicator_sweep_serial(SearchKind kind, std::span<const std::uint64_t> primes, Backend policy) {
  std::vector<int> out;
  out.reserve(primes.size());
  for (const auto p : primes) out.push_back(indicator(kind, p, policy));
  return out;
}

std::vector<int> indicator_sweep_parallel(SearchKind kind, std::span<const std::uint64_t> primes, int workers,
                                          Backend policy) {
  std::vector<int> out(primes.size());
  parallel_for(primes.size(), workers, [&](std::size_t i) { out[i] = indicator(kind, primes[i], policy); });
  return out;
}

std::vector<CongruenceReport> verify_range_serial(std::span<const std::uint64_t> primes,
                                                  const std::vector<std::string>& names,
                                                  const SuiteOptions& options, Backend policy) {
  std::vector<CongruenceReport> out;
  for (const auto p : primes) {
    for (auto& r : reports_for(p, names, options, policy)) out.push_back(std::move(r));
  }
  return out;
}

std::vector<CongruenceReport> verify_range_parallel(std::span<const std::uint64_t> primes,
                                                    const std::vector<std::string>& names, int workers,
                                                    const SuiteOptions& options, Backend policy) {
  std::vector<std::vector<CongruenceReport>> per_prime(primes.size());
  parallel_for(primes.size(), workers,
               [&](std::size_t i) { per_prime[i] = reports_for(primes[i], names, options, policy); });
  return flatten(per_prime);
}

}  // namespace wlab
