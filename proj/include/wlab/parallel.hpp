#pragma once

// OpenMP drivers that fan a per-prime computation out over threads, each with a serial twin
// used as the reference in tests and benchmarks. Results always come back in input order.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "wlab/congruence.hpp"
#include "wlab/report.hpp"
#include "wlab/search.hpp"

namespace wlab {

// Runs body(i) for i in [0, n) on `workers` OpenMP threads; the lowest-index exception is rethrown.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& body);

std::vector<int> indicator_sweep_serial(SearchKind kind, std::span<const std::uint64_t> primes,
                                        Backend policy = Backend::Auto);
std::vector<int> indicator_sweep_parallel(SearchKind kind, std::span<const std::uint64_t> primes, int workers,
                                          Backend policy = Backend::Auto);

// Reports ordered by (prime, registry order). `names` must already be resolved.
std::vector<CongruenceReport> verify_range_serial(std::span<const std::uint64_t> primes,
                                                  const std::vector<std::string>& names,
                                                  const SuiteOptions& options = {},
                                                  Backend policy = Backend::Auto);
std::vector<CongruenceReport> verify_range_parallel(std::span<const std::uint64_t> primes,
                                                    const std::vector<std::string>& names, int workers,
                                                    const SuiteOptions& options = {},
                                                    Backend policy = Backend::Auto);

}  // namespace wlab
