#pragma once

#include <cstdint>
#include <vector>

namespace wlab {

// Primes in [lo, hi], ascending. Segmented Eratosthenes while sqrt(hi) is small enough to
// sieve with; per-candidate Miller-Rabin for narrow windows high up. Requires lo <= hi <= 2^63.
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

}  // namespace wlab
