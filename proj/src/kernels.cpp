#include "wlab/kernels.hpp"

namespace wlab::kernels {

std::vector<std::uint32_t> smallest_prime_factors(std::uint64_t limit) {
  std::vector<std::uint32_t> spf(limit, 0);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t k = 2; k < limit; ++k) {
    if (spf[k] == 0) {
      spf[k] = static_cast<std::uint32_t>(k);
      primes.push_back(static_cast<std::uint32_t>(k));
    }
    for (std::uint32_t q : primes) {
      if (q > spf[k] || k * q >= limit) break;
      spf[k * q] = q;
    }
  }
  return spf;
}

}  // namespace wlab::kernels
