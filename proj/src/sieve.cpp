#include "wlab/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wlab/error.hpp"
#include "wlab/primality.hpp"

namespace wlab {

namespace {

constexpr std::uint64_t kSegment = 1u << 18;
// Beyond this square root the base-prime table stops paying for itself.
constexpr std::uint64_t kSieveRootLimit = 1u << 25;

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<std::uint32_t> base_primes(std::uint64_t limit) {
  std::vector<char> composite(limit + 1, 0);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw Error(ErrorCode::InvalidInput, "empty prime range");
  if (hi > (std::uint64_t{1} << 63)) throw Error(ErrorCode::InvalidInput, "upper bound above 2^63");
  lo = std::max<std::uint64_t>(lo, 2);
  std::vector<std::uint64_t> out;
  if (lo > hi) return out;

  const std::uint64_t root = isqrt(hi);
  if (root > kSieveRootLimit) {
    for (std::uint64_t n = lo;; ++n) {
      if (is_prime_u64(n)) out.push_back(n);
      if (n == hi) break;
    }
    return out;
  }

  const auto base = base_primes(root);
  std::vector<char> composite;
  for (std::uint64_t start = lo; start <= hi;) {
    const std::uint64_t end = std::min(hi, start + kSegment - 1);
    composite.assign(end - start + 1, 0);
    for (const std::uint64_t q : base) {
      if (q * q > end) break;
      std::uint64_t first = std::max(q * q, (start + q - 1) / q * q);
      for (std::uint64_t j = first; j <= end; j += q) composite[j - start] = 1;
    }
    for (std::uint64_t n = start; n <= end; ++n) {
      if (!composite[n - start]) out.push_back(n);
    }
    if (end == hi) break;
    start = end + 1;
  }
  return out;
}

}  // namespace wlab
