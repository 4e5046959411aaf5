#pragma once

#include <cstdint>

#include "wlab/bigint.hpp"

namespace wlab {

// Deterministic Miller-Rabin for n < 3.3e14 (bases 2..17), exact for all 64-bit n with the
// 7-base Jaeschke/Sinclair set. Larger inputs go through GMP's BPSW-backed test.
bool is_prime_u64(std::uint64_t n);
bool is_prime(const BigInt& n);

}  // namespace wlab
