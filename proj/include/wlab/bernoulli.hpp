#pragma once

// Bernoulli numbers: exact rationals for small indices, and B_n mod p^r for indices far too
// large to write down, via power-sum extraction plus Kummer index reduction.

#include "wlab/bigint.hpp"
#include "wlab/modring.hpp"
#include "wlab/report.hpp"

namespace wlab {

inline constexpr long kExactBernoulliCap = 2000;

struct ExactBernoulli {
  long index;
  Rational value;
};

// Memoized, thread-safe. B_1 = -1/2. CapExceeded beyond `cap`.
ExactBernoulli exact_bernoulli(long n, long cap = kExactBernoulliCap);

// prod of primes q with (q - 1) | n, for even n >= 2 (von Staudt-Clausen).
BigInt vsc_denominator(long n);

struct KummerRepresentative {
  BigInt representative;  // least even n >= r + 1 with n = index mod p^(r-1)(p-1)
  bool congruent;         // index itself is >= r + 1, so B_index/index = B_n/n mod p^r
};

// IndexDivisible if (p - 1) | index; InvalidInput for odd index or r < 1.
KummerRepresentative kummer_reduce(const BigInt& index, const BigInt& p, int r);

struct BernoulliResidue {
  BigInt index;
  BigInt p;
  int r;
  Residue value;  // B_index mod p^r
};

// p * B_n mod p^R for any n >= 0. Always p-integral (von Staudt-Clausen); a unit exactly when
// (p - 1) | n. Uses the power-sum expansion
//   P_n = sum_{s=1}^{R} (1/s) C(n, s-1) p^s B_{n+1-s}  (mod p^R),   p >= R + 2.
Residue scaled_bernoulli(const BigInt& n, const PrimePowerRing& ring);

// B_n mod p^r extracted from P_n mod p^(r+1). Needs p >= 11, even n, (p - 1) not dividing n.
BernoulliResidue bernoulli_mod_small(const BigInt& n, const BigInt& p, int r);

// Same quantity from the two-term truncation P_n = p B_n + (p^3/6) n(n-1) B_{n-2} (mod p^5);
// r <= 4. Independent cross-check of the main path.
BernoulliResidue bernoulli_mod_two_term(const BigInt& n, const BigInt& p, int r);

enum class BernoulliMethod {
  Auto,        // exact oracle when index <= cap, otherwise Kummer + extraction
  Extraction,  // always Kummer + extraction
};

// B_index mod p^r for any index. Odd index >= 3 gives 0; index 0, 1 give 1, -1/2.
BernoulliResidue bernoulli_mod(const BigInt& index, const BigInt& p, int r,
                               BernoulliMethod method = BernoulliMethod::Auto);

enum class KummerCoefficients {
  Printed,    // C(m, k), as the lemma is usually quoted
  Corrected,  // C(r, k), the r-th finite difference, which is what Kummer's congruence gives
};

// sum_{k=0}^{r} (-1)^k C(., k) B_{m+k(p-1)} / (m+k(p-1)) in exact arithmetic; holds when its
// p-adic valuation is >= r. Report name "eq3.3-kummer" or "eq3.3-kummer-corrected".
CongruenceReport kummer_alternating_check(long m, const BigInt& p, int r,
                                          KummerCoefficients coeffs = KummerCoefficients::Printed);

}  // namespace wlab
