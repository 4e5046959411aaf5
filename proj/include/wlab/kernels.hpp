#pragma once

// Per-prime O(p) loops, generic over the arithmetic engine. Each fast kernel has a
// straightforward *_reference twin that follows the textbook formula; tests pin them together.

#include <cstdint>
#include <span>
#include <vector>

#include "wlab/bigint.hpp"
#include "wlab/error.hpp"
#include "wlab/montgomery.hpp"

namespace wlab::kernels {

template <class A>
using Vec = std::vector<typename A::value_type>;

// Prefix-product inversion: one engine inversion plus 3(n-1) products.
template <class A>
Vec<A> batch_inverse(const A& arith, const BigInt& p, std::span<const typename A::value_type> items) {
  const std::size_t n = items.size();
  Vec<A> out(n);
  if (n == 0) return out;
  Vec<A> prefix(n);
  prefix[0] = items[0];
  for (std::size_t i = 1; i < n; ++i) prefix[i] = arith.mul(prefix[i - 1], items[i]);
  typename A::value_type acc;
  try {
    acc = arith.inverse(prefix[n - 1]);
  } catch (const Error&) {
    for (std::size_t i = 0; i < n; ++i) {
      if (mpz_divisible_p(arith.to_big(items[i]).get_mpz_t(), p.get_mpz_t())) {
        throw NotInvertibleError(i, "item " + std::to_string(i) + " is divisible by p");
      }
    }
    throw;
  }
  for (std::size_t i = n; i-- > 1;) {
    out[i] = arith.mul(acc, prefix[i - 1]);
    acc = arith.mul(acc, items[i]);
  }
  out[0] = acc;
  return out;
}

// 1/k for k = 1..p-1, stored at index k-1.
template <class A>
Vec<A> inverse_table(const A& arith, std::uint64_t p) {
  Vec<A> ks;
  ks.reserve(p - 1);
  auto k = arith.zero();
  const auto one = arith.one();
  for (std::uint64_t i = 1; i < p; ++i) {
    k = arith.add(k, one);
    ks.push_back(k);
  }
  return batch_inverse(arith, from_u64(p), std::span<const typename A::value_type>(ks));
}

// R_n = sum_k k^{-n} for n = 1..n_max, returned at index n-1.
template <class A>
Vec<A> inverse_power_sums(const A& arith, const Vec<A>& inv, int n_max) {
  Vec<A> sums(static_cast<std::size_t>(n_max), arith.zero());
  for (const auto& ik : inv) {
    auto pw = ik;
    for (int n = 0; n < n_max; ++n) {
      sums[n] = arith.add(sums[n], pw);
      if (n + 1 < n_max) pw = arith.mul(pw, ik);
    }
  }
  return sums;
}

// Coefficients 0..d of prod_{i<p} (1 + x/i), i.e. H_0 = 1, H_1, ..., H_d.
// Computed fraction-free as prod (i + x) scaled once by 1/(p-1)!.
template <class A>
Vec<A> symmetric_sums(const A& arith, std::uint64_t p, int d) {
  Vec<A> c(static_cast<std::size_t>(d) + 1, arith.zero());
  c[0] = arith.one();
  const auto one = arith.one();
  auto i_m = arith.zero();
  for (std::uint64_t i = 1; i < p; ++i) {
    i_m = arith.add(i_m, one);
    for (int j = d; j >= 1; --j) c[j] = arith.add(arith.mul(c[j], i_m), c[j - 1]);
    c[0] = arith.mul(c[0], i_m);
  }
  const auto scale = arith.inverse(c[0]);
  for (auto& cj : c) cj = arith.mul(cj, scale);
  return c;
}

template <class A>
Vec<A> symmetric_sums_reference(const A& arith, const Vec<A>& inv, int d) {
  Vec<A> c(static_cast<std::size_t>(d) + 1, arith.zero());
  c[0] = arith.one();
  for (const auto& ik : inv) {
    for (int j = d; j >= 1; --j) c[j] = arith.add(c[j], arith.mul(c[j - 1], ik));
  }
  return c;
}

// C(2p-1, p-1) = prod_{i<p} (p+i) / (p-1)!.
template <class A>
typename A::value_type central_binomial(const A& arith, std::uint64_t p) {
  const auto one = arith.one();
  const auto pm = arith.from_u64(p);
  auto num = one, den = one, i_m = arith.zero();
  for (std::uint64_t i = 1; i < p; ++i) {
    i_m = arith.add(i_m, one);
    num = arith.mul(num, arith.add(pm, i_m));
    den = arith.mul(den, i_m);
  }
  return arith.mul(num, arith.inverse(den));
}

// prod_{i<p} (1 + p/i) directly from the inverse table.
template <class A>
typename A::value_type central_binomial_reference(const A& arith, const Vec<A>& inv, std::uint64_t p) {
  const auto one = arith.one();
  const auto pm = arith.from_u64(p);
  auto acc = one;
  for (const auto& ik : inv) acc = arith.mul(acc, arith.add(one, arith.mul(pm, ik)));
  return acc;
}

// Smallest-prime-factor table on [0, limit).
std::vector<std::uint32_t> smallest_prime_factors(std::uint64_t limit);

// P_n = sum_{k<p} k^n. Exponent is reduced mod phi(p^e) (every k is a unit); k^n is
// completely multiplicative so only prime k need a full exponentiation.
template <class A>
typename A::value_type power_sum(const A& arith, std::uint64_t p, const BigInt& n, const BigInt& phi) {
  const BigInt reduced = mod_floor(n, phi);
  if (p < 2) return arith.zero();
  const auto spf = smallest_prime_factors(p);
  Vec<A> pw(p);
  pw[1] = arith.one();
  auto total = pw[1];
  for (std::uint64_t k = 2; k < p; ++k) {
    const std::uint32_t q = spf[k];
    if (q == k) {
      pw[k] = power(arith, arith.from_u64(k), reduced);
    } else {
      pw[k] = arith.mul(pw[q], pw[k / q]);
    }
    total = arith.add(total, pw[k]);
  }
  return total;
}

template <class A>
typename A::value_type power_sum_reference(const A& arith, std::uint64_t p, const BigInt& n) {
  auto total = arith.zero();
  for (std::uint64_t k = 1; k < p; ++k) total = arith.add(total, power(arith, arith.from_u64(k), n));
  return total;
}

// (p-1)! * R_1, whose p-adic valuation equals that of R_1.
template <class A>
typename A::value_type harmonic_numerator(const A& arith, std::uint64_t p) {
  const auto one = arith.one();
  auto num = arith.zero(), den = one, k_m = arith.zero();
  for (std::uint64_t k = 1; k < p; ++k) {
    k_m = arith.add(k_m, one);
    num = arith.add(arith.mul(num, k_m), den);
    den = arith.mul(den, k_m);
  }
  return num;
}

// Pairing k with p - k gives R_1 = p * S with S = sum_{k<p/2} 1/(k(p-k)). Returns the numerator
// of S over prod k(p-k), a unit, so v_p(R_1) = 1 + v_p(result). Half the terms of
// harmonic_numerator, and one power of p less is needed for the same information.
template <class A>
typename A::value_type paired_harmonic_numerator(const A& arith, std::uint64_t p) {
  const auto one = arith.one();
  const auto two = arith.add(one, one);
  // m_k = k(p-k), stepped by d_k = m_{k+1} - m_k = p - 2k - 1.
  auto m = arith.from_u64(p - 1);
  auto d = arith.from_u64(p - 3);
  auto num = arith.zero(), den = one;
  for (std::uint64_t k = 1; 2 * k < p; ++k) {
    num = arith.add(arith.mul(num, m), den);
    den = arith.mul(den, m);
    m = arith.add(m, d);
    d = arith.sub(d, two);
  }
  return num;
}

// (p-1)! * (C(2p-1,p-1) - 1 + 2p H_1 - 4p^2 H_2): residual of the main congruence scaled by a unit.
template <class A>
typename A::value_type theorem_residual_numerator(const A& arith, std::uint64_t p) {
  const auto one = arith.one();
  const auto pm = arith.from_u64(p);
  auto c0 = one, c1 = arith.zero(), c2 = arith.zero(), num = one, i_m = arith.zero();
  for (std::uint64_t i = 1; i < p; ++i) {
    i_m = arith.add(i_m, one);
    c2 = arith.add(arith.mul(c2, i_m), c1);
    c1 = arith.add(arith.mul(c1, i_m), c0);
    c0 = arith.mul(c0, i_m);
    num = arith.mul(num, arith.add(pm, i_m));
  }
  const auto two_p = arith.add(pm, pm);
  const auto four_p2 = arith.mul(arith.add(two_p, two_p), pm);
  auto r = arith.sub(num, c0);
  r = arith.add(r, arith.mul(two_p, c1));
  return arith.sub(r, arith.mul(four_p2, c2));
}

}  // namespace wlab::kernels
