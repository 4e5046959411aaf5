#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace wlab {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt from_u64(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return r;
}

inline BigInt from_u128(unsigned __int128 v) {
  std::uint64_t limbs[2] = {static_cast<std::uint64_t>(v), static_cast<std::uint64_t>(v >> 64)};
  BigInt r;
  mpz_import(r.get_mpz_t(), 2, -1, sizeof limbs[0], 0, 0, limbs);
  return r;
}

// Caller guarantees 0 <= v < 2^64.
inline std::uint64_t to_u64(const BigInt& v) {
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof out, 0, 0, v.get_mpz_t());
  return out;
}

inline bool fits_u64(const BigInt& v) { return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64; }

inline BigInt pow_big(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

// Least non-negative representative of v modulo m (m > 0).
inline BigInt mod_floor(const BigInt& v, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

// v_p(v) with v_p(0) reported as `cap`.
inline int valuation(const BigInt& v, const BigInt& p, int cap) {
  if (sgn(v) == 0) return cap;
  BigInt q = v;
  int k = 0;
  while (k < cap && mpz_divisible_p(q.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    ++k;
  }
  return k;
}

// v_p of a nonzero rational; exact, no cap.
inline int valuation(const Rational& v, const BigInt& p) {
  constexpr int kUnbounded = 1 << 30;
  return valuation(BigInt(v.get_num()), p, kUnbounded) - valuation(BigInt(v.get_den()), p, kUnbounded);
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

}  // namespace wlab
