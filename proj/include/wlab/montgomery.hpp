#pragma once

// Arithmetic engines for Z/m with m odd. Montgomery<N> keeps elements in Montgomery form on
// N 64-bit limbs (m < 2^(64N-1)); BigModArith is the GMP fallback for anything larger or even.
// Engines are immutable after construction and safe to share between threads.

#include <array>
#include <cstddef>
#include <cstdint>
#include <variant>

#include "wlab/bigint.hpp"
#include "wlab/error.hpp"

namespace wlab {

enum class Backend { Auto, FixedWidth, Bignum };

template <std::size_t N>
class Montgomery {
  static_assert(N >= 1 && N <= 4);
  using u128 = unsigned __int128;

 public:
  using value_type = std::array<std::uint64_t, N>;
  static constexpr std::size_t kLimbs = N;

  static bool supports(const BigInt& m) {
    return m > 1 && mpz_odd_p(m.get_mpz_t()) && mpz_sizeinbase(m.get_mpz_t(), 2) <= 64 * N - 1;
  }

  explicit Montgomery(const BigInt& modulus) : modulus_(modulus) {
    if (!supports(modulus)) throw Error(ErrorCode::ExponentOutOfRange, "modulus does not fit fixed-width engine");
    n_ = limbs_of(modulus);
    // -n^{-1} mod 2^64 by Newton iteration on the low limb.
    std::uint64_t inv = 1;
    for (int i = 0; i < 7; ++i) inv *= 2 - n_[0] * inv;
    ninv_ = ~inv + 1;
    BigInt r = pow_big(BigInt(2), 64 * N);
    r2_ = limbs_of(mod_floor(r * r, modulus));
    one_ = limbs_of(mod_floor(r, modulus));
  }

  const BigInt& modulus() const { return modulus_; }

  value_type zero() const { return value_type{}; }
  value_type one() const { return one_; }

  value_type from_big(const BigInt& v) const { return mul(limbs_of(mod_floor(v, modulus_)), r2_); }

  value_type from_u64(std::uint64_t v) const {
    value_type x{};
    x[0] = v;
    if (!less(x, n_)) return from_big(wlab::from_u64(v));
    return mul(x, r2_);
  }

  BigInt to_big(const value_type& a) const {
    value_type one_plain{};
    one_plain[0] = 1;
    value_type c = mul(a, one_plain);
    BigInt r;
    mpz_import(r.get_mpz_t(), N, -1, sizeof(std::uint64_t), 0, 0, c.data());
    return r;
  }

  value_type add(const value_type& a, const value_type& b) const {
    value_type s;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < N; ++i) {
      u128 t = static_cast<u128>(a[i]) + b[i] + carry;
      s[i] = static_cast<std::uint64_t>(t);
      carry = static_cast<std::uint64_t>(t >> 64);
    }
    if (!less(s, n_)) subtract_in_place(s, n_);
    return s;
  }

  value_type sub(const value_type& a, const value_type& b) const {
    value_type d = a;
    if (subtract_in_place(d, b)) add_in_place(d, n_);
    return d;
  }

  value_type neg(const value_type& a) const { return sub(zero(), a); }

  // CIOS Montgomery product: a*b*2^(-64N) mod n.
  value_type mul(const value_type& a, const value_type& b) const {
    std::array<std::uint64_t, N + 2> t{};
    for (std::size_t i = 0; i < N; ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < N; ++j) {
        u128 s = static_cast<u128>(a[j]) * b[i] + t[j] + carry;
        t[j] = static_cast<std::uint64_t>(s);
        carry = static_cast<std::uint64_t>(s >> 64);
      }
      u128 s = static_cast<u128>(t[N]) + carry;
      t[N] = static_cast<std::uint64_t>(s);
      t[N + 1] = static_cast<std::uint64_t>(s >> 64);

      const std::uint64_t m = t[0] * ninv_;
      s = static_cast<u128>(m) * n_[0] + t[0];
      carry = static_cast<std::uint64_t>(s >> 64);
      for (std::size_t j = 1; j < N; ++j) {
        s = static_cast<u128>(m) * n_[j] + t[j] + carry;
        t[j - 1] = static_cast<std::uint64_t>(s);
        carry = static_cast<std::uint64_t>(s >> 64);
      }
      s = static_cast<u128>(t[N]) + carry;
      t[N - 1] = static_cast<std::uint64_t>(s);
      t[N] = t[N + 1] + static_cast<std::uint64_t>(s >> 64);
    }
    value_type r;
    for (std::size_t i = 0; i < N; ++i) r[i] = t[i];
    if (t[N] != 0 || !less(r, n_)) subtract_in_place(r, n_);
    return r;
  }

  bool is_zero(const value_type& a) const {
    for (auto limb : a) {
      if (limb != 0) return false;
    }
    return true;
  }

  bool equal(const value_type& a, const value_type& b) const { return a == b; }

  value_type inverse(const value_type& a) const {
    BigInt v = to_big(a), r;
    if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), modulus_.get_mpz_t()) == 0) {
      throw Error(ErrorCode::NotInvertible, "element shares a factor with the modulus");
    }
    return from_big(r);
  }

 private:
  static value_type limbs_of(const BigInt& v) {
    value_type out{};
    std::size_t count = 0;
    mpz_export(out.data(), &count, -1, sizeof(std::uint64_t), 0, 0, v.get_mpz_t());
    return out;
  }

  static bool less(const value_type& a, const value_type& b) {
    for (std::size_t i = N; i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }

  static bool subtract_in_place(value_type& a, const value_type& b) {
    std::uint64_t borrow = 0;
    for (std::size_t i = 0; i < N; ++i) {
      const std::uint64_t bi = b[i] + borrow;
      const bool under = (bi < borrow) || (a[i] < bi);
      a[i] -= bi;
      borrow = under ? 1 : 0;
    }
    return borrow != 0;
  }

  static void add_in_place(value_type& a, const value_type& b) {
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < N; ++i) {
      u128 t = static_cast<u128>(a[i]) + b[i] + carry;
      a[i] = static_cast<std::uint64_t>(t);
      carry = static_cast<std::uint64_t>(t >> 64);
    }
  }

  BigInt modulus_;
  value_type n_{};
  value_type r2_{};
  value_type one_{};
  std::uint64_t ninv_ = 0;
};

class BigModArith {
 public:
  using value_type = BigInt;

  explicit BigModArith(const BigInt& modulus) : modulus_(modulus) {
    if (modulus < 1) throw Error(ErrorCode::ExponentOutOfRange, "modulus must be positive");
  }

  const BigInt& modulus() const { return modulus_; }

  value_type zero() const { return BigInt(0); }
  value_type one() const { return mod_floor(BigInt(1), modulus_); }
  value_type from_big(const BigInt& v) const { return mod_floor(v, modulus_); }
  value_type from_u64(std::uint64_t v) const { return mod_floor(wlab::from_u64(v), modulus_); }
  BigInt to_big(const value_type& a) const { return a; }

  value_type add(const value_type& a, const value_type& b) const {
    BigInt r = a + b;
    if (r >= modulus_) r -= modulus_;
    return r;
  }
  value_type sub(const value_type& a, const value_type& b) const {
    BigInt r = a - b;
    if (sgn(r) < 0) r += modulus_;
    return r;
  }
  value_type neg(const value_type& a) const { return sub(zero(), a); }
  value_type mul(const value_type& a, const value_type& b) const {
    BigInt r = a * b;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), modulus_.get_mpz_t());
    return r;
  }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }

  value_type inverse(const value_type& a) const {
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), modulus_.get_mpz_t()) == 0) {
      throw Error(ErrorCode::NotInvertible, "element shares a factor with the modulus");
    }
    return r;
  }

 private:
  BigInt modulus_;
};

using AnyArith = std::variant<Montgomery<1>, Montgomery<2>, Montgomery<3>, Montgomery<4>, BigModArith>;

// Picks the narrowest engine allowed by `policy`.
AnyArith make_arith(const BigInt& modulus, Backend policy = Backend::Auto);

// Square-and-multiply on an arbitrary-precision exponent.
template <class A>
typename A::value_type power(const A& arith, typename A::value_type base, const BigInt& exponent) {
  auto result = arith.one();
  const std::size_t bits = sgn(exponent) == 0 ? 0 : mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = arith.mul(result, result);
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = arith.mul(result, base);
  }
  return result;
}

template <class A>
typename A::value_type power(const A& arith, typename A::value_type base, std::uint64_t exponent) {
  auto result = arith.one();
  while (exponent != 0) {
    if (exponent & 1) result = arith.mul(result, base);
    base = arith.mul(base, base);
    exponent >>= 1;
  }
  return result;
}

}  // namespace wlab
