#pragma once

// Z/p^e with canonical residues. PrimePowerRing is a cheap shared handle to immutable state
// (modulus, totient, chosen arithmetic engine); Residue pairs a value in [0, p^e) with its ring.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "wlab/bigint.hpp"
#include "wlab/montgomery.hpp"

namespace wlab {

class Residue;

class PrimePowerRing {
 public:
  // Rejects composite p (CompositeModulusBase) and e < 1 (ExponentOutOfRange).
  PrimePowerRing(const BigInt& p, int e, Backend policy = Backend::Auto);

  const BigInt& p() const { return state_->p; }
  int exponent() const { return state_->e; }
  const BigInt& modulus() const { return state_->modulus; }
  // Euler totient p^(e-1) (p-1).
  const BigInt& totient() const { return state_->totient; }
  Backend policy() const { return state_->policy; }
  const AnyArith& arith() const { return state_->arith; }
  // "fixed64", "fixed128", ..., or "bignum".
  std::string engine_name() const;

  // p as a machine word; throws InvalidInput when p does not fit (the O(p) kernels need it).
  std::uint64_t p_word() const;

  PrimePowerRing with_exponent(int e) const;

  Residue make(const BigInt& v) const;
  Residue make(long v) const;
  // num/den reduced into the ring; NotInvertible if p divides den.
  Residue make(const Rational& v) const;
  Residue zero() const;
  Residue one() const;

  bool operator==(const PrimePowerRing& other) const {
    return state_ == other.state_ || (state_->e == other.state_->e && state_->p == other.state_->p);
  }

 private:
  struct State {
    BigInt p;
    int e;
    BigInt modulus;
    BigInt totient;
    Backend policy;
    AnyArith arith;
  };
  std::shared_ptr<const State> state_;
};

class Residue {
 public:
  Residue(PrimePowerRing ring, BigInt value);

  const BigInt& value() const { return value_; }
  const PrimePowerRing& ring() const { return ring_; }

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  Residue operator-() const;
  Residue operator*(long k) const;
  bool operator==(const Residue& o) const;

  bool is_zero() const { return sgn(value_) == 0; }
  // v_p(value), saturated at the ring exponent for the zero residue.
  int valuation() const;
  // Image in Z/p^f for f <= e.
  Residue reduce_to(const PrimePowerRing& lower) const;

  std::string to_string() const { return to_decimal(value_); }

 private:
  void require_same_ring(const Residue& o) const;

  PrimePowerRing ring_;
  BigInt value_;
};

Residue operator*(long k, const Residue& r);

// a^{-1} mod p^e via extended gcd; NotInvertible if p | a.
Residue inv(const Residue& a);

// Elementwise inverses with a single gcd (prefix products); NotInvertibleError names the first
// non-unit index.
std::vector<Residue> batch_inv(const PrimePowerRing& ring, std::span<const Residue> items);

Residue pow_mod(const Residue& a, const BigInt& n);

class TruncatedSeries {
 public:
  // Coefficients of x^0..x^d; d = coeffs.size() - 1.
  TruncatedSeries(PrimePowerRing ring, std::vector<Residue> coeffs);
  static TruncatedSeries constant(const PrimePowerRing& ring, int degree_bound, const Residue& c);

  int degree_bound() const { return static_cast<int>(coeffs_.size()) - 1; }
  const PrimePowerRing& ring() const { return ring_; }
  const Residue& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<Residue>& coeffs() const { return coeffs_; }
  // sum_k c_k x^k at a point of the same ring.
  Residue evaluate(const Residue& x) const;

 private:
  PrimePowerRing ring_;
  std::vector<Residue> coeffs_;
};

// Product truncated at degree d; RingMismatch on mixed rings.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b, int d);

// prod_{i=1}^{p-1} (1 + x/i) truncated at degree d (1 <= d <= 8); coefficient k is H_k(p).
TruncatedSeries symmetric_product(const PrimePowerRing& ring, int d);

}  // namespace wlab
