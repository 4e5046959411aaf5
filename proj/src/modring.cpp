#include "wlab/modring.hpp"

#include <utility>
#include <variant>

#include "wlab/error.hpp"
#include "wlab/kernels.hpp"
#include "wlab/primality.hpp"

namespace wlab {

PrimePowerRing::PrimePowerRing(const BigInt& p, int e, Backend policy) {
  if (p < 2 || !is_prime(p)) throw Error(ErrorCode::CompositeModulusBase, to_decimal(p) + " is not a prime");
  if (e < 1) throw Error(ErrorCode::ExponentOutOfRange, "exponent must be at least 1, got " + std::to_string(e));
  BigInt modulus = pow_big(p, static_cast<unsigned long>(e));
  BigInt totient = pow_big(p, static_cast<unsigned long>(e - 1)) * (p - 1);
  AnyArith arith = make_arith(modulus, policy);
  state_ = std::make_shared<const State>(State{p, e, std::move(modulus), std::move(totient), policy, std::move(arith)});
}

std::string PrimePowerRing::engine_name() const {
  switch (state_->arith.index()) {
    case 0: return "fixed64";
    case 1: return "fixed128";
    case 2: return "fixed192";
    case 3: return "fixed256";
    default: return "bignum";
  }
}

std::uint64_t PrimePowerRing::p_word() const {
  if (!fits_u64(state_->p)) throw Error(ErrorCode::InvalidInput, "prime too large for per-element loops");
  return to_u64(state_->p);
}

PrimePowerRing PrimePowerRing::with_exponent(int e) const { return PrimePowerRing(state_->p, e, state_->policy); }

Residue PrimePowerRing::make(const BigInt& v) const { return Residue(*this, mod_floor(v, state_->modulus)); }

Residue PrimePowerRing::make(long v) const { return make(BigInt(v)); }

Residue PrimePowerRing::make(const Rational& v) const {
  BigInt den = v.get_den(), den_inv;
  if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), state_->modulus.get_mpz_t()) == 0) {
    throw Error(ErrorCode::NotInvertible, "denominator " + to_decimal(den) + " is divisible by p");
  }
  return make(BigInt(BigInt(v.get_num()) * den_inv));
}

Residue PrimePowerRing::zero() const { return Residue(*this, BigInt(0)); }
Residue PrimePowerRing::one() const { return make(1L); }

Residue::Residue(PrimePowerRing ring, BigInt value) : ring_(std::move(ring)), value_(std::move(value)) {
  if (sgn(value_) < 0 || value_ >= ring_.modulus()) value_ = mod_floor(value_, ring_.modulus());
}

void Residue::require_same_ring(const Residue& o) const {
  if (!(ring_ == o.ring_)) throw Error(ErrorCode::RingMismatch, "operands live in different rings");
}

Residue Residue::operator+(const Residue& o) const {
  require_same_ring(o);
  BigInt r = value_ + o.value_;
  if (r >= ring_.modulus()) r -= ring_.modulus();
  return Residue(ring_, std::move(r));
}

Residue Residue::operator-(const Residue& o) const {
  require_same_ring(o);
  BigInt r = value_ - o.value_;
  if (sgn(r) < 0) r += ring_.modulus();
  return Residue(ring_, std::move(r));
}

Residue Residue::operator*(const Residue& o) const {
  require_same_ring(o);
  return Residue(ring_, mod_floor(value_ * o.value_, ring_.modulus()));
}

Residue Residue::operator-() const { return ring_.zero() - *this; }

Residue Residue::operator*(long k) const { return Residue(ring_, mod_floor(value_ * k, ring_.modulus())); }

Residue operator*(long k, const Residue& r) { return r * k; }

bool Residue::operator==(const Residue& o) const { return ring_ == o.ring_ && value_ == o.value_; }

int Residue::valuation() const { return wlab::valuation(value_, ring_.p(), ring_.exponent()); }

Residue Residue::reduce_to(const PrimePowerRing& lower) const {
  if (lower.p() != ring_.p() || lower.exponent() > ring_.exponent()) {
    throw Error(ErrorCode::RingMismatch, "can only reduce to a lower power of the same prime");
  }
  return lower.make(value_);
}

Residue inv(const Residue& a) {
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), a.value().get_mpz_t(), a.ring().modulus().get_mpz_t()) == 0) {
    throw Error(ErrorCode::NotInvertible, a.to_string() + " is not a unit mod p^e");
  }
  return Residue(a.ring(), std::move(r));
}

std::vector<Residue> batch_inv(const PrimePowerRing& ring, std::span<const Residue> items) {
  for (const auto& r : items) {
    if (!(r.ring() == ring)) throw Error(ErrorCode::RingMismatch, "batch item from another ring");
  }
  return std::visit(
      [&](const auto& arith) {
        using A = std::decay_t<decltype(arith)>;
        kernels::Vec<A> in;
        in.reserve(items.size());
        for (const auto& r : items) in.push_back(arith.from_big(r.value()));
        auto out = kernels::batch_inverse(arith, ring.p(), std::span<const typename A::value_type>(in));
        std::vector<Residue> result;
        result.reserve(out.size());
        for (const auto& v : out) result.emplace_back(ring, arith.to_big(v));
        return result;
      },
      ring.arith());
}

Residue pow_mod(const Residue& a, const BigInt& n) {
  if (sgn(n) < 0) throw Error(ErrorCode::InvalidInput, "negative exponent");
  BigInt r;
  mpz_powm(r.get_mpz_t(), a.value().get_mpz_t(), n.get_mpz_t(), a.ring().modulus().get_mpz_t());
  return Residue(a.ring(), std::move(r));
}

TruncatedSeries::TruncatedSeries(PrimePowerRing ring, std::vector<Residue> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidInput, "series needs at least the constant term");
  for (const auto& c : coeffs_) {
    if (!(c.ring() == ring_)) throw Error(ErrorCode::RingMismatch, "series coefficient from another ring");
  }
}

TruncatedSeries TruncatedSeries::constant(const PrimePowerRing& ring, int degree_bound, const Residue& c) {
  std::vector<Residue> coeffs(static_cast<std::size_t>(degree_bound) + 1, ring.zero());
  coeffs[0] = c;
  return TruncatedSeries(ring, std::move(coeffs));
}

Residue TruncatedSeries::evaluate(const Residue& x) const {
  Residue acc = ring_.zero();
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
  return acc;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b, int d) {
  if (!(a.ring() == b.ring())) throw Error(ErrorCode::RingMismatch, "series from different rings");
  if (d < 0) throw Error(ErrorCode::InvalidInput, "negative degree bound");
  const PrimePowerRing& ring = a.ring();
  std::vector<Residue> out(static_cast<std::size_t>(d) + 1, ring.zero());
  for (int i = 0; i <= a.degree_bound() && i <= d; ++i) {
    for (int j = 0; j <= b.degree_bound() && i + j <= d; ++j) out[i + j] = out[i + j] + a[i] * b[j];
  }
  return TruncatedSeries(ring, std::move(out));
}

TruncatedSeries symmetric_product(const PrimePowerRing& ring, int d) {
  if (d < 1 || d > 8) throw Error(ErrorCode::InvalidInput, "degree bound must be in 1..8");
  const std::uint64_t p = ring.p_word();
  return std::visit(
      [&](const auto& arith) {
        auto c = kernels::symmetric_sums(arith, p, d);
        std::vector<Residue> coeffs;
        coeffs.reserve(c.size());
        for (const auto& v : c) coeffs.emplace_back(ring, arith.to_big(v));
        return TruncatedSeries(ring, std::move(coeffs));
      },
      ring.arith());
}

}  // namespace wlab
