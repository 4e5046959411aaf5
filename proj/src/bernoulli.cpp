#include "wlab/bernoulli.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "wlab/error.hpp"
#include "wlab/primality.hpp"
#include "wlab/sums.hpp"

namespace wlab {
namespace {

// B_0, B_2, B_4, ... from tangent numbers (Brent-Harvey): only integer multiply-adds by small
// factors, then B_2k = (-1)^(k-1) 2k T_k / (4^k (4^k - 1)).
class EvenBernoulliTable {
 public:
  Rational get(long n) {
    const auto k = static_cast<std::size_t>(n / 2);
    {
      std::shared_lock lock(mutex_);
      if (k < even_.size()) return even_[k];
    }
    std::unique_lock lock(mutex_);
    if (k >= even_.size()) build(std::max<std::size_t>(k, std::min<std::size_t>(2 * even_.size(), kExactBernoulliCap / 2)));
    return even_[k];
  }

 private:
  void build(std::size_t K) {
    std::vector<BigInt> T(K + 1);
    if (K >= 1) T[1] = 1;
    for (std::size_t k = 2; k <= K; ++k) T[k] = static_cast<unsigned long>(k - 1) * T[k - 1];
    for (std::size_t k = 2; k <= K; ++k) {
      for (std::size_t j = k; j <= K; ++j) {
        T[j] = static_cast<unsigned long>(j - k) * T[j - 1] + static_cast<unsigned long>(j - k + 2) * T[j];
      }
    }
    std::vector<Rational> even(K + 1);
    even[0] = 1;
    for (std::size_t k = 1; k <= K; ++k) {
      BigInt four_k = pow_big(BigInt(4), static_cast<unsigned long>(k));
      Rational b(BigInt(static_cast<unsigned long>(2 * k) * T[k]), BigInt(four_k * (four_k - 1)));
      b.canonicalize();
      even[k] = (k % 2 == 1) ? b : Rational(-b);
    }
    even_ = std::move(even);
  }

  std::shared_mutex mutex_;
  std::vector<Rational> even_;
};

EvenBernoulliTable& even_table() {
  static EvenBernoulliTable table;
  return table;
}

bool is_odd(const BigInt& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }

bool divisible(const BigInt& n, const BigInt& d) { return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0; }

// n(n-1)...(n-s+2) / s!  =  C(n, s-1) / s, as a residue.
Residue expansion_coefficient(const PrimePowerRing& ring, const BigInt& n, int s) {
  Residue c = ring.one();
  for (int j = 0; j <= s - 2; ++j) c = c * ring.make(BigInt(n - j));
  BigInt fact = 1;
  for (int j = 2; j <= s; ++j) fact *= j;
  return c * inv(ring.make(fact));
}

void require_extraction_prime(const BigInt& p) {
  if (p < 11) throw Error(ErrorCode::InvalidInput, "modular Bernoulli extraction needs p >= 11");
}

// p * B_n mod p^R from the two-term truncation, R <= 5.
Residue two_term_scaled(const BigInt& n, const PrimePowerRing& ring) {
  const BigInt& p = ring.p();
  const int R = ring.exponent();
  Residue acc = power_sum(ring, n);
  if (R > 2) {
    Residue lower = two_term_scaled(n - 2, ring.with_exponent(R - 2));
    Residue coeff = ring.make(Rational(BigInt(p * p * n * (n - 1)), BigInt(6)));
    acc = acc - coeff * ring.make(lower.value());
  }
  return acc;
}

}  // namespace

ExactBernoulli exact_bernoulli(long n, long cap) {
  if (n < 0) throw Error(ErrorCode::InvalidInput, "negative Bernoulli index");
  if (n > cap) throw Error(ErrorCode::CapExceeded, "exact Bernoulli index " + std::to_string(n) + " above cap");
  if (n == 1) return {1, Rational(-1, 2)};
  if (n % 2 == 1) return {n, Rational(0)};
  return {n, even_table().get(n)};
}

BigInt vsc_denominator(long n) {
  if (n < 2 || n % 2 != 0) throw Error(ErrorCode::InvalidInput, "von Staudt-Clausen needs an even index >= 2");
  BigInt d = 1;
  std::vector<long> divisors;
  for (long k = 1; k * k <= n; ++k) {
    if (n % k != 0) continue;
    divisors.push_back(k);
    if (k != n / k) divisors.push_back(n / k);
  }
  for (long k : divisors) {
    if (is_prime_u64(static_cast<std::uint64_t>(k + 1))) d *= (k + 1);
  }
  return d;
}

KummerRepresentative kummer_reduce(const BigInt& index, const BigInt& p, int r) {
  if (r < 1) throw Error(ErrorCode::InvalidInput, "Kummer reduction needs r >= 1");
  if (sgn(index) <= 0 || is_odd(index)) throw Error(ErrorCode::InvalidInput, "Kummer reduction needs a positive even index");
  if (divisible(index, BigInt(p - 1))) {
    throw Error(ErrorCode::IndexDivisible, "index " + to_decimal(index) + " is divisible by p - 1");
  }
  const BigInt period = pow_big(p, static_cast<unsigned long>(r - 1)) * (p - 1);
  BigInt n = mod_floor(index, period);
  while (n < r + 1) n += period;
  return {n, index >= r + 1};
}

Residue scaled_bernoulli(const BigInt& n, const PrimePowerRing& ring) {
  const BigInt& p = ring.p();
  const int R = ring.exponent();
  if (p < R + 2) throw Error(ErrorCode::PrecisionUnderflow, "extraction precision needs p >= R + 2");
  if (sgn(n) < 0) throw Error(ErrorCode::InvalidInput, "negative Bernoulli index");
  if (n == 0) return ring.make(p);
  if (n == 1) return ring.make(Rational(BigInt(-p), BigInt(2)));
  if (is_odd(n)) return ring.zero();

  Residue acc = power_sum(ring, n);
  for (int s = 2; s <= R; ++s) {
    const BigInt lower_index = n + 1 - s;
    if (sgn(lower_index) < 0) break;
    if (is_odd(lower_index) && lower_index != 1) continue;
    Residue lower = scaled_bernoulli(lower_index, ring.with_exponent(R - s + 1));
    Residue term = expansion_coefficient(ring, n, s) * ring.make(pow_big(p, static_cast<unsigned long>(s - 1))) *
                   ring.make(lower.value());
    acc = acc - term;
  }
  return acc;
}

BernoulliResidue bernoulli_mod_small(const BigInt& n, const BigInt& p, int r) {
  require_extraction_prime(p);
  if (r < 1) throw Error(ErrorCode::PrecisionUnderflow, "requested precision must be >= 1");
  if (n < 2 || is_odd(n)) throw Error(ErrorCode::InvalidInput, "extraction needs an even index >= 2");
  if (divisible(n, BigInt(p - 1))) {
    throw Error(ErrorCode::KummerInapplicable, "B_" + to_decimal(n) + " is not p-integral");
  }
  PrimePowerRing work(p, r + 1);
  Residue scaled = scaled_bernoulli(n, work);
  if (!divisible(scaled.value(), p)) {
    throw Error(ErrorCode::InternalInconsistency, "p * B_n is a unit although (p - 1) does not divide n");
  }
  PrimePowerRing target(p, r);
  return {n, p, r, target.make(BigInt(scaled.value() / p))};
}

BernoulliResidue bernoulli_mod_two_term(const BigInt& n, const BigInt& p, int r) {
  require_extraction_prime(p);
  if (r < 1 || r > 4) throw Error(ErrorCode::PrecisionUnderflow, "two-term extraction supports 1 <= r <= 4");
  if (n < 8 || is_odd(n)) throw Error(ErrorCode::InvalidInput, "two-term extraction needs an even index >= 8");
  const BigInt pm1 = p - 1;
  if (divisible(n, pm1) || divisible(BigInt(n - 2), pm1) || divisible(BigInt(n - 4), pm1)) {
    throw Error(ErrorCode::KummerInapplicable, "two-term truncation needs n, n-2, n-4 off multiples of p - 1");
  }
  Residue scaled = two_term_scaled(n, PrimePowerRing(p, r + 1));
  if (!divisible(scaled.value(), p)) throw Error(ErrorCode::InternalInconsistency, "p * B_n is a unit");
  return {n, p, r, PrimePowerRing(p, r).make(BigInt(scaled.value() / p))};
}

BernoulliResidue bernoulli_mod(const BigInt& index, const BigInt& p, int r, BernoulliMethod method) {
  if (r < 1) throw Error(ErrorCode::PrecisionUnderflow, "requested precision must be >= 1");
  if (sgn(index) < 0) throw Error(ErrorCode::InvalidInput, "negative Bernoulli index");
  PrimePowerRing target(p, r);
  if (index == 0) return {index, p, r, target.one()};
  if (index == 1) return {index, p, r, target.make(Rational(-1, 2))};
  if (is_odd(index)) return {index, p, r, target.zero()};
  if (divisible(index, BigInt(p - 1))) {
    throw Error(ErrorCode::IndexDivisible, "B_" + to_decimal(index) + " has p in its denominator");
  }

  const bool small = index <= kExactBernoulliCap;
  if (small && (method == BernoulliMethod::Auto || p < 11)) {
    return {index, p, r, target.make(exact_bernoulli(index.get_si()).value)};
  }
  require_extraction_prime(p);

  const KummerRepresentative rep = kummer_reduce(index, p, r);
  if (!rep.congruent || rep.representative == index) {
    BernoulliResidue direct = bernoulli_mod_small(index, p, r);
    return direct;
  }
  // B_index = index * (B_n / n) mod p^r. When p^v || n, B_n is known to carry p^v as well.
  const BigInt& n = rep.representative;
  const int v = valuation(n, p, 1 << 20);
  BernoulliResidue bn = bernoulli_mod_small(n, p, r + v);
  const BigInt pv = pow_big(p, static_cast<unsigned long>(v));
  if (!divisible(bn.value.value(), pv)) {
    throw Error(ErrorCode::InternalInconsistency, "B_n / n is not p-integral");
  }
  Residue ratio = target.make(BigInt(bn.value.value() / pv)) * inv(target.make(BigInt(n / pv)));
  return {index, p, r, target.make(index) * ratio};
}

CongruenceReport kummer_alternating_check(long m, const BigInt& p, int r, KummerCoefficients coeffs) {
  if (m < 2 || m % 2 != 0) throw Error(ErrorCode::InvalidInput, "m must be even and >= 2");
  if (r < 0 || r > m - 1) throw Error(ErrorCode::InvalidInput, "need 0 <= r <= m - 1");
  if (!fits_u64(p) || !is_prime(p)) throw Error(ErrorCode::InvalidInput, "p must be a prime");
  const long pm1 = static_cast<long>(to_u64(p)) - 1;
  if (m % pm1 == 0) throw Error(ErrorCode::InvalidInput, "m must not be divisible by p - 1");
  const long top = coeffs == KummerCoefficients::Corrected ? r : m;
  Rational sum = 0;
  BigInt binom = 1;
  for (long k = 0; k <= r; ++k) {
    const long j = m + k * pm1;
    Rational term = exact_bernoulli(j).value / Rational(j);
    term *= Rational(binom);
    sum += (k % 2 == 0) ? term : Rational(-term);
    binom = binom * (top - k) / (k + 1);
  }
  sum.canonicalize();
  CongruenceReport report;
  report.check = coeffs == KummerCoefficients::Corrected ? "eq3.3-kummer-corrected" : "eq3.3-kummer";
  report.p = p;
  report.required_exponent = r;
  report.working_exponent = r + 1;
  // The printed coefficients can leave p in the denominator, so measure the valuation exactly.
  report.residual_valuation = sgn(sum) == 0 ? r + 1 : std::min(r + 1, valuation(sum, p));
  report.holds = report.residual_valuation >= r;
  report.status = report.holds ? Status::Holds : Status::Fails;
  if (report.residual_valuation >= 0) {
    PrimePowerRing ring(p, r + 1);
    report.lhs = ring.make(sum).value();
    report.rhs = BigInt(0);
  }
  report.note = "m=" + std::to_string(m) + " r=" + std::to_string(r);
  return report;
}

}  // namespace wlab
