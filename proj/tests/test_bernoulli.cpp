#include <doctest.h>

#include <thread>

#include "oracles.hpp"
#include "wlab/bernoulli.hpp"
#include "wlab/error.hpp"

using namespace wlab;

namespace {

const std::vector<Rational>& textbook() {
  static const auto table = oracle::bernoulli_table(220);
  return table;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected wlab::Error");
  return ErrorCode::InternalInconsistency;
}

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi) { return oracle::primes_trial(lo, hi); }

}  // namespace

TEST_CASE("exact Bernoulli numbers") {
  CHECK(exact_bernoulli(0).value == 1);
  CHECK(exact_bernoulli(1).value == Rational(-1, 2));
  CHECK(exact_bernoulli(2).value == Rational(1, 6));
  CHECK(exact_bernoulli(3).value == 0);
  CHECK(exact_bernoulli(8).value == Rational(-1, 30));
  CHECK(exact_bernoulli(12).value == Rational(-691, 2730));
  for (int n = 0; n <= 220; ++n) CHECK_MESSAGE(exact_bernoulli(n).value == textbook()[static_cast<std::size_t>(n)], n);
  CHECK(code_of([] { exact_bernoulli(kExactBernoulliCap + 1); }) == ErrorCode::CapExceeded);
  CHECK(code_of([] { exact_bernoulli(50, 40); }) == ErrorCode::CapExceeded);
}

TEST_CASE("exact table is safe under concurrent first use") {
  std::vector<std::thread> threads;
  std::vector<Rational> seen(8);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] { seen[static_cast<std::size_t>(t)] = exact_bernoulli(900 + 2 * t).value; });
  }
  for (auto& th : threads) th.join();
  for (int t = 0; t < 8; ++t) CHECK(seen[static_cast<std::size_t>(t)] == exact_bernoulli(900 + 2 * t).value);
}

TEST_CASE("von Staudt-Clausen denominators") {
  CHECK(vsc_denominator(2) == 6);
  CHECK(vsc_denominator(8) == 30);
  CHECK(vsc_denominator(12) == 2730);
  for (long n = 2; n <= 60; n += 2) CHECK(vsc_denominator(n) == textbook()[static_cast<std::size_t>(n)].get_den());
}

TEST_CASE("Kummer reduction") {
  auto k1 = kummer_reduce(13308, 11, 1);
  CHECK(k1.representative == 8);
  CHECK(k1.congruent);
  CHECK(kummer_reduce(10, 13, 1).representative == 10);

  const BigInt big = pow_big(BigInt(11), 6) - pow_big(BigInt(11), 5) - 2;
  auto k4 = kummer_reduce(big, 11, 4);
  const BigInt period = pow_big(BigInt(11), 3) * 10;
  CHECK(mod_floor(BigInt(k4.representative - big), period) == 0);
  CHECK(k4.representative >= 5);
  CHECK(k4.representative < period + 5);
  CHECK(k4.representative % 2 == 0);

  CHECK(code_of([] { kummer_reduce(20, 11, 1); }) == ErrorCode::IndexDivisible);
  CHECK(code_of([] { kummer_reduce(9, 11, 1); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { kummer_reduce(8, 11, 0); }) == ErrorCode::InvalidInput);

  // Small index below the representative bound is not itself congruent-usable.
  CHECK_FALSE(kummer_reduce(2, 11, 3).congruent);
}

TEST_CASE("scaled Bernoulli extraction matches exact values") {
  for (std::uint64_t p : primes_between(5, 61)) {
    for (int R = 1; R + 2 <= static_cast<int>(p) && R <= 6; ++R) {
      PrimePowerRing ring(from_u64(p), R);
      for (int n = 0; n <= 70; ++n) {
        const Rational pb = Rational(from_u64(p)) * textbook()[static_cast<std::size_t>(n)];
        CHECK_MESSAGE(scaled_bernoulli(n, ring).value() == oracle::reduce(pb, ring.p(), R),
                      "p=" << p << " R=" << R << " n=" << n);
      }
    }
  }
  CHECK(code_of([] { scaled_bernoulli(10, PrimePowerRing(7, 6)); }) == ErrorCode::PrecisionUnderflow);
}

TEST_CASE("B_n mod p^r oracle equivalence, n <= 60, 11 <= p <= 97, r <= 3") {
  for (std::uint64_t p : primes_between(11, 97)) {
    for (int n = 2; n <= 60; n += 2) {
      if (n % static_cast<int>(p - 1) == 0) continue;
      for (int r = 1; r <= 3; ++r) {
        const BigInt expected = oracle::reduce(textbook()[static_cast<std::size_t>(n)], from_u64(p), r);
        CHECK(bernoulli_mod_small(n, from_u64(p), r).value.value() == expected);
        CHECK(bernoulli_mod(n, from_u64(p), r, BernoulliMethod::Extraction).value.value() == expected);
        CHECK(bernoulli_mod(n, from_u64(p), r).value.value() == expected);
      }
    }
  }
}

TEST_CASE("bernoulli_mod_small examples and preconditions") {
  CHECK(bernoulli_mod_small(10, 13, 1).value.value() == 5);
  CHECK(bernoulli_mod_small(2, 11, 1).value.value() == 2);
  CHECK(bernoulli_mod_small(16840, 16843, 1).value.value() == 0);
  CHECK(code_of([] { bernoulli_mod_small(10, 7, 1); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { bernoulli_mod_small(20, 11, 1); }) == ErrorCode::KummerInapplicable);
}

TEST_CASE("two-term truncation agrees with the main extraction") {
  for (std::uint64_t p : primes_between(11, 97)) {
    for (long n = 8; n <= 120; n += 2) {
      const long m = static_cast<long>(p) - 1;
      if (n % m == 0 || (n - 2) % m == 0 || (n - 4) % m == 0) continue;
      for (int r = 1; r <= 4; ++r) {
        CHECK(bernoulli_mod_two_term(n, from_u64(p), r).value == bernoulli_mod_small(n, from_u64(p), r).value);
      }
    }
  }
}

TEST_CASE("bernoulli_mod on huge indices") {
  // Values at p-3 from the exact table; the large indices must reproduce the Kummer ratios used
  // for the Bernoulli forms.
  for (std::uint64_t pw : {11ULL, 13ULL, 17ULL, 37ULL}) {
    const BigInt p = from_u64(pw);
    const PrimePowerRing r1(p, 1);
    const Residue b3 = r1.make(textbook()[pw - 3]);
    const Residue b5 = r1.make(textbook()[pw - 5]);
    const BigInt a = pow_big(p, 4) - pow_big(p, 3) - 2;
    CHECK(bernoulli_mod(a, p, 1).value == r1.make(Rational(2, 3)) * b3);
    const BigInt c = p * p - p - 4;
    CHECK(bernoulli_mod(c, p, 1).value == r1.make(Rational(4, 5)) * b5);
  }
  // Odd and tiny indices.
  CHECK(bernoulli_mod(3, 11, 2).value.is_zero());
  CHECK(bernoulli_mod(1, 11, 2).value == PrimePowerRing(11, 2).make(Rational(-1, 2)));
  CHECK(bernoulli_mod(0, 11, 2).value.value() == 1);
  CHECK(code_of([] { bernoulli_mod(30, 11, 2); }) == ErrorCode::IndexDivisible);
}

TEST_CASE("Kummer invariance B_m/m = B_n/n for m = n mod phi(p^r)") {
  for (std::uint64_t pw : {11ULL, 13ULL, 19ULL}) {
    const BigInt p = from_u64(pw);
    for (int r = 1; r <= 3; ++r) {
      const BigInt phi = pow_big(p, static_cast<unsigned long>(r - 1)) * (p - 1);
      for (long n = 4; n <= 40; n += 2) {
        if (n % static_cast<long>(pw - 1) == 0 || n % static_cast<long>(pw) == 0) continue;
        const BigInt m = BigInt(n) + phi * 1234567;
        if (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) continue;
        PrimePowerRing ring(p, r);
        const Residue lhs = bernoulli_mod(m, p, r, BernoulliMethod::Extraction).value * inv(ring.make(m));
        const Residue rhs = ring.make(textbook()[static_cast<std::size_t>(n)]) * inv(ring.make(n));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("Kummer alternating sum") {
  // As printed, with C(m, k): the m=4, p=7, r=2 instance does not vanish mod 49.
  const Rational printed = textbook()[4] / 4 - 4 * textbook()[10] / 10 + 6 * textbook()[16] / 16;
  CHECK(oracle::valuation(printed, 7) < 2);
  auto bad = kummer_alternating_check(4, 7, 2);
  CHECK_FALSE(bad.holds);
  CHECK(bad.residual_valuation == oracle::valuation(printed, 7));

  // With C(r, k) (the r-th difference) it does.
  const Rational diff = textbook()[4] / 4 - 2 * textbook()[10] / 10 + textbook()[16] / 16;
  CHECK(oracle::valuation(diff, 7) == 2);
  auto good = kummer_alternating_check(4, 7, 2, KummerCoefficients::Corrected);
  CHECK(good.holds);
  CHECK(good.check == "eq3.3-kummer-corrected");

  // m=2, p=5, r=1: B_2/2 - B_6/6.
  CHECK(kummer_alternating_check(2, 5, 1, KummerCoefficients::Corrected).holds);
  CHECK(oracle::valuation(textbook()[2] / 2 - textbook()[6] / 6, 5) >= 1);
  // r = 0 is B_m/m alone.
  CHECK(kummer_alternating_check(4, 7, 0).holds);

  int corrected_failures = 0;
  for (std::uint64_t p : primes_between(5, 31)) {
    for (long m = 2; m <= 24; m += 2) {
      if (m % static_cast<long>(p - 1) == 0) continue;
      for (int r = 1; r <= std::min<long>(4, m - 1); ++r) {
        if (!kummer_alternating_check(m, from_u64(p), r, KummerCoefficients::Corrected).holds) ++corrected_failures;
      }
    }
  }
  CHECK(corrected_failures == 0);

  CHECK(code_of([] { kummer_alternating_check(3, 7, 1); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { kummer_alternating_check(4, 7, 4); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { kummer_alternating_check(6, 7, 2); }) == ErrorCode::InvalidInput);
}
