#include "wlab/congruence.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <variant>

#include "wlab/error.hpp"
#include "wlab/kernels.hpp"
#include "wlab/primality.hpp"

namespace wlab {

Residue binom_central(const BigInt& p, int e, Backend policy) {
  PrimePowerRing ring(p, e, policy);
  const std::uint64_t pw = ring.p_word();
  return std::visit([&](const auto& arith) { return Residue(ring, arith.to_big(kernels::central_binomial(arith, pw))); },
                    ring.arith());
}

Residue binom_exact_oracle(const BigInt& p, int e, long cap) {
  if (p > cap) throw Error(ErrorCode::CapExceeded, "exact binomial oracle limited to p <= " + std::to_string(cap));
  PrimePowerRing ring(p, e);
  const unsigned long pl = p.get_ui();
  BigInt c = 1;
  for (unsigned long i = 1; i < pl; ++i) {
    c *= pl + i;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), i);
  }
  return ring.make(c);
}

PrimeContext::PrimeContext(const BigInt& p, Backend policy) : p_(p), policy_(policy) {
  if (p < 2 || !is_prime(p)) throw Error(ErrorCode::CompositeModulusBase, to_decimal(p) + " is not a prime");
  if (!fits_u64(p)) throw Error(ErrorCode::InvalidInput, "prime too large for per-element loops");
  p_word_ = to_u64(p);
}

const SumTable& PrimeContext::sums() {
  if (!sums_) sums_ = build_sum_table(p_, kContextExponent, policy_);
  return *sums_;
}

Residue PrimeContext::R(int n, int e) { return sums().r(n).reduce_to(ring(e)); }

Residue PrimeContext::H(int k, int e) { return sums().h(k).reduce_to(ring(e)); }

Residue PrimeContext::binom(int e) {
  if (!binom_) binom_ = binom_central(p_, kContextExponent, policy_);
  return binom_->reduce_to(ring(e));
}

Residue PrimeContext::bernoulli(const BigInt& index, int r) {
  auto it = bernoulli_cache_.find(index);
  if (it == bernoulli_cache_.end() || it->second.r < r) {
    const auto method = p_ >= 11 ? BernoulliMethod::Extraction : BernoulliMethod::Auto;
    BernoulliResidue b = bernoulli_mod(index, p_, r, method);
    it = bernoulli_cache_.insert_or_assign(index, std::move(b)).first;
  }
  return it->second.value.reduce_to(ring(r));
}

bool PrimeContext::is_wolstenholme() {
  if (p_word_ < 5) return false;
  return (binom(5) - ring(5).one()).valuation() >= 4;
}

namespace {

// Arithmetic at one working exponent: constants, powers of p, and context lookups in Z/p^W.
class At {
 public:
  At(PrimeContext& ctx, int working) : ctx_(ctx), w_(working), ring_(ctx.ring(working)) {}

  const PrimePowerRing& ring() const { return ring_; }
  Residue one() const { return ring_.one(); }
  Residue zero() const { return ring_.zero(); }
  Residue c(long num, long den = 1) const { return ring_.make(Rational(num, den)); }
  Residue pk(int k) const { return ring_.make(pow_big(ctx_.p(), static_cast<unsigned long>(k))); }
  // p^k * num/den
  Residue pc(int k, long num, long den = 1) const { return pk(k) * c(num, den); }
  Residue R(int n) const { return ctx_.R(n, w_); }
  Residue H(int k) const { return ctx_.H(k, w_); }
  Residue binom() const { return ctx_.binom(w_); }
  // B_index known mod p^r, lifted into Z/p^W (only meaningful once multiplied by p^(W-r)).
  Residue B(const BigInt& index, int r) const { return ring_.make(ctx_.bernoulli(index, r).value()); }

 private:
  PrimeContext& ctx_;
  int w_;
  PrimePowerRing ring_;
};

struct BernoulliIndices {
  BigInt p_minus_3, p_minus_5, p2_p_4, p3_p2_2, p4_p3_2, p4_p3_4;

  explicit BernoulliIndices(const BigInt& p) {
    const BigInt p2 = p * p, p3 = p2 * p, p4 = p3 * p;
    p_minus_3 = p - 3;
    p_minus_5 = p - 5;
    p2_p_4 = p2 - p - 4;
    p3_p2_2 = p3 - p2 - 2;
    p4_p3_2 = p4 - p3 - 2;
    p4_p3_4 = p4 - p3 - 4;
  }
};

using Evaluator = std::function<CongruenceReport(PrimeContext&, const SuiteOptions&)>;

struct Check {
  CheckInfo info;
  Evaluator eval;
};

CongruenceReport na(const std::string& name, PrimeContext& ctx, int required, const std::string& why) {
  return not_applicable(name, ctx.p(), required, why);
}

Rational harmonic_exact(std::uint64_t p, int order) {
  // order 1: sum 1/k; order 2: sum_{i<j} 1/(ij)
  Rational h1 = 0, h2 = 0;
  for (std::uint64_t k = 1; k < p; ++k) {
    Rational inv_k(1, static_cast<unsigned long>(k));
    h2 += h1 * inv_k;
    h1 += inv_k;
  }
  return order == 1 ? h1 : h2;
}

CongruenceReport theorem_main(PrimeContext& ctx, const SuiteOptions& opt, const std::string& name) {
  const std::uint64_t p = ctx.p_word();
  if (p < 3) return na(name, ctx, 7, "needs p >= 3");
  int e = opt.theorem_exponent.value_or(p == 7 ? 6 : 7);
  if (e < 1 || e + 1 > kContextExponent) throw Error(ErrorCode::ExponentOutOfRange, "theorem exponent must be 1..8");
  if (p == 3 || p == 5) {
    Rational rhs = 1 - 2 * Rational(static_cast<unsigned long>(p)) * harmonic_exact(p, 1) +
                   4 * Rational(static_cast<unsigned long>(p * p)) * harmonic_exact(p, 2);
    rhs.canonicalize();
    if (rhs.get_den() != 1) throw Error(ErrorCode::InternalInconsistency, "exact right-hand side is not an integer");
    BigInt lhs;
    mpz_bin_uiui(lhs.get_mpz_t(), 2 * p - 1, p - 1);
    return compare_exact(name, ctx.p(), lhs, BigInt(rhs.get_num()), e, e + 1);
  }
  At a(ctx, e + 1);
  Residue rhs = a.one() - a.pc(1, 2) * a.H(1) + a.pc(2, 4) * a.H(2);
  return compare(name, a.binom(), rhs, e);
}

std::vector<Check> build_registry() {
  std::vector<Check> checks;
  auto add = [&](std::string name, std::string group, CheckCategory cat, Evaluator eval) {
    checks.push_back({{std::move(name), std::move(group), cat}, std::move(eval)});
  };
  const auto claim = CheckCategory::Claim;
  const auto lemma = CheckCategory::Lemma;

  add("eq1.1", "eq1.1", claim, [](PrimeContext& ctx, const SuiteOptions&) {
    if (ctx.p_word() < 5) return na("eq1.1", ctx, 3, "needs p >= 5");
    At a(ctx, 4);
    return compare("eq1.1", a.binom(), a.one(), 3);
  });
  add("eq1.2-harmonic", "eq1.2", claim, [](PrimeContext& ctx, const SuiteOptions&) {
    if (ctx.p_word() < 5) return na("eq1.2-harmonic", ctx, 4, "needs p >= 5");
    At a(ctx, 5);
    return compare("eq1.2-harmonic", a.binom(), a.one() - a.pc(1, 2) * a.R(1), 4);
  });
  // Opposite sign on 2pR_1, the form equal to the Bernoulli side.
  add("eq1.2-harmonic-corrected", "eq1.2", claim, [](PrimeContext& ctx, const SuiteOptions&) {
    if (ctx.p_word() < 5) return na("eq1.2-harmonic-corrected", ctx, 4, "needs p >= 5");
    At a(ctx, 5);
    return compare("eq1.2-harmonic-corrected", a.binom(), a.one() + a.pc(1, 2) * a.R(1), 4);
  });
  add("eq1.2-bernoulli", "eq1.2", claim, [](PrimeContext& ctx, const SuiteOptions&) {
    if (ctx.p_word() < 5) return na("eq1.2-bernoulli", ctx, 4, "needs p >= 5");
    At a(ctx, 5);
    BernoulliIndices ix(ctx.p());
    return compare("eq1.2-bernoulli", a.binom(), a.one() - a.pc(3, 2, 3) * a.B(ix.p_minus_3, 2), 4);
  });
  add("eq1.3", "eq1.3", claim, [](PrimeContext& ctx, const SuiteOptions&) {
    if (ctx.p_word() < 11) return na("eq1.3", ctx, 6, "needs p >= 11");
    At a(ctx, 7);
    BernoulliIndices ix(ctx.p());
    Residue rhs = a.one() - a.pk(3) * a.B(ix.p3_p2_2, 4) + a.pc(5, 1, 3) * a.B(ix.p_minus_3, 2) -
                  a.pc(5, 6, 5) * a.B(ix.p_minus_5, 2);
    return compare("eq1.3", a.binom(), rhs, 6);
  });
  add("thm1.1", "thm1.1", claim,
      [](PrimeContext& ctx, const SuiteOptions& opt) { return theorem_main(ctx, opt, "thm1.1"); });
  // sign: coefficient of p^6 B_{p-3}; -1 as printed, +1 after restoring the p^6 B_{p^4-p^3-2} term
  // dropped from the R_2 expansion.
  auto eq15 = [&](std::string name, int sign) {
    add(name, "eq1.5", claim, [name, sign](PrimeContext& ctx, const SuiteOptions&) {
      if (ctx.p_word() < 11) return na(name, ctx, 7, "needs p >= 11");
      At a(ctx, 8);
      BernoulliIndices ix(ctx.p());
      const Residue b3 = a.B(ix.p_minus_3, 2);
      Residue rhs = a.one() - a.pk(3) * a.B(ix.p4_p3_2, 5) +
                    a.pk(5) * (a.c(1, 2) * a.B(ix.p2_p_4, 3) - a.c(2) * a.B(ix.p4_p3_4, 3)) +
                    a.pk(6) * (a.c(2, 9) * b3 * b3 + a.c(sign, 3) * b3 - a.c(1, 10) * a.B(ix.p_minus_5, 2));
      return compare(name, a.binom(), rhs, 7);
    });
  };
  eq15("eq1.5", -1);
  eq15("eq1.5-corrected", 1);
  add("cor1.4-harmonic", "cor1.4", claim, [](PrimeContext& ctx, const SuiteOptions&) {
    if (ctx.p_word() < 7) return na("cor1.4-harmonic", ctx, 6, "needs p >= 7");
    At a(ctx, 7);
    return compare("cor1.4-harmonic", a.binom(), a.one() - a.pc(1, 2) * a.R(1) - a.pc(2, 2) * a.R(2), 6);
  });
  add("cor1.4-cubic", "cor1.4", claim, [](PrimeContext& ctx, const SuiteOptions&) {
    if (ctx.p_word() < 7) return na("cor1.4-cubic", ctx, 6, "needs p >= 7");
    At a(ctx, 7);
    return compare("cor1.4-cubic", a.binom(), a.one() + a.pc(1, 2) * a.R(1) + a.pc(3, 2, 3) * a.R(3), 6);
  });
  add("cor1.5-harmonic", "cor1.5", claim, [](PrimeContext& ctx, const SuiteOptions&) {
    if (ctx.p_word() < 7) return na("cor1.5-harmonic", ctx, 5, "needs p >= 7");
    At a(ctx, 6);
    return compare("cor1.5-harmonic", a.binom(), a.one() + a.pc(1, 2) * a.R(1), 5);
  });
  add("cor1.5-square", "cor1.5", claim, [](PrimeContext& ctx, const SuiteOptions&) {
    if (ctx.p_word() < 7) return na("cor1.5-square", ctx, 5, "needs p >= 7");
    At a(ctx, 6);
    return compare("cor1.5-square", a.binom(), a.one() - a.pk(2) * a.R(2), 5);
  });
  add("eq1.6-a", "eq1.6", claim, [](PrimeContext& ctx, const SuiteOptions&) {
    if (ctx.p_word() < 5 || !ctx.is_wolstenholme()) return na("eq1.6-a", ctx, 7, "not a Wolstenholme prime");
    At a(ctx, 8);
    return compare("eq1.6-a", a.binom(), a.one() - a.pc(1, 2) * a.R(1) - a.pc(2, 2) * a.R(2), 7);
  });
  add("eq1.6-b", "eq1.6", claim, [](PrimeContext& ctx, const SuiteOptions&) {
    if (ctx.p_word() < 5 || !ctx.is_wolstenholme()) return na("eq1.6-b", ctx, 7, "not a Wolstenholme prime");
    At a(ctx, 8);
    return compare("eq1.6-b", a.binom(), a.one() + a.pc(1, 2) * a.R(1) + a.pc(3, 2, 3) * a.R(3), 7);
  });

  // Power-sum divisibilities.
  for (int n = 1; n <= 6; ++n) {
    const std::string name = "lem2.1-R" + std::to_string(n);
    const int req = (n % 2 == 1) ? 2 : 1;
    add(name, "lem2.1", lemma, [name, n, req](PrimeContext& ctx, const SuiteOptions&) {
      if (ctx.p_word() < 5 || static_cast<std::uint64_t>(n) + 3 > ctx.p_word()) {
        return na(name, ctx, req, "needs p >= 5 and n <= p - 3");
      }
      At a(ctx, req + 1);
      return compare(name, a.R(n), a.zero(), req);
    });
  }
  add("lem2.2-H3", "lem2.2", lemma, [](PrimeContext& ctx, const SuiteOptions&) {
    if (ctx.p_word() < 7) return na("lem2.2-H3", ctx, 6, "needs p >= 7");
    At a(ctx, 7);
    return compare("lem2.2-H3", a.H(3), a.c(1, 3) * a.R(3) - a.c(1, 2) * a.R(1) * a.R(2), 6);
  });
  add("lem2.2-H4", "lem2.2", lemma, [](PrimeContext& ctx, const SuiteOptions&) {
    if (ctx.p_word() < 7) return na("lem2.2-H4", ctx, 4, "needs p >= 7");
    At a(ctx, 5);
    return compare("lem2.2-H4", a.H(4), a.c(1, 8) * a.R(2) * a.R(2) - a.c(1, 4) * a.R(4), 4);
  });
  for (auto [k, req] : {std::pair{2, 1}, std::pair{3, 2}, std::pair{4, 1}}) {
    const std::string name = "lem2.2-H" + std::to_string(k) + "div";
    add(name, "lem2.2", lemma, [name, k = k, req = req](PrimeContext& ctx, const SuiteOptions&) {
      if (ctx.p_word() < 7) return na(name, ctx, req, "needs p >= 7");
      At a(ctx, req + 1);
      return compare(name, a.H(k), a.zero(), req);
    });
  }
  for (int r = 1; r <= 6; ++r) {
    const std::string name = "lem2.3-r" + std::to_string(r);
    add(name, "lem2.3", lemma, [name, r](PrimeContext& ctx, const SuiteOptions&) {
      if (ctx.p_word() < 3) return na(name, ctx, r + 1, "needs odd p");
      At a(ctx, r + 2);
      Residue rhs = a.zero();
      for (int i = 1; i <= r; ++i) rhs = rhs - a.pk(i) * a.R(i + 1);
      return compare(name, a.c(2) * a.R(1), rhs, r + 1);
    });
  }
  add("lem2.4-a", "lem2.4", lemma, [](PrimeContext& ctx, const SuiteOptions&) {
    if (ctx.p_word() < 7) return na("lem2.4-a", ctx, 4, "needs p >= 7");
    At a(ctx, 5);
    return compare("lem2.4-a", a.c(2) * a.R(1), -(a.pk(1) * a.R(2)), 4);
  });
  add("lem2.4-b", "lem2.4", lemma, [](PrimeContext& ctx, const SuiteOptions&) {
    if (ctx.p_word() < 11) return na("lem2.4-b", ctx, 4, "needs p >= 11");
    At a(ctx, 5);
    return compare("lem2.4-b", a.c(2) * a.R(3), -(a.pc(1, 3) * a.R(4)), 4);
  });

  // Intermediate congruences in the proof of the main theorem.
  auto chain = [&](std::string name, int req, std::function<std::pair<Residue, Residue>(const At&)> sides) {
    add(name, "proof-chain", lemma, [name, req, sides](PrimeContext& ctx, const SuiteOptions&) {
      if (ctx.p_word() < 11) return na(name, ctx, req, "needs p >= 11");
      At a(ctx, req + 1);
      auto [lhs, rhs] = sides(a);
      return compare(name, lhs, rhs, req);
    });
  };
  chain("eq2.8", 7, [](const At& a) {
    Residue rhs = a.one();
    for (int k = 1; k <= 4; ++k) rhs = rhs + a.pk(k) * a.H(k);
    return std::pair{a.binom(), rhs};
  });
  chain("eq2.9", 7, [](const At& a) {
    const Residue r1 = a.R(1), r2 = a.R(2), r3 = a.R(3), r4 = a.R(4);
    Residue rhs = a.one() + a.pk(1) * r1 + a.pc(2, 1, 2) * (r1 * r1 - r2) +
                  a.pc(3, 1, 6) * (a.c(2) * r3 - a.c(3) * r1 * r2) + a.pc(4, 1, 8) * (r2 * r2 - a.c(2) * r4);
    return std::pair{a.binom(), rhs};
  });
  chain("eq2.12", 7, [](const At& a) {
    const Residue r1 = a.R(1), r2 = a.R(2), r3 = a.R(3);
    Residue rhs = a.one() + a.pk(1) * r1 + a.pc(2, 1, 2) * (r1 * r1 - r2) - a.pc(3, 3, 4) * r1 * r2 +
                  a.pc(3, 1, 2) * r3;
    return std::pair{a.binom(), rhs};
  });
  chain("eq2.13", 6, [](const At& a) {
    return std::pair{a.c(2) * a.R(1), -(a.pk(1) * a.R(2)) - a.pk(2) * a.R(3) - a.pk(3) * a.R(4)};
  });
  chain("eq2.14", 7, [](const At& a) {
    return std::pair{a.pk(3) * a.R(3), -(a.pc(1, 6) * a.R(1)) - a.pc(2, 3) * a.R(2)};
  });
  chain("eq2.15", 7, [](const At& a) {
    const Residue r1 = a.R(1), r2 = a.R(2);
    Residue rhs = a.one() - a.pc(1, 2) * r1 - a.pc(2, 2) * r2 + a.pc(2, 1, 4) * r1 * (a.c(2) * r1 - a.pc(1, 3) * r2);
    return std::pair{a.binom(), rhs};
  });
  chain("eq2.16", 7, [](const At& a) {
    const Residue r1 = a.R(1), r2 = a.R(2);
    return std::pair{a.binom(), a.one() - a.pc(1, 2) * r1 + a.pc(2, 2) * (r1 * r1 - r2)};
  });
  chain("thm1.1-H5div", 2, [](const At& a) { return std::pair{a.H(5), a.zero()}; });
  chain("thm1.1-H6div", 1, [](const At& a) { return std::pair{a.H(6), a.zero()}; });

  // Bernoulli-number expressions of R_1, R_1^2 and R_2.
  auto bern = [&](std::string name, int req, std::function<std::pair<Residue, Residue>(const At&, const BernoulliIndices&)> sides) {
    add(name, "lem3.5", lemma, [name, req, sides](PrimeContext& ctx, const SuiteOptions&) {
      if (ctx.p_word() < 11) return na(name, ctx, req, "needs p >= 11");
      At a(ctx, req + 1);
      BernoulliIndices ix(ctx.p());
      auto [lhs, rhs] = sides(a, ix);
      return compare(name, lhs, rhs, req);
    });
  };
  bern("lem3.5-i", 6, [](const At& a, const BernoulliIndices& ix) {
    Residue rhs = -(a.pc(2, 1, 2) * a.B(ix.p4_p3_2, 5)) - a.pc(4, 1, 4) * a.B(ix.p2_p_4, 3) +
                  a.pc(5, 1, 6) * a.B(ix.p_minus_3, 2) + a.pc(5, 1, 20) * a.B(ix.p_minus_5, 2);
    return std::pair{a.R(1), rhs};
  });
  bern("lem3.5-ii", 5, [](const At& a, const BernoulliIndices& ix) {
    const Residue b = a.B(ix.p_minus_3, 2);
    return std::pair{a.R(1) * a.R(1), a.pc(4, 1, 9) * b * b};
  });
  bern("lem3.5-iii", 5, [](const At& a, const BernoulliIndices& ix) {
    return std::pair{a.R(2), a.pk(1) * a.B(ix.p4_p3_2, 5) + a.pk(3) * a.B(ix.p4_p3_4, 3)};
  });
  // Kummer's factor (1 - p^3/2) on B_{p^6-p^5-2} contributes -(p^4/2) B_{p^4-p^3-2}.
  bern("lem3.5-iii-corrected", 5, [](const At& a, const BernoulliIndices& ix) {
    const Residue ba = a.B(ix.p4_p3_2, 5);
    return std::pair{a.R(2), a.pk(1) * ba - a.pc(4, 1, 2) * ba + a.pk(3) * a.B(ix.p4_p3_4, 3)};
  });
  for (auto coeffs : {KummerCoefficients::Printed, KummerCoefficients::Corrected}) {
    const std::string name = coeffs == KummerCoefficients::Printed ? "eq3.3-kummer" : "eq3.3-kummer-corrected";
    add(name, "eq3.3", lemma, [name, coeffs](PrimeContext& ctx, const SuiteOptions&) {
      const std::uint64_t p = ctx.p_word();
      if (p < 5) return na(name, ctx, 0, "needs p >= 5");
      const long m = static_cast<long>(p) - 3;
      const int r = static_cast<int>(std::min<long>(3, m - 1));
      if (m + r * static_cast<long>(p - 1) > kExactBernoulliCap) {
        return na(name, ctx, r, "indices beyond the exact Bernoulli cap");
      }
      return kummer_alternating_check(m, ctx.p(), r, coeffs);
    });
  }

  add("thm1.1-p8", "probes", CheckCategory::Probe, [](PrimeContext& ctx, const SuiteOptions&) {
    if (ctx.p_word() < 7) return na("thm1.1-p8", ctx, 8, "needs p >= 7");
    SuiteOptions at8;
    at8.theorem_exponent = 8;
    return as_probe(theorem_main(ctx, at8, "thm1.1-p8"));
  });
  add("rem1.5-residual", "probes", CheckCategory::Probe, [](PrimeContext& ctx, const SuiteOptions&) {
    if (ctx.p_word() < 7) return na("rem1.5-residual", ctx, 6, "needs p >= 7");
    At a(ctx, 7);
    const Residue r1 = a.R(1);
    Residue lhs = a.c(2) * r1 - a.pk(1) * r1 * r1 + a.pk(1) * a.R(2) + a.pc(2, 1, 3) * a.R(3);
    return as_probe(compare("rem1.5-residual", lhs, a.zero(), 6));
  });
  return checks;
}

const std::vector<Check>& registry() {
  static const std::vector<Check> checks = build_registry();
  return checks;
}

const Check& find_check(const std::string& name) {
  for (const auto& c : registry()) {
    if (c.info.name == name) return c;
  }
  throw Error(ErrorCode::UnknownCheckName, name);
}

std::vector<CongruenceReport> run_named(const BigInt& p, std::initializer_list<const char*> names,
                                        const SuiteOptions& options = {}) {
  PrimeContext ctx(p);
  std::vector<CongruenceReport> out;
  for (const char* n : names) out.push_back(find_check(n).eval(ctx, options));
  return out;
}

}  // namespace

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> v;
    for (const auto& c : registry()) v.push_back(c.info);
    return v;
  }();
  return infos;
}

std::vector<std::string> resolve_selection(const std::vector<std::string>& selection) {
  std::set<std::string> chosen;
  for (std::string token : selection) {
    if (token == "cor1.3") token = "eq1.5";
    if (token == "eq1.2-glaisher") token = "eq1.2";
    bool matched = false;
    for (const auto& c : registry()) {
      const auto& info = c.info;
      const bool hit = token == "all" || token == info.name || token == info.group ||
                       (token == "claims" && info.category == CheckCategory::Claim) ||
                       (token == "lemmas" && info.category == CheckCategory::Lemma) ||
                       (token == "probes" && info.category == CheckCategory::Probe);
      if (hit) {
        chosen.insert(info.name);
        matched = true;
      }
    }
    if (!matched) throw Error(ErrorCode::UnknownCheckName, token);
  }
  std::vector<std::string> ordered;
  for (const auto& c : registry()) {
    if (chosen.count(c.info.name)) ordered.push_back(c.info.name);
  }
  return ordered;
}

std::vector<CongruenceReport> run_suite(PrimeContext& ctx, const std::vector<std::string>& resolved_names,
                                        const SuiteOptions& options) {
  std::vector<CongruenceReport> out;
  out.reserve(resolved_names.size());
  for (const auto& name : resolved_names) out.push_back(find_check(name).eval(ctx, options));
  return out;
}

std::vector<CongruenceReport> run_suite(const BigInt& p, const std::vector<std::string>& selection,
                                        const SuiteOptions& options, Backend policy) {
  const auto names = resolve_selection(selection);
  PrimeContext ctx(p, policy);
  return run_suite(ctx, names, options);
}

CongruenceReport check_wolstenholme(const BigInt& p) { return run_named(p, {"eq1.1"}).front(); }

std::vector<CongruenceReport> check_glaisher(const BigInt& p) {
  return run_named(p, {"eq1.2-harmonic", "eq1.2-bernoulli"});
}

CongruenceReport check_theorem_main(const BigInt& p, int e) {
  SuiteOptions opt;
  opt.theorem_exponent = e;
  return run_named(p, {"thm1.1"}, opt).front();
}

std::vector<CongruenceReport> check_tauraso(const BigInt& p) { return run_named(p, {"cor1.4-harmonic", "cor1.4-cubic"}); }

std::vector<CongruenceReport> check_mod_p5(const BigInt& p) { return run_named(p, {"cor1.5-harmonic", "cor1.5-square"}); }

std::vector<CongruenceReport> check_bernoulli_forms(const BigInt& p) { return run_named(p, {"eq1.3", "eq1.5"}); }

std::vector<CongruenceReport> check_wprime_conditional(const BigInt& p) {
  PrimeContext ctx(p);
  if (!ctx.is_wolstenholme()) throw Error(ErrorCode::NotWolstenholme, to_decimal(p) + " is not a Wolstenholme prime");
  std::vector<CongruenceReport> out;
  for (const char* n : {"eq1.6-a", "eq1.6-b", "thm1.1-p8"}) out.push_back(find_check(n).eval(ctx, {}));
  return out;
}

}  // namespace wlab
