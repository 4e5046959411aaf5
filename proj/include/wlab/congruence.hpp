#pragma once

// Named verifiers for the congruences satisfied by C(2p-1, p-1). Each check yields one
// CongruenceReport computed one power of p beyond the claim, so "holds at e but not e+1" is
// visible in the residual valuation.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wlab/bernoulli.hpp"
#include "wlab/modring.hpp"
#include "wlab/report.hpp"
#include "wlab/sums.hpp"

namespace wlab {

inline constexpr long kBinomialOracleCap = 10'000;
// Everything a check needs is computed once per prime in Z/p^kContextExponent.
inline constexpr int kContextExponent = 9;

// C(2p-1, p-1) mod p^e from the unit product prod (p + i) / (p - 1)!.
Residue binom_central(const BigInt& p, int e, Backend policy = Backend::Auto);

// Exact big-integer binomial by the multiplicative formula, reduced mod p^e. CapExceeded above
// `cap`.
Residue binom_exact_oracle(const BigInt& p, int e, long cap = kBinomialOracleCap);

// Per-prime cache of sums, binomial and Bernoulli residues shared by all checks on that prime.
// Not thread-safe; build one per worker.
class PrimeContext {
 public:
  explicit PrimeContext(const BigInt& p, Backend policy = Backend::Auto);

  const BigInt& p() const { return p_; }
  std::uint64_t p_word() const { return p_word_; }
  Backend policy() const { return policy_; }

  PrimePowerRing ring(int e) const { return PrimePowerRing(p_, e, policy_); }
  const SumTable& sums();
  Residue R(int n, int e);
  Residue H(int k, int e);
  Residue binom(int e);
  // B_index mod p^r through Kummer reduction and power-sum extraction (exact oracle when p < 11).
  Residue bernoulli(const BigInt& index, int r);
  bool is_wolstenholme();

 private:
  BigInt p_;
  std::uint64_t p_word_;
  Backend policy_;
  std::optional<SumTable> sums_;
  std::optional<Residue> binom_;
  std::map<BigInt, BernoulliResidue> bernoulli_cache_;
};

enum class CheckCategory { Claim, Lemma, Probe };

struct SuiteOptions {
  // Overrides the exponent of the main congruence (thm1.1); otherwise 7 for p >= 11, 6 for p = 7.
  std::optional<int> theorem_exponent;
};

struct CheckInfo {
  std::string name;
  std::string group;
  CheckCategory category;
};

// Registered checks in report order.
const std::vector<CheckInfo>& check_registry();

// Expands selection tokens (check names, groups, "all", "claims", "lemmas", "probes", aliases
// "cor1.3" and "eq1.2-glaisher") to registry names in registry order. UnknownCheckName on an unrecognised token.
std::vector<std::string> resolve_selection(const std::vector<std::string>& selection);

std::vector<CongruenceReport> run_suite(const BigInt& p, const std::vector<std::string>& selection,
                                        const SuiteOptions& options = {}, Backend policy = Backend::Auto);
std::vector<CongruenceReport> run_suite(PrimeContext& ctx, const std::vector<std::string>& resolved_names,
                                        const SuiteOptions& options);

CongruenceReport check_wolstenholme(const BigInt& p);
std::vector<CongruenceReport> check_glaisher(const BigInt& p);
CongruenceReport check_theorem_main(const BigInt& p, int e);
std::vector<CongruenceReport> check_tauraso(const BigInt& p);
std::vector<CongruenceReport> check_mod_p5(const BigInt& p);
std::vector<CongruenceReport> check_bernoulli_forms(const BigInt& p);
// Both mod p^7 forms for a Wolstenholme prime, plus the main congruence probed mod p^8.
// NotWolstenholme when C(2p-1, p-1) is not 1 mod p^4.
std::vector<CongruenceReport> check_wprime_conditional(const BigInt& p);

}  // namespace wlab
