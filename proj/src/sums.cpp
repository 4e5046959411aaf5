#include "wlab/sums.hpp"

#include <algorithm>
#include <variant>

#include "wlab/error.hpp"
#include "wlab/kernels.hpp"

namespace wlab {
namespace {

template <class A>
std::vector<Residue> lift(const PrimePowerRing& ring, const A& arith, const kernels::Vec<A>& values) {
  std::vector<Residue> out;
  out.reserve(values.size());
  for (const auto& v : values) out.emplace_back(ring, arith.to_big(v));
  return out;
}

}  // namespace

Residue inverse_power_sum(const PrimePowerRing& ring, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "inverse power sums start at n = 1");
  return inverse_power_sums(ring, n).back();
}

std::vector<Residue> inverse_power_sums(const PrimePowerRing& ring, int n_max) {
  if (n_max < 0) throw Error(ErrorCode::InvalidInput, "negative n_max");
  const std::uint64_t p = ring.p_word();
  return std::visit(
      [&](const auto& arith) {
        auto inv = kernels::inverse_table(arith, p);
        auto sums = kernels::inverse_power_sums(arith, inv, n_max);
        std::vector<Residue> out{ring.make(BigInt(ring.p() - 1))};
        auto rest = lift(ring, arith, sums);
        out.insert(out.end(), rest.begin(), rest.end());
        return out;
      },
      ring.arith());
}

Residue power_sum(const PrimePowerRing& ring, const BigInt& n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "power sums need n >= 1");
  const std::uint64_t p = ring.p_word();
  return std::visit(
      [&](const auto& arith) { return Residue(ring, arith.to_big(kernels::power_sum(arith, p, n, ring.totient()))); },
      ring.arith());
}

std::vector<Residue> symmetric_sums(const PrimePowerRing& ring, int k_max) {
  if (k_max < 0 || k_max > 8) throw Error(ErrorCode::InvalidInput, "k_max must be in 0..8");
  const std::uint64_t p = ring.p_word();
  if (p < static_cast<std::uint64_t>(k_max) + 2) {
    throw Error(ErrorCode::InvalidInput, "symmetric sums need p >= k_max + 2");
  }
  return std::visit([&](const auto& arith) { return lift(ring, arith, kernels::symmetric_sums(arith, p, k_max)); },
                    ring.arith());
}

std::vector<Residue> newton_symmetric(std::span<const Residue> R, int k_max) {
  if (R.empty() || static_cast<int>(R.size()) <= k_max) {
    throw Error(ErrorCode::InvalidInput, "Newton's identities need R_1..R_k_max");
  }
  const PrimePowerRing& ring = R[0].ring();
  std::vector<Residue> H{ring.one()};
  for (int k = 1; k <= k_max; ++k) {
    Residue acc = ring.zero();
    for (int i = 1; i <= k; ++i) {
      Residue term = H[k - i] * R[i];
      acc = (i % 2 == 1) ? acc + term : acc - term;
    }
    H.push_back(acc * inv(ring.make(static_cast<long>(k))));
  }
  return H;
}

SumTable build_sum_table(const BigInt& p, int e, Backend policy) {
  PrimePowerRing ring(p, e, policy);
  const std::uint64_t pw = ring.p_word();
  if (pw < 3) throw Error(ErrorCode::InvalidInput, "sum tables need p >= 3");
  const int k_max = static_cast<int>(std::min<std::uint64_t>(kSumTableMaxIndex, pw - 2));
  SumTable table{ring, inverse_power_sums(ring, kSumTableMaxIndex), symmetric_sums(ring, k_max)};
  auto newton = newton_symmetric(std::span<const Residue>(table.R), k_max);
  for (int k = 0; k <= k_max; ++k) {
    if (!(newton[k] == table.H[k])) {
      throw Error(ErrorCode::InternalInconsistency,
                  "H_" + std::to_string(k) + " disagrees between product expansion and Newton's identities");
    }
  }
  return table;
}

}  // namespace wlab
