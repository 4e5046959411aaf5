#pragma once

// Inverse power sums R_n(p), power sums P_n(p) and elementary symmetric sums H_k(p) of the
// reciprocals 1/1, ..., 1/(p-1), all as residues mod p^e. Sequences are indexed by n (or k)
// directly: R[0] = p - 1 and H[0] = 1.

#include <vector>

#include "wlab/modring.hpp"

namespace wlab {

// R_n = sum_{k=1}^{p-1} k^{-n}.
Residue inverse_power_sum(const PrimePowerRing& ring, int n);

// R_0..R_{n_max} from one batch inversion.
std::vector<Residue> inverse_power_sums(const PrimePowerRing& ring, int n_max);

// P_n = sum_{k=1}^{p-1} k^n for n >= 1 of any size.
Residue power_sum(const PrimePowerRing& ring, const BigInt& n);

// H_0..H_{k_max} from the truncated product prod (1 + x/i). Requires p >= k_max + 2.
std::vector<Residue> symmetric_sums(const PrimePowerRing& ring, int k_max);

// H_0..H_{k_max} from R_1..R_{k_max} by Newton's identities k H_k = sum (-1)^{i-1} H_{k-i} R_i.
// `R` is indexed from 0 as above. NotInvertible if p <= k_max.
std::vector<Residue> newton_symmetric(std::span<const Residue> R, int k_max);

struct SumTable {
  PrimePowerRing ring;
  std::vector<Residue> R;  // R_0..R_8
  std::vector<Residue> H;  // H_0..H_{k_max}, k_max = min(8, p - 2)

  const BigInt& p() const { return ring.p(); }
  int exponent() const { return ring.exponent(); }
  const Residue& r(int n) const { return R.at(static_cast<std::size_t>(n)); }
  const Residue& h(int k) const { return H.at(static_cast<std::size_t>(k)); }
};

inline constexpr int kSumTableMaxIndex = 8;

// Builds R and H, computing H twice (product expansion and Newton's identities) and raising
// InternalInconsistency if they disagree.
SumTable build_sum_table(const BigInt& p, int e, Backend policy = Backend::Auto);

}  // namespace wlab
