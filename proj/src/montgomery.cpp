#include "wlab/montgomery.hpp"

namespace wlab {

AnyArith make_arith(const BigInt& modulus, Backend policy) {
  if (policy != Backend::Bignum) {
    if (Montgomery<1>::supports(modulus)) return Montgomery<1>(modulus);
    if (Montgomery<2>::supports(modulus)) return Montgomery<2>(modulus);
    if (Montgomery<3>::supports(modulus)) return Montgomery<3>(modulus);
    if (Montgomery<4>::supports(modulus)) return Montgomery<4>(modulus);
    if (policy == Backend::FixedWidth) {
      throw Error(ErrorCode::ExponentOutOfRange, "modulus exceeds the 255-bit fixed-width engine");
    }
  }
  return BigModArith(modulus);
}

}  // namespace wlab
