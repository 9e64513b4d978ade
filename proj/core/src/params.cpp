#include "lucas3/params.hpp"

namespace lucas3 {

std::uint64_t pow3_u64(int k) {
  if (k < 0 || k > kHardKMax)
    throw std::invalid_argument("pow3_u64: exponent out of range");
  std::uint64_t m = 1;
  for (int i = 0; i < k; ++i) m *= 3;
  return m;
}

}  // namespace lucas3
