#pragma once

#include <cstdint>

#include "lucas3/exact.hpp"
#include "lucas3/params.hpp"

namespace lucas3 {

// One joint state (u_n mod m, v_n mod m) at index n.
struct LucasPair {
  std::uint64_t u = 0;
  std::uint64_t v = 0;
  ExactInt n = 0;
};

// u_n mod 3^k (or v_n mod 3^k) by fast doubling, O(log n) modular steps.
// n may have any sign and any magnitude.
std::uint64_t eval_mod(const LucasParams& params, SequenceKind kind,
                       const ExactInt& n, const Modulus3Pow& mod);

// Both components at once; the census jump-ahead seeds chunks with this.
LucasPair eval_pair_mod(const LucasParams& params, const ExactInt& n,
                        const Modulus3Pow& mod);

}  // namespace lucas3
