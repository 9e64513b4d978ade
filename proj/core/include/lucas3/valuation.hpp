#pragma once

#include <cstdint>

#include "lucas3/exact.hpp"
#include "lucas3/params.hpp"

namespace lucas3 {

enum class Branch { NotDivisible3, Divisible3 };

inline const char* to_string(Branch b) {
  return b == Branch::NotDivisible3 ? "coprime-to-3" : "divisible-by-3";
}

// The key 3-adic invariant:
//   3 does not divide P:  delta = ord_3(P^2 + 2)   (>= 1, since P^2 == 1 mod 3)
//   3 divides P:          delta = ord_3(P)
struct DeltaProfile {
  Branch branch;
  int delta;
};

DeltaProfile delta_of(const LucasParams& params);

// ord_3 of a nonzero exact integer.
int ord3(const ExactInt& x);
int ord3_u64(std::uint64_t x);

// Closed-form 3-adic valuation of u_n (n >= 1; u_0 = 0 is a domain error):
//   3 coprime to P:   ord_3(n) + delta if 4 | n, else 0
//   3 divides P:      ord_3(n) + delta if 2 | n, else 0
int ord3_u(const LucasParams& params, std::int64_t n);

// Closed-form 3-adic valuation of v_n (any n >= 0; v_0 = 2 gives 0):
//   3 coprime to P:   ord_3(n) + delta if n == 2 mod 4, else 0
//   3 divides P:      ord_3(n) + delta if n odd, else 0
int ord3_v(const LucasParams& params, std::int64_t n);

// Independent oracle: evaluate the term exactly and divide out 3s.
int ord3_exact_oracle(const LucasParams& params, SequenceKind kind,
                      std::int64_t n, std::int64_t bound = kDefaultExactBound);

}  // namespace lucas3
