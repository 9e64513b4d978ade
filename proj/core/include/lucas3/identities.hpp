#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "lucas3/params.hpp"

namespace lucas3 {

// The algebraic identity suite, checked with exact arithmetic.
// Writing D = P^2 + 4:
//   UDouble        u_{2n} = u_n * v_n                              args: n
//   VDouble        v_{2n} = v_n^2 - 2*(-1)^n                       args: n
//   VDoubleSplit   v_{2n} = u_n*v_{n+1} + u_{n-1}*v_n              args: n
//   UTriple        u_{3n} = u_n * (D*u_n^2 + 3*(-1)^n)             args: n
//   GcdReduction   gcd(u_{q*n+r}, u_n) = gcd(u_n, u_r)             args: n, q, r
//   USum           u_s + u_t*(-1)^{(s-t)/2} = u_{(s+t)/2} * v_{(s-t)/2}   args: s, t
//   UDiff          u_s - u_t*(-1)^{(s-t)/2} = u_{(s-t)/2} * v_{(s+t)/2}   args: s, t
//   VSum           v_s + v_t*(-1)^{(s-t)/2} = v_{(s+t)/2} * v_{(s-t)/2}   args: s, t
//   VDiff          v_s - v_t*(-1)^{(s-t)/2} = D * u_{(s+t)/2} * u_{(s-t)/2} args: s, t
// The four half-index identities require s and t of the same parity;
// violating that is a precondition error, not a false result.
enum class IdentityName {
  UDouble,
  VDouble,
  VDoubleSplit,
  UTriple,
  GcdReduction,
  USum,
  UDiff,
  VSum,
  VDiff,
};

inline constexpr std::array<IdentityName, 9> kAllIdentities = {
    IdentityName::UDouble,  IdentityName::VDouble, IdentityName::VDoubleSplit,
    IdentityName::UTriple,  IdentityName::GcdReduction,
    IdentityName::USum,     IdentityName::UDiff,
    IdentityName::VSum,     IdentityName::VDiff,
};

const char* to_string(IdentityName id);

// Number of integer inputs the identity takes (1, 2 or 3).
int identity_arity(IdentityName id);

// Evaluates both sides exactly and compares.
bool check_identity(const LucasParams& params, IdentityName id,
                    std::span<const std::int64_t> inputs);

}  // namespace lucas3
