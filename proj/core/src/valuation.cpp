#include "lucas3/valuation.hpp"

#include <cstdlib>
#include <stdexcept>

namespace lucas3 {

int ord3(const ExactInt& x) {
  if (x == 0) throw std::domain_error("ord3: undefined for 0");
  ExactInt reduced;
  static const ExactInt three = 3;
  return static_cast<int>(
      mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), three.get_mpz_t()));
}

int ord3_u64(std::uint64_t x) {
  if (x == 0) throw std::domain_error("ord3_u64: undefined for 0");
  int e = 0;
  while (x % 3 == 0) {
    x /= 3;
    ++e;
  }
  return e;
}

DeltaProfile delta_of(const LucasParams& params) {
  ExactInt p = params.p();
  if (p % 3 == 0) return {Branch::Divisible3, ord3(p)};
  return {Branch::NotDivisible3, ord3(p * p + 2)};
}

int ord3_u(const LucasParams& params, std::int64_t n) {
  if (n < 1)
    throw std::domain_error("ord3_u: n must be >= 1 (u_0 = 0 has no finite valuation)");
  DeltaProfile prof = delta_of(params);
  if (prof.branch == Branch::NotDivisible3) {
    if (n % 4 != 0) return 0;
  } else {
    if (n % 2 != 0) return 0;
  }
  return ord3_u64(static_cast<std::uint64_t>(n)) + prof.delta;
}

int ord3_v(const LucasParams& params, std::int64_t n) {
  if (n < 0) throw std::domain_error("ord3_v: n must be >= 0");
  DeltaProfile prof = delta_of(params);
  if (prof.branch == Branch::NotDivisible3) {
    if (n % 4 != 2) return 0;
  } else {
    if (n % 2 != 1) return 0;
  }
  return ord3_u64(static_cast<std::uint64_t>(n)) + prof.delta;
}

int ord3_exact_oracle(const LucasParams& params, SequenceKind kind,
                      std::int64_t n, std::int64_t bound) {
  ExactInt value = eval_exact(params, kind, n, bound);
  if (value == 0)
    throw std::domain_error("ord3_exact_oracle: term is 0");
  return ord3(value);
}

}  // namespace lucas3
