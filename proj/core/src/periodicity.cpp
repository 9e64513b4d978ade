#include "lucas3/periodicity.hpp"

#include <string>

#include "lucas3/modeval.hpp"

namespace lucas3 {

PeriodResult period_closed(const LucasParams& params, SequenceKind /*kind*/,
                           const Modulus3Pow& mod) {
  DeltaProfile prof = delta_of(params);
  if (mod.k() < prof.delta)
    throw unsupported_error("period_closed: no closed form for k < delta (k=" +
                            std::to_string(mod.k()) +
                            ", delta=" + std::to_string(prof.delta) + ")");
  std::uint64_t base = prof.branch == Branch::NotDivisible3 ? 8 : 2;
  return {base * pow3_u64(mod.k() - prof.delta), PeriodSource::ClosedForm};
}

PeriodResult period_bruteforce(const LucasParams& params, SequenceKind kind,
                               const Modulus3Pow& mod, std::uint64_t budget) {
  const std::uint64_t m = mod.m();
  if (m == 1) return {1, PeriodSource::BruteForce};

  const std::uint64_t pm = residue_of(params.p(), m);
  const std::uint64_t x0 = kind == SequenceKind::U ? 0 : 2 % m;
  const std::uint64_t x1 = kind == SequenceKind::U ? 1 % m : pm;

  std::uint64_t a = x0, b = x1;
  for (std::uint64_t h = 1; h <= budget; ++h) {
    std::uint64_t next = addmod(mulmod(pm, b, m), a, m);
    a = b;
    b = next;
    if (a == x0 && b == x1) return {h, PeriodSource::BruteForce};
  }
  throw resource_error("period_bruteforce: no return within budget " +
                       std::to_string(budget));
}

namespace {

DeltaProfile require_coprime_branch(const LucasParams& params,
                                    const Modulus3Pow& mod,
                                    const char* what) {
  DeltaProfile prof = delta_of(params);
  if (prof.branch != Branch::NotDivisible3)
    throw std::invalid_argument(std::string(what) +
                                ": only valid when 3 does not divide P");
  if (mod.k() < prof.delta)
    throw std::invalid_argument(std::string(what) + ": requires k >= delta");
  return prof;
}

}  // namespace

bool check_sign_shift(const LucasParams& params, const Modulus3Pow& mod,
                      std::span<const std::int64_t> sample_indices) {
  DeltaProfile prof = require_coprime_branch(params, mod, "check_sign_shift");
  const std::uint64_t m = mod.m();
  const ExactInt shift = 4 * ExactInt(pow3_u64(mod.k() - prof.delta));
  for (std::int64_t n : sample_indices) {
    ExactInt idx = ExactInt(n) + shift;
    std::uint64_t un = eval_mod(params, SequenceKind::U, n, mod);
    std::uint64_t vn = eval_mod(params, SequenceKind::V, n, mod);
    if (eval_mod(params, SequenceKind::U, idx, mod) != negmod(un, m))
      return false;
    if (eval_mod(params, SequenceKind::V, idx, mod) != negmod(vn, m))
      return false;
  }
  return true;
}

bool check_cross_congruence(const LucasParams& params, const Modulus3Pow& mod,
                            std::span<const std::int64_t> sample_indices) {
  DeltaProfile prof =
      require_coprime_branch(params, mod, "check_cross_congruence");
  const std::uint64_t m = mod.m();
  const std::uint64_t step = pow3_u64(mod.k() - prof.delta);
  const std::uint64_t u_step = eval_mod(params, SequenceKind::U, step, mod);
  const std::uint64_t v_step = eval_mod(params, SequenceKind::V, step, mod);
  for (std::int64_t n : sample_indices) {
    std::uint64_t lhs =
        mulmod(u_step, eval_mod(params, SequenceKind::V, n, mod), m);
    ExactInt idx = ExactInt(n) - 2 * ExactInt(step);
    std::uint64_t rhs =
        mulmod(v_step, eval_mod(params, SequenceKind::U, idx, mod), m);
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace lucas3
