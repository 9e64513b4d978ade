#pragma once

#include <cstdint>
#include <span>

#include "lucas3/params.hpp"
#include "lucas3/valuation.hpp"

namespace lucas3 {

enum class PeriodSource { ClosedForm, BruteForce };

inline const char* to_string(PeriodSource s) {
  return s == PeriodSource::ClosedForm ? "closed-form" : "brute-force";
}

// Shortest period h with (x_{n+h}, x_{n+h+1}) == (x_n, x_{n+1}) mod 3^k.
struct PeriodResult {
  std::uint64_t h;
  PeriodSource source;
};

// Closed form, valid for k >= delta:
//   8 * 3^(k-delta) when 3 does not divide P, 2 * 3^(k-delta) when it does.
// k < delta has no closed form and raises unsupported_error.
PeriodResult period_closed(const LucasParams& params, SequenceKind kind,
                           const Modulus3Pow& mod);

// State-pair cycle detection from the seeds. The seeds are on the cycle
// (the recurrence is invertible mod 3), so return-to-seed is the true
// shortest period.
PeriodResult period_bruteforce(const LucasParams& params, SequenceKind kind,
                               const Modulus3Pow& mod,
                               std::uint64_t budget = kDefaultIterationBudget);

// Half-period negation, branch 3 coprime to P only (k >= delta):
//   u_{n + 4*3^(k-delta)} == -u_n  and  v_{n + 4*3^(k-delta)} == -v_n mod 3^k
// at every sampled index.
bool check_sign_shift(const LucasParams& params, const Modulus3Pow& mod,
                      std::span<const std::int64_t> sample_indices);

// Cross congruence, branch 3 coprime to P only (k >= delta):
//   u_{3^(k-delta)} * v_n == v_{3^(k-delta)} * u_{n - 2*3^(k-delta)} mod 3^k
// at every sampled index.
bool check_cross_congruence(const LucasParams& params, const Modulus3Pow& mod,
                            std::span<const std::int64_t> sample_indices);

}  // namespace lucas3
