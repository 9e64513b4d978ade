#include "lucas3/exact.hpp"

#include <cstdlib>
#include <string>
#include <utility>

namespace lucas3 {

namespace {

// Iterate the recurrence from the seeds; |n| <= bound keeps this cheap.
ExactInt eval_nonneg(std::int64_t p, SequenceKind kind, std::int64_t n) {
  ExactInt prev = kind == SequenceKind::U ? 0 : 2;
  ExactInt cur = kind == SequenceKind::U ? 1 : ExactInt(p);
  if (n == 0) return prev;
  for (std::int64_t i = 1; i < n; ++i) {
    ExactInt next = p * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

ExactInt eval_exact(const LucasParams& params, SequenceKind kind,
                    std::int64_t n, std::int64_t bound) {
  if (n == INT64_MIN || std::abs(n) > bound)
    throw std::range_error("eval_exact: |n| exceeds bound " +
                           std::to_string(bound));
  if (n >= 0) return eval_nonneg(params.p(), kind, n);

  // Reflection: u_{-n} = (-1)^(n+1) u_n, v_{-n} = (-1)^n v_n.
  ExactInt value = eval_nonneg(params.p(), kind, -n);
  bool n_odd = (-n) % 2 != 0;
  bool negate = kind == SequenceKind::U ? !n_odd : n_odd;
  return negate ? ExactInt(-value) : value;
}

}  // namespace lucas3
