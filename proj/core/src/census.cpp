#include "lucas3/census.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "lucas3/modeval.hpp"

namespace lucas3 {

namespace {

// Above this modulus a dense count array stops paying for itself.
constexpr std::uint64_t kDenseModulusCap = 4'782'969;  // 3^14

struct SeqStepper {
  std::uint64_t m, pm;
  std::uint64_t x0, x1;  // (x_n, x_{n+1})

  std::uint64_t take() {
    std::uint64_t x = x0;
    std::uint64_t next = addmod(mulmod(pm, x1, m), x0, m);
    x0 = x1;
    x1 = next;
    return x;
  }
};

// Stepper positioned at index `start`, seeded by the doubling kernel.
SeqStepper stepper_at(const LucasParams& params, SequenceKind kind,
                      const Modulus3Pow& mod, std::uint64_t start) {
  const std::uint64_t m = mod.m();
  const std::uint64_t pm = residue_of(params.p(), m);
  if (start == 0) {
    std::uint64_t x0 = kind == SequenceKind::U ? 0 : 2 % m;
    std::uint64_t x1 = kind == SequenceKind::U ? 1 % m : pm;
    return {m, pm, x0, x1};
  }
  LucasPair pair = eval_pair_mod(params, ExactInt(start), mod);
  const std::uint64_t inv2 = (m + 1) / 2;
  const std::uint64_t dm = static_cast<std::uint64_t>(
      ((static_cast<__int128>(params.p()) * params.p() + 4) %
       static_cast<__int128>(m)));
  std::uint64_t u1 = mulmod(addmod(mulmod(pm, pair.u, m), pair.v, m), inv2, m);
  std::uint64_t v1 = mulmod(
      addmod(mulmod(dm, pair.u, m), mulmod(pm, pair.v, m), m), inv2, m);
  if (kind == SequenceKind::U) return {m, pm, pair.u, u1};
  return {m, pm, pair.v, v1};
}

std::uint64_t resolve_period(const LucasParams& params, SequenceKind kind,
                             const Modulus3Pow& mod, std::uint64_t budget) {
  DeltaProfile prof = delta_of(params);
  if (mod.k() >= prof.delta) return period_closed(params, kind, mod).h;
  return period_bruteforce(params, kind, mod, budget).h;
}

}  // namespace

Census census(const LucasParams& params, SequenceKind kind,
              const Modulus3Pow& mod, const CensusOptions& opts) {
  if (mod.k() < 1)
    throw std::invalid_argument("census: requires k >= 1");
  if (opts.chunks < 1)
    throw std::invalid_argument("census: chunks must be >= 1");

  const std::uint64_t h = resolve_period(params, kind, mod, opts.budget);
  if (h > opts.budget)
    throw resource_error("census: period " + std::to_string(h) +
                         " exceeds budget " + std::to_string(opts.budget));

  const std::uint64_t m = mod.m();
  const bool dense = m <= kDenseModulusCap;
  std::vector<std::uint64_t> dense_counts;
  std::unordered_map<std::uint64_t, std::uint64_t> sparse_counts;
  if (dense) dense_counts.assign(m, 0);

  const std::uint64_t nchunks =
      std::min<std::uint64_t>(static_cast<std::uint64_t>(opts.chunks), h);
  const std::uint64_t chunk_len = (h + nchunks - 1) / nchunks;
  for (std::uint64_t start = 0; start < h; start += chunk_len) {
    const std::uint64_t end = std::min(h, start + chunk_len);
    SeqStepper stepper = stepper_at(params, kind, mod, start);
    if (dense) {
      for (std::uint64_t n = start; n < end; ++n) ++dense_counts[stepper.take()];
    } else {
      for (std::uint64_t n = start; n < end; ++n) ++sparse_counts[stepper.take()];
    }
  }

  Census result{params, kind, mod, h, {}};
  if (dense) {
    for (std::uint64_t b = 0; b < m; ++b)
      if (dense_counts[b] != 0) result.counts.emplace_hint(
          result.counts.end(), b, dense_counts[b]);
  } else {
    result.counts.insert(sparse_counts.begin(), sparse_counts.end());
  }
  return result;
}

OmegaSet omega(const Census& c) {
  OmegaSet values;
  for (const auto& [b, count] : c.counts) values.insert(count);
  if (static_cast<std::uint64_t>(c.counts.size()) < c.mod.m())
    values.insert(0);
  return values;
}

StabilityReport stability_report(const LucasParams& params, SequenceKind kind,
                                 int k_lo, int k_hi,
                                 const CensusOptions& opts) {
  if (k_lo < 1 || k_hi < k_lo)
    throw std::invalid_argument("stability_report: need 1 <= k_lo <= k_hi");

  StabilityReport report{params, kind, {}, {}};
  for (int k = k_lo; k <= k_hi; ++k) {
    Census c = census(params, kind, Modulus3Pow::pow3(k), opts);
    report.entries.push_back({k, c.period, omega(c)});
  }
  for (std::size_t i = 0; i + 1 < report.entries.size(); ++i) {
    if (report.entries[i].omega == report.entries[i + 1].omega)
      report.stable_pairs.push_back(report.entries[i].k);
  }
  return report;
}

IndexClass lemma_lift_class(Branch branch, SequenceKind kind) {
  if (branch == Branch::NotDivisible3)
    return kind == SequenceKind::U ? IndexClass::NotTwoMod4
                                   : IndexClass::NotZeroMod4;
  return kind == SequenceKind::U ? IndexClass::Even : IndexClass::Odd;
}

namespace {

bool in_class(IndexClass cls, std::uint64_t n) {
  switch (cls) {
    case IndexClass::NotTwoMod4: return n % 4 != 2;
    case IndexClass::NotZeroMod4: return n % 4 != 0;
    case IndexClass::Even: return n % 2 == 0;
    case IndexClass::Odd: return n % 2 == 1;
    case IndexClass::TwoMod4: return n % 4 == 2;
    case IndexClass::ZeroMod4: return n % 4 == 0;
  }
  return false;
}

}  // namespace

bool check_lift_refinement(const LucasParams& params, SequenceKind kind,
                           const Modulus3Pow& mod, std::uint64_t b,
                           std::optional<IndexClass> index_class,
                           const CensusOptions& opts) {
  DeltaProfile prof = delta_of(params);
  if (mod.k() < prof.delta)
    throw std::invalid_argument("check_lift_refinement: requires k >= delta");
  if (b >= mod.m())
    throw std::invalid_argument("check_lift_refinement: residue out of range");

  const IndexClass lemma_class = lemma_lift_class(prof.branch, kind);
  if (index_class && *index_class != lemma_class)
    throw std::invalid_argument(
        "check_lift_refinement: the per-index claim only holds on one index "
        "class per kind, and the requested class is not it");

  const std::uint64_t h = period_closed(params, kind, mod).h;
  if (3 * h > opts.budget)
    throw resource_error("check_lift_refinement: 3h exceeds budget");

  const Modulus3Pow lifted = Modulus3Pow::pow3(mod.k() + 1, kHardKMax);
  std::vector<std::uint64_t> terms(3 * h);
  SeqStepper stepper = stepper_at(params, kind, lifted, 0);
  for (std::uint64_t n = 0; n < 3 * h; ++n) terms[n] = stepper.take();

  const std::uint64_t m = mod.m();
  for (std::uint64_t n = 0; n < h; ++n) {
    if (!in_class(lemma_class, n)) continue;
    if (terms[n] % m != b) continue;
    std::uint64_t lift0 = terms[n], lift1 = terms[n + h], lift2 = terms[n + 2 * h];
    std::uint64_t expected[3] = {b, b + m, b + 2 * m};
    std::uint64_t got[3] = {lift0, lift1, lift2};
    std::sort(std::begin(got), std::end(got));
    if (!std::equal(std::begin(got), std::end(got), std::begin(expected)))
      return false;
  }
  return true;
}

bool lift_aggregate_holds(const LucasParams& params, SequenceKind kind,
                          const Modulus3Pow& mod, const CensusOptions& opts) {
  DeltaProfile prof = delta_of(params);
  if (mod.k() < prof.delta)
    throw std::invalid_argument("lift_aggregate_holds: requires k >= delta");

  const Modulus3Pow lifted = Modulus3Pow::pow3(mod.k() + 1, kHardKMax);
  Census base = census(params, kind, mod, opts);
  Census refined = census(params, kind, lifted, opts);

  std::uint64_t base_total = 0, refined_total = 0;
  for (const auto& [b, c] : refined.counts) refined_total += c;
  const std::uint64_t m = mod.m();
  for (const auto& [b, c] : base.counts) {
    base_total += c;
    std::uint64_t lifted_sum = refined.count_at(b) + refined.count_at(b + m) +
                               refined.count_at(b + 2 * m);
    if (lifted_sum != 3 * c) return false;
  }
  return refined_total == 3 * base_total;
}

}  // namespace lucas3
