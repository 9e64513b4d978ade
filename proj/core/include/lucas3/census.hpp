#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "lucas3/params.hpp"
#include "lucas3/periodicity.hpp"
#include "lucas3/valuation.hpp"

namespace lucas3 {

// Residue frequency histogram over one shortest period. Residues with
// count zero are omitted from the map.
struct Census {
  LucasParams params;
  SequenceKind kind;
  Modulus3Pow mod;
  std::uint64_t period = 0;
  std::map<std::uint64_t, std::uint64_t> counts;

  std::uint64_t count_at(std::uint64_t b) const {
    auto it = counts.find(b);
    return it == counts.end() ? 0 : it->second;
  }
};

struct CensusOptions {
  std::uint64_t budget = kDefaultIterationBudget;
  // > 1 splits [0, h) into chunks seeded by eval_pair_mod jump-ahead and
  // merges by addition; the result never depends on the chunk count.
  int chunks = 1;
};

Census census(const LucasParams& params, SequenceKind kind,
              const Modulus3Pow& mod, const CensusOptions& opts = {});

// The set of distinct frequency values over all residues mod 3^k.
// Contains 0 exactly when some residue is never hit.
using OmegaSet = std::set<std::uint64_t>;

OmegaSet omega(const Census& c);

struct StabilityEntry {
  int k;
  std::uint64_t period;
  OmegaSet omega;
};

// Omega chain over a k range, with every adjacent pair compared.
struct StabilityReport {
  LucasParams params;
  SequenceKind kind;
  std::vector<StabilityEntry> entries;
  std::vector<int> stable_pairs;  // k values with Omega(3^k) == Omega(3^(k+1))

  bool all_adjacent_differ() const { return stable_pairs.empty(); }
};

StabilityReport stability_report(const LucasParams& params, SequenceKind kind,
                                 int k_lo, int k_hi,
                                 const CensusOptions& opts = {});

// Index classes of the lift-refinement lemmas. The per-index claim only
// holds on one class per (branch, kind); requesting any other is a
// precondition error.
enum class IndexClass {
  NotTwoMod4,
  NotZeroMod4,
  Even,
  Odd,
  TwoMod4,
  ZeroMod4,
};

IndexClass lemma_lift_class(Branch branch, SequenceKind kind);

// For every index n in the lemma's class within one period of 3^k with
// x_n == b, checks that x_{n + j*h} (j = 0, 1, 2) hit b, b + 3^k, b + 2*3^k
// mod 3^(k+1) in some order. Vacuously true when no index qualifies.
bool check_lift_refinement(const LucasParams& params, SequenceKind kind,
                           const Modulus3Pow& mod, std::uint64_t b,
                           std::optional<IndexClass> index_class = {},
                           const CensusOptions& opts = {});

// Aggregate form, valid for every residue with no index restriction:
//   sum over lambda of counts_{k+1}[b + 3^k*lambda] == 3 * counts_k[b].
bool lift_aggregate_holds(const LucasParams& params, SequenceKind kind,
                          const Modulus3Pow& mod,
                          const CensusOptions& opts = {});

}  // namespace lucas3
