#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lucas3/census.hpp"
#include "lucas3/params.hpp"
#include "lucas3/valuation.hpp"

namespace lucas3 {

// Which frequency theorem case covers (P, k):
//   Thm1Case1:  3 coprime to P, delta = 1, any k >= 1
//   Thm1Case2:  3 coprime to P, delta >= 2, k >= 2*delta - 1
//   Thm1Case3:  3 coprime to P, delta >= 2, delta <= k < 2*delta - 1
//   Thm2Case1:  3 divides P, k >= 2*delta - 1
//   Thm2Case2:  3 divides P, delta >= 2, delta <= k < 2*delta - 1
//   Unsupported: k < delta (no closed form; use the census)
enum class TheoremCase {
  Thm1Case1,
  Thm1Case2,
  Thm1Case3,
  Thm2Case1,
  Thm2Case2,
  Unsupported,
};

const char* to_string(TheoremCase c);

// The special index attaining the maximal frequency 3^floor(k/2):
//   J(k) = 2 * 3^(2*floor((k-x)/4) + 1)  when 3 coprime to P, x = 2*delta-1
//   J(k) =     3^(2*floor((k-x)/4) + 1)  when 3 divides P
struct JIndex {
  std::uint64_t index;
  int exponent;
};

JIndex j_index(const DeltaProfile& profile, int k);

// The predictor only covers P >= 1 (the theorems as stated); classify
// throws unsupported_error for P <= 0.
TheoremCase classify(const LucasParams& params, const Modulus3Pow& mod);

// One piecewise line of a theorem case, matched first to last.
struct Prediction {
  TheoremCase tcase;
  int line;  // 1-based line within the case that fired
  std::uint64_t count;
};

Prediction predicted_freq(const LucasParams& params, SequenceKind kind,
                          const Modulus3Pow& mod, std::uint64_t b);

// predicted_freq over every residue in [0, 3^k); zero counts omitted.
std::map<std::uint64_t, std::uint64_t> predicted_histogram(
    const LucasParams& params, SequenceKind kind, const Modulus3Pow& mod);

// Known defects in the source material, attached to reports whenever the
// code path they concern runs.
inline constexpr const char* kFlagAbstractPeriodConstant =
    "abstract-period-constant";  // abstract says 4*3^(k-1); formula and brute force give 8*3^(k-1)
inline constexpr const char* kFlagValuationTypo =
    "valuation-formula-typo";  // printed "ord3(n) + ord3(delta)"; verified reading is ord3(n) + delta
inline constexpr const char* kFlagCase2ExponentReading =
    "case2-index-exponent-reading";  // printed index 2*3^(l-1); verified reading is 2*3^(l-delta)
inline constexpr const char* kFlagZeroClassCountConstant =
    "zero-class-count-constant";  // supporting claim says 2 for b == 0 mod 3^delta; enumeration gives 1

struct VerificationReport {
  TheoremCase tcase;
  std::uint64_t period = 0;

  struct Diff {
    std::uint64_t residue;
    std::uint64_t predicted;
    std::uint64_t actual;
  };
  std::vector<Diff> diffs;
  std::vector<std::string> discrepancy_flags;

  bool ok() const { return diffs.empty(); }
};

// Predicted histogram vs census, residue by residue.
VerificationReport verify(const LucasParams& params, SequenceKind kind,
                          const Modulus3Pow& mod,
                          const CensusOptions& opts = {});

}  // namespace lucas3
