#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

#include "lucas3/census.hpp"
#include "lucas3/exact.hpp"
#include "lucas3/params.hpp"
#include "lucas3/predictor.hpp"

namespace lucas3::cli {

enum class Command {
  Eval,
  Valuation,
  Period,
  Census,
  Predict,
  Verify,
  Omega,
  Stability,
  Identities,
};

enum class KindSel { U, V, Both };
enum class Format { Json, Csv, Text };

// Exit statuses of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

struct RunConfig {
  Command command = Command::Census;
  std::int64_t P = 1;
  KindSel kind = KindSel::U;
  int k_lo = 1;
  int k_hi = 1;
  bool k_set = false;  // eval switches between exact and modular on this
  std::optional<std::uint64_t> b;
  std::optional<ExactInt> n;
  Format format = Format::Text;
  std::uint64_t budget = kDefaultIterationBudget;
  int kmax = kDefaultKMax;
};

// Runs one command; reports go to `out`, errors to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// "a..b" inclusive; a bare "k" means "k..k".
std::pair<int, int> parse_k_range(const std::string& text);

// JSON round-trip for the report payloads.
nlohmann::json census_to_json(const Census& c);
Census census_from_json(const nlohmann::json& j);
nlohmann::json prediction_to_json(std::uint64_t residue, const Prediction& p);
Prediction prediction_from_json(const nlohmann::json& j);

}  // namespace lucas3::cli
