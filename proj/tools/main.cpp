#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli.hpp"

using lucas3::cli::Command;
using lucas3::cli::Format;
using lucas3::cli::KindSel;
using lucas3::cli::RunConfig;

namespace {

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
  const char* value = std::getenv(name);
  if (!value || !*value) return fallback;
  return std::stoull(value);
}

int env_int(const char* name, int fallback) {
  const char* value = std::getenv(name);
  if (!value || !*value) return fallback;
  return std::stoi(value);
}

struct RawOptions {
  std::string kind = "u";
  std::string k;
  std::string n;
  std::string b;
  std::string format = "text";
};

void add_common(CLI::App* cmd, RunConfig& cfg, RawOptions& raw) {
  cmd->add_option("--P,-P", cfg.P, "recurrence coefficient P (nonzero)");
  cmd->add_option("--kind", raw.kind, "sequence kind: u, v or both");
  cmd->add_option("--k", raw.k, "modulus exponent k, or inclusive range a..b");
  cmd->add_option("--n", raw.n, "sequence index (integer, any size)");
  cmd->add_option("--b", raw.b, "residue to query");
  cmd->add_option("--format", raw.format, "output format: json, csv or text");
  cmd->add_option("--budget", cfg.budget, "iteration budget");
  cmd->add_option("--kmax", cfg.kmax, "largest accepted modulus exponent");
}

int finish_config(RunConfig& cfg, const RawOptions& raw, std::ostream& err) {
  if (raw.kind == "u") cfg.kind = KindSel::U;
  else if (raw.kind == "v") cfg.kind = KindSel::V;
  else if (raw.kind == "both") cfg.kind = KindSel::Both;
  else {
    err << "error: --kind must be u, v or both\n";
    return lucas3::cli::kExitUsage;
  }

  if (raw.format == "json") cfg.format = Format::Json;
  else if (raw.format == "csv") cfg.format = Format::Csv;
  else if (raw.format == "text") cfg.format = Format::Text;
  else {
    err << "error: --format must be json, csv or text\n";
    return lucas3::cli::kExitUsage;
  }

  try {
    if (!raw.k.empty()) {
      auto [lo, hi] = lucas3::cli::parse_k_range(raw.k);
      cfg.k_lo = lo;
      cfg.k_hi = hi;
      cfg.k_set = true;
    }
    if (!raw.n.empty()) cfg.n = lucas3::ExactInt(raw.n);
    if (!raw.b.empty()) cfg.b = std::stoull(raw.b);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return lucas3::cli::kExitUsage;
  }
  return lucas3::cli::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Residue frequencies of Lucas sequences modulo powers of 3"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.budget = env_u64("LUCAS3_BUDGET", cfg.budget);
  cfg.kmax = env_int("LUCAS3_KMAX", cfg.kmax);
  RawOptions raw;

  const std::pair<const char*, Command> commands[] = {
      {"eval", Command::Eval},
      {"valuation", Command::Valuation},
      {"period", Command::Period},
      {"census", Command::Census},
      {"predict", Command::Predict},
      {"verify", Command::Verify},
      {"omega", Command::Omega},
      {"stability", Command::Stability},
      {"identities", Command::Identities},
  };
  for (const auto& [name, command] : commands) {
    CLI::App* sub = app.add_subcommand(name);
    add_common(sub, cfg, raw);
    sub->callback([&cfg, command] { cfg.command = command; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : lucas3::cli::kExitUsage;
  }

  int status = finish_config(cfg, raw, std::cerr);
  if (status != lucas3::cli::kExitOk) return status;
  return lucas3::cli::run(cfg, std::cout, std::cerr);
}
