#include "cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lucas3/identities.hpp"
#include "lucas3/modeval.hpp"
#include "lucas3/periodicity.hpp"
#include "lucas3/valuation.hpp"

namespace lucas3::cli {

using nlohmann::json;

std::pair<int, int> parse_k_range(const std::string& text) {
  auto parse_int = [](const std::string& s) {
    std::size_t used = 0;
    int value = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad k value: " + s);
    return value;
  };
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int k = parse_int(text);
    return {k, k};
  }
  int lo = parse_int(text.substr(0, dots));
  int hi = parse_int(text.substr(dots + 2));
  if (lo > hi) throw std::invalid_argument("bad k range: " + text);
  return {lo, hi};
}

json census_to_json(const Census& c) {
  json j;
  j["P"] = c.params.p();
  j["kind"] = to_string(c.kind);
  j["k"] = c.mod.k();
  j["period"] = c.period;
  j["total"] = c.period;
  json hist = json::object();
  for (const auto& [b, count] : c.counts) hist[std::to_string(b)] = count;
  j["histogram"] = hist;
  return j;
}

Census census_from_json(const json& j) {
  Census c{LucasParams(j.at("P").get<std::int64_t>()),
           j.at("kind").get<std::string>() == "u" ? SequenceKind::U
                                                  : SequenceKind::V,
           Modulus3Pow::pow3(j.at("k").get<int>(), kHardKMax),
           j.at("period").get<std::uint64_t>(),
           {}};
  for (const auto& [key, value] : j.at("histogram").items())
    c.counts[std::stoull(key)] = value.get<std::uint64_t>();
  return c;
}

namespace {

TheoremCase case_from_string(const std::string& s) {
  for (TheoremCase c :
       {TheoremCase::Thm1Case1, TheoremCase::Thm1Case2, TheoremCase::Thm1Case3,
        TheoremCase::Thm2Case1, TheoremCase::Thm2Case2,
        TheoremCase::Unsupported})
    if (s == to_string(c)) return c;
  throw std::invalid_argument("unknown theorem case: " + s);
}

}  // namespace

json prediction_to_json(std::uint64_t residue, const Prediction& p) {
  json j;
  j["residue"] = residue;
  j["case"] = to_string(p.tcase);
  j["line"] = p.line;
  j["count"] = p.count;
  return j;
}

Prediction prediction_from_json(const json& j) {
  return Prediction{case_from_string(j.at("case").get<std::string>()),
                    j.at("line").get<int>(),
                    j.at("count").get<std::uint64_t>()};
}

namespace {

const char* command_name(Command c) {
  switch (c) {
    case Command::Eval: return "eval";
    case Command::Valuation: return "valuation";
    case Command::Period: return "period";
    case Command::Census: return "census";
    case Command::Predict: return "predict";
    case Command::Verify: return "verify";
    case Command::Omega: return "omega";
    case Command::Stability: return "stability";
    case Command::Identities: return "identities";
  }
  return "?";
}

std::vector<SequenceKind> kinds_of(KindSel sel) {
  switch (sel) {
    case KindSel::U: return {SequenceKind::U};
    case KindSel::V: return {SequenceKind::V};
    case KindSel::Both: return {SequenceKind::U, SequenceKind::V};
  }
  return {};
}

std::vector<std::string> case_flags(TheoremCase tcase, Branch branch) {
  std::vector<std::string> flags;
  if (tcase == TheoremCase::Thm1Case2)
    flags.push_back(kFlagCase2ExponentReading);
  if (branch == Branch::Divisible3)
    flags.push_back(kFlagZeroClassCountConstant);
  return flags;
}

struct Ctx {
  const RunConfig& cfg;
  LucasParams params;
  DeltaProfile prof;
  CensusOptions opts;

  explicit Ctx(const RunConfig& c)
      : cfg(c), params(c.P), prof(delta_of(params)) {
    opts.budget = c.budget;
  }

  Modulus3Pow mod(int k) const { return Modulus3Pow::pow3(k, cfg.kmax); }

  json base_row(SequenceKind kind) const {
    json row;
    row["P"] = cfg.P;
    row["kind"] = to_string(kind);
    row["delta"] = prof.delta;
    row["branch"] = to_string(prof.branch);
    row["discrepancy_flags"] = json::array();
    return row;
  }
};

std::int64_t require_small_n(const RunConfig& cfg, const char* cmd) {
  if (!cfg.n)
    throw std::invalid_argument(std::string(cmd) + " requires --n");
  if (!cfg.n->fits_slong_p())
    throw std::invalid_argument(std::string(cmd) +
                                ": --n out of machine range");
  return cfg.n->get_si();
}

int handle_eval(const Ctx& ctx, json& rows) {
  if (!ctx.cfg.n) throw std::invalid_argument("eval requires --n");
  for (SequenceKind kind : kinds_of(ctx.cfg.kind)) {
    if (ctx.cfg.k_set) {
      for (int k = ctx.cfg.k_lo; k <= ctx.cfg.k_hi; ++k) {
        json row = ctx.base_row(kind);
        row["k"] = k;
        row["n"] = ctx.cfg.n->get_str();
        row["value"] = eval_mod(ctx.params, kind, *ctx.cfg.n, ctx.mod(k));
        rows.push_back(std::move(row));
      }
    } else {
      std::int64_t n = require_small_n(ctx.cfg, "eval (exact)");
      json row;
      row["P"] = ctx.cfg.P;
      row["kind"] = to_string(kind);
      row["n"] = ctx.cfg.n->get_str();
      row["value"] = eval_exact(ctx.params, kind, n).get_str();
      rows.push_back(std::move(row));
    }
  }
  return kExitOk;
}

int handle_valuation(const Ctx& ctx, json& rows) {
  std::int64_t n = require_small_n(ctx.cfg, "valuation");
  for (SequenceKind kind : kinds_of(ctx.cfg.kind)) {
    json row = ctx.base_row(kind);
    row["n"] = n;
    row["valuation"] =
        kind == SequenceKind::U ? ord3_u(ctx.params, n) : ord3_v(ctx.params, n);
    if (n <= kDefaultExactBound)
      row["oracle"] = ord3_exact_oracle(ctx.params, kind, n);
    row["discrepancy_flags"].push_back(kFlagValuationTypo);
    rows.push_back(std::move(row));
  }
  return kExitOk;
}

int handle_period(const Ctx& ctx, json& rows) {
  for (SequenceKind kind : kinds_of(ctx.cfg.kind)) {
    for (int k = ctx.cfg.k_lo; k <= ctx.cfg.k_hi; ++k) {
      json row = ctx.base_row(kind);
      row["k"] = k;
      if (k >= ctx.prof.delta) {
        PeriodResult res = period_closed(ctx.params, kind, ctx.mod(k));
        row["period"] = res.h;
        row["source"] = to_string(res.source);
        row["empirical"] = false;
      } else {
        PeriodResult res =
            period_bruteforce(ctx.params, kind, ctx.mod(k), ctx.cfg.budget);
        row["closed_form"] = "unsupported";
        row["period"] = res.h;
        row["source"] = to_string(res.source);
        row["empirical"] = true;
      }
      if (ctx.prof.branch == Branch::NotDivisible3)
        row["discrepancy_flags"].push_back(kFlagAbstractPeriodConstant);
      rows.push_back(std::move(row));
    }
  }
  return kExitOk;
}

int handle_census(const Ctx& ctx, json& rows) {
  for (SequenceKind kind : kinds_of(ctx.cfg.kind)) {
    for (int k = ctx.cfg.k_lo; k <= ctx.cfg.k_hi; ++k) {
      Census c = census(ctx.params, kind, ctx.mod(k), ctx.opts);
      json row = ctx.base_row(kind);
      row.update(census_to_json(c));
      if (ctx.cfg.b) {
        if (*ctx.cfg.b >= c.mod.m())
          throw std::invalid_argument("census: --b out of range for 3^k");
        row.erase("histogram");
        row["b"] = *ctx.cfg.b;
        row["count"] = c.count_at(*ctx.cfg.b);
      }
      rows.push_back(std::move(row));
    }
  }
  return kExitOk;
}

int handle_predict(const Ctx& ctx, json& rows) {
  for (SequenceKind kind : kinds_of(ctx.cfg.kind)) {
    for (int k = ctx.cfg.k_lo; k <= ctx.cfg.k_hi; ++k) {
      Modulus3Pow mod = ctx.mod(k);
      TheoremCase tcase = classify(ctx.params, mod);
      json row = ctx.base_row(kind);
      row["k"] = k;
      row["case"] = to_string(tcase);
      for (const auto& flag : case_flags(tcase, ctx.prof.branch))
        row["discrepancy_flags"].push_back(flag);
      if (ctx.cfg.b) {
        Prediction p = predicted_freq(ctx.params, kind, mod, *ctx.cfg.b);
        row["prediction"] = prediction_to_json(*ctx.cfg.b, p);
      } else {
        auto hist = predicted_histogram(ctx.params, kind, mod);
        std::uint64_t total = 0;
        json jh = json::object();
        for (const auto& [b, count] : hist) {
          total += count;
          jh[std::to_string(b)] = count;
        }
        row["histogram"] = std::move(jh);
        row["total"] = total;
        row["period"] = period_closed(ctx.params, kind, mod).h;
      }
      rows.push_back(std::move(row));
    }
  }
  return kExitOk;
}

int handle_verify(const Ctx& ctx, json& rows) {
  bool all_ok = true;
  for (SequenceKind kind : kinds_of(ctx.cfg.kind)) {
    for (int k = ctx.cfg.k_lo; k <= ctx.cfg.k_hi; ++k) {
      VerificationReport rep = verify(ctx.params, kind, ctx.mod(k), ctx.opts);
      json row = ctx.base_row(kind);
      row["k"] = k;
      row["case"] = to_string(rep.tcase);
      row["period"] = rep.period;
      row["ok"] = rep.ok();
      json diffs = json::array();
      for (const auto& d : rep.diffs) {
        json jd;
        jd["residue"] = d.residue;
        jd["predicted"] = d.predicted;
        jd["actual"] = d.actual;
        diffs.push_back(std::move(jd));
      }
      row["diffs"] = std::move(diffs);
      for (const auto& flag : rep.discrepancy_flags)
        row["discrepancy_flags"].push_back(flag);
      all_ok = all_ok && rep.ok();
      rows.push_back(std::move(row));
    }
  }
  return all_ok ? kExitOk : kExitMismatch;
}

int handle_omega(const Ctx& ctx, json& rows) {
  for (SequenceKind kind : kinds_of(ctx.cfg.kind)) {
    for (int k = ctx.cfg.k_lo; k <= ctx.cfg.k_hi; ++k) {
      Census c = census(ctx.params, kind, ctx.mod(k), ctx.opts);
      json row = ctx.base_row(kind);
      row["k"] = k;
      row["period"] = c.period;
      row["omega"] = json::array();
      for (std::uint64_t value : omega(c)) row["omega"].push_back(value);
      rows.push_back(std::move(row));
    }
  }
  return kExitOk;
}

int handle_stability(const Ctx& ctx, json& rows) {
  for (SequenceKind kind : kinds_of(ctx.cfg.kind)) {
    StabilityReport rep = stability_report(ctx.params, kind, ctx.cfg.k_lo,
                                           ctx.cfg.k_hi, ctx.opts);
    json row = ctx.base_row(kind);
    row["k_lo"] = ctx.cfg.k_lo;
    row["k_hi"] = ctx.cfg.k_hi;
    json entries = json::array();
    for (const auto& e : rep.entries) {
      json je;
      je["k"] = e.k;
      je["period"] = e.period;
      je["omega"] = json::array();
      for (std::uint64_t value : e.omega) je["omega"].push_back(value);
      entries.push_back(std::move(je));
    }
    row["entries"] = std::move(entries);
    row["stable_pairs"] = rep.stable_pairs;
    row["all_adjacent_differ"] = rep.all_adjacent_differ();
    rows.push_back(std::move(row));
  }
  return kExitOk;
}

int handle_identities(const Ctx& ctx, json& rows) {
  bool all_hold = true;
  for (IdentityName id : kAllIdentities) {
    std::uint64_t cases = 0;
    bool holds = true;
    auto probe = [&](std::initializer_list<std::int64_t> args) {
      ++cases;
      holds =
          holds && check_identity(ctx.params, id,
                                  std::span<const std::int64_t>(args));
    };
    switch (identity_arity(id)) {
      case 1:
        for (std::int64_t n = -50; n <= 50; ++n) probe({n});
        break;
      case 2:
        for (std::int64_t s = -50; s <= 50; ++s)
          for (std::int64_t t = s % 2 == 0 ? -50 : -49; t <= 50; t += 2)
            probe({s, t});
        break;
      default:
        for (std::int64_t n = -50; n <= 50; ++n)
          for (std::int64_t q = -5; q <= 5; ++q)
            for (std::int64_t r = -50; r <= 50; ++r) probe({n, q, r});
        break;
    }
    json row;
    row["P"] = ctx.cfg.P;
    row["identity"] = to_string(id);
    row["cases"] = cases;
    row["holds"] = holds;
    rows.push_back(std::move(row));
    all_hold = all_hold && holds;
  }
  return all_hold ? kExitOk : kExitMismatch;
}

// ---- output rendering ----

std::string join_u64(const json& arr, const char* sep) {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : arr) {
    if (!first) os << sep;
    os << v.get<std::uint64_t>();
    first = false;
  }
  return os.str();
}

// Histogram JSON keys are decimal strings; CSV wants numeric order.
std::vector<std::pair<std::uint64_t, std::uint64_t>> sorted_hist(
    const json& hist) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> entries;
  for (const auto& [key, value] : hist.items())
    entries.emplace_back(std::stoull(key), value.get<std::uint64_t>());
  std::sort(entries.begin(), entries.end());
  return entries;
}

void csv_comment(std::ostream& out, const char* command, const json& row,
                 std::initializer_list<const char*> fields) {
  out << "# command=" << command;
  for (const char* f : fields) {
    if (!row.contains(f)) continue;
    const json& v = row.at(f);
    out << ' ' << f << '=';
    if (v.is_string()) out << v.get<std::string>();
    else out << v.dump();
  }
  out << '\n';
}

void emit_csv(std::ostream& out, Command cmd, const json& rows) {
  const char* name = command_name(cmd);
  for (const json& row : rows) {
    switch (cmd) {
      case Command::Eval:
        csv_comment(out, name, row, {"P", "kind", "n", "delta", "branch"});
        if (row.contains("k"))
          out << row.at("k").get<int>() << ',' << row.at("value").dump()
              << '\n';
        else
          out << "exact," << row.at("value").get<std::string>() << '\n';
        break;
      case Command::Valuation:
        csv_comment(out, name, row, {"P", "kind", "n", "delta", "branch"});
        out << row.at("valuation").get<int>() << ',';
        if (row.contains("oracle")) out << row.at("oracle").get<int>();
        out << '\n';
        break;
      case Command::Period:
        csv_comment(out, name, row, {"P", "kind", "delta", "branch"});
        out << row.at("k").get<int>() << ',' << row.at("period").dump() << ','
            << row.at("source").get<std::string>() << ','
            << (row.at("empirical").get<bool>() ? 1 : 0) << '\n';
        break;
      case Command::Census:
      case Command::Predict:
        csv_comment(out, name, row,
                    {"P", "kind", "k", "delta", "branch", "case", "period",
                     "total"});
        if (row.contains("histogram")) {
          for (const auto& [b, count] : sorted_hist(row.at("histogram")))
            out << b << ',' << count << '\n';
        } else if (row.contains("prediction")) {
          const json& p = row.at("prediction");
          out << p.at("residue").dump() << ',' << p.at("line").get<int>()
              << ',' << p.at("count").dump() << '\n';
        } else {
          out << row.at("b").dump() << ',' << row.at("count").dump() << '\n';
        }
        break;
      case Command::Verify:
        csv_comment(out, name, row,
                    {"P", "kind", "k", "delta", "branch", "case", "period",
                     "ok"});
        for (const json& d : row.at("diffs"))
          out << d.at("residue").dump() << ',' << d.at("predicted").dump()
              << ',' << d.at("actual").dump() << '\n';
        break;
      case Command::Omega:
        csv_comment(out, name, row, {"P", "kind", "delta", "branch"});
        out << row.at("k").get<int>() << ',' << row.at("period").dump() << ','
            << join_u64(row.at("omega"), ";") << '\n';
        break;
      case Command::Stability:
        csv_comment(out, name, row,
                    {"P", "kind", "delta", "branch", "k_lo", "k_hi"});
        for (const json& e : row.at("entries"))
          out << e.at("k").get<int>() << ',' << e.at("period").dump() << ','
              << join_u64(e.at("omega"), ";") << '\n';
        out << "stable_pairs," << join_u64(row.at("stable_pairs"), ";")
            << '\n';
        out << "all_adjacent_differ,"
            << (row.at("all_adjacent_differ").get<bool>() ? 1 : 0) << '\n';
        break;
      case Command::Identities:
        csv_comment(out, name, row, {"P"});
        out << row.at("identity").get<std::string>() << ','
            << row.at("cases").dump() << ','
            << (row.at("holds").get<bool>() ? 1 : 0) << '\n';
        break;
    }
  }
}

void emit_text(std::ostream& out, Command cmd, const json& rows) {
  out << command_name(cmd) << ":\n";
  for (const json& row : rows) {
    out << "  -";
    for (const auto& [key, value] : row.items()) {
      if (value.is_object() || value.is_array()) continue;
      out << ' ' << key << '=';
      if (value.is_string()) out << value.get<std::string>();
      else out << value.dump();
    }
    out << '\n';
    if (row.contains("histogram")) {
      for (const auto& [b, count] : sorted_hist(row.at("histogram")))
        out << "      " << b << ": " << count << '\n';
    }
    if (row.contains("prediction"))
      out << "      prediction: " << row.at("prediction").dump() << '\n';
    if (row.contains("diffs") && !row.at("diffs").empty()) {
      for (const json& d : row.at("diffs"))
        out << "      diff b=" << d.at("residue").dump()
            << " predicted=" << d.at("predicted").dump()
            << " actual=" << d.at("actual").dump() << '\n';
    }
    if (row.contains("omega"))
      out << "      omega: {" << join_u64(row.at("omega"), ", ") << "}\n";
    if (row.contains("entries")) {
      for (const json& e : row.at("entries"))
        out << "      k=" << e.at("k").get<int>() << " period="
            << e.at("period").dump() << " omega={"
            << join_u64(e.at("omega"), ", ") << "}\n";
    }
    if (row.contains("discrepancy_flags") &&
        !row.at("discrepancy_flags").empty()) {
      out << "      flags:";
      for (const auto& f : row.at("discrepancy_flags"))
        out << ' ' << f.get<std::string>();
      out << '\n';
    }
  }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.budget == 0)
      throw std::invalid_argument("budget must be positive");
    if (config.k_lo < 0 || config.k_lo > config.k_hi)
      throw std::invalid_argument("bad k range");
    if (config.command != Command::Eval && config.command != Command::Valuation &&
        config.command != Command::Identities && config.k_lo < 1)
      throw std::invalid_argument("k must be >= 1");

    Ctx ctx(config);
    json rows = json::array();
    int status = kExitOk;
    switch (config.command) {
      case Command::Eval: status = handle_eval(ctx, rows); break;
      case Command::Valuation: status = handle_valuation(ctx, rows); break;
      case Command::Period: status = handle_period(ctx, rows); break;
      case Command::Census: status = handle_census(ctx, rows); break;
      case Command::Predict: status = handle_predict(ctx, rows); break;
      case Command::Verify: status = handle_verify(ctx, rows); break;
      case Command::Omega: status = handle_omega(ctx, rows); break;
      case Command::Stability: status = handle_stability(ctx, rows); break;
      case Command::Identities: status = handle_identities(ctx, rows); break;
    }

    switch (config.format) {
      case Format::Json: {
        json report;
        report["command"] = command_name(config.command);
        report["rows"] = std::move(rows);
        out << report.dump(2) << '\n';
        break;
      }
      case Format::Csv:
        emit_csv(out, config.command, rows);
        break;
      case Format::Text:
        emit_text(out, config.command, rows);
        break;
    }
    return status;
  } catch (const resource_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace lucas3::cli
