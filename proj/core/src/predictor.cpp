#include "lucas3/predictor.hpp"

#include <algorithm>
#include <string>

#include "lucas3/modeval.hpp"
#include "lucas3/periodicity.hpp"

namespace lucas3 {

const char* to_string(TheoremCase c) {
  switch (c) {
    case TheoremCase::Thm1Case1: return "thm1case1";
    case TheoremCase::Thm1Case2: return "thm1case2";
    case TheoremCase::Thm1Case3: return "thm1case3";
    case TheoremCase::Thm2Case1: return "thm2case1";
    case TheoremCase::Thm2Case2: return "thm2case2";
    case TheoremCase::Unsupported: return "unsupported";
  }
  return "?";
}

JIndex j_index(const DeltaProfile& profile, int k) {
  const int x = 2 * profile.delta - 1;
  if (k < x)
    throw std::invalid_argument("j_index: requires k >= 2*delta - 1");
  const int exponent = 2 * ((k - x) / 4) + 1;
  const std::uint64_t lead = profile.branch == Branch::NotDivisible3 ? 2 : 1;
  return {lead * pow3_u64(exponent), exponent};
}

TheoremCase classify(const LucasParams& params, const Modulus3Pow& mod) {
  if (params.p() <= 0)
    throw unsupported_error(
        "classify: the frequency theorems cover P >= 1 only; "
        "use the census for other P");
  DeltaProfile prof = delta_of(params);
  const int k = mod.k();
  if (k < prof.delta) return TheoremCase::Unsupported;
  if (prof.branch == Branch::NotDivisible3) {
    if (prof.delta == 1) return TheoremCase::Thm1Case1;
    return k >= 2 * prof.delta - 1 ? TheoremCase::Thm1Case2
                                   : TheoremCase::Thm1Case3;
  }
  return k >= 2 * prof.delta - 1 ? TheoremCase::Thm2Case1
                                 : TheoremCase::Thm2Case2;
}

namespace {

// One piecewise line: b matches when b mod `modulus` is one of `refs`.
struct Line {
  int number;
  std::uint64_t modulus;
  std::vector<std::uint64_t> refs;
  std::uint64_t count;
};

struct CaseLines {
  TheoremCase tcase;
  std::vector<Line> lines;
  int fallback_line;
  std::uint64_t fallback_count;
};

std::vector<std::uint64_t> with_negation(std::uint64_t r, std::uint64_t m) {
  std::uint64_t neg = negmod(r, m);
  if (neg == r) return {r};
  return {r, neg};
}

// Every reference residue is evaluated, never tabulated: 0 = u_0, 1 = u_1,
// P = v_1, 2 = v_0, and the special classes come straight from the doubling
// kernel at the line's own modulus.
CaseLines build_lines(const LucasParams& params, SequenceKind kind,
                      const Modulus3Pow& mod, TheoremCase tcase,
                      const DeltaProfile& prof) {
  const int k = mod.k();
  const int delta = prof.delta;
  const std::uint64_t m = mod.m();
  const bool is_u = kind == SequenceKind::U;

  CaseLines out{tcase, {}, 0, 0};
  auto u_at = [&](const ExactInt& n, const Modulus3Pow& at) {
    return eval_mod(params, SequenceKind::U, n, at);
  };
  auto v_at = [&](const ExactInt& n, const Modulus3Pow& at) {
    return eval_mod(params, SequenceKind::V, n, at);
  };
  auto mod_at = [&](int kk) { return Modulus3Pow::pow3(kk, kHardKMax); };

  switch (tcase) {
    case TheoremCase::Thm1Case1:
    case TheoremCase::Thm1Case2: {
      const bool plus_two = tcase == TheoremCase::Thm1Case1;
      const std::uint64_t bonus = plus_two ? 2 : 0;
      const JIndex j = j_index(prof, k);
      const std::uint64_t top =
          is_u ? u_at(ExactInt(j.index), mod) : v_at(0, mod);
      out.lines.push_back({1, m, with_negation(top, m), pow3_u64(k / 2) + bonus});
      const int l_lo = plus_two ? 1 : delta;
      for (int l = (k - 1) / 2; l >= l_lo; --l) {
        const Modulus3Pow ml = mod_at(2 * l + 1);
        const ExactInt idx = ExactInt(is_u ? 2 : 4) * pow3_u64(l - delta);
        const std::uint64_t r = is_u ? u_at(idx, ml) : v_at(idx, ml);
        out.lines.push_back(
            {2, ml.m(), with_negation(r, ml.m()), 2 * pow3_u64(l) + bonus});
      }
      if (plus_two) {
        out.fallback_line = 3;
        out.fallback_count = 2;
      } else {
        const Modulus3Pow md = mod_at(delta);
        std::vector<std::uint64_t> base = {u_at(0, md)};
        for (std::uint64_t r :
             with_negation(is_u ? u_at(1, md) : v_at(1, md), md.m()))
          base.push_back(r);
        out.lines.push_back({3, md.m(), base, 2});
        out.fallback_line = 4;
        out.fallback_count = 0;
      }
      break;
    }
    case TheoremCase::Thm1Case3: {
      const std::uint64_t top = is_u ? u_at(2, mod) : v_at(0, mod);
      out.lines.push_back({1, m, with_negation(top, m), pow3_u64(k - delta)});
      const Modulus3Pow md = mod_at(delta);
      std::vector<std::uint64_t> base = {u_at(0, md)};
      for (std::uint64_t r :
           with_negation(is_u ? u_at(1, md) : v_at(1, md), md.m()))
        base.push_back(r);
      out.lines.push_back({2, md.m(), base, 2});
      out.fallback_line = 3;
      out.fallback_count = 0;
      break;
    }
    case TheoremCase::Thm2Case1: {
      const JIndex j = j_index(prof, k);
      const std::uint64_t top =
          is_u ? u_at(ExactInt(j.index), mod) : v_at(0, mod);
      out.lines.push_back({1, m, {top}, pow3_u64(k / 2)});
      for (int l = (k - 1) / 2; l >= delta; --l) {
        const Modulus3Pow ml = mod_at(2 * l + 1);
        const ExactInt idx = ExactInt(is_u ? 1 : 2) * pow3_u64(l - delta);
        const std::uint64_t r = is_u ? u_at(idx, ml) : v_at(idx, ml);
        out.lines.push_back({2, ml.m(), {r}, 2 * pow3_u64(l)});
      }
      out.lines.push_back({3, pow3_u64(delta), {0}, 1});
      out.fallback_line = 4;
      out.fallback_count = 0;
      break;
    }
    case TheoremCase::Thm2Case2: {
      const std::uint64_t top = is_u ? u_at(1, mod) : v_at(0, mod);
      out.lines.push_back({1, m, {top}, pow3_u64(k - delta)});
      out.lines.push_back({2, pow3_u64(delta), {0}, 1});
      out.fallback_line = 3;
      out.fallback_count = 0;
      break;
    }
    case TheoremCase::Unsupported:
      throw unsupported_error("predictor: no theorem covers k < delta; "
                              "use the census");
  }
  return out;
}

Prediction match_lines(const CaseLines& cl, std::uint64_t b) {
  for (const Line& line : cl.lines) {
    const std::uint64_t r = b % line.modulus;
    if (std::find(line.refs.begin(), line.refs.end(), r) != line.refs.end())
      return {cl.tcase, line.number, line.count};
  }
  return {cl.tcase, cl.fallback_line, cl.fallback_count};
}

CaseLines lines_for(const LucasParams& params, SequenceKind kind,
                    const Modulus3Pow& mod) {
  const TheoremCase tcase = classify(params, mod);
  if (tcase == TheoremCase::Unsupported)
    throw unsupported_error("predictor: no theorem covers k < delta; "
                            "use the census");
  return build_lines(params, kind, mod, tcase, delta_of(params));
}

}  // namespace

Prediction predicted_freq(const LucasParams& params, SequenceKind kind,
                          const Modulus3Pow& mod, std::uint64_t b) {
  if (b >= mod.m())
    throw std::invalid_argument("predicted_freq: residue out of range");
  return match_lines(lines_for(params, kind, mod), b);
}

std::map<std::uint64_t, std::uint64_t> predicted_histogram(
    const LucasParams& params, SequenceKind kind, const Modulus3Pow& mod) {
  const CaseLines cl = lines_for(params, kind, mod);
  std::map<std::uint64_t, std::uint64_t> hist;
  auto hint = hist.end();
  for (std::uint64_t b = 0; b < mod.m(); ++b) {
    Prediction p = match_lines(cl, b);
    if (p.count != 0) hint = hist.emplace_hint(hint, b, p.count);
  }
  return hist;
}

VerificationReport verify(const LucasParams& params, SequenceKind kind,
                          const Modulus3Pow& mod, const CensusOptions& opts) {
  VerificationReport report;
  report.tcase = classify(params, mod);
  if (report.tcase == TheoremCase::Unsupported)
    throw unsupported_error("verify: no theorem covers k < delta; "
                            "use the census");

  auto predicted = predicted_histogram(params, kind, mod);
  Census actual = census(params, kind, mod, opts);
  report.period = actual.period;

  auto pit = predicted.begin();
  auto ait = actual.counts.begin();
  while (pit != predicted.end() || ait != actual.counts.end()) {
    if (ait == actual.counts.end() ||
        (pit != predicted.end() && pit->first < ait->first)) {
      report.diffs.push_back({pit->first, pit->second, 0});
      ++pit;
    } else if (pit == predicted.end() || ait->first < pit->first) {
      report.diffs.push_back({ait->first, 0, ait->second});
      ++ait;
    } else {
      if (pit->second != ait->second)
        report.diffs.push_back({pit->first, pit->second, ait->second});
      ++pit;
      ++ait;
    }
  }

  if (report.tcase == TheoremCase::Thm1Case2)
    report.discrepancy_flags.push_back(kFlagCase2ExponentReading);
  if (delta_of(params).branch == Branch::Divisible3)
    report.discrepancy_flags.push_back(kFlagZeroClassCountConstant);
  return report;
}

}  // namespace lucas3
