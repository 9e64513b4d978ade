#include <array>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "lucas3/exact.hpp"
#include "lucas3/identities.hpp"
#include "lucas3/modeval.hpp"
#include "lucas3/params.hpp"
#include "test_oracles.hpp"

using namespace lucas3;
namespace oracle = lucas3::testing;

namespace {
constexpr std::array<std::int64_t, 7> kIdentityGrid = {1, 2, 3, 5, 9, -1, -4};

bool check(const LucasParams& p, IdentityName id,
           std::initializer_list<std::int64_t> args) {
  return check_identity(p, id, std::span<const std::int64_t>(args));
}
}  // namespace

TEST_CASE("params validation") {
  CHECK_THROWS_AS(LucasParams(0), std::invalid_argument);
  CHECK(LucasParams(-7).p() == -7);
  CHECK(Modulus3Pow::pow3(3).m() == 27);
  CHECK(Modulus3Pow::pow3(0).m() == 1);
  CHECK_THROWS_AS(Modulus3Pow::pow3(25), std::invalid_argument);
  CHECK(Modulus3Pow::pow3(25, 30).m() == 847288609443ULL);
  CHECK_THROWS_AS(Modulus3Pow::pow3(-1), std::invalid_argument);
  CHECK_THROWS_AS(Modulus3Pow::pow3(5, 99), std::invalid_argument);
}

TEST_CASE("eval_exact seeds and frozen values") {
  CHECK(eval_exact(LucasParams(1), SequenceKind::U, 0) == 0);
  CHECK(eval_exact(LucasParams(1), SequenceKind::U, 1) == 1);
  CHECK(eval_exact(LucasParams(7), SequenceKind::V, 0) == 2);
  CHECK(eval_exact(LucasParams(7), SequenceKind::V, 1) == 7);
  // u_4 = P^3 + 2P at P = 5
  CHECK(eval_exact(LucasParams(5), SequenceKind::U, 4) == 135);
  // reflection of u_4 = 3 at P = 1
  CHECK(eval_exact(LucasParams(1), SequenceKind::U, -4) == -3);
}

TEST_CASE("eval_exact matches running the recurrence backwards") {
  // x_{n-2} = x_n - P*x_{n-1}, started from the seeds.
  for (std::int64_t p : {1, 2, -3}) {
    LucasParams params(p);
    for (SequenceKind kind : {SequenceKind::U, SequenceKind::V}) {
      ExactInt hi = eval_exact(params, kind, 1);
      ExactInt lo = eval_exact(params, kind, 0);
      for (std::int64_t n = -1; n >= -30; --n) {
        ExactInt prev = hi - p * lo;
        hi = lo;
        lo = prev;
        CHECK(eval_exact(params, kind, n) == lo);
      }
    }
  }
}

TEST_CASE("eval_exact reflection symmetry") {
  for (std::int64_t p : kIdentityGrid) {
    LucasParams params(p);
    for (std::int64_t n = 0; n <= 200; ++n) {
      int sign_u = (n % 2 == 0) ? -1 : 1;  // (-1)^(n+1)
      int sign_v = (n % 2 == 0) ? 1 : -1;  // (-1)^n
      CHECK(eval_exact(params, SequenceKind::U, -n) ==
            sign_u * eval_exact(params, SequenceKind::U, n));
      CHECK(eval_exact(params, SequenceKind::V, -n) ==
            sign_v * eval_exact(params, SequenceKind::V, n));
    }
  }
}

TEST_CASE("eval_exact bound") {
  CHECK_THROWS_AS(eval_exact(LucasParams(1), SequenceKind::U, 4097),
                  std::range_error);
  CHECK_THROWS_AS(eval_exact(LucasParams(1), SequenceKind::U, -4097),
                  std::range_error);
  CHECK(eval_exact(LucasParams(1), SequenceKind::U, 20, 20) == 6765);
  CHECK_THROWS_AS(eval_exact(LucasParams(1), SequenceKind::U, 21, 20),
                  std::range_error);
}

TEST_CASE("eval_mod frozen values") {
  CHECK(eval_mod(LucasParams(1), SequenceKind::U, 10, Modulus3Pow::pow3(3)) ==
        1);  // F_10 = 55
  CHECK(eval_mod(LucasParams(1), SequenceKind::V, 0, Modulus3Pow::pow3(2)) ==
        2);
  CHECK(eval_mod(LucasParams(5), SequenceKind::V, 2, Modulus3Pow::pow3(3)) ==
        0);  // v_2 = 27
}

TEST_CASE("doubling agrees with naive iteration") {
  for (std::int64_t p : {1, -1, 2, -2, 3, 5, 9}) {
    LucasParams params(p);
    for (int k = 1; k <= 10; ++k) {
      Modulus3Pow mod = Modulus3Pow::pow3(k);
      for (SequenceKind kind : {SequenceKind::U, SequenceKind::V}) {
        auto terms = oracle::naive_terms(p, kind, 100'001, mod.m());
        for (std::uint64_t n = 0; n <= 100'000; ++n) {
          if (eval_mod(params, kind, static_cast<long>(n), mod) != terms[n]) {
            CAPTURE(p);
            CAPTURE(k);
            CAPTURE(n);
            REQUIRE(eval_mod(params, kind, static_cast<long>(n), mod) ==
                    terms[n]);
          }
        }
        REQUIRE(eval_mod(params, kind, 100'000, mod) == terms[100'000]);
      }
    }
  }
}

TEST_CASE("doubling handles negative indices") {
  LucasParams params(2);
  Modulus3Pow mod = Modulus3Pow::pow3(4);
  for (std::int64_t n = -64; n <= 64; ++n) {
    ExactInt expect_u = eval_exact(params, SequenceKind::U, n);
    ExactInt expect_v = eval_exact(params, SequenceKind::V, n);
    mpz_class mu = expect_u % mod.m();
    mpz_class mv = expect_v % mod.m();
    if (mu < 0) mu += mod.m();
    if (mv < 0) mv += mod.m();
    CHECK(eval_mod(params, SequenceKind::U, n, mod) == mu.get_ui());
    CHECK(eval_mod(params, SequenceKind::V, n, mod) == mv.get_ui());
  }
}

TEST_CASE("recurrence consistency of eval_mod") {
  for (std::int64_t p : {1, 3, 5}) {
    LucasParams params(p);
    for (int k : {1, 5, 10}) {
      Modulus3Pow mod = Modulus3Pow::pow3(k);
      const std::uint64_t pm = residue_of(p, mod.m());
      for (SequenceKind kind : {SequenceKind::U, SequenceKind::V}) {
        std::uint64_t x0 = eval_mod(params, kind, 0, mod);
        std::uint64_t x1 = eval_mod(params, kind, 1, mod);
        for (std::int64_t n = 2; n <= 10'000; ++n) {
          std::uint64_t expected = addmod(mulmod(pm, x1, mod.m()), x0, mod.m());
          std::uint64_t got = eval_mod(params, kind, n, mod);
          REQUIRE(got == expected);
          x0 = x1;
          x1 = got;
        }
      }
    }
  }
}

TEST_CASE("eval_pair_mod frozen values and cross identity") {
  LucasPair pair = eval_pair_mod(LucasParams(1), 6, Modulus3Pow::pow3(1));
  CHECK(pair.u == 2);  // F_6 = 8
  CHECK(pair.v == 0);  // L_6 = 18

  pair = eval_pair_mod(LucasParams(3), 1, Modulus3Pow::pow3(1));
  CHECK(pair.u == 1);
  CHECK(pair.v == 0);  // v_1 = P = 3

  // u_{2n} = u_n * v_n on a spread of indices
  for (std::int64_t p : {1, 2, 5, 9, -4}) {
    LucasParams params(p);
    Modulus3Pow mod = Modulus3Pow::pow3(6);
    for (std::int64_t n : {0L, 1L, 2L, 17L, 100L, 12345L}) {
      LucasPair base = eval_pair_mod(params, n, mod);
      CHECK(eval_mod(params, SequenceKind::U, 2 * n, mod) ==
            mulmod(base.u, base.v, mod.m()));
      CHECK(eval_mod(params, SequenceKind::U, n, mod) == base.u);
      CHECK(eval_mod(params, SequenceKind::V, n, mod) == base.v);
    }
  }
}

TEST_CASE("doubling self-consistency at 2^40") {
  // Two independent doubling routes: the pair at 2^40 directly, and the
  // doubling identities applied to the pair at 2^39 (an even index).
  LucasParams params(1);
  Modulus3Pow mod = Modulus3Pow::pow3(2);
  ExactInt half = ExactInt(1) << 39;
  LucasPair at_half = eval_pair_mod(params, half, mod);
  LucasPair at_full = eval_pair_mod(params, half * 2, mod);
  CHECK(at_full.u == mulmod(at_half.u, at_half.v, mod.m()));
  CHECK(at_full.v ==
        addmod(mulmod(at_half.v, at_half.v, mod.m()), mod.m() - 2, mod.m()));
}

TEST_CASE("identity frozen examples") {
  LucasParams fib(1);
  // u_12 = 144 = 8 * 18 = u_6 * v_6
  CHECK(eval_exact(fib, SequenceKind::U, 12) == 144);
  CHECK(eval_exact(fib, SequenceKind::U, 6) == 8);
  CHECK(eval_exact(fib, SequenceKind::V, 6) == 18);
  CHECK(check(fib, IdentityName::UDouble, {6}));

  // zero case: v_0 - v_0 = D * u_0 * u_0
  CHECK(check(fib, IdentityName::VDiff, {0, 0}));

  // gcd(u_20, u_6) = gcd(u_6, u_2) at P = 2 (both sides are 2)
  LucasParams pell(2);
  CHECK(eval_exact(pell, SequenceKind::U, 20) == 15994428);
  CHECK(eval_exact(pell, SequenceKind::U, 6) == 70);
  CHECK(check(pell, IdentityName::GcdReduction, {6, 3, 2}));
}

TEST_CASE("identity suite on the sample grid") {
  for (std::int64_t p : kIdentityGrid) {
    LucasParams params(p);
    for (std::int64_t n = -20; n <= 20; ++n) {
      CAPTURE(p);
      CAPTURE(n);
      REQUIRE(check(params, IdentityName::UDouble, {n}));
      REQUIRE(check(params, IdentityName::VDouble, {n}));
      REQUIRE(check(params, IdentityName::VDoubleSplit, {n}));
      REQUIRE(check(params, IdentityName::UTriple, {n}));
    }
    for (std::int64_t s = -20; s <= 20; ++s)
      for (std::int64_t t = s % 2 == 0 ? -20 : -19; t <= 20; t += 2) {
        CAPTURE(p);
        CAPTURE(s);
        CAPTURE(t);
        REQUIRE(check(params, IdentityName::USum, {s, t}));
        REQUIRE(check(params, IdentityName::UDiff, {s, t}));
        REQUIRE(check(params, IdentityName::VSum, {s, t}));
        REQUIRE(check(params, IdentityName::VDiff, {s, t}));
      }
    for (std::int64_t n = -6; n <= 6; ++n)
      for (std::int64_t q = -3; q <= 3; ++q)
        for (std::int64_t r = -6; r <= 6; ++r)
          REQUIRE(check(params, IdentityName::GcdReduction, {n, q, r}));
  }
}

TEST_CASE("identity preconditions") {
  LucasParams params(1);
  CHECK_THROWS_AS(check(params, IdentityName::USum, {1, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(check(params, IdentityName::VDiff, {0, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(check(params, IdentityName::UDouble, {1, 2}),
                  std::invalid_argument);
  CHECK(identity_arity(IdentityName::GcdReduction) == 3);
}
