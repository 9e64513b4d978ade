#include "lucas3/modeval.hpp"

namespace lucas3 {

namespace {

struct PairState {
  std::uint64_t u, v;
};

// MSB-first doubling ladder for nonnegative n. The (-1)^t term of the
// v-doubling identity is carried as the running parity of the prefix index,
// never as a computed power.
PairState pair_mod_nonneg(std::int64_t p, const mpz_class& n,
                          std::uint64_t m) {
  if (m == 1) return {0, 0};

  const std::uint64_t pm = residue_of(p, m);
  const std::uint64_t dm = static_cast<std::uint64_t>(
      ((static_cast<__int128>(p) * p + 4) % static_cast<__int128>(m)));
  const std::uint64_t inv2 = (m + 1) / 2;  // m is odd

  PairState s{0, 2 % m};
  bool odd = false;
  const mp_bitcnt_t nbits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (mp_bitcnt_t i = nbits; i-- > 0;) {
    // (u_t, v_t) -> (u_2t, v_2t) = (u_t*v_t, v_t^2 - 2*(-1)^t)
    std::uint64_t u2 = mulmod(s.u, s.v, m);
    std::uint64_t v2 = mulmod(s.v, s.v, m);
    v2 = odd ? addmod(v2, 2 % m, m) : addmod(v2, m - 2 % m, m);
    s = {u2, v2};
    odd = false;
    if (mpz_tstbit(n.get_mpz_t(), i)) {
      // (u_t, v_t) -> (u_{t+1}, v_{t+1}) = ((P*u+v)/2, (D*u+P*v)/2)
      std::uint64_t u1 = mulmod(addmod(mulmod(pm, s.u, m), s.v, m), inv2, m);
      std::uint64_t v1 = mulmod(
          addmod(mulmod(dm, s.u, m), mulmod(pm, s.v, m), m), inv2, m);
      s = {u1, v1};
      odd = true;
    }
  }
  return s;
}

PairState pair_mod_signed(std::int64_t p, const mpz_class& n,
                          std::uint64_t m) {
  if (mpz_sgn(n.get_mpz_t()) >= 0) return pair_mod_nonneg(p, n, m);

  mpz_class abs_n = -n;
  PairState s = pair_mod_nonneg(p, abs_n, m);
  // u_{-n} = (-1)^(n+1) u_n, v_{-n} = (-1)^n v_n
  bool n_odd = mpz_odd_p(abs_n.get_mpz_t()) != 0;
  if (!n_odd) s.u = negmod(s.u, m);
  if (n_odd) s.v = negmod(s.v, m);
  return s;
}

}  // namespace

std::uint64_t eval_mod(const LucasParams& params, SequenceKind kind,
                       const ExactInt& n, const Modulus3Pow& mod) {
  PairState s = pair_mod_signed(params.p(), n, mod.m());
  return kind == SequenceKind::U ? s.u : s.v;
}

LucasPair eval_pair_mod(const LucasParams& params, const ExactInt& n,
                        const Modulus3Pow& mod) {
  PairState s = pair_mod_signed(params.p(), n, mod.m());
  return LucasPair{s.u, s.v, n};
}

}  // namespace lucas3
