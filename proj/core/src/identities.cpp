#include "lucas3/identities.hpp"

#include <stdexcept>
#include <string>

#include "lucas3/exact.hpp"

namespace lucas3 {

const char* to_string(IdentityName id) {
  switch (id) {
    case IdentityName::UDouble: return "u-double";
    case IdentityName::VDouble: return "v-double";
    case IdentityName::VDoubleSplit: return "v-double-split";
    case IdentityName::UTriple: return "u-triple";
    case IdentityName::GcdReduction: return "gcd-reduction";
    case IdentityName::USum: return "u-sum";
    case IdentityName::UDiff: return "u-diff";
    case IdentityName::VSum: return "v-sum";
    case IdentityName::VDiff: return "v-diff";
  }
  return "?";
}

int identity_arity(IdentityName id) {
  switch (id) {
    case IdentityName::UDouble:
    case IdentityName::VDouble:
    case IdentityName::VDoubleSplit:
    case IdentityName::UTriple:
      return 1;
    case IdentityName::GcdReduction:
      return 3;
    default:
      return 2;
  }
}

namespace {

int sign_pow(std::int64_t e) {  // (-1)^e
  return (e % 2 == 0) ? 1 : -1;
}

}  // namespace

bool check_identity(const LucasParams& params, IdentityName id,
                    std::span<const std::int64_t> inputs) {
  if (static_cast<int>(inputs.size()) != identity_arity(id))
    throw std::invalid_argument(
        std::string("check_identity: ") + to_string(id) + " takes " +
        std::to_string(identity_arity(id)) + " inputs");

  // Indices reached by the identities stay within a few multiples of the
  // inputs; give the exact evaluator generous room.
  const std::int64_t bound = kDefaultExactBound;
  auto u = [&](std::int64_t n) {
    return eval_exact(params, SequenceKind::U, n, bound);
  };
  auto v = [&](std::int64_t n) {
    return eval_exact(params, SequenceKind::V, n, bound);
  };
  const ExactInt d = ExactInt(params.p()) * params.p() + 4;

  switch (id) {
    case IdentityName::UDouble: {
      std::int64_t n = inputs[0];
      return u(2 * n) == u(n) * v(n);
    }
    case IdentityName::VDouble: {
      std::int64_t n = inputs[0];
      return v(2 * n) == v(n) * v(n) - 2 * sign_pow(n);
    }
    case IdentityName::VDoubleSplit: {
      std::int64_t n = inputs[0];
      return v(2 * n) == u(n) * v(n + 1) + u(n - 1) * v(n);
    }
    case IdentityName::UTriple: {
      std::int64_t n = inputs[0];
      ExactInt un = u(n);
      return u(3 * n) == un * (d * un * un + 3 * sign_pow(n));
    }
    case IdentityName::GcdReduction: {
      std::int64_t n = inputs[0], q = inputs[1], r = inputs[2];
      ExactInt lhs, rhs;
      ExactInt uqnr = u(q * n + r), un = u(n), ur = u(r);
      mpz_gcd(lhs.get_mpz_t(), uqnr.get_mpz_t(), un.get_mpz_t());
      mpz_gcd(rhs.get_mpz_t(), un.get_mpz_t(), ur.get_mpz_t());
      return lhs == rhs;
    }
    case IdentityName::USum:
    case IdentityName::UDiff:
    case IdentityName::VSum:
    case IdentityName::VDiff: {
      std::int64_t s = inputs[0], t = inputs[1];
      if (((s - t) % 2) != 0)
        throw std::invalid_argument(
            "check_identity: s and t must have the same parity");
      std::int64_t half_diff = (s - t) / 2, half_sum = (s + t) / 2;
      int sgn = sign_pow(half_diff);
      switch (id) {
        case IdentityName::USum:
          return u(s) + u(t) * sgn == u(half_sum) * v(half_diff);
        case IdentityName::UDiff:
          return u(s) - u(t) * sgn == u(half_diff) * v(half_sum);
        case IdentityName::VSum:
          return v(s) + v(t) * sgn == v(half_sum) * v(half_diff);
        default:
          return v(s) - v(t) * sgn == d * u(half_sum) * u(half_diff);
      }
    }
  }
  return false;
}

}  // namespace lucas3
