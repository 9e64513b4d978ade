#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lucas3 {

// Runtime cap on the modulus exponent. 3^24 < 2^39, so a product of two
// residues fits comfortably in the 128-bit widening multiply used by the
// modular kernels.
inline constexpr int kDefaultKMax = 24;

// Absolute cap: 3^40 < 2^64, the largest exponent for which a residue still
// fits in a uint64 and a residue product in unsigned __int128.
inline constexpr int kHardKMax = 40;

inline constexpr std::int64_t kDefaultExactBound = 4096;
inline constexpr std::uint64_t kDefaultIterationBudget = 100'000'000;

enum class SequenceKind { U, V };

inline const char* to_string(SequenceKind kind) {
  return kind == SequenceKind::U ? "u" : "v";
}

// Thrown where no closed form covers the request (k below delta, or a
// parameter the frequency theorems do not speak about).
struct unsupported_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Thrown when an enumeration would exceed its iteration budget.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The recurrence coefficient P of x_n = P*x_{n-1} + x_{n-2}.
// P = 0 collapses the period structure and is rejected.
class LucasParams {
 public:
  explicit LucasParams(std::int64_t p) : p_(p) {
    if (p == 0) throw std::invalid_argument("LucasParams: P must be nonzero");
  }

  std::int64_t p() const noexcept { return p_; }

 private:
  std::int64_t p_;
};

std::uint64_t pow3_u64(int k);  // k in [0, kHardKMax]

// A modulus of the form 3^k, the only moduli the public surface accepts.
class Modulus3Pow {
 public:
  static Modulus3Pow pow3(int k, int kmax = kDefaultKMax) {
    if (kmax < 0 || kmax > kHardKMax)
      throw std::invalid_argument("Modulus3Pow: kmax out of range");
    if (k < 0 || k > kmax)
      throw std::invalid_argument("Modulus3Pow: k must be in [0, " +
                                  std::to_string(kmax) + "], got " +
                                  std::to_string(k));
    return Modulus3Pow(k);
  }

  int k() const noexcept { return k_; }
  std::uint64_t m() const noexcept { return m_; }

 private:
  explicit Modulus3Pow(int k) : k_(k), m_(pow3_u64(k)) {}

  int k_;
  std::uint64_t m_;
};

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  std::uint64_t s = a + b;  // a, b < m <= 3^40 < 2^63: no wrap
  return s >= m ? s - m : s;
}

inline std::uint64_t negmod(std::uint64_t a, std::uint64_t m) {
  return a == 0 ? 0 : m - a;
}

// Least nonnegative residue of a signed value.
inline std::uint64_t residue_of(std::int64_t x, std::uint64_t m) {
  std::int64_t r = x % static_cast<std::int64_t>(m);
  if (r < 0) r += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(r);
}

}  // namespace lucas3
