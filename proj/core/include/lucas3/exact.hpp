#pragma once

#include <cstdint>
#include <gmpxx.h>

#include "lucas3/params.hpp"

namespace lucas3 {

// Exact signed integers. u_n grows geometrically in n, so everything on the
// exact path is arbitrary precision.
using ExactInt = mpz_class;

// u_n or v_n as an exact integer, any sign of n. Indices beyond `bound`
// raise std::range_error.
ExactInt eval_exact(const LucasParams& params, SequenceKind kind,
                    std::int64_t n, std::int64_t bound = kDefaultExactBound);

}  // namespace lucas3
