// Explicit limits for every search that is not intrinsically finite.
// Nothing in the library loops without one of these (or a proven bound).
#pragma once

#include "es/arith.hpp"

namespace es {

struct SearchBounds {
    /// Largest n the brute-force oracle accepts from the CLI; the scan is
    /// O(n^2)-ish so this is a time-budget line, not a correctness one.
    /// Overridable at the CLI via the ES_MAX_ORACLE_N environment variable.
    u64 oracle_max_n = 100000;

    /// Census range ceiling when duv fields are requested. Near the top of
    /// this range worst-case witnesses push the identity check toward its
    /// 128-bit limit, where it fails loudly rather than wrapping.
    u64 census_duv_max_hi = 10000000;

    /// Census range ceiling when per-prime solution counts are requested
    /// (full enumeration per prime dominates everything else).
    u64 census_count_max_hi = 100000;

    /// Default t ceiling for the bounded thm_c divisor search.
    u64 thm_c_default_t_max = 20;
};

inline constexpr SearchBounds kDefaultBounds{};

}  // namespace es
