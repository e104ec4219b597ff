// Brute-force ground truth: complete enumeration of every solution of
// 4/n = 1/x + 1/y + 1/z for one denominator. Slow but independent of all
// theorem-backed constructors, which are tested against it.
#pragma once

#include "es/solution.hpp"

#include <optional>
#include <vector>

namespace es {

struct EnumerationResult {
    std::vector<Triple> triples;  // lexicographic order
    bool truncated = false;       // cap reached; never silently partial
};

/// Every sorted solution for denominator n, in lexicographic order.
/// Scheme: x runs over (n/4, 3n/4] (from n/4 < x and 1/x >= (4/n)/3);
/// a = 4x - n > 0; y runs over (nx/a, 2nx/a] with y >= x;
/// z = n*x*y / (a*y - n*x), accepted iff the division is exact and z >= y.
/// O(n^2)-ish; documented desk bound n <= 1e5 (the CLI enforces it).
EnumerationResult enumerate_all(u64 n, std::optional<u64> cap = std::nullopt);

/// First solution in lexicographic order, or absent when none exists
/// (n = 1 is the only absent case in practice). Short-circuits via a
/// divisor-pair solve of 1/y + 1/z = 4/n - 1/x per x, so it is fast even
/// where full enumeration is not.
std::optional<Triple> first_solution(u64 n);

/// n is "Egyptian of order 3": at least one solution exists.
bool is_egyptian_order3(u64 n);

/// |enumerate_all(n)| with no cap.
u64 count_solutions(u64 n);

}  // namespace es
