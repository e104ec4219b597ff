// Solution data model for 4/n = 1/x + 1/y + 1/z: the sorted Triple,
// Type I/II classification for prime denominators, and the structural-form
// predicates (duv-form, gcd-form, x=y, y=z).
#pragma once

#include "es/arith.hpp"

#include <compare>
#include <optional>

namespace es {

/// A solution (x, y, z), always stored with x <= y <= z.
struct Triple {
    u64 x = 0;
    u64 y = 0;
    u64 z = 0;

    friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// For prime p every valid triple has p | z and p ∤ x, so the split is on y:
/// Type I when p ∤ y, Type II when p | y. Other is reserved for composite
/// denominators, which are deliberately not analysed further.
enum class SolutionType { TypeI, TypeII, Other };

/// Certificate that a triple is (d·u, d·v, d·u·v) up to sorting, with
/// v = n·p for the congruence parameter n. Valid witnesses always have
/// gcd(u, v) = 1 and p | v.
struct DuvWitness {
    u64 d = 0;
    u64 u = 0;
    u64 v = 0;
    u64 n = 0;

    friend auto operator<=>(const DuvWitness&, const DuvWitness&) = default;
};

/// Sort (a, b, c) and validate against 4/n; throws std::invalid_argument
/// when the identity fails (which means the calling constructor is buggy).
Triple make_triple(u64 n, u64 a, u64 b, u64 c);

/// Type of a valid triple for denominator p. Composite p yields Other.
/// For prime p the structural facts (p ∤ x, x < p, p | z) are asserted and a
/// violation throws std::logic_error — a valid prime triple cannot break them.
SolutionType classify_type(u64 p, const Triple& t);

/// Complete duv-form decision for a valid triple of prime p: a triple has
/// the form (du, dv, duv) iff z | x·y with d = x·y/z dividing both x and y.
/// Returns the witness (d, u=x/d, v=y/d, n=v/p) or absent.
std::optional<DuvWitness> duv_decompose(const Triple& t, u64 p);

/// gcd(x, y, z) = x, equivalently x | y and x | z.
bool is_gcd_form(const Triple& t);

inline bool is_x_eq_y(const Triple& t) { return t.x == t.y; }
inline bool is_y_eq_z(const Triple& t) { return t.y == t.z; }

}  // namespace es
