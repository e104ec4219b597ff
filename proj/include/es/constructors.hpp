// Theorem-backed solution builders. Each operation constructs verified
// triples (or reports explicit absence) for one structural family:
//   thm_a  — duv-form from a congruence pair (d, n)
//   thm_b  — the equivalent k+1 congruence test
//   thm_c  — bounded (t, w) divisor search that feeds thm_a
//   thm_d  — gcd-form solutions from divisors of p+1
//   lemma_iv — two-unit-fraction solver m/p = 1/x + 1/y
//   thm_e / lemma_ii / thm_f — the y=z and x=y solutions for p ≡ 3 (mod 4)
//   identity_2mod3 — the closed-form solution for n ≡ 2 (mod 3)
//   mordell_hard — membership in the unresolved residue set mod 840
// Every returned triple has passed checked_triple_identity.
#pragma once

#include "es/solution.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace es {

struct ThmAResult {
    DuvWitness witness;
    Triple triple;
};

/// Witness for thm_c_search: w | (k+1+t), w ≡ -1 (mod 3+4t),
/// d = (k+1+t)/w and n = (w+1)/(3+4t) exact.
struct ThmCWitness {
    u64 t = 0;
    u64 w = 0;
    u64 d = 0;
    u64 n = 0;

    friend auto operator<=>(const ThmCWitness&, const ThmCWitness&) = default;
};

struct ThmCResult {
    ThmCWitness witness;
    DuvWitness duv;
    Triple triple;
};

/// All gcd-form triples sharing one x = n.
struct ThmDEntry {
    u64 n = 0;
    std::vector<Triple> triples;  // ascending
};

struct ThmFPair {
    Triple x_eq_y;
    Triple y_eq_z;
    bool relations_verified = false;  // x1 = 2*x2 and 2*z1 = z2
};

/// duv-form construction: when p ≡ -4d (mod 4dn-1), u = (1+np)/(4dn-1) is
/// exact, v = np, and (du, dv, duv) solves 4/p. Returns absent when the
/// congruence fails, or when du >= p (such a triple would break the x < p
/// invariant that valid prime solutions must satisfy).
std::optional<ThmAResult> thm_a_construct(u64 p, u64 d, u64 n);

/// Equivalent congruence on k = (p-1)/4: k+1 ≡ 3dn-d (mod 4dn-1).
/// Agrees exactly with the thm_a congruence for the same (d, n).
/// Throws std::invalid_argument unless p ≡ 1 (mod 4).
bool thm_b_check(u64 p, u64 d, u64 n);

/// Scan t = 0..t_max and, per t, divisors w of k+1+t with w ≡ -1 (mod 3+4t)
/// and w >= 3+4t-1 (so n >= 1), in increasing (t, w) order; the first hit is
/// handed to thm_a_construct. Absence only means "none within t_max".
/// Throws std::invalid_argument unless p ≡ 1 (mod 4).
std::optional<ThmCResult> thm_c_search(u64 p, u64 t_max);

/// All gcd-form solutions: n >= ceil(p/4) with m = 4n-p dividing p+1
/// (finite: m <= p+1). Per hit emits (n, n(p+1)/m, np(p+1)/m), plus
/// (n, 2np, 2np) when m = 1 and (n, np, np) when m = 2. Ordered by n,
/// then by triple. Requires p >= 2.
std::vector<ThmDEntry> thm_d_search(u64 p);

/// Solutions of m/p = 1/x + 1/y with x <= y, i.e. m·x·y = p(x+y):
/// the pair ((p+1)/m, p(p+1)/m) when m | p+1, plus the trivial (p, p)
/// when m = 2; empty when m ∤ p+1. This list is complete (divisor-pair
/// argument on (mx-p)(my-p) = p²). Requires m >= 2 and gcd(m, p) = 1.
std::vector<std::pair<u64, u64>> lemma_iv_solve(u64 m, u64 p);

/// The unique y=z solution ((p+1)/4, p(p+1)/2, p(p+1)/2), which exists
/// iff p ≡ 3 (mod 4). Requires p >= 3.
std::optional<Triple> thm_e_y_eq_z(u64 p);

/// The unique x=y solution ((p+1)/2, (p+1)/2, p(p+1)/4), which exists
/// iff p ≡ 3 (mod 4). Requires p >= 3.
std::optional<Triple> lemma_ii_x_eq_y(u64 p);

/// Both of the above plus the coupling relations x1 = 2*x2, 2*z1 = z2;
/// a relation failure is a std::logic_error (the formulas force them).
/// Absent iff p ≡ 1 (mod 4). Requires p >= 3.
std::optional<ThmFPair> thm_f_pair(u64 p);

/// Closed form for n ≡ 2 (mod 3): sorted triple of (n, (n+1)/3, n(n+1)/3).
/// Throws std::invalid_argument otherwise. Requires n >= 2.
Triple identity_2mod3(u64 n);

/// p mod 840 lies in {1, 121, 169, 289, 361, 529} — the residue classes
/// not covered by any classical quadratic identity. Pure residue test;
/// callers are expected to pass primes.
bool mordell_hard(u64 p);

}  // namespace es
