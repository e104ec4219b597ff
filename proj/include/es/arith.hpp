// Exact integer arithmetic primitives: primality, divisors, gcd, modular
// arithmetic, quadratic residues, and the 4/n = 1/x + 1/y + 1/z identity
// check. Everything here is pure and thread-safe.
#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace es {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

/// Deterministic primality test for the full 64-bit range (Miller-Rabin
/// with a fixed witness set; no probabilistic false positives).
bool is_prime(u64 n);

/// All divisors of n in increasing order, starting at 1 and ending at n.
/// Trial division up to sqrt(n); intended for n up to ~1e8.
std::vector<u64> divisors(u64 n);

inline u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

/// Multiplicative inverse of a mod m (m >= 2), in [1, m-1].
/// Empty when gcd(a, m) != 1; a may be negative or >= m.
std::optional<u64> mod_inverse(i64 a, u64 m);

/// True iff some s in [0, q) has s*s = r (mod q). Exhaustive scan, so the
/// answer is correct for composite q as well (Euler's criterion is not).
/// Requires q >= 2 and r < q.
bool is_quadratic_residue(u64 r, u64 q);

/// Exact check of 4*x*y*z == n*(x*y + y*z + z*x), i.e. 4/n = 1/x + 1/y + 1/z.
/// All arguments must be >= 1. Evaluated in 128-bit arithmetic; throws
/// std::overflow_error instead of wrapping when an intermediate would
/// exceed 128 bits (safe for n below ~2^24, far above every desk bound here).
bool checked_triple_identity(u64 n, u64 x, u64 y, u64 z);

/// All primes <= limit, increasing.
std::vector<u64> primes_upto(u64 limit);

/// Closed range [lo, hi] whose iteration yields exactly the primes it
/// contains, in increasing order. Backed by a segmented sieve so wide
/// ranges do not materialize a full bitmap at once.
class PrimeRange {
public:
    PrimeRange(u64 lo, u64 hi);  // throws std::invalid_argument unless 2 <= lo <= hi

    u64 lo() const { return lo_; }
    u64 hi() const { return hi_; }

    class iterator {
    public:
        using value_type = u64;
        using difference_type = std::ptrdiff_t;

        iterator() = default;  // end sentinel
        u64 operator*() const { return segment_[idx_]; }
        iterator& operator++();
        iterator operator++(int) { iterator t = *this; ++*this; return t; }
        bool operator==(const iterator& o) const { return done_ == o.done_ && (done_ || (next_lo_ == o.next_lo_ && idx_ == o.idx_)); }

    private:
        friend class PrimeRange;
        iterator(u64 lo, u64 hi);
        void advance_segment();

        std::vector<u64> base_;      // primes up to sqrt(hi)
        std::vector<u64> segment_;   // primes in the current segment
        std::size_t idx_ = 0;
        u64 next_lo_ = 0;
        u64 hi_ = 0;
        bool done_ = true;
    };

    iterator begin() const { return iterator(lo_, hi_); }
    iterator end() const { return iterator(); }

    /// Materialize the whole range (convenience for small ranges).
    std::vector<u64> to_vector() const;

private:
    u64 lo_;
    u64 hi_;
};

namespace detail {

/// (prime, exponent) factorization via a shared table of sieved primes.
/// Supports any n whose second-largest prime factor is < 65536, which
/// covers everything this artifact scans (inputs < 2^32 always work).
std::vector<std::pair<u64, int>> factorize(u64 n);

/// Divisors of n in increasing order, via factorize(). Same result as
/// es::divisors but faster inside hot scans.
std::vector<u64> divisors_fast(u64 n);

/// Checked 128-bit product; throws std::overflow_error on wrap.
u128 checked_mul(u128 a, u128 b);
/// Checked 128-bit sum; throws std::overflow_error on wrap.
u128 checked_add(u128 a, u128 b);

}  // namespace detail

}  // namespace es
