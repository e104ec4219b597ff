// Range-scale structural surveys: the complete per-prime duv-form decision,
// congruence-class discovery with the quadratic-residue obstruction check,
// the fast existence pipeline, and the sharded prime census with JSONL
// persistence and resume.
#pragma once

#include "es/constructors.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace es {

/// Arithmetic progression p ≡ r (mod q) with q = 4dn-1 and r ≡ -4d (mod q);
/// every prime in the class has a constructive duv-form solution via (d, n).
struct CongruenceClass {
    u64 q = 0;
    u64 r = 0;
    u64 d = 0;
    u64 n = 0;

    friend auto operator<=>(const CongruenceClass&, const CongruenceClass&) = default;
};

/// The COMPLETE set of duv-form witnesses for prime p, via the finite scan
/// x in [ceil(p/4), p-1] (every valid solution has x < p), d over divisors
/// of x, accepting when v = p(1+u)/(4x-p) is exact with p | v. An empty
/// result is a proof that no duv-form solution exists for p.
std::vector<DuvWitness> duv_complete_search(u64 p);

/// First witness of the same scan, or absent after a full (still complete)
/// scan. Cheaper than duv_complete_search when a witness exists early.
std::optional<DuvWitness> duv_first_witness(u64 p);

/// One congruence class per duv witness of p, deduplicated and sorted by
/// (q, r, d, n). r ≡ -4d (mod q) is asserted on every class.
std::vector<CongruenceClass> discover_congruence_classes(u64 p);

/// True iff r is NOT a quadratic residue mod q — i.e. the discovered class
/// is consistent with the obstruction that covering classes must avoid
/// residues. Validates the class shape first.
bool qr_obstruction_check(const CongruenceClass& c);

/// How egyptian_existence found its triple, in route order.
enum class Route { Identity2Mod3 = 0, Pair = 1, GcdForm = 2, Duv = 3, Oracle = 4 };
constexpr std::size_t kRouteCount = 5;

/// Stable lowercase slug for reports and JSON ("2mod3", "pair", ...).
const char* route_name(Route r);

struct ExistenceResult {
    Triple triple;
    Route route;
};

/// A verified triple for prime p by the cheapest applicable route, tried in
/// order: identity_2mod3 → lemma_ii pair (p ≡ 3 mod 4) → first thm_d hit →
/// first duv witness → full oracle. Exhausting every route would disprove
/// the conjecture, so it throws std::runtime_error naming p.
ExistenceResult egyptian_existence(u64 p);

/// Which census fields to populate (x=y, y=z and mordell_hard are always
/// computed — they are O(1)). shards is the number of contiguous sub-ranges
/// processed in parallel; results are independent of it.
struct CensusOptions {
    bool duv = false;     // has_duv + witness list (complete search)
    bool gcd = false;     // gcd-form n values from thm_d_search
    bool count = false;   // full solution count (expensive; hi <= 1e5)
    bool exists = false;  // run egyptian_existence per prime and record route
    unsigned shards = 1;
};

/// Per-prime structural summary. Fields gated by CensusOptions are absent
/// (serialized as null) when not requested.
struct CensusRecord {
    u64 p = 0;
    std::optional<std::vector<DuvWitness>> duv;
    std::optional<std::vector<u64>> gcd_ns;
    // The closed-form x=y / y=z pair exists, i.e. p ≡ 3 (mod 4). Note the
    // accidental y=z equality in p=2's lone solution (1, 2, 2) is outside
    // that family, so both flags are false for p = 2.
    bool xy = false;
    bool yz = false;
    bool mordell = false;
    std::optional<u64> count;
    std::optional<Route> route;  // in-memory only; not serialized

    std::optional<bool> has_duv() const {
        if (!duv) return std::nullopt;
        return !duv->empty();
    }
};

/// One record per prime in the range, in increasing order, deterministic
/// for every shard count. A per-prime failure aborts the whole run with an
/// exception naming the offending prime. Bounds: hi <= 1e7 with opts.duv,
/// hi <= 1e5 with opts.count (std::invalid_argument beyond).
std::vector<CensusRecord> run_census(const PrimeRange& range, const CensusOptions& opts);

/// census_to_file refuses to resume onto a file written with different
/// parameters (schema version, range, or flags).
struct resume_mismatch_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The output path (or its .meta sidecar) could not be written.
struct output_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Whole-range tallies for the summary line; on resumed runs the already
/// present records are folded in, so totals always cover [lo, hi].
struct CensusSummary {
    u64 lo = 0;
    u64 hi = 0;
    u64 primes = 0;           // records in the finished file
    u64 written = 0;          // records appended by this run
    u64 resumed_after = 0;    // 0 when the run started fresh
    std::vector<u64> duvless; // primes with has_duv = false (opts.duv only)
    u64 xy = 0;
    u64 yz = 0;
    u64 mordell = 0;
    std::array<u64, kRouteCount> routes{};  // opts.exists only, this run's part
};

/// Run the census over [lo, hi] and persist it as JSON-lines (one record
/// per line, append-only) plus a sidecar `<path>.meta` recording schema
/// version, range and flags. With resume = true and a matching sidecar the
/// scan continues after the last completed prime; a mismatching sidecar
/// throws resume_mismatch_error instead of silently recomputing.
CensusSummary census_to_file(const std::string& path, u64 lo, u64 hi,
                             const CensusOptions& opts, bool resume);

}  // namespace es
