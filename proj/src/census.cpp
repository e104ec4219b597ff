#include "es/census.hpp"

#include "es/bounds.hpp"
#include "es/oracle.hpp"
#include "es/serialize.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

namespace es {

namespace {

constexpr u64 kU64Max = std::numeric_limits<u64>::max();

u64 narrow(u128 v, const char* what) {
    if (v > kU64Max)
        throw std::overflow_error(std::string(what) + " exceeds 64 bits");
    return static_cast<u64>(v);
}

// Identity check on (du, dv, duv) without materializing z as 64-bit; near
// the top of the census range z can exceed 2^64 while staying verifiable
// in 128 bits. Overflow beyond that still fails loudly via checked_mul.
void verify_duv_identity(u64 p, u64 d, u64 u, u64 v) {
    using detail::checked_add;
    using detail::checked_mul;
    const u128 x = u128(d) * u;
    const u128 y = u128(d) * v;
    const u128 z = checked_mul(x, v);
    const u128 lhs = checked_mul(checked_mul(checked_mul(u128(4), x), y), z);
    const u128 rhs = checked_mul(
        u128(p), checked_add(checked_add(checked_mul(x, y), checked_mul(y, z)), checked_mul(x, z)));
    if (lhs != rhs)
        throw std::logic_error("duv witness fails the identity at p=" + std::to_string(p));
}

// Shared x-scan: every duv-form solution has x = d·u with ceil(p/4) <= x < p,
// and v is forced to p(1+u)/(4x-p) with p | v. first_only stops at one hit.
std::vector<DuvWitness> duv_scan(u64 p, bool first_only) {
    if (!is_prime(p)) throw std::invalid_argument("duv search: p must be prime");
    std::vector<DuvWitness> out;
    for (u64 x = (p + 3) / 4; x < p; ++x) {
        const u64 a = 4 * x - p;
        for (u64 d : detail::divisors_fast(x)) {
            const u64 u = x / d;
            const u128 num = u128(p) * (1 + u);
            if (num % a != 0) continue;
            const u128 v128 = num / a;
            if (v128 % p != 0) continue;
            const u64 v = narrow(v128, "duv v");
            verify_duv_identity(p, d, u, v);
            out.push_back(DuvWitness{d, u, v, v / p});
            if (first_only) return out;
        }
    }
    return out;
}

}  // namespace

std::vector<DuvWitness> duv_complete_search(u64 p) {
    return duv_scan(p, false);
}

std::optional<DuvWitness> duv_first_witness(u64 p) {
    auto hits = duv_scan(p, true);
    if (hits.empty()) return std::nullopt;
    return hits.front();
}

std::vector<CongruenceClass> discover_congruence_classes(u64 p) {
    std::vector<CongruenceClass> classes;
    for (const DuvWitness& w : duv_complete_search(p)) {
        const u64 q = narrow(u128(4) * w.d * w.n - 1, "congruence modulus");
        const u64 r = p % q;
        if ((u128(r) + 4 * u128(w.d)) % q != 0)
            throw std::logic_error("discovered class violates r ≡ -4d (mod q) at p=" +
                                   std::to_string(p));
        classes.push_back(CongruenceClass{q, r, w.d, w.n});
    }
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    return classes;
}

bool qr_obstruction_check(const CongruenceClass& c) {
    if (c.d == 0 || c.n == 0 || u128(c.q) != u128(4) * c.d * c.n - 1 || c.r >= c.q ||
        (u128(c.r) + 4 * u128(c.d)) % c.q != 0)
        throw std::invalid_argument("qr_obstruction_check: malformed congruence class");
    return !is_quadratic_residue(c.r, c.q);
}

const char* route_name(Route r) {
    switch (r) {
        case Route::Identity2Mod3: return "2mod3";
        case Route::Pair: return "pair";
        case Route::GcdForm: return "gcd";
        case Route::Duv: return "duv";
        case Route::Oracle: return "oracle";
    }
    return "?";
}

ExistenceResult egyptian_existence(u64 p) {
    if (!is_prime(p)) throw std::invalid_argument("egyptian_existence: p must be prime");
    if (p % 3 == 2) return {identity_2mod3(p), Route::Identity2Mod3};
    if (p % 4 == 3) return {*lemma_ii_x_eq_y(p), Route::Pair};
    // First thm_d hit: the smallest divisor m of p+1 with 4 | m + p gives
    // the smallest qualifying n = (p+m)/4.
    for (u64 m : detail::divisors_fast(p + 1)) {
        if ((m + p) % 4 != 0) continue;
        const u64 n = (m + p) / 4;
        const u64 y = narrow(u128(n) * ((p + 1) / m), "existence thm_d y");
        const u64 z = narrow(u128(y) * p, "existence thm_d z");
        return {make_triple(p, n, y, z), Route::GcdForm};
    }
    if (auto w = duv_first_witness(p)) {
        const u64 du = narrow(u128(w->d) * w->u, "existence duv x");
        const u64 dv = narrow(u128(w->d) * w->v, "existence duv y");
        const u64 duv = narrow(u128(du) * w->v, "existence duv z");
        return {make_triple(p, du, dv, duv), Route::Duv};
    }
    if (auto t = first_solution(p)) return {*t, Route::Oracle};
    throw std::runtime_error("egyptian_existence: NO solution found for prime " +
                             std::to_string(p) + " — conjecture counterexample or library bug");
}

namespace {

CensusRecord census_one(u64 p, const CensusOptions& opts) {
    CensusRecord rec;
    rec.p = p;
    rec.xy = rec.yz = (p % 4 == 3);
    rec.mordell = mordell_hard(p);
    if (opts.duv) rec.duv = duv_complete_search(p);
    if (opts.gcd) {
        std::vector<u64> ns;
        for (const ThmDEntry& e : thm_d_search(p)) ns.push_back(e.n);
        rec.gcd_ns = std::move(ns);
    }
    if (opts.count) rec.count = count_solutions(p);
    if (opts.exists) rec.route = egyptian_existence(p).route;
    return rec;
}

std::vector<CensusRecord> census_chunk(u64 lo, u64 hi, const CensusOptions& opts) {
    std::vector<CensusRecord> out;
    for (u64 p : PrimeRange(lo, hi)) {
        try {
            out.push_back(census_one(p, opts));
        } catch (const std::exception& e) {
            throw std::runtime_error("census aborted at p=" + std::to_string(p) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace

std::vector<CensusRecord> run_census(const PrimeRange& range, const CensusOptions& opts) {
    if (opts.shards == 0) throw std::invalid_argument("run_census: shards must be >= 1");
    if (opts.duv && range.hi() > kDefaultBounds.census_duv_max_hi)
        throw std::invalid_argument("run_census: hi exceeds the duv census bound");
    if (opts.count && range.hi() > kDefaultBounds.census_count_max_hi)
        throw std::invalid_argument("run_census: hi exceeds the solution-count census bound");

    const u64 lo = range.lo(), hi = range.hi();
    const u64 width = hi - lo + 1;
    const u64 shards = std::min<u64>(opts.shards, width);

    // Contiguous sub-ranges, processed in parallel, concatenated in order:
    // per-prime work is pure, so the result is independent of the split.
    std::vector<std::future<std::vector<CensusRecord>>> parts;
    for (u64 i = 0; i < shards; ++i) {
        const u64 sub_lo = lo + i * width / shards;
        const u64 sub_hi = lo + (i + 1) * width / shards - 1;
        if (sub_lo > sub_hi) continue;
        parts.push_back(std::async(std::launch::async, census_chunk, sub_lo, sub_hi, opts));
    }
    std::vector<CensusRecord> out;
    for (auto& f : parts) {
        auto part = f.get();
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    return out;
}

namespace {

json census_meta(u64 lo, u64 hi, const CensusOptions& opts) {
    return json{{"v", kCensusSchemaVersion}, {"lo", lo},           {"hi", hi},
                {"duv", opts.duv},           {"gcd", opts.gcd},    {"count", opts.count},
                {"exists", opts.exists}};
}

void fold_into_summary(CensusSummary& s, const CensusRecord& rec) {
    ++s.primes;
    if (rec.xy) ++s.xy;
    if (rec.yz) ++s.yz;
    if (rec.mordell) ++s.mordell;
    if (rec.has_duv() == std::optional<bool>(false)) s.duvless.push_back(rec.p);
    if (rec.route) ++s.routes[static_cast<std::size_t>(*rec.route)];
}

}  // namespace

CensusSummary census_to_file(const std::string& path, u64 lo, u64 hi,
                             const CensusOptions& opts, bool resume) {
    PrimeRange full(lo, hi);  // validates 2 <= lo <= hi before touching files
    if (opts.shards == 0) throw std::invalid_argument("census: shards must be >= 1");
    if (opts.duv && hi > kDefaultBounds.census_duv_max_hi)
        throw std::invalid_argument("census: hi exceeds the duv census bound");
    if (opts.count && hi > kDefaultBounds.census_count_max_hi)
        throw std::invalid_argument("census: hi exceeds the solution-count census bound");

    const std::string meta_path = path + ".meta";
    CensusSummary summary;
    summary.lo = lo;
    summary.hi = hi;

    std::vector<std::string> kept;
    if (resume && std::filesystem::exists(path) && !std::filesystem::exists(meta_path))
        throw resume_mismatch_error("census resume: " + path +
                                    " has no .meta sidecar to check parameters against");
    if (resume && std::filesystem::exists(path)) {
        std::ifstream meta_in(meta_path);
        json have;
        try {
            have = json::parse(meta_in);
        } catch (const json::exception&) {
            throw resume_mismatch_error("census resume: unreadable sidecar " + meta_path);
        }
        if (have != census_meta(lo, hi, opts))
            throw resume_mismatch_error(
                "census resume: " + path + " was written with a different schema/range/flags");

        std::ifstream in(path);
        if (!in) throw output_error("census resume: cannot read " + path);
        std::string pending;
        char c;
        while (in.get(c)) {
            if (c != '\n') { pending.push_back(c); continue; }
            kept.push_back(pending);
            pending.clear();
        }
        // A non-terminated tail is an interrupted write; recompute from there.
        for (const std::string& l : kept) {
            CensusRecord rec;
            try {
                rec = census_record_from_line(l);
            } catch (const std::exception& e) {
                throw resume_mismatch_error("census resume: corrupt record in " + path + ": " +
                                            e.what());
            }
            if (rec.p < lo || rec.p > hi || rec.p <= summary.resumed_after)
                throw resume_mismatch_error("census resume: records in " + path +
                                            " are out of order or out of range");
            summary.resumed_after = rec.p;
            fold_into_summary(summary, rec);
        }
    }

    std::ofstream out(path, std::ios::trunc);
    if (!out) throw output_error("census: cannot write " + path);
    {
        std::ofstream meta_out(meta_path, std::ios::trunc);
        if (!meta_out) throw output_error("census: cannot write " + meta_path);
        meta_out << census_meta(lo, hi, opts).dump() << '\n';
        if (!meta_out.flush()) throw output_error("census: failed writing " + meta_path);
    }
    for (const std::string& l : kept) out << l << '\n';

    const u64 compute_lo = summary.resumed_after ? summary.resumed_after + 1 : lo;
    if (compute_lo <= hi) {
        for (const CensusRecord& rec : run_census(PrimeRange(compute_lo, hi), opts)) {
            fold_into_summary(summary, rec);
            ++summary.written;
            out << census_record_to_line(rec) << '\n';
        }
    }
    if (!out.flush()) throw output_error("census: failed writing " + path);
    return summary;
}

}  // namespace es
