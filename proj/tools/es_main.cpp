// es — structural solver for 4/n = 1/x + 1/y + 1/z.
//
// Subcommands: solve, enumerate, census, discover, verify.
// Exit codes: 0 ok; 1 invalid triple (verify); 2 invalid input or flags;
// 3 no result within bounds; 4 unwritable output; 5 census resume mismatch;
// 70 internal error.
#include "CLI11.hpp"

#include "es/bounds.hpp"
#include "es/census.hpp"
#include "es/oracle.hpp"
#include "es/serialize.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace es;

constexpr int kOk = 0;
constexpr int kInvalidTriple = 1;
constexpr int kBadInput = 2;
constexpr int kNoResult = 3;
constexpr int kBadOutput = 4;
constexpr int kResumeMismatch = 5;
constexpr int kInternalError = 70;

enum class Fmt { Plain, Json, Csv };

Fmt pick_format(bool as_json, bool as_csv) {
    if (as_json && as_csv)
        throw std::invalid_argument("--json and --csv are mutually exclusive");
    return as_json ? Fmt::Json : as_csv ? Fmt::Csv : Fmt::Plain;
}

u64 oracle_limit() {
    const char* s = std::getenv("ES_MAX_ORACLE_N");
    if (!s || !*s) return kDefaultBounds.oracle_max_n;
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end == s || *end != '\0' || v == 0)
        throw std::invalid_argument("ES_MAX_ORACLE_N must be a positive integer");
    return v;
}

std::string triple_str(const Triple& t) {
    return "(" + std::to_string(t.x) + ", " + std::to_string(t.y) + ", " +
           std::to_string(t.z) + ")";
}

std::string csv_bool(bool b) { return b ? "true" : "false"; }

void emit(const json& j) { std::cout << j.dump() << "\n"; }

// ---- solve ----------------------------------------------------------------

int solve_any(u64 p, bool composite, Fmt fmt) {
    Triple t;
    const char* route = "oracle";
    if (composite) {
        const u64 cap = oracle_limit();
        if (p > cap)
            throw std::invalid_argument("solve: n exceeds the oracle bound " +
                                        std::to_string(cap) + " (override: ES_MAX_ORACLE_N)");
        auto found = first_solution(p);
        if (!found) {
            if (fmt == Fmt::Json) emit(json{{"p", p}, {"route", nullptr}, {"triple", nullptr}});
            else if (fmt == Fmt::Csv) std::cout << "route,x,y,z\n";
            else std::cout << "no solution exists for n = " << p << "\n";
            return kNoResult;
        }
        t = *found;
    } else {
        auto r = egyptian_existence(p);
        t = r.triple;
        route = route_name(r.route);
    }
    if (fmt == Fmt::Json) {
        emit(json{{"p", p}, {"route", route}, {"triple", t}});
    } else if (fmt == Fmt::Csv) {
        std::cout << "route,x,y,z\n" << route << "," << t.x << "," << t.y << "," << t.z << "\n";
    } else {
        std::cout << "p = " << p << "  route = " << route << "\n" << triple_str(t) << "\n";
    }
    return kOk;
}

int solve_duv_bounded(u64 p, u64 t_max, Fmt fmt) {
    auto r = thm_c_search(p, t_max);  // rejects p ≢ 1 (mod 4)
    if (!r) {
        if (fmt == Fmt::Json)
            emit(json{{"p", p}, {"form", "duv"}, {"t_max", t_max}, {"witness", nullptr}});
        else if (fmt == Fmt::Csv)
            std::cout << "t,w,d,u,v,n,x,y,z\n";
        else
            std::cout << "no divisor witness with t <= " << t_max << " for p = " << p
                      << " (bounded search, not a nonexistence proof)\n";
        return kNoResult;
    }
    if (fmt == Fmt::Json) {
        emit(json{{"p", p},
                  {"form", "duv"},
                  {"t_max", t_max},
                  {"witness", json{{"t", r->witness.t}, {"w", r->witness.w},
                                   {"d", r->witness.d}, {"n", r->witness.n}}},
                  {"duv", r->duv},
                  {"triple", r->triple}});
    } else if (fmt == Fmt::Csv) {
        std::cout << "t,w,d,u,v,n,x,y,z\n"
                  << r->witness.t << "," << r->witness.w << "," << r->duv.d << "," << r->duv.u
                  << "," << r->duv.v << "," << r->duv.n << "," << r->triple.x << ","
                  << r->triple.y << "," << r->triple.z << "\n";
    } else {
        std::cout << "p = " << p << "  bounded divisor search: t = " << r->witness.t
                  << ", w = " << r->witness.w << ", d = " << r->witness.d
                  << ", n = " << r->witness.n << "\n"
                  << triple_str(r->triple) << "  [d=" << r->duv.d << ", u=" << r->duv.u
                  << ", v=" << r->duv.v << ", n=" << r->duv.n << "]\n";
    }
    return kOk;
}

int solve_duv(u64 p, Fmt fmt) {
    auto witnesses = duv_complete_search(p);
    if (witnesses.empty()) {
        if (fmt == Fmt::Json)
            emit(json{{"p", p}, {"form", "duv"}, {"solutions", json::array()}});
        else if (fmt == Fmt::Csv)
            std::cout << "d,u,v,n,x,y,z\n";
        else
            std::cout << "no duv-form solution exists for p = " << p << " (complete search)\n";
        return kNoResult;
    }
    json solutions = json::array();
    std::string rows;
    std::string lines;
    for (const DuvWitness& w : witnesses) {
        auto built = thm_a_construct(p, w.d, w.n);
        if (!built) throw std::logic_error("solve: discovered duv witness failed reconstruction");
        const Triple& t = built->triple;
        solutions.push_back(json{{"witness", w}, {"triple", t}});
        rows += std::to_string(w.d) + "," + std::to_string(w.u) + "," + std::to_string(w.v) +
                "," + std::to_string(w.n) + "," + std::to_string(t.x) + "," +
                std::to_string(t.y) + "," + std::to_string(t.z) + "\n";
        lines += triple_str(t) + "  [d=" + std::to_string(w.d) + ", u=" + std::to_string(w.u) +
                 ", v=" + std::to_string(w.v) + ", n=" + std::to_string(w.n) + "]\n";
    }
    if (fmt == Fmt::Json) emit(json{{"p", p}, {"form", "duv"}, {"solutions", solutions}});
    else if (fmt == Fmt::Csv) std::cout << "d,u,v,n,x,y,z\n" << rows;
    else std::cout << "p = " << p << "  duv-form solutions: " << witnesses.size() << "\n" << lines;
    return kOk;
}

int solve_gcd(u64 p, Fmt fmt) {
    auto entries = thm_d_search(p);
    if (entries.empty()) {
        if (fmt == Fmt::Json)
            emit(json{{"p", p}, {"form", "gcd"}, {"solutions", json::array()}});
        else if (fmt == Fmt::Csv)
            std::cout << "n,x,y,z\n";
        else
            std::cout << "no gcd-form solution exists for p = " << p << " (complete search)\n";
        return kNoResult;
    }
    if (fmt == Fmt::Json) {
        json solutions = json::array();
        for (const ThmDEntry& e : entries)
            solutions.push_back(json{{"n", e.n}, {"triples", e.triples}});
        emit(json{{"p", p}, {"form", "gcd"}, {"solutions", solutions}});
    } else if (fmt == Fmt::Csv) {
        std::cout << "n,x,y,z\n";
        for (const ThmDEntry& e : entries)
            for (const Triple& t : e.triples)
                std::cout << e.n << "," << t.x << "," << t.y << "," << t.z << "\n";
    } else {
        std::cout << "p = " << p << "  gcd-form x values: " << entries.size() << "\n";
        for (const ThmDEntry& e : entries)
            for (const Triple& t : e.triples)
                std::cout << "n = " << e.n << ": " << triple_str(t) << "\n";
    }
    return kOk;
}

int solve_pair(u64 p, Fmt fmt) {
    auto pr = thm_f_pair(p);  // rejects p < 3
    if (!pr) {
        if (fmt == Fmt::Json)
            emit(json{{"p", p}, {"form", "pair"}, {"x_eq_y", nullptr}, {"y_eq_z", nullptr}});
        else if (fmt == Fmt::Csv)
            std::cout << "kind,x,y,z\n";
        else
            std::cout << "no x=y / y=z pair for p = " << p << " (p ≡ 1 mod 4)\n";
        return kNoResult;
    }
    if (fmt == Fmt::Json) {
        emit(json{{"p", p},
                  {"form", "pair"},
                  {"x_eq_y", pr->x_eq_y},
                  {"y_eq_z", pr->y_eq_z},
                  {"relations_verified", pr->relations_verified}});
    } else if (fmt == Fmt::Csv) {
        std::cout << "kind,x,y,z\n"
                  << "x=y," << pr->x_eq_y.x << "," << pr->x_eq_y.y << "," << pr->x_eq_y.z << "\n"
                  << "y=z," << pr->y_eq_z.x << "," << pr->y_eq_z.y << "," << pr->y_eq_z.z << "\n";
    } else {
        std::cout << "x=y: " << triple_str(pr->x_eq_y) << "\n"
                  << "y=z: " << triple_str(pr->y_eq_z) << "\n"
                  << "relations verified: " << (pr->relations_verified ? "yes" : "no") << "\n";
    }
    return kOk;
}

int run_solve(u64 p, const std::string& form, std::optional<u64> t_max, bool composite, Fmt fmt) {
    if (p < 2) throw std::invalid_argument("solve: p must be >= 2");
    if (composite && form != "any")
        throw std::invalid_argument("solve: --composite only combines with --form any");
    if (t_max && form != "duv")
        throw std::invalid_argument("solve: --t-max only applies to --form duv");
    if (!composite && !is_prime(p))
        throw std::invalid_argument("solve: " + std::to_string(p) +
                                    " is not prime (pass --composite to use the oracle)");
    if (form == "any") return solve_any(p, composite, fmt);
    if (form == "duv") return t_max ? solve_duv_bounded(p, *t_max, fmt) : solve_duv(p, fmt);
    if (form == "gcd") return solve_gcd(p, fmt);
    return solve_pair(p, fmt);
}

// ---- enumerate ------------------------------------------------------------

int run_enumerate(u64 n, std::optional<u64> cap, Fmt fmt) {
    if (n < 1) throw std::invalid_argument("enumerate: n must be >= 1");
    const u64 limit = oracle_limit();
    if (n > limit)
        throw std::invalid_argument("enumerate: n exceeds the oracle bound " +
                                    std::to_string(limit) + " (override: ES_MAX_ORACLE_N)");
    auto res = enumerate_all(n, cap);
    if (fmt == Fmt::Json) {
        emit(json{{"n", n},
                  {"count", res.triples.size()},
                  {"truncated", res.truncated},
                  {"triples", res.triples}});
    } else if (fmt == Fmt::Csv) {
        std::cout << "x,y,z\n";
        for (const Triple& t : res.triples)
            std::cout << t.x << "," << t.y << "," << t.z << "\n";
    } else {
        for (const Triple& t : res.triples) std::cout << triple_str(t) << "\n";
        std::cout << "count = " << res.triples.size()
                  << "  truncated = " << (res.truncated ? "yes" : "no") << "\n";
    }
    return kOk;
}

// ---- census ---------------------------------------------------------------

int run_census(u64 lo, u64 hi, const CensusOptions& opts, const std::string& out, bool resume,
               Fmt fmt) {
    CensusSummary s = census_to_file(out, lo, hi, opts, resume);
    json routes = nullptr;
    if (opts.exists) {
        routes = json::object();
        for (std::size_t i = 0; i < kRouteCount; ++i)
            routes[route_name(static_cast<Route>(i))] = s.routes[i];
    }
    if (fmt == Fmt::Json) {
        json j{{"lo", s.lo},
               {"hi", s.hi},
               {"out", out},
               {"primes", s.primes},
               {"written", s.written},
               {"resumed_after", s.resumed_after},
               {"xy", s.xy},
               {"yz", s.yz},
               {"mordell_hard", s.mordell}};
        j["duvless"] = opts.duv ? json(s.duvless) : json(nullptr);
        j["routes"] = routes;
        emit(j);
    } else if (fmt == Fmt::Csv) {
        std::string duvless;
        for (u64 p : s.duvless) duvless += (duvless.empty() ? "" : ";") + std::to_string(p);
        std::cout << "lo,hi,primes,written,xy,yz,mordell_hard,duvless\n"
                  << s.lo << "," << s.hi << "," << s.primes << "," << s.written << "," << s.xy
                  << "," << s.yz << "," << s.mordell << "," << duvless << "\n";
    } else {
        std::cout << "census [" << s.lo << ", " << s.hi << "]: " << s.primes << " primes, "
                  << s.written << " written -> " << out << "\n";
        if (s.resumed_after)
            std::cout << "resumed after p = " << s.resumed_after << "\n";
        std::cout << "x=y: " << s.xy << "  y=z: " << s.yz << "  mordell-hard: " << s.mordell
                  << "\n";
        if (opts.duv) {
            std::string duvless;
            for (u64 p : s.duvless) duvless += (duvless.empty() ? "" : ", ") + std::to_string(p);
            std::cout << "duv-less: " << (duvless.empty() ? "none" : duvless) << "\n";
        }
        if (opts.exists) {
            std::cout << "routes:";
            for (std::size_t i = 0; i < kRouteCount; ++i)
                std::cout << " " << route_name(static_cast<Route>(i)) << "=" << s.routes[i];
            std::cout << "\nall Egyptian of order 3: yes\n";
        }
    }
    return kOk;
}

// ---- discover -------------------------------------------------------------

int run_discover(u64 p, Fmt fmt) {
    if (!is_prime(p)) throw std::invalid_argument("discover: p must be prime");
    auto classes = discover_congruence_classes(p);
    if (fmt == Fmt::Json) {
        json arr = json::array();
        for (const CongruenceClass& c : classes) {
            json jc = c;
            jc["qr_obstruction_ok"] = qr_obstruction_check(c);
            arr.push_back(jc);
        }
        emit(json{{"p", p}, {"classes", arr}});
    } else if (fmt == Fmt::Csv) {
        std::cout << "q,r,d,n,qr_obstruction_ok\n";
        for (const CongruenceClass& c : classes)
            std::cout << c.q << "," << c.r << "," << c.d << "," << c.n << ","
                      << csv_bool(qr_obstruction_check(c)) << "\n";
    } else {
        for (const CongruenceClass& c : classes)
            std::cout << p << " ≡ " << c.r << " (mod " << c.q << ")  [d=" << c.d
                      << ", n=" << c.n << "]  obstruction: "
                      << (qr_obstruction_check(c) ? "holds" : "VIOLATED") << "\n";
    }
    return kOk;  // empty output with exit 0 when no duv form exists
}

// ---- verify ---------------------------------------------------------------

int run_verify(u64 n, u64 x, u64 y, u64 z, Fmt fmt) {
    if (n < 1 || x < 1 || y < 1 || z < 1)
        throw std::invalid_argument("verify: all of n, x, y, z must be >= 1");
    const bool valid = checked_triple_identity(n, x, y, z);
    if (!valid) {
        if (fmt == Fmt::Json)
            emit(json{{"n", n}, {"x", x}, {"y", y}, {"z", z}, {"valid", false}});
        else if (fmt == Fmt::Csv)
            std::cout << "valid,type,x_eq_y,y_eq_z,gcd_form,d,u,v,n\nfalse,,,,,,,,\n";
        else
            std::cout << "invalid: 4/" << n << " != 1/" << x << " + 1/" << y << " + 1/" << z
                      << "\n";
        return kInvalidTriple;
    }
    Triple t = make_triple(n, x, y, z);
    const SolutionType type = classify_type(n, t);
    const char* type_str = type == SolutionType::TypeI    ? "I"
                           : type == SolutionType::TypeII ? "II"
                                                          : "other";
    std::optional<DuvWitness> w;
    if (type != SolutionType::Other) w = duv_decompose(t, n);
    if (fmt == Fmt::Json) {
        json j{{"n", n},        {"triple", t},
               {"valid", true}, {"type", type_str},
               {"x_eq_y", is_x_eq_y(t)}, {"y_eq_z", is_y_eq_z(t)},
               {"gcd_form", is_gcd_form(t)}};
        j["duv"] = w ? json(*w) : json(nullptr);
        emit(j);
    } else if (fmt == Fmt::Csv) {
        std::cout << "valid,type,x_eq_y,y_eq_z,gcd_form,d,u,v,n\n"
                  << "true," << type_str << "," << csv_bool(is_x_eq_y(t)) << ","
                  << csv_bool(is_y_eq_z(t)) << "," << csv_bool(is_gcd_form(t)) << ",";
        if (w)
            std::cout << w->d << "," << w->u << "," << w->v << "," << w->n;
        else
            std::cout << ",,,";
        std::cout << "\n";
    } else {
        std::cout << "valid: 4/" << n << " = 1/" << t.x << " + 1/" << t.y << " + 1/" << t.z
                  << "\n"
                  << "type: " << type_str << "\n"
                  << "x=y: " << (is_x_eq_y(t) ? "yes" : "no")
                  << "  y=z: " << (is_y_eq_z(t) ? "yes" : "no")
                  << "  gcd-form: " << (is_gcd_form(t) ? "yes" : "no") << "\n";
        if (w)
            std::cout << "duv: d=" << w->d << ", u=" << w->u << ", v=" << w->v << ", n=" << w->n
                      << "\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"es — structural solver for the Diophantine equation 4/n = 1/x + 1/y + 1/z"};
    app.require_subcommand(1);
    int rc = kOk;

    // solve
    u64 solve_p = 0;
    std::string form = "any";
    u64 t_max_val = 0;
    bool composite = false;
    bool s_json = false, s_csv = false;
    auto* solve = app.add_subcommand("solve", "construct solutions for a prime (or --composite n)");
    solve->add_option("p", solve_p, "denominator")->required();
    solve->add_option("--form", form, "solution family: any, duv, gcd, pair")
        ->check(CLI::IsMember({"any", "duv", "gcd", "pair"}));
    auto* tm = solve->add_option("--t-max", t_max_val,
                                 "with --form duv: bounded divisor search up to this t");
    solve->add_flag("--composite", composite, "allow composite n (brute-force oracle only)");
    solve->add_flag("--json", s_json, "JSON output");
    solve->add_flag("--csv", s_csv, "CSV output");
    solve->callback([&] {
        std::optional<u64> t_max;
        if (tm->count()) t_max = t_max_val;
        rc = run_solve(solve_p, form, t_max, composite, pick_format(s_json, s_csv));
    });

    // enumerate
    u64 enum_n = 0;
    u64 cap_val = 0;
    bool e_json = false, e_csv = false;
    auto* enumerate = app.add_subcommand("enumerate", "brute-force all solutions for one n");
    enumerate->add_option("n", enum_n, "denominator")->required();
    auto* cap_opt = enumerate->add_option("--cap", cap_val, "stop after this many triples");
    enumerate->add_flag("--json", e_json, "JSON output");
    enumerate->add_flag("--csv", e_csv, "CSV output");
    enumerate->callback([&] {
        std::optional<u64> cap;
        if (cap_opt->count()) cap = cap_val;
        rc = run_enumerate(enum_n, cap, pick_format(e_json, e_csv));
    });

    // census
    u64 lo = 0, hi = 0;
    CensusOptions copts;
    bool pairs = false, resume = false;
    std::string out_path;
    bool c_json = false, c_csv = false;
    auto* census = app.add_subcommand("census", "per-prime structural survey over a range (JSONL)");
    census->add_option("lo", lo, "range start (inclusive)")->required();
    census->add_option("hi", hi, "range end (inclusive)")->required();
    census->add_option("--out", out_path, "JSONL output path")->required();
    census->add_flag("--duv", copts.duv, "complete duv-form search per prime");
    census->add_flag("--gcd", copts.gcd, "gcd-form n values per prime");
    census->add_flag("--count", copts.count, "full solution count per prime (slow)");
    census->add_flag("--exists", copts.exists, "verify a solution exists per prime");
    census->add_flag("--pairs", pairs, "x=y / y=z flags (always recorded; kept for symmetry)");
    census->add_option("--shards", copts.shards, "parallel sub-ranges")->check(CLI::Range(1, 256));
    census->add_flag("--resume", resume, "continue an interrupted run with identical parameters");
    census->add_flag("--json", c_json, "JSON summary");
    census->add_flag("--csv", c_csv, "CSV summary");
    census->callback([&] {
        (void)pairs;
        rc = run_census(lo, hi, copts, out_path, resume, pick_format(c_json, c_csv));
    });

    // discover
    u64 disc_p = 0;
    bool d_json = false, d_csv = false;
    auto* discover = app.add_subcommand("discover", "congruence classes behind p's duv solutions");
    discover->add_option("p", disc_p, "prime")->required();
    discover->add_flag("--json", d_json, "JSON output");
    discover->add_flag("--csv", d_csv, "CSV output");
    discover->callback([&] { rc = run_discover(disc_p, pick_format(d_json, d_csv)); });

    // verify
    u64 v_n = 0, v_x = 0, v_y = 0, v_z = 0;
    bool v_json = false, v_csv = false;
    auto* verify = app.add_subcommand("verify", "check a candidate triple and classify it");
    verify->add_option("n", v_n, "denominator")->required();
    verify->add_option("x", v_x, "first denominator")->required();
    verify->add_option("y", v_y, "second denominator")->required();
    verify->add_option("z", v_z, "third denominator")->required();
    verify->add_flag("--json", v_json, "JSON output");
    verify->add_flag("--csv", v_csv, "CSV output");
    verify->callback([&] { rc = run_verify(v_n, v_x, v_y, v_z, pick_format(v_json, v_csv)); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    } catch (const resume_mismatch_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kResumeMismatch;
    } catch (const output_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadOutput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << " (input too large for exact 128-bit arithmetic)\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
    return rc;
}
