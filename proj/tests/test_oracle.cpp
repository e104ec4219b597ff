#include "doctest.h"

#include <stdexcept>

#include "es/arith.hpp"
#include "es/oracle.hpp"

#include <algorithm>

using namespace es;

namespace {

// Independent reference enumeration: derive z directly from
// 4xy*z = n(xy + yz + zx)  =>  z = nxy / (4xy - nx - ny), no shared code paths.
std::vector<Triple> naive_enumerate(u64 n) {
    std::vector<Triple> out;
    for (u64 x = 1; x <= n; ++x) {
        if (4 * x <= n) continue;  // 1/x alone already reaches 4/n
        for (u64 y = x;; ++y) {
            const u128 den = u128(4) * x * y > u128(n) * (x + y)
                                 ? u128(4) * x * y - u128(n) * (x + y)
                                 : 0;
            if (den == 0) {
                if (y > 4 * n * n) break;  // still below the feasible band
                continue;
            }
            const u128 num = u128(n) * x * y;
            const u128 z = num / den;
            if (z < y) break;  // z decreases in y; nothing further
            if (num % den == 0) out.push_back({x, y, static_cast<u64>(z)});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("enumerate_all: goldens") {
    CHECK(enumerate_all(1).triples.empty());
    CHECK(enumerate_all(2).triples == std::vector<Triple>{{1, 2, 2}});
    CHECK(enumerate_all(3).triples == std::vector<Triple>{{1, 4, 12}, {1, 6, 6}, {2, 2, 3}});
    CHECK(enumerate_all(4).triples == std::vector<Triple>{{2, 3, 6}, {2, 4, 4}, {3, 3, 3}});
    CHECK(enumerate_all(5).triples == std::vector<Triple>{{2, 4, 20}, {2, 5, 10}});
    CHECK(enumerate_all(7).triples ==
          std::vector<Triple>{{2, 15, 210},
                              {2, 16, 112},
                              {2, 18, 63},
                              {2, 21, 42},
                              {2, 28, 28},
                              {3, 6, 14},
                              {4, 4, 14}});
    CHECK(enumerate_all(29).triples ==
          std::vector<Triple>{{8, 78, 9048},
                              {8, 80, 2320},
                              {8, 87, 696},
                              {8, 88, 638},
                              {8, 116, 232},
                              {10, 29, 290},
                              {11, 22, 638}});

    SUBCASE("composite n") {
        const auto r12 = enumerate_all(12);
        CHECK(r12.triples.size() == 21);
        CHECK(!std::binary_search(r12.triples.begin(), r12.triples.end(), Triple{2, 3, 4}));
        CHECK(std::binary_search(r12.triples.begin(), r12.triples.end(), Triple{4, 13, 156}));
    }

    SUBCASE("larger primes") {
        const auto r193 = enumerate_all(193);
        CHECK(r193.triples.size() == 6);
        CHECK(r193.triples.front() == Triple{50, 1380, 1331700});

        const auto r1009 = enumerate_all(1009);
        CHECK(r1009.triples.size() == 19);
        auto has = [&](Triple t) {
            return std::binary_search(r1009.triples.begin(), r1009.triples.end(), t);
        };
        CHECK(has({253, 88792, 2042216}));
        CHECK(has({253, 92828, 1021108}));

        CHECK(enumerate_all(2521).triples.front() == Triple{636, 69748, 131876031});
    }
}

TEST_CASE("enumerate_all: output is sorted, valid, deduplicated") {
    for (u64 n = 1; n <= 200; ++n) {
        const auto r = enumerate_all(n);
        CHECK(std::is_sorted(r.triples.begin(), r.triples.end()));
        CHECK(std::adjacent_find(r.triples.begin(), r.triples.end()) == r.triples.end());
        for (const Triple& t : r.triples) {
            CHECK(t.x <= t.y);
            CHECK(t.y <= t.z);
            CHECK(checked_triple_identity(n, t.x, t.y, t.z));
        }
        CHECK_FALSE(r.truncated);
    }
}

TEST_CASE("enumerate_all: matches an independent reference") {
    for (u64 n = 1; n <= 120; ++n) CHECK(enumerate_all(n).triples == naive_enumerate(n));
    for (u64 n : {149ULL, 211ULL, 293ULL}) CHECK(enumerate_all(n).triples == naive_enumerate(n));
}

TEST_CASE("enumerate_all: cap and truncation flag") {
    auto r = enumerate_all(12, 5);
    CHECK(r.triples.size() == 5);
    CHECK(r.truncated);
    r = enumerate_all(12, 21);
    CHECK(r.triples.size() == 21);
    CHECK_FALSE(r.truncated);
    r = enumerate_all(12, 1000);
    CHECK(r.triples.size() == 21);
    CHECK_FALSE(r.truncated);
    r = enumerate_all(12, 0);
    CHECK(r.triples.empty());
    CHECK(r.truncated);
    r = enumerate_all(1, 0);
    CHECK(r.triples.empty());
    CHECK_FALSE(r.truncated);  // nothing existed to cut off
    CHECK_THROWS_AS(enumerate_all(0), std::invalid_argument);
}

TEST_CASE("first_solution: lexicographically first, same as full enumeration") {
    CHECK_FALSE(first_solution(1).has_value());
    for (u64 n = 2; n <= 300; ++n) {
        const auto all = enumerate_all(n);
        const auto first = first_solution(n);
        REQUIRE(first.has_value());
        CHECK(*first == all.triples.front());
    }
}

TEST_CASE("is_egyptian_order3 and count_solutions") {
    CHECK_FALSE(is_egyptian_order3(1));
    CHECK(is_egyptian_order3(2));
    CHECK(is_egyptian_order3(193));
    CHECK(count_solutions(2) == 1);
    CHECK(count_solutions(3) == 3);
    CHECK(count_solutions(4) == 3);
    CHECK(count_solutions(5) == 2);
    CHECK(count_solutions(7) == 7);
    CHECK(count_solutions(12) == 21);
    CHECK(count_solutions(193) == 6);
    CHECK(count_solutions(1009) == 19);
}

TEST_CASE("solutions scale: (x,y,z) for n gives (kx,ky,kz) for kn") {
    for (u64 p : {5ULL, 7ULL}) {
        for (u64 k : {2ULL, 3ULL}) {
            const auto base = enumerate_all(p).triples;
            const auto big = enumerate_all(k * p).triples;
            for (const Triple& t : base) {
                const Triple scaled{k * t.x, k * t.y, k * t.z};
                CHECK(std::binary_search(big.begin(), big.end(), scaled));
            }
        }
    }
}
