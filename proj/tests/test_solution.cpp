#include "doctest.h"

#include <stdexcept>

#include "es/arith.hpp"
#include "es/constructors.hpp"
#include "es/oracle.hpp"
#include "es/solution.hpp"

using namespace es;

TEST_CASE("make_triple: sorts and validates") {
    CHECK(make_triple(5, 20, 4, 2) == Triple{2, 4, 20});
    CHECK(make_triple(2, 2, 1, 2) == Triple{1, 2, 2});
    CHECK(make_triple(7, 4, 4, 14) == Triple{4, 4, 14});
    CHECK_THROWS_AS(make_triple(5, 2, 4, 21), std::invalid_argument);
    CHECK_THROWS_AS(make_triple(0, 1, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_triple(5, 2, 0, 20), std::invalid_argument);
}

TEST_CASE("classify_type: goldens") {
    CHECK(classify_type(23, {8, 23, 184}) == SolutionType::TypeII);
    CHECK(classify_type(29, {10, 29, 290}) == SolutionType::TypeII);
    CHECK(classify_type(5, {2, 4, 20}) == SolutionType::TypeI);
    CHECK(classify_type(5, {2, 5, 10}) == SolutionType::TypeII);
    CHECK(classify_type(2, {1, 2, 2}) == SolutionType::TypeII);
    CHECK(classify_type(12, {4, 13, 156}) == SolutionType::Other);  // composite n
    CHECK_THROWS_AS(classify_type(5, {2, 4, 21}), std::invalid_argument);
}

TEST_CASE("duv_decompose: goldens") {
    auto w = duv_decompose({253, 88792, 2042216}, 1009);
    REQUIRE(w.has_value());
    CHECK(*w == DuvWitness{11, 23, 8072, 8});

    w = duv_decompose({253, 92828, 1021108}, 1009);
    REQUIRE(w.has_value());
    CHECK(*w == DuvWitness{23, 11, 4036, 4});

    w = duv_decompose({8, 23, 184}, 23);
    REQUIRE(w.has_value());
    CHECK(*w == DuvWitness{1, 8, 23, 1});

    w = duv_decompose({1, 2, 2}, 2);
    REQUIRE(w.has_value());
    CHECK(*w == DuvWitness{1, 1, 2, 1});

    CHECK_FALSE(duv_decompose({2, 4, 20}, 5).has_value());    // z does not divide x*y
    CHECK_FALSE(duv_decompose({2, 16, 112}, 7).has_value());  // likewise: 112 does not divide 32
    CHECK_THROWS_AS(duv_decompose({2, 4, 21}, 5), std::invalid_argument);  // not a solution
    CHECK_THROWS_AS(duv_decompose({4, 13, 156}, 12), std::invalid_argument);  // composite p
}

TEST_CASE("structure of prime solutions: every oracle triple obeys the x/z constraints") {
    // x < p with p not dividing x, p divides z, and ceil(p/4) <= x <= (p+1)/2
    for (u64 p : PrimeRange(2, 500)) {
        for (const Triple& t : enumerate_all(p).triples) {
            CAPTURE(p);
            CAPTURE(t.x);
            CHECK(t.x < p);
            CHECK(t.x % p != 0);
            CHECK(t.z % p == 0);
            CHECK(t.x >= (p + 3) / 4);
            CHECK(t.x <= (p + 1) / 2);
            CHECK(classify_type(p, t) != SolutionType::Other);
        }
    }
}

TEST_CASE("duv_decompose round-trips through thm_a_construct") {
    for (u64 p : PrimeRange(2, 300)) {
        for (const Triple& t : enumerate_all(p).triples) {
            auto w = duv_decompose(t, p);
            if (!w) continue;
            CAPTURE(p);
            CAPTURE(t.x);
            CHECK(t == Triple{w->d * w->u, w->d * w->v, w->d * w->u * w->v});
            CHECK(w->v == w->n * p);
            CHECK(gcd(w->u, w->v) == 1);
            auto built = thm_a_construct(p, w->d, w->n);
            REQUIRE(built.has_value());
            CHECK(built->witness == *w);
            CHECK(built->triple == t);
        }
    }
}

TEST_CASE("shape predicates") {
    CHECK(is_x_eq_y({4, 4, 14}));
    CHECK_FALSE(is_x_eq_y({2, 28, 28}));
    CHECK(is_y_eq_z({2, 28, 28}));
    CHECK_FALSE(is_y_eq_z({4, 4, 14}));
    CHECK(is_gcd_form({2, 4, 20}));
    CHECK(is_gcd_form({2, 16, 112}));
    CHECK_FALSE(is_gcd_form({8, 23, 184}));
    CHECK(is_gcd_form({3, 3, 3}));
}
