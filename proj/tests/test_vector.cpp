#include <random>

#include "doctest.h"
#include "svmc/vector.hpp"
#include "support/decode.hpp"

using namespace svmc;

TEST_CASE("leq is the componentwise order") {
    CHECK(leq({0, 3}, {1, 4}));
    CHECK_FALSE(leq({2, 1}, {1, 2}));
    CHECK_FALSE(leq({1, 2}, {2, 1}));
    CHECK(leq({1, 1}, {1, 1}));
}

TEST_CASE("lex_leq is lexicographic") {
    CHECK(lex_leq({2, 4}, {4, 2}));
    CHECK_FALSE(lex_leq({1, 9}, {1, 2}));
    CHECK(lex_leq({3, 3}, {3, 3}));
}

TEST_CASE("join") {
    std::vector<Vector> qs{{1, 3}, {7, 2}, {4, 4}};
    CHECK(join(qs, 2) == Vector{7, 4});
    std::vector<Vector> two{{1, 1}, {9, 9}};
    CHECK(join(two, 2) == Vector{9, 9});
    CHECK(join(std::vector<Vector>{}, 2) == Vector{0, 0});
}

TEST_CASE("zero") {
    CHECK(Vector::zero(2) == Vector{0, 0});
    CHECK(Vector::zero(5) == Vector{0, 0, 0, 0, 0});
    CHECK(Vector::zero(1) == Vector{0});
    CHECK_THROWS_AS(Vector::zero(0), std::invalid_argument);
}

TEST_CASE("dimension mismatches are errors") {
    CHECK_THROWS_AS(leq({1, 2}, {1, 2, 3}), DimensionMismatch);
    CHECK_THROWS_AS(lex_leq({1}, {1, 2}), DimensionMismatch);
    CHECK_THROWS_AS(join({1}, {1, 2}), DimensionMismatch);
    std::vector<Vector> mixed{{1, 1}, {1}};
    CHECK_THROWS_AS(join(mixed, 2), DimensionMismatch);
}

TEST_CASE("text form") {
    CHECK(Vector::parse("1,0,1,0,1") == Vector{1, 0, 1, 0, 1});
    CHECK(Vector::parse(" 2 , 3") == Vector{2, 3});
    CHECK(Vector{4, 0}.to_string() == "4,0");
    CHECK_THROWS(Vector::parse(""));
    CHECK_THROWS(Vector::parse("1,,2"));
    CHECK_THROWS(Vector::parse("1,-2"));
}

TEST_CASE("order properties on random triples") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> dims(1, 5);
    for (int i = 0; i < 2000; ++i) {
        std::size_t n = dims(rng);
        Vector a = support::random_vector(rng, n, 9), b = support::random_vector(rng, n, 9),
               c = support::random_vector(rng, n, 9);
        CHECK(leq(a, a));
        if (leq(a, b) && leq(b, a)) CHECK(a == b);
        if (leq(a, b) && leq(b, c)) CHECK(leq(a, c));
        int exactly = (a == b) + (a != b && lex_leq(a, b)) + (a != b && lex_leq(b, a));
        CHECK(exactly == 1);
        if (leq(a, b)) CHECK(lex_leq(a, b));
        std::vector<Vector> s{a, b, c};
        Vector j = join(s, n);
        for (const Vector& q : s) CHECK(leq(q, j));
        Vector u = support::random_vector(rng, n, 9);
        if (leq(a, u) && leq(b, u) && leq(c, u)) CHECK(leq(j, u));
    }
}

TEST_CASE("minimal_elements keeps the antichain of minima") {
    auto m = minimal_elements({{4, 4}, {5, 5}, {1, 7}, {4, 4}});
    CHECK(m == std::vector<Vector>{{1, 7}, {4, 4}});
}
