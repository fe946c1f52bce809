#include <random>

#include "doctest.h"
#include "kdiff/field.hpp"

using namespace kdiff;

TEST_CASE("characteristic") {
    CHECK(Field::rationals().characteristic() == 0);
    CHECK(Field::prime(3).characteristic() == 3);
    CHECK(Field::prime(2).characteristic() == 2);
    CHECK_THROWS_AS(Field::prime(4), Error);
    CHECK_THROWS_AS(Field::prime(1), Error);
}

TEST_CASE("exact rational arithmetic") {
    Field q = Field::rationals();
    CHECK(q.add(q.from_ratio(1, 2), q.from_ratio(1, 3)) == q.from_ratio(5, 6));
    CHECK(q.div(q.from_integer(-4), q.from_integer(6)) == q.from_ratio(-2, 3));
    CHECK(q.to_string(q.from_ratio(-4, 6)) == "-2/3");
    CHECK(q.from_string("2/3") == q.from_ratio(2, 3));
    CHECK(q.from_string("-1") == q.from_integer(-1));
    CHECK_THROWS_AS(q.inv(q.zero()), DivisionByZero);
}

TEST_CASE("prime field arithmetic") {
    Field f3 = Field::prime(3);
    CHECK(f3.inv(f3.from_integer(2)) == f3.from_integer(2));
    CHECK(f3.from_integer(-1) == f3.from_integer(2));
    CHECK(f3.mul(f3.from_integer(2), f3.from_integer(2)) == f3.one());
    CHECK_THROWS_AS(f3.div(f3.one(), f3.zero()), DivisionByZero);
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> d(-30, 30);
    for (const Field& f : {Field::rationals(), Field::prime(7)}) {
        for (int trial = 0; trial < 100; ++trial) {
            FieldElem a = f.kind() == FieldKind::Rationals
                              ? f.from_ratio(d(rng), 1 + std::abs(d(rng)))
                              : f.from_integer(d(rng));
            FieldElem b = f.from_integer(d(rng));
            FieldElem c = f.from_integer(d(rng));
            CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
            CHECK(f.mul(a, b) == f.mul(b, a));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            if (!f.is_zero(a)) CHECK(f.mul(a, f.inv(a)) == f.one());
            CHECK(f.add(a, f.neg(a)) == f.zero());
        }
    }
}

TEST_CASE("summing one char times gives zero") {
    for (long long p : {2LL, 3LL, 7LL}) {
        Field f = Field::prime(p);
        FieldElem acc = f.zero();
        for (long long i = 0; i < p; ++i) acc = f.add(acc, f.one());
        CHECK(f.is_zero(acc));
    }
}
