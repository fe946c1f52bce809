#include <random>

#include "doctest.h"
#include "kdiff/io.hpp"
#include "kdiff/poly.hpp"

using namespace kdiff;

namespace {

Ring qp2() { return projective_ring(Field::rationals(), 2); }

Polynomial P(const std::string& s, const Ring& r) { return parse_polynomial(s, r); }

}  // namespace

TEST_CASE("arithmetic basics") {
    Ring r = qp2();
    CHECK(P("(X1+X0)*(X1-X0)", r) == P("X1^2-X0^2", r));
    Polynomial f = P("X1^2+2*X0*X2", r);
    CHECK(f + Polynomial::zero(r) == f);
    Ring f2 = projective_ring(Field::prime(2), 2);
    CHECK(P("(X1+X0)^2", f2) == P("X1^2+X0^2", f2));
}

TEST_CASE("partial derivatives") {
    Ring r = qp2();
    CHECK(P("X1^2+X0^2", r).derivative(1) == P("2*X1", r));
    Ring f2 = projective_ring(Field::prime(2), 2);
    CHECK(P("X1^2", f2).derivative(1).is_zero());
    CHECK(P("X0*X1^2+X1^3+X2^3", r).derivative(2) == P("3*X2^2", r));
}

TEST_CASE("dehomogenize and homogenize") {
    Ring r = qp2();
    Ring a = affine_ring(Field::rationals(), 2);
    CHECK(P("X1^2+X0^2", r).dehomogenized() == P("x1^2+1", a));
    CHECK(P("X0^3", r).dehomogenized() == P("1", a));
    CHECK(P("(X2^2-2*X0)^2", r).dehomogenized() == P("(x2^2-2)^2", a));
    CHECK(P("x1^2+1", a).homogenized(2) == P("X1^2+X0^2", r));
    CHECK(P("1", a).homogenized(3) == P("X0^3", r));
    CHECK(P("x1*x2", a).homogenized(4) == P("X0^2*X1*X2", r));
    CHECK_THROWS_AS(P("x1^3", a).homogenized(2), DegreeTooSmall);
}

TEST_CASE("round trip dehomogenize after homogenize") {
    Ring a = affine_ring(Field::rationals(), 2);
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> c(-3, 3), e(0, 3);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<std::pair<Term, FieldElem>> terms;
        for (int i = 0; i < 4; ++i)
            terms.emplace_back(Term({e(rng), e(rng)}),
                               Field::rationals().from_integer(c(rng)));
        Polynomial f = Polynomial::from_terms(a, std::move(terms));
        int d = std::max(f.degree(), 0) + e(rng);
        CHECK(f.homogenized(d).dehomogenized() == f);
    }
}

TEST_CASE("terms of a degree in DegRevLex order") {
    Ring a2 = affine_ring(Field::rationals(), 2);
    auto t = terms_of_degree(a2, 2);
    REQUIRE(t.size() == 3);
    CHECK(t[0] == Term({2, 0}));  // x1^2
    CHECK(t[1] == Term({1, 1}));  // x1*x2
    CHECK(t[2] == Term({0, 2}));  // x2^2
    CHECK(terms_of_degree(a2, 1).size() == 2);

    Ring a3 = affine_ring(Field::rationals(), 3);
    auto u = terms_of_degree(a3, 2);
    REQUIRE(u.size() == 6);
    CHECK(u.front() == Term({2, 0, 0}));
    CHECK(u.back() == Term({0, 0, 2}));
}

TEST_CASE("order laws") {
    MonomialOrder drl = MonomialOrder::degrevlex();
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> e(0, 4);
    for (int trial = 0; trial < 200; ++trial) {
        Term a({e(rng), e(rng), e(rng)});
        Term b({e(rng), e(rng), e(rng)});
        Term c({e(rng), e(rng), e(rng)});
        // degree compatibility
        if (a.deg > b.deg) CHECK(compare_terms(drl, a, b) > 0);
        // multiplicativity
        int before = compare_terms(drl, a, b);
        CHECK(compare_terms(drl, a.mul(c), b.mul(c)) == before);
        // totality and antisymmetry
        CHECK(compare_terms(drl, a, b) == -compare_terms(drl, b, a));
    }
}

TEST_CASE("Euler relation") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> c(-4, 4);
    for (const Field& f : {Field::rationals(), Field::prime(3)}) {
        Ring r = projective_ring(f, 2);
        for (int deg = 1; deg <= 5; ++deg) {
            std::vector<std::pair<Term, FieldElem>> terms;
            for (const Term& t : terms_of_degree(r, deg))
                terms.emplace_back(t, f.from_integer(c(rng)));
            Polynomial g = Polynomial::from_terms(r, std::move(terms));
            CHECK(euler_sum(g) == g.scaled(f.from_integer(deg)));
        }
    }
}

TEST_CASE("homogeneous degree queries") {
    Ring r = qp2();
    CHECK(P("X1^2+X0*X2", r).homogeneous_degree() == 2);
    CHECK_FALSE(P("X1^2+X0", r).homogeneous_degree().has_value());
    CHECK(Polynomial::zero(r).is_homogeneous());
}
