#include "doctest.h"
#include "kdiff/io.hpp"
#include "kdiff/kaehler.hpp"
#include "kdiff/verify.hpp"

using namespace kdiff;

namespace {

Polynomial P(const std::string& s, const Ring& r) { return parse_polynomial(s, r); }

SchemeSpec points_spec(int n, const std::vector<std::vector<long long>>& pts) {
    SchemeSpec spec;
    spec.field = Field::rationals();
    spec.n = n;
    for (const auto& p : pts) {
        PointComponent pc;
        for (long long c : p) pc.coords.push_back(spec.field.from_integer(c));
        spec.components.push_back(pc);
    }
    return spec;
}

}  // namespace

TEST_CASE("point ideals") {
    Ring r = projective_ring(Field::rationals(), 2);
    Field q = Field::rationals();
    Ideal origin = point_ideal(r, {q.one(), q.zero(), q.zero()});
    CHECK(origin.same_ideal(Ideal(r, {P("X1", r), P("X2", r)})));

    Ideal p11 = point_ideal(r, {q.one(), q.one(), q.zero()});
    CHECK(p11.same_ideal(Ideal(r, {P("X1-X0", r), P("X2", r)})));

    Ideal p22 = point_ideal(r, {q.one(), q.from_integer(2), q.from_integer(2)});
    CHECK(p22.same_ideal(Ideal(r, {P("X1-2*X0", r), P("X2-2*X0", r)})));
    HilbertData h = hf_autostop(p22);
    CHECK(h.hp == 1);

    CHECK_THROWS_AS(point_ideal(r, {q.zero(), q.one(), q.zero()}), PointAtInfinity);
}

TEST_CASE("compile a fat point") {
    SchemeSpec spec = points_spec(2, {{1, 0, 0}});
    std::get<PointComponent>(spec.components[0]).mult = 2;
    SchemeCtx ctx = compile(spec);
    CHECK(ctx.deg == 3);
    CHECK(ctx.r == 1);
    CHECK(ctx.hf.values == std::vector<long long>{1, 3, 3});
    // symbolic engine agrees with the closed form
    CHECK(omega_hilbert(ctx, 1).hp == 6);
    CHECK(hp_omega_fatpoints({2, {2}, 0}, 1) == 6);
}

TEST_CASE("compile rejects a non-saturated explicit ideal") {
    SchemeSpec spec;
    spec.field = Field::rationals();
    spec.n = 2;
    Ring r = projective_ring(spec.field, 2);
    // X0 * (point ideal): not saturated
    spec.explicit_gens = {P("X0*X1", r), P("X0*X2", r)};
    CHECK_THROWS_AS(compile(spec), X0ZeroDivisor);
}

TEST_CASE("compile rejects duplicate points and points at infinity") {
    SchemeSpec dup = points_spec(2, {{1, 2, 3}, {2, 4, 6}});
    CHECK_THROWS_AS(compile(dup), Error);
    SchemeSpec inf = points_spec(2, {{0, 1, 0}});
    CHECK_THROWS_AS(compile(inf), PointAtInfinity);
}

TEST_CASE("the degree-6 explicit example compiles") {
    SchemeCtx ctx = compile(fixture_spec("non_rational_support"));
    CHECK(ctx.deg == 6);
    CHECK(ctx.r == 3);
    CHECK(ctx.hf.values == std::vector<long long>{1, 3, 5, 6, 6});
}

TEST_CASE("subscheme enumeration and separator degrees") {
    SchemeSpec spec = points_spec(
        2, {{1, 0, 0}, {1, 1, 0}, {1, 2, 0}, {1, 0, 1}, {1, 1, 1}});
    SchemeCtx ctx = compile(spec);
    auto one = colength_subschemes(ctx, 1);
    CHECK(one.size() == 5);
    auto two = colength_subschemes(ctx, 2);
    CHECK(two.size() == 10);
    // the line through the three collinear points separates in degree <= 2
    int min_alpha = ctx.r + 1;
    for (const auto& y : one) min_alpha = std::min(min_alpha, y.alpha);
    CHECK(min_alpha == 2);

    SchemeCtx fat = compile(fixture_spec("f2_double_point"));
    CHECK_THROWS_AS(colength_subschemes(fat, 1), UnsupportedScheme);
}

TEST_CASE("separator degree drops by one exactly") {
    SchemeCtx coll = compile(fixture_spec("three_collinear_plus_one"));
    auto subs = colength_subschemes(coll, 1);
    REQUIRE(subs.size() == 4);
    // removing the off-line point leaves the 3 collinear ones: alpha = 1
    for (const auto& y : subs) {
        bool removed_off_point = (y.removed == std::vector<int>{3});
        CHECK(y.alpha == (removed_off_point ? 1 : 2));
    }
}

TEST_CASE("separators of general-position and complete intersection points") {
    // removing one of n+1 general points: a hyperplane through the rest
    // misses it, so alpha = 1
    SchemeCtx gen = compile(fixture_spec("general_points_p2"));
    for (const auto& y : colength_subschemes(gen, 1)) CHECK(y.alpha == 1);

    // the four-point complete intersection of conics is a CB scheme:
    // every separator has degree r_X = 2
    SchemeCtx ci = compile(fixture_spec("four_point_ci"));
    CHECK(ci.r == 2);
    for (const auto& y : colength_subschemes(ci, 1)) CHECK(y.alpha == 2);
}

TEST_CASE("smoothness") {
    SchemeCtx pts = compile(fixture_spec("five_points_two_lines"));
    CHECK(check_smooth(pts).smooth);

    SchemeSpec fat = points_spec(2, {{1, 0, 0}});
    std::get<PointComponent>(fat.components[0]).mult = 2;
    CHECK_FALSE(check_smooth(compile(fat)).smooth);

    CHECK_FALSE(check_smooth(compile(fixture_spec("gauss_curvilinear"))).smooth);
}

TEST_CASE("weak curvilinearity") {
    CHECK(check_weakly_curvilinear(compile(fixture_spec("gauss_curvilinear"))).verdict ==
          CurvilinearVerdict::CurvilinearNotSmooth);
    CHECK(check_weakly_curvilinear(compile(fixture_spec("five_points_conic"))).verdict ==
          CurvilinearVerdict::Smooth);

    SchemeSpec fat = points_spec(2, {{1, 0, 0}});
    std::get<PointComponent>(fat.components[0]).mult = 2;
    CHECK(check_weakly_curvilinear(compile(fat)).verdict == CurvilinearVerdict::No);
}

TEST_CASE("Cayley-Bacharach property") {
    SchemeCtx ci = compile(fixture_spec("four_point_ci"));
    CHECK(check_cbp(ci, 1).holds);
    CHECK(check_cbp(ci, 0).holds);

    SchemeCtx coll = compile(fixture_spec("three_collinear_plus_one"));
    CHECK_FALSE(check_cbp(coll, 1).holds);
    CHECK(check_cbp(coll, 0).holds);

    CHECK_THROWS_AS(check_cbp(compile(fixture_spec("non_rational_support")), 1),
                    UnsupportedScheme);
}

TEST_CASE("uniformity") {
    SchemeCtx coll = compile(fixture_spec("three_collinear_plus_one"));
    CHECK_FALSE(check_uniform(coll, 1, 1).holds);

    SchemeSpec gen = points_spec(2, {{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}});
    CHECK(check_uniform(compile(gen), 1, 1).holds);
}

TEST_CASE("(1,d)-uniformity is the Cayley-Bacharach property of degree d") {
    for (const char* name : {"three_collinear_plus_one", "four_point_ci",
                             "five_points_two_lines", "five_points_conic"}) {
        SchemeCtx ctx = compile(fixture_spec(name));
        for (int d = 1; d <= ctx.r - 1; ++d)
            CHECK(check_uniform(ctx, 1, d).holds == check_cbp(ctx, d).holds);
    }
}

TEST_CASE("local profiles") {
    SchemeSpec one = points_spec(2, {{1, 2, 3}});
    LocalRingProfile p = local_profile(one);
    REQUIRE(p.entries.size() == 1);
    CHECK(p.entries[0] == std::pair<long long, long long>{1, 1});

    // the doubled conic point <X1-X0, X2^2> is curvilinear with kappa 1, nu 2
    SchemeSpec yprime = fixture_spec("five_points_conic_one_double");
    LocalRingProfile py = local_profile(yprime);
    REQUIRE(py.entries.size() == 5);
    CHECK(py.entries[4] == std::pair<long long, long long>{1, 2});
    long long total = 0;
    for (auto [k, v] : py.entries) total += k * v;
    CHECK(total == compile(yprime).deg);

    // the Gauss example carries a user profile
    SchemeSpec gauss = fixture_spec("gauss_curvilinear");
    LocalRingProfile pg = local_profile(gauss);
    REQUIRE(pg.entries.size() == 1);
    CHECK(pg.entries[0] == std::pair<long long, long long>{4, 2});
    CHECK(pg.total_dimension() == compile(gauss).deg);

    // fat points in the plane are not curvilinear
    SchemeSpec fat = points_spec(2, {{1, 0, 0}});
    std::get<PointComponent>(fat.components[0]).mult = 2;
    fat.profile.reset();
    CHECK_THROWS_AS(local_profile(fat), ProfileUnavailable);
}
