// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>
#include <vector>

#include "stringcone/errors.hpp"
#include "stringcone/matrix.hpp"
#include "stringcone/posrat.hpp"

using namespace stringcone;

namespace {

SpacePtr xyz() { return make_space({"x", "y", "z"}); }

// Builds a random subtraction-free expression together with its exact value
// at `point`, so arithmetic can be checked against plain rationals.
std::pair<PosRat, Rat> random_expr(std::mt19937& rng, const SpacePtr& sp,
                                   const std::vector<Rat>& point, int depth) {
    std::uniform_int_distribution<int> pick(0, 5);
    std::uniform_int_distribution<int> var(0, static_cast<int>(sp->dim()) - 1);
    std::uniform_int_distribution<int> small(1, 4);
    if (depth == 0 || pick(rng) == 0) {
        if (pick(rng) < 3) {
            int i = var(rng);
            return {PosRat::variable(sp, sp->name(static_cast<std::size_t>(i))),
                    point[static_cast<std::size_t>(i)]};
        }
        Rat c(small(rng), small(rng));
        return {PosRat::constant(sp, c), c};
    }
    auto [f, fv] = random_expr(rng, sp, point, depth - 1);
    auto [g, gv] = random_expr(rng, sp, point, depth - 1);
    switch (pick(rng)) {
    case 1: return {f + g, fv + gv};
    case 2: return {f * g, fv * gv};
    case 3: return {f / g, fv / gv};
    case 4: return {f.inv(), Rat(1) / fv};
    default: {
        long long e = small(rng) % 3 + 1;
        Rat pw = 1;
        for (long long k = 0; k < e; ++k) pw *= fv;
        return {f.pow(e), pw};
    }
    }
}

} // namespace

TEST_CASE("spaces compare structurally and index by name") {
    SpacePtr a = make_space({"x", "y"});
    SpacePtr b = make_space({"x", "y"});
    CHECK(*a == *b);
    CHECK(a->index_of("y") == 1);
    CHECK(a->index_of("w") == -1);
}

TEST_CASE("polynomials reject negative coefficients but allow zero") {
    SpacePtr sp = xyz();
    CHECK(PosPoly::constant(sp, 0).to_string() == "0"); // empty sum
    CHECK_THROWS_AS(PosPoly::constant(sp, -1), Error);
    CHECK_THROWS_AS(PosPoly::monomial(sp, ExpoVec{1, 0, 0}, 0), Error);
    CHECK_NOTHROW(PosPoly::constant(sp, Rat(1, 7)));
}

TEST_CASE("normal form collapses exact factors") {
    SpacePtr sp = xyz();
    PosRat x = PosRat::variable(sp, "x");
    PosRat y = PosRat::variable(sp, "y");

    PosRat s = x + y;
    PosRat collapsed = (s * s) / s;
    CHECK(collapsed.to_string() == s.to_string());
    CHECK(collapsed.equals(s));

    // Common monomial content cancels.
    PosRat q = (x * y) / (x * x);
    CHECK(q.to_string() == (y / x).to_string());

    // The denominator is scaled to leading coefficient one.
    PosRat scaled = x / (PosRat::constant(sp, 2) * y);
    CHECK(scaled.den().terms().begin()->second == 1);
    CHECK(scaled.equals(PosRat::constant(sp, Rat(1, 2)) * x / y));
}

TEST_CASE("rendering is canonical") {
    SpacePtr one = make_space({"t"});
    PosRat t = PosRat::variable(one, "t");
    CHECK(t.to_string() == "t");
    CHECK((t * t).to_string() == "t^2");
    CHECK(t.inv().to_string() == "(1)/(t)");
    CHECK((PosRat::constant(one, Rat(3, 2)) * t).to_string() == "3/2*t");
    CHECK((t + PosRat::one(one)).to_string() == "1 + t");

    // Negative input exponents normalize away.
    PosRat lau = PosRat::monomial(one, {-2}, 1);
    CHECK(lau.to_string() == "(1)/(t^2)");
}

TEST_CASE("arithmetic agrees with exact rational evaluation") {
    SpacePtr sp = xyz();
    std::mt19937 rng(98121u);
    std::uniform_int_distribution<int> small(1, 5);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Rat> point{Rat(small(rng), small(rng)), Rat(small(rng), small(rng)),
                               Rat(small(rng), small(rng))};
        auto [f, fv] = random_expr(rng, sp, point, 4);
        CHECK(f.eval(point) == fv);
    }
}

TEST_CASE("equality is exact cross-multiplication") {
    SpacePtr sp = xyz();
    PosRat x = PosRat::variable(sp, "x");
    PosRat y = PosRat::variable(sp, "y");
    CHECK((x / y + PosRat::one(sp)).equals((x + y) / y));
    CHECK_FALSE((x / y).equals(x));

    std::mt19937 rng(55100u);
    std::uniform_int_distribution<int> small(1, 5);
    std::vector<Rat> point{Rat(small(rng), small(rng)), Rat(small(rng), small(rng)),
                           Rat(small(rng), small(rng))};
    for (int trial = 0; trial < 20; ++trial) {
        auto [f, fv] = random_expr(rng, sp, point, 3);
        auto [g, gv] = random_expr(rng, sp, point, 3);
        PosRat masked = f * (g + x) / (g + x); // same function, other route
        CHECK(masked.equals(f));
        if (f.equals(g)) CHECK(fv == gv);
    }
}

TEST_CASE("substitution pulls back through maps") {
    SpacePtr src = make_space({"u", "v"});
    SpacePtr dst = xyz();
    std::mt19937 rng(7411u);
    std::uniform_int_distribution<int> small(1, 5);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Rat> p{Rat(small(rng), small(rng)), Rat(small(rng), small(rng))};
        RationalMap m{src, dst, {}};
        std::vector<Rat> images;
        for (int k = 0; k < 3; ++k) {
            auto [coord, value] = random_expr(rng, src, p, 3);
            m.coords.push_back(coord);
            images.push_back(value);
        }
        auto [f, unused] = random_expr(rng, dst, images, 3);
        (void)unused;
        CHECK(substitute(f, m).eval(p) == f.eval(images));
    }
}

TEST_CASE("composition applies the right-hand map first") {
    SpacePtr sp = make_space({"u"});
    PosRat u = PosRat::variable(sp, "u");
    RationalMap doubled{sp, sp, {PosRat::constant(sp, 2) * u}};
    RationalMap shifted{sp, sp, {u + PosRat::one(sp)}};
    // (double then shift)(u) = 2u + 1; (shift then double)(u) = 2u + 2.
    CHECK(compose(shifted, doubled).coords[0].equals(PosRat::constant(sp, 2) * u + PosRat::one(sp)));
    CHECK(compose(doubled, shifted).coords[0].equals(PosRat::constant(sp, 2) * (u + PosRat::one(sp))));
    CHECK(maps_equal(compose(identity_map(sp), doubled), doubled));
    CHECK_FALSE(maps_equal(doubled, shifted));
}

TEST_CASE("tropicalization is min-plus") {
    SpacePtr sp = xyz();
    PosRat x = PosRat::variable(sp, "x");
    PosRat y = PosRat::variable(sp, "y");
    PosRat z = PosRat::variable(sp, "z");

    TropForm f = tropicalize((x + y * y) / z);
    CHECK(f.eval({5, 1, 3}) == std::min<long long>(5, 2) - 3);
    CHECK(f.eval({0, 4, -2}) == std::min<long long>(0, 8) + 2);

    // Coefficients are invisible tropically.
    TropForm g = tropicalize(PosRat::constant(sp, Rat(7, 3)) * x);
    CHECK(g.eval({9, 0, 0}) == 9);

    // trop(f*g) = trop(f) + trop(g) pointwise.
    std::mt19937 rng(332u);
    std::uniform_int_distribution<int> small(1, 5);
    std::vector<Rat> pt{Rat(1), Rat(1), Rat(1)};
    std::uniform_int_distribution<long long> coord(-4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        auto [a, av] = random_expr(rng, sp, pt, 3);
        auto [b, bv] = random_expr(rng, sp, pt, 3);
        (void)av;
        (void)bv;
        std::vector<long long> xi{coord(rng), coord(rng), coord(rng)};
        CHECK(tropicalize(a * b).eval(xi) == tropicalize(a).eval(xi) + tropicalize(b).eval(xi));
    }
}

TEST_CASE("linear matrices of monomial maps") {
    SpacePtr sp = make_space({"x", "y"});
    PosRat x = PosRat::variable(sp, "x");
    PosRat y = PosRat::variable(sp, "y");
    RationalMap mono{sp, sp, {x * y, x / y}};
    IntMat m = linear_matrix(mono);
    REQUIRE(m.size() == 2);
    CHECK(m[0] == std::vector<BigInt>{1, 1});
    CHECK(m[1] == std::vector<BigInt>{1, -1});

    RationalMap not_mono{sp, sp, {x + y, y}};
    CHECK_THROWS_AS(linear_matrix(not_mono), DomainError);
    RationalMap scaled{sp, sp, {PosRat::constant(sp, 2) * x, y}};
    CHECK_THROWS_AS(linear_matrix(scaled), DomainError);
}
