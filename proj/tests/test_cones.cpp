// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "stringcone/cones.hpp"

using namespace stringcone;

namespace {

// Independent extreme-ray oracle for small pointed cones: a candidate ray is
// the kernel of a rank-(d-1) subset of rows; keep it (up to sign) if it
// satisfies every inequality. Kernel vectors come from exact rational
// elimination.
std::vector<Rat> kernel_vector(const std::vector<std::vector<long long>>& rows, std::size_t d) {
    RatMat m;
    for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < d && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[row], m[p]);
        for (std::size_t r2 = 0; r2 < m.size(); ++r2) {
            if (r2 == row || m[r2][col] == 0) continue;
            const Rat f = m[r2][col] / m[row][col];
            for (std::size_t c2 = col; c2 < d; ++c2) m[r2][c2] -= f * m[row][c2];
        }
        pivot_col.push_back(col);
        ++row;
    }
    if (pivot_col.size() != d - 1) return {};
    std::vector<bool> is_pivot(d, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    std::vector<Rat> v(d, Rat(0));
    v[free_col] = 1;
    for (std::size_t r2 = 0; r2 < pivot_col.size(); ++r2)
        v[pivot_col[r2]] = -m[r2][free_col] / m[r2][pivot_col[r2]];
    return v;
}

std::vector<BigInt> primitive_of(const std::vector<Rat>& v) {
    BigInt lcm_den = 1;
    for (const Rat& x : v) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
    std::vector<BigInt> out;
    BigInt g = 0;
    for (const Rat& x : v) {
        const Rat scaled = x * lcm_den;
        out.push_back(numerator(scaled));
        g = boost::multiprecision::gcd(g, out.back());
    }
    for (BigInt& x : out) x /= g;
    return out;
}

std::set<std::vector<BigInt>> brute_rays(const ConeH& cone) {
    const std::size_t d = cone.space->dim();
    const std::size_t m = cone.rows.size();
    std::set<std::vector<BigInt>> rays;
    std::vector<std::size_t> pick(d - 1);
    // Iterate over all (d-1)-subsets of the rows.
    for (std::size_t i = 0; i < d - 1; ++i) pick[i] = i;
    if (m < d - 1) return rays;
    while (true) {
        std::vector<std::vector<long long>> sub;
        for (std::size_t i : pick) sub.push_back(cone.rows[i]);
        std::vector<Rat> v = kernel_vector(sub, d);
        if (!v.empty()) {
            for (int sign : {1, -1}) {
                std::vector<Rat> w = v;
                for (Rat& x : w) x *= sign;
                bool inside = true;
                for (const auto& r : cone.rows) {
                    Rat dot = 0;
                    for (std::size_t k = 0; k < d; ++k) dot += r[k] * w[k];
                    if (dot < 0) { inside = false; break; }
                }
                if (inside) rays.insert(primitive_of(w));
            }
        }
        // next combination
        std::size_t i = d - 1;
        while (i > 0 && pick[i - 1] == m - (d - 1) + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < d - 1; ++j) pick[j] = pick[j - 1] + 1;
    }
    return rays;
}

std::set<std::vector<BigInt>> ray_set(const ConeH& cone) {
    auto rays = cone_extreme_rays(cone);
    return {rays.begin(), rays.end()};
}

} // namespace

TEST_CASE("tropical rows of a rational function") {
    SpacePtr sp = make_space({"x", "y"});
    PosRat x = PosRat::variable(sp, "x");
    PosRat y = PosRat::variable(sp, "y");
    ConeH cone = make_cone(sp, trop_rows((x + y * y) / (x * y)));
    CHECK(cone.rows == std::vector<std::vector<long long>>{{-1, 1}, {0, -1}});
    CHECK_THROWS_AS(trop_rows(x / (x + y)), DomainError);
}

TEST_CASE("rank-2 graded cones have the expected inequalities") {
    CartanMatrix c = build_cartan("A2");
    const Word i{1, 2, 1};
    SpacePtr gsp = graded_space(2, 3);

    ConeH gs = build_cone(c, i, ConeKind::GradedString);
    ConeH gs_expected = make_cone(gsp, {{0, 0, 1, 0, 0},
                                        {0, 0, 0, 0, 1},
                                        {0, 0, 0, 1, -1},
                                        {1, 0, -1, 1, -2},
                                        {1, 0, 0, 0, -1},
                                        {0, 1, 0, -1, 1}});
    CHECK(gs.rows == gs_expected.rows);

    // The potential cone on the X-torus: one row block per divisor.
    ConeH ghkk = build_cone(c, i, ConeKind::Ghkk);
    SpacePtr csp = cluster_space(2, 3);
    ConeH ghkk_expected = make_cone(csp, {{-1, 0, 0, 0, 0},
                                          {-1, 0, -1, 0, 0},
                                          {0, 0, 0, 0, -1},
                                          {0, -1, 0, 0, 0},
                                          {0, 0, 0, -1, 0},
                                          {0, 0, -1, -1, 0}});
    CHECK(ghkk.rows == ghkk_expected.rows);
}

TEST_CASE("extreme rays of hand-checked cones") {
    SpacePtr sp = make_space({"x", "y", "z"});
    ConeH orthant = make_cone(sp, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    auto rays = ray_set(orthant);
    CHECK(rays == std::set<std::vector<BigInt>>{
                      {BigInt(1), BigInt(0), BigInt(0)},
                      {BigInt(0), BigInt(1), BigInt(0)},
                      {BigInt(0), BigInt(0), BigInt(1)}});

    ConeH wedge = make_cone(sp, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}});
    CHECK(ray_set(wedge) == std::set<std::vector<BigInt>>{
                                {BigInt(1), BigInt(0), BigInt(0)},
                                {BigInt(0), BigInt(1), BigInt(0)},
                                {BigInt(1), BigInt(0), BigInt(1)},
                                {BigInt(0), BigInt(1), BigInt(1)}});
}

TEST_CASE("double description agrees with the subset-kernel oracle") {
    CartanMatrix c = build_cartan("A2");
    for (const Word& i : {Word{1, 2, 1}, Word{2, 1, 2}}) {
        for (ConeKind kind : {ConeKind::GradedString, ConeKind::GradedLusztig,
                              ConeKind::Ghkk, ConeKind::Bk,
                              ConeKind::GradedStringDual, ConeKind::GradedLusztigDual}) {
            ConeH cone = build_cone(c, i, kind);
            CHECK(ray_set(cone) == brute_rays(cone));
        }
    }
}

TEST_CASE("cone equality is geometric, not syntactic") {
    SpacePtr sp = make_space({"x", "y"});
    ConeH a = make_cone(sp, {{1, 0}, {1, 2}});
    ConeH b = make_cone(sp, {{2, 4}, {3, 0}}); // scaled + permuted rows
    CHECK(a.rows == b.rows);                   // canonicalization already merges them
    CHECK(cones_equal(a, b));
    ConeH c = make_cone(sp, {{1, 0}, {1, 1}});
    CHECK_FALSE(cones_equal(a, c));

    CHECK(in_cone(a, {1, 0}));
    CHECK(in_cone(a, {0, 0}));
    CHECK_FALSE(in_cone(a, {-1, 0}));
    CHECK_FALSE(in_cone(a, {1, -1})); // 1*1 + 2*(-1) < 0
}

TEST_CASE("closed-form lattice map between the graded charts") {
    CartanMatrix c = build_cartan("A2");
    const Word i{1, 2, 1};
    IntMat primal = cmm_matrix(c, i, false);
    IntMat expected{{0, 1, 0, 0, 0},
                    {1, 0, 0, 0, 0},
                    {1, 0, -1, 1, -2},
                    {0, 1, 0, -1, 1},
                    {1, 0, 0, 0, -1}};
    CHECK(primal == expected);
    CHECK(primal == cmm_matrix_composed(c, i, false));
    CHECK(is_unimodular(primal));

    IntMat dual = cmm_matrix(c, i, true);
    IntMat dual_expected{{0, 1, 0, 0, 0},
                         {1, 0, 0, 0, 0},
                         {2, -1, -1, 1, -2},
                         {-1, 2, 0, -1, 1},
                         {2, -1, 0, 0, -1}};
    CHECK(dual == dual_expected);
    CHECK(dual == cmm_matrix_composed(c, i, true));
    CHECK(is_unimodular(dual));

    // The map carries the graded string cone onto the graded Lusztig cone,
    // and transforming back with the inverse returns the original.
    ConeH gs = build_cone(c, i, ConeKind::GradedString);
    ConeH gl = build_cone(c, i, ConeKind::GradedLusztig);
    ConeH image = transform_cone(gs, primal, gl.space);
    CHECK(cones_equal(image, gl));
    CHECK(cones_equal(transform_cone(image, unimodular_inverse(primal), gs.space), gs));
}

TEST_CASE("weight-polytope lattice points count representation dimensions") {
    CartanMatrix c = build_cartan("A2");
    const Word i{1, 2, 1};
    for (PolytopeKind kind : {PolytopeKind::String, PolytopeKind::Lusztig}) {
        CHECK(polytope_points(c, i, kind, {0, 0}).size() == 1);
        CHECK(polytope_points(c, i, kind, {1, 0}).size() == 3);
        CHECK(polytope_points(c, i, kind, {1, 1}).size() == 8);
        CHECK(polytope_points(c, i, kind, {2, 1}).size() == 15);
    }
    CHECK_THROWS_AS(polytope_points(c, i, PolytopeKind::String, {-1, 0}), DomainError);

    // Points of the string polytope at lambda lie in the graded cone.
    ConeH gs = build_cone(c, i, ConeKind::GradedString);
    for (const auto& x : polytope_points(c, i, PolytopeKind::String, {1, 1})) {
        std::vector<long long> pt{1, 1, x[0], x[1], x[2]};
        CHECK(in_cone(gs, pt));
    }
}

TEST_CASE("extreme-ray computation refuses oversized ambients") {
    std::vector<std::string> names;
    for (int k = 1; k <= 17; ++k) names.push_back("x" + std::to_string(k));
    SpacePtr sp = make_space(names);
    std::vector<std::vector<long long>> rows;
    for (int k = 0; k < 17; ++k) {
        std::vector<long long> row(17, 0);
        row[static_cast<std::size_t>(k)] = 1;
        rows.push_back(row);
    }
    CHECK_THROWS_AS(cone_extreme_rays(make_cone(sp, rows)), DimensionCapError);
}
