// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "stringcone/cartan.hpp"
#include "stringcone/chartmaps.hpp"
#include "stringcone/cluster.hpp"
#include "stringcone/matrix.hpp"
#include "stringcone/potentials.hpp"
#include "stringcone/transitions.hpp"
#include "stringcone/words.hpp"

using namespace stringcone;

TEST_CASE("the four chart maps of the rank-2 word") {
    CartanMatrix c = build_cartan("A2");
    const Word i{1, 2, 1};
    SpacePtr csp = cluster_space(2, 3);
    SpacePtr gsp = graded_space(2, 3);
    auto cv = [&](const char* nm) { return PosRat::variable(csp, nm); };
    auto gv = [&](const char* nm) { return PosRat::variable(gsp, nm); };

    RationalMap gi = chart_map(c, i, ChartMapKind::GrIotaStar);
    RationalMap gi_expected{gsp, csp,
                            {gv("x1").inv(), gv("x2").inv(), gv("x1") / gv("x3"),
                             gv("x2") / gv("l1"), gv("x3") / gv("l2")}};
    CHECK(maps_equal(gi, gi_expected));

    RationalMap ca = chart_map(c, i, ChartMapKind::GrCA);
    RationalMap ca_expected{csp, gsp,
                            {cv("x2").inv(), cv("x3").inv(),
                             cv("x-2") / (cv("x-1") * cv("x1")),
                             cv("x1") / (cv("x-2") * cv("x2")),
                             cv("x2") / (cv("x1") * cv("x3"))}};
    CHECK(maps_equal(ca, ca_expected));

    RationalMap cas = chart_map(c, i, ChartMapKind::GrCAStar);
    RationalMap cas_expected{gsp, csp,
                             {gv("x1") * gv("x3").pow(2) / (gv("l1") * gv("x2")),
                              gv("x2") / (gv("l2") * gv("x3")),
                              gv("x2") / (gv("x1") * gv("x3")), gv("x3") / gv("x2"),
                              gv("x3").inv()}};
    CHECK(maps_equal(cas, cas_expected));

    RationalMap io = chart_map(c, i, ChartMapKind::GrIota);
    RationalMap io_expected{csp, gsp,
                            {cv("x3").inv(), cv("x2").inv(), cv("x-1") / cv("x1"),
                             cv("x-2") / cv("x2"), cv("x1") / cv("x3")}};
    CHECK(maps_equal(io, io_expected));

    // All four are monomial and unimodular.
    for (ChartMapKind kind : {ChartMapKind::GrIotaStar, ChartMapKind::GrCA,
                              ChartMapKind::GrCAStar, ChartMapKind::GrIota}) {
        RationalMap m = chart_map(c, i, kind);
        CHECK(m.is_monomial());
        CHECK(is_unimodular(linear_matrix(m)));
    }
}

TEST_CASE("products of chart-map coordinates over a letter collapse to a weight") {
    // Over the vertices {-a} u occ(a): the gr-ca-star coordinates multiply
    // to 1/l_a, and the gr-iota-star coordinates to 1/l_{a*}.
    for (const std::string& label : {std::string("A2"), std::string("A3")}) {
        CartanMatrix c = build_cartan(label);
        Word i = canonical_longest_word(c);
        const int N = static_cast<int>(i.size());
        WordTables wt = word_tables(c, i);
        SpacePtr gsp = graded_space(c.n, N);
        RationalMap cas = chart_map(c, i, ChartMapKind::GrCAStar);
        RationalMap gi = chart_map(c, i, ChartMapKind::GrIotaStar);
        for (int a = 1; a <= c.n; ++a) {
            PosRat prod_cas = cas.coords[cluster_index(c.n, -a)];
            PosRat prod_gi = gi.coords[cluster_index(c.n, -a)];
            for (int k : wt.occ[static_cast<std::size_t>(a - 1)]) {
                prod_cas = prod_cas * cas.coords[cluster_index(c.n, k)];
                prod_gi = prod_gi * gi.coords[cluster_index(c.n, k)];
            }
            CHECK(prod_cas.equals(PosRat::variable(gsp, "l" + std::to_string(a)).inv()));
            CHECK(prod_gi.equals(
                PosRat::variable(gsp, "l" + std::to_string(star_involution(c, a))).inv()));
        }
    }
}

TEST_CASE("comparison map and its two factorizations in rank 2") {
    CartanMatrix c = build_cartan("A2");
    const Word i{1, 2, 1};
    SpacePtr csp = cluster_space(2, 3);
    auto cv = [&](const char* nm) { return PosRat::variable(csp, nm); };

    RationalMap phi = phi_chart(c, i);
    RationalMap expected{csp, csp,
                         {cv("x-1") * cv("x1") / cv("x-2"), cv("x-2") * cv("x2") / cv("x1"),
                          cv("x-2") * cv("x3") / (cv("x-1") * cv("x2")),
                          cv("x1") * cv("x2") / (cv("x-2") * cv("x3")),
                          cv("x3") / cv("x1")}};
    CHECK(maps_equal(phi, expected));
    CHECK(maps_equal(phi, phi_chart_alt(c, i)));

    // The decoration is the potential pulled back through the comparison map.
    for (int a : {-2, -1, 1, 2})
        CHECK(substitute(ghkk_component(c, i, a), phi).equals(bk_component(c, i, a)));
}

TEST_CASE("comparison map intertwines the rank-2 chart transitions") {
    CartanMatrix c = build_cartan("A2");
    const Word i{1, 2, 1};
    const Word j{2, 1, 2};
    RationalMap lhs = compose(phi_chart(c, j), chart_transition(c, Variety::A, i, j));
    RationalMap rhs = compose(chart_transition(c, Variety::X, i, j), phi_chart(c, i));
    CHECK(maps_equal(lhs, rhs));
}

TEST_CASE("weight-twist map") {
    CartanMatrix c = build_cartan("A2");
    RationalMap d = d_map(c, 3);
    SpacePtr gsp = graded_space(2, 3);
    // l1 -> l1^2/l2, l2 -> l2^2/l1, x fixed.
    CHECK(d.coords[0].equals(PosRat::variable(gsp, "l1").pow(2) / PosRat::variable(gsp, "l2")));
    CHECK(d.coords[2].equals(PosRat::variable(gsp, "x1")));
}
