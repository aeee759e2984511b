// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "stringcone/errors.hpp"
#include "stringcone/matrix.hpp"

using namespace stringcone;

TEST_CASE("determinants by fraction-free elimination") {
    CHECK(int_det(int_identity(4)) == 1);
    CHECK(int_det({{2}}) == 2);
    CHECK(int_det({{1, 2}, {3, 4}}) == -2);
    CHECK(int_det({{0, 1}, {1, 0}}) == -1);
    CHECK(int_det({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}) == 30);
    CHECK(int_det({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
}

TEST_CASE("unimodularity") {
    CHECK(is_unimodular({{1, 1}, {0, 1}}));
    CHECK(is_unimodular({{0, 1}, {1, 0}}));
    CHECK_FALSE(is_unimodular({{2, 0}, {0, 1}}));
    CHECK_FALSE(is_unimodular({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}));
}

TEST_CASE("inverse of a unimodular matrix") {
    IntMat m{{1, 2, 0}, {0, 1, 3}, {0, 0, 1}};
    IntMat inv = unimodular_inverse(m);
    CHECK(int_mul(m, inv) == int_identity(3));
    CHECK(int_mul(inv, m) == int_identity(3));

    CHECK_THROWS_AS(unimodular_inverse({{2, 0}, {0, 1}}), Error);
    CHECK_THROWS_AS(unimodular_inverse({{1, 1}, {1, 1}}), Error);
}

TEST_CASE("products and matrix-vector application") {
    IntMat a{{1, 2}, {3, 4}};
    IntMat b{{0, 1}, {1, 0}};
    CHECK(int_mul(a, b) == IntMat{{2, 1}, {4, 3}});
    CHECK(int_apply(a, {1, 1}) == std::vector<BigInt>{3, 7});
}

TEST_CASE("rank over the rationals") {
    CHECK(int_rank({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 2);
    CHECK(int_rank(int_identity(5)) == 5);
    CHECK(int_rank({{0, 0}, {0, 0}}) == 0);
    CHECK(int_rank({{1, 2}, {2, 4}, {3, 6}}) == 1);
}
