// SPDX-License-Identifier: Apache-2.0
//
// Polyhedral cones as H-descriptions over a named coordinate space, with
// exact extreme-ray computation (double description over the rationals),
// cone equality, pushforward along unimodular lattice maps, the closed-form
// unimodular map from the graded string chart to the graded Lusztig chart,
// and lattice-point enumeration of the weight polytopes.
//
// Rows are primitive integer vectors r meaning <r, y> >= 0; the row list is
// deduplicated and sorted, so equal H-descriptions compare equal
// structurally. Extreme rays require a pointed cone (the graded and
// potential cones here all are) and an ambient dimension of at most 16.

#ifndef STRINGCONE_CONES_HPP
#define STRINGCONE_CONES_HPP

#include "stringcone/chartmaps.hpp"
#include "stringcone/matrix.hpp"
#include "stringcone/potentials.hpp"

namespace stringcone {

struct ConeH {
    SpacePtr space;
    std::vector<std::vector<long long>> rows; // primitive, deduplicated, sorted
};

// Canonicalizes rows (primitive, dedup, sort; zero rows dropped).
ConeH make_cone(SpacePtr space, std::vector<std::vector<long long>> rows);

// One inequality row per numerator term of f (minus the denominator
// exponent); requires a monomial denominator.
std::vector<std::vector<long long>> trop_rows(const PosRat& f);

// The six cone families. Graded kinds live on graded_space(n, N) in the
// order (l_1..l_n, x_1..x_N); Ghkk/Bk live on cluster_space(n, N) in the
// order (x_-1..x_-n, x_1..x_N).
enum class ConeKind {
    GradedString,
    GradedStringDual,
    GradedLusztig,
    GradedLusztigDual,
    Ghkk,
    Bk
};

ConeH build_cone(const CartanMatrix& cartan, const Word& i, ConeKind kind);

// Closed form of the graded-string -> graded-Lusztig lattice map:
//   l'_a = l_{a*},
//   x'_k = l_{i_k} - x_k - sum_{l>k} c_{i_k,i_l} x_l,
// and, in the dual variant, l_{i_k} replaced by sum_a c_{i_k,a} l_a.
IntMat cmm_matrix(const CartanMatrix& cartan, const Word& i, bool dual);

// The same map computed from the chart maps: matrix(gr_iota_star)^{-1} *
// matrix(gr_CA_star), or matrix(gr_CA) * matrix(gr_iota)^{-1} for the dual.
IntMat cmm_matrix_composed(const CartanMatrix& cartan, const Word& i, bool dual);

// Image cone under y = L x for unimodular L: rows are rewritten by L^{-1}.
ConeH transform_cone(const ConeH& cone, const IntMat& map, SpacePtr target_space);

// Primitive extreme-ray generators (double description). Throws
// DimensionCapError above dimension 16 and DomainError for non-pointed
// input.
std::vector<std::vector<BigInt>> cone_extreme_rays(const ConeH& cone);

// Membership of an integer point.
bool in_cone(const ConeH& cone, const std::vector<long long>& point);

// Exact equality via mutual extreme-ray membership (pointed cones).
bool cones_equal(const ConeH& a, const ConeH& b);

// Lattice points of the weight polytope: fix the weight block of the
// graded cone at lambda (dominant; typed error otherwise) and enumerate the
// x-block. Bounds come from the exact vertices of the slice.
enum class PolytopeKind { String, Lusztig };

std::vector<std::vector<long long>> polytope_points(const CartanMatrix& cartan, const Word& i,
                                                    PolytopeKind kind, const WeightVec& lambda);

} // namespace stringcone

#endif
