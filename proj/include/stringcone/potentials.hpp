// SPDX-License-Identifier: Apache-2.0
//
// The two potential-like functions on the cluster tori of a reduced word,
// one component per boundary divisor index a in -[n] u [n]:
//
//   * the X-side potential W_a on the chart with coordinates x_k, k in M:
//       W_{i_N} = 1/x_N,
//       W_{-a}  = sum_{k=0}^{m_a-1} prod_{l=0}^{k} 1/x_{a,l}
//       (x_{a,0} = x_{-a}, x_{a,l} = the l-th occurrence of a),
//     and, for positive a != i_N, the pullback of 1/y_N along the X chart
//     transition to a word ending in a;
//
//   * the A-side decoration f^B_a:
//       f^B_{i_N} = x_{N-}/x_N,
//       f^B_{-a}  = sum_{i_k=a} x_{k-}^{-1} x_k^{-1}
//                   prod_{l in M, l<k<l+} x_l^{-c_{i_l,a}},
//     and the A-transition pullback for positive a != i_N.
//
// Every component normalizes to a monomial denominator (regularity on the
// torus); this is asserted. ghkk_component_via_mutation reproduces W_{-a}
// by the optimized-seed route: mutate at the non-final occurrences of a,
// assert that the resulting seed has no arrow from v_{-a} into a mutable
// vertex, and pull 1/x_{-a} back through the composed X-mutation maps.

#ifndef STRINGCONE_POTENTIALS_HPP
#define STRINGCONE_POTENTIALS_HPP

#include "stringcone/cluster.hpp"

namespace stringcone {

enum class PotentialKind { W, FB };

// a in -[n] u [n]; result over cluster_space(n, N).
const PosRat& ghkk_component(const CartanMatrix& cartan, const Word& i, int a);
const PosRat& bk_component(const CartanMatrix& cartan, const Word& i, int a);

// Independent route for W_{-a} (and the trivial a = i_N case) through
// X-mutations to an optimized seed; equals ghkk_component.
PosRat ghkk_component_via_mutation(const CartanMatrix& cartan, const Word& i, int a);

// Sum of all 2n components.
PosRat potential_total(const CartanMatrix& cartan, PotentialKind kind, const Word& i);

} // namespace stringcone

#endif
