// SPDX-License-Identifier: Apache-2.0
//
// Transition maps between the charts attached to reduced words, in two
// flavours:
//   * Lusztig: the 3-move at positions (k-1,k,k+1) sends (x_{k-1},x_k,x_{k+1})
//     to (x_k x_{k+1}/(x_{k-1}+x_{k+1}), x_{k-1}+x_{k+1},
//         x_{k-1} x_k/(x_{k-1}+x_{k+1}));
//   * String: the same move sends them to
//     (x_k x_{k+1}/(x_{k-1}x_{k+1}+x_k), x_{k-1}x_{k+1},
//      (x_{k-1}x_{k+1}+x_k)/x_{k+1}).
// 2-moves swap the two coordinates. transition_map(kind, i, j) composes
// these along a shortest move path and always maps the chart of i to the
// chart of j.
//
// On top of the transitions: the free-crystal operations eps*/f* on string
// data, the Kashiwara star involution on Lusztig data (reverse, then move
// tropically from the chart of (i_N*,...,i_1*) back to i), and the six
// families of cone/grading functions (Lusztig cone functions, kappa,
// kappa-dual, zeta, nu, nu-dual), all as exact subtraction-free functions
// on the graded chart (l_1..l_n, x_1..x_N).

#ifndef STRINGCONE_TRANSITIONS_HPP
#define STRINGCONE_TRANSITIONS_HPP

#include "stringcone/posrat.hpp"
#include "stringcone/words.hpp"

namespace stringcone {

// Chart coordinates x1..xN.
SpacePtr chart_space(int N);

// Graded chart coordinates l1..ln (weight block) then x1..xN.
SpacePtr graded_space(int n, int N);

// Cluster-torus coordinates in the canonical order of the extended index
// set M: x-1..x-n then x1..xN.
SpacePtr cluster_space(int n, int N);

// Index of the coordinate of vertex k (k in M) inside cluster_space.
std::size_t cluster_index(int n, int k);

enum class TransitionKind { Lusztig, String };

// Chart transition from the chart of word i to the chart of word j,
// composed along a shortest move path. Memoized per (type, kind, i, j).
const RationalMap& transition_map(const CartanMatrix& cartan, TransitionKind kind,
                                  const Word& i, const Word& j);

// Same map extended by the identity on the weight block: graded chart of i
// to graded chart of j.
RationalMap graded_transition_map(const CartanMatrix& cartan, TransitionKind kind,
                                  const Word& i, const Word& j);

// nu^k(x) = x_k + sum_{l>k} c_{i_k,i_l} x_l; eps*_a = max over k with
// i_k = a. String data x in Z^N.
long long crystal_eps_star(const CartanMatrix& cartan, const Word& i, int a,
                           const std::vector<long long>& x);

// f*_a adds 1 to x_k at the smallest k with i_k = a maximizing nu^k.
std::vector<long long> crystal_f_star(const CartanMatrix& cartan, const Word& i, int a,
                                      const std::vector<long long>& x);

// Kashiwara star on Lusztig data in the chart of i: reverse the
// coordinates, read them in the chart of i^* := (i_N*,...,i_1*), and move
// tropically back to the chart of i. An involution on N^N.
std::vector<long long> kashiwara_star(const CartanMatrix& cartan, const Word& i,
                                      const std::vector<long long>& x);

// eps_a of Lusztig data: move tropically to a chart whose word starts with
// the letter a and read off the first coordinate.
long long lusztig_eps(const CartanMatrix& cartan, const Word& i, int a,
                      const std::vector<long long>& x);

// The six cone/grading function families, all over graded_space(n, N):
//   LusztigCone: sum of the x-coordinates at the occurrences of a;
//   Kappa:      l_{i_N*} / x_N for a = i_N, otherwise pulled back along the
//               Lusztig transition from a word ending in a;
//   KappaDual:  seed prod_b l_{b*}^{c_{i_N,b}} / x_N, pulled back the same way;
//   Zeta:       x_N for a = i_N, pulled back along string transitions;
//   Nu:         l_a * sum_{i_k=a} x_k^{-1} prod_{l>k} x_l^{-c_{i_l,i_k}};
//   NuDual:     Nu with l_a replaced by prod_b l_b^{c_{a,b}}.
// Kappa, KappaDual and Zeta must normalize to monomial denominator
// (regularity); this is asserted. Memoized per (type, word, a, kind).
enum class ConeFnKind { LusztigCone, Kappa, KappaDual, Zeta, Nu, NuDual };

const PosRat& cone_fn(const CartanMatrix& cartan, const Word& i, int a, ConeFnKind kind);

} // namespace stringcone

#endif
