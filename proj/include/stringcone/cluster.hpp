// SPDX-License-Identifier: Apache-2.0
//
// Seeds and quivers attached to reduced words, seed mutation, and the
// induced birational A- and X-coordinate changes.
//
// The seed of a word lives on the extended index set M = -[n] u [N].
// Frozen vertices are the negative indices v_{-a} and the last occurrence
// of each letter. The skew form comes from two edge rules:
//   * horizontal: k -> k+ whenever k+ <= N (eps(k, k+) = 1);
//   * inclined:   for k in M, l in [N] with k < l, l < k+ < l+ and
//                 c_{i_k, i_l} < 0, an arrow l -> k (eps(l, k) = 1).
// Values of the form between two frozen vertices are stored losslessly;
// only the displayed quiver erases frozen-frozen arrows. Mutation formulas
// never read frozen-frozen entries (mutation happens at mutable vertices
// only), so the erasure is purely cosmetic.
//
// A 3-move at positions (k-1,k,k+1) corresponds to a mutation at vertex
// k-1 followed by the relabeling transposition (k,k+1); a 2-move is a
// relabeling only. chart_transition composes the per-move birational maps
// along a shortest move path and asserts, move by move, that the relabeled
// mutated quiver equals the quiver of the target word.

#ifndef STRINGCONE_CLUSTER_HPP
#define STRINGCONE_CLUSTER_HPP

#include <set>

#include "stringcone/transitions.hpp"

namespace stringcone {

struct Seed {
    std::string cartan_label;
    Word word;                             // provenance
    int n = 0, N = 0;
    std::map<std::pair<int, int>, int> eps; // sparse skew form on M x M
    std::set<int> frozen;

    int eps_of(int k, int l) const;
    bool is_frozen(int k) const { return frozen.count(k) > 0; }
    std::vector<int> index_set() const;     // M in canonical order
};

Seed seed_from_word(const CartanMatrix& cartan, const Word& i);

// Mutation at a mutable vertex k (throws DomainError if k is frozen):
// eps'(j,l) = eps(j,l) + [eps(l,k)]_+ eps(j,k) - [eps(j,k)]_+ eps(l,k) for
// j,l != k, and eps'(j,k) = -eps(j,k).
Seed mutate_seed(const Seed& seed, int k);

// Relabels vertices by a permutation of M (entries absent from the map are
// fixed).
Seed relabel_seed(const Seed& seed, const std::map<int, int>& perm);

struct QuiverArrow {
    int source = 0, target = 0, mult = 0;
    bool operator==(const QuiverArrow&) const = default;
    auto operator<=>(const QuiverArrow&) const = default;
};

// Displayed arrows: eps(k,l) > 0 gives k -> l with multiplicity eps(k,l);
// arrows between two frozen vertices are erased; sorted.
std::vector<QuiverArrow> quiver_of(const Seed& seed);

// Equality of displayed quivers together with the frozen sets.
bool quivers_equal(const Seed& a, const Seed& b);

// The birational coordinate change induced by mutation at k, as a map from
// the chart of `seed` to the chart of mutate_seed(seed, k), on
// cluster_space(n, N):
//   A-version: A_k -> (prod_{eps(j,k)>0} A_j^{eps(j,k)}
//                      + prod_{eps(j,k)<0} A_j^{-eps(j,k)}) / A_k;
//   X-version: X_k -> 1/X_k,
//              X_l -> X_l (1 + X_k^{-sgn eps(l,k)})^{-eps(l,k)} for l != k.
RationalMap a_mutation(const Seed& seed, int k);
RationalMap x_mutation(const Seed& seed, int k);

enum class Variety { A, X };

// The birational map of a single move on the cluster chart of `cur`:
// identity/mutation composed with the index transposition, asserting that
// the relabeled quiver matches the target word's quiver.
RationalMap move_chart_map(const CartanMatrix& cartan, Variety variety, const Word& cur,
                           const Move& move);

// Chart transition from the cluster chart of word i to that of word j
// (memoized per (type, variety, i, j)); composes mutations and relabelings
// along a shortest move path, asserting the quiver isomorphism per move.
const RationalMap& chart_transition(const CartanMatrix& cartan, Variety variety,
                                    const Word& i, const Word& j);

} // namespace stringcone

#endif
