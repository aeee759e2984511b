// SPDX-License-Identifier: Apache-2.0
//
// Reduced words of the longest Weyl element and their move combinatorics:
//   * 2-move at position k: swap letters k,k+1 when they commute (c = 0);
//   * 3-move at position k: positions (k-1,k,k+1) carry the braid pattern
//     (b,a,b) -> (a,b,a) when c_{a,b} = -1.
// On top of the words themselves this header provides the convex order of
// positive roots, the occurrence bookkeeping over the extended index set
// M = -[n] u [N] (with i_{-a} = a, successor k+ and predecessor k-), the
// star involution a -> a* (w0(alpha_a) = -alpha_{a*}), and breadth-first
// search through the move graph.

#ifndef STRINGCONE_WORDS_HPP
#define STRINGCONE_WORDS_HPP

#include <map>
#include <optional>
#include <vector>

#include "stringcone/cartan.hpp"

namespace stringcone {

using Word = std::vector<int>; // letters in [1..n]

struct Move {
    enum Kind { Two, Three } kind;
    int pos; // 2-move swaps (pos, pos+1); 3-move spans (pos-1, pos, pos+1)
};

// True iff the word is a reduced expression (letters in range, length
// increases at every step).
bool is_reduced(const CartanMatrix& cartan, const Word& word);

// True iff the word is a reduced expression of the longest element.
bool is_longest_word(const CartanMatrix& cartan, const Word& word);

// Throws InvalidWordError unless is_longest_word.
void require_longest_word(const CartanMatrix& cartan, const Word& word);

// The lexicographically smallest reduced word of the longest element
// (greedy smallest-ascent construction).
Word canonical_longest_word(const CartanMatrix& cartan);

// Convex order: beta_k = s_{i_1}...s_{i_{k-1}}(alpha_{i_k}), k = 1..N.
std::vector<RootVec> convex_order(const CartanMatrix& cartan, const Word& word);

// The star involution: w0(alpha_a) = -alpha_{a*}.
int star_involution(const CartanMatrix& cartan, int a);

// i* applied letterwise and reversed: (i_N*, ..., i_1*). Also a reduced word
// of the longest element.
Word star_reversed_word(const CartanMatrix& cartan, const Word& word);

// All moves applicable to the word, in ascending position order.
std::vector<Move> applicable_moves(const CartanMatrix& cartan, const Word& word);

// Applies a move; throws InvalidWordError if not applicable.
Word move_apply(const CartanMatrix& cartan, const Word& word, const Move& move);

// Occurrence bookkeeping over the extended index set M = {-1..-n, 1..N}.
// Entries of M are listed in the canonical order -1,-2,...,-n,1,2,...,N.
struct WordTables {
    Word word;          // i_1..i_N
    CartanMatrix cartan;
    int n = 0, N = 0;
    std::vector<int> m; // m[a-1] = number of occurrences of letter a
    // occ[a-1] = positions (1-based) of letter a in the word, ascending;
    // occ[a-1][r-1] is the label v_{a,r}. v_{a,0} is the negative index -a.
    std::vector<std::vector<int>> occ;

    // letter(k) = i_k for k in M (i_{-a} = a).
    int letter(int k) const;
    // successor: smallest l in M with l > k and same letter, else N+1.
    int succ(int k) const;
    // predecessor: largest l in M with l < k and same letter (k must be
    // positive; the first occurrence of a letter has predecessor -a).
    int pred(int k) const;
    // bracket {k,l}: -c_{i_k,i_l} if k < l < k+; -1 if l == k or l == k+;
    // 0 otherwise. (The chart maps built from it need the Cartan weighting
    // on the strictly-between case; for adjacent letters it is just 1.)
    int bracket(int k, int l) const;
    // all of M in canonical order.
    std::vector<int> index_set() const;
};

WordTables word_tables(const CartanMatrix& cartan, const Word& word);

// The move graph on all reduced words of the longest element.
struct WordGraph {
    std::vector<Word> words;            // index -> word
    std::map<Word, int> index;          // word -> index
    // edges[v] = (move, neighbor index); move applied to words[v].
    std::vector<std::vector<std::pair<Move, int>>> edges;
};

// Builds (and caches per Cartan label) the full move graph.
const WordGraph& word_graph(const CartanMatrix& cartan);

// Shortest move sequence from one word to another (BFS). Both must be
// reduced words of the longest element.
std::vector<Move> move_path(const CartanMatrix& cartan, const Word& from, const Word& to);

// Some reduced word of the longest element ending with the given letter
// (shortest move distance from `from`; used to seed pullback recursions).
Word word_ending_with(const CartanMatrix& cartan, const Word& from, int last_letter);

} // namespace stringcone

#endif
