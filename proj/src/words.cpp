// SPDX-License-Identifier: Apache-2.0

#include "stringcone/words.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace stringcone {

namespace {

bool is_positive(const RootVec& beta) {
    return std::all_of(beta.begin(), beta.end(), [](int x) { return x >= 0; });
}

std::string word_str(const Word& word) {
    std::ostringstream os;
    for (std::size_t i = 0; i < word.size(); ++i) os << (i ? "," : "") << word[i];
    return os.str();
}

} // namespace

bool is_reduced(const CartanMatrix& cartan, const Word& word) {
    for (int a : word)
        if (a < 1 || a > cartan.n) return false;
    // The word is reduced iff every prefix sends the next simple root to a
    // positive root: beta_k = s_{i_1}...s_{i_{k-1}}(alpha_{i_k}) > 0.
    for (std::size_t k = 0; k < word.size(); ++k) {
        RootVec beta(cartan.n, 0);
        beta[word[k] - 1] = 1;
        for (std::size_t j = k; j-- > 0;) beta = simple_reflection(cartan, word[j], beta);
        if (!is_positive(beta)) return false;
    }
    return true;
}

bool is_longest_word(const CartanMatrix& cartan, const Word& word) {
    return static_cast<int>(word.size()) == longest_length(cartan) && is_reduced(cartan, word);
}

void require_longest_word(const CartanMatrix& cartan, const Word& word) {
    if (!is_longest_word(cartan, word))
        throw InvalidWordError("not a reduced word of the longest element in " + cartan.label +
                               ": [" + word_str(word) + "]");
}

Word canonical_longest_word(const CartanMatrix& cartan) {
    // Greedy: always append the smallest letter that keeps the word reduced.
    // Every reduced word extends to the longest element, so this terminates
    // with the lexicographically smallest reduced word of w0.
    const int N = longest_length(cartan);
    Word word;
    word.reserve(N);
    while (static_cast<int>(word.size()) < N) {
        for (int a = 1; a <= cartan.n; ++a) {
            word.push_back(a);
            if (is_reduced(cartan, word)) break;
            word.pop_back();
        }
    }
    return word;
}

std::vector<RootVec> convex_order(const CartanMatrix& cartan, const Word& word) {
    require_longest_word(cartan, word);
    std::vector<RootVec> betas;
    betas.reserve(word.size());
    for (std::size_t k = 0; k < word.size(); ++k) {
        RootVec beta(cartan.n, 0);
        beta[word[k] - 1] = 1;
        for (std::size_t j = k; j-- > 0;) beta = simple_reflection(cartan, word[j], beta);
        betas.push_back(beta);
    }
    return betas;
}

int star_involution(const CartanMatrix& cartan, int a) {
    if (a < 1 || a > cartan.n) throw DomainError("letter out of range");
    // w0(alpha_a) = -alpha_{a*}; apply the canonical longest word.
    RootVec beta(cartan.n, 0);
    beta[a - 1] = 1;
    const Word w0 = canonical_longest_word(cartan);
    for (std::size_t j = w0.size(); j-- > 0;) beta = simple_reflection(cartan, w0[j], beta);
    for (int b = 1; b <= cartan.n; ++b)
        if (beta[b - 1] == -1) return b;
    throw DomainError("star involution: unexpected image of a simple root");
}

Word star_reversed_word(const CartanMatrix& cartan, const Word& word) {
    Word out(word.size());
    for (std::size_t k = 0; k < word.size(); ++k)
        out[word.size() - 1 - k] = star_involution(cartan, word[k]);
    return out;
}

std::vector<Move> applicable_moves(const CartanMatrix& cartan, const Word& word) {
    std::vector<Move> moves;
    const int N = static_cast<int>(word.size());
    for (int k = 1; k < N; ++k)
        if (cartan.at(word[k - 1], word[k]) == 0)
            moves.push_back({Move::Two, k});
    for (int k = 2; k < N; ++k)
        if (word[k - 2] == word[k] && word[k - 2] != word[k - 1] &&
            cartan.at(word[k - 1], word[k]) == -1)
            moves.push_back({Move::Three, k});
    std::sort(moves.begin(), moves.end(), [](const Move& x, const Move& y) {
        if (x.pos != y.pos) return x.pos < y.pos;
        return x.kind < y.kind;
    });
    return moves;
}

Word move_apply(const CartanMatrix& cartan, const Word& word, const Move& move) {
    const int N = static_cast<int>(word.size());
    Word out = word;
    if (move.kind == Move::Two) {
        if (move.pos < 1 || move.pos >= N || cartan.at(word[move.pos - 1], word[move.pos]) != 0)
            throw InvalidWordError("2-move not applicable at position " + std::to_string(move.pos));
        std::swap(out[move.pos - 1], out[move.pos]);
    } else {
        const int k = move.pos;
        if (k < 2 || k >= N || word[k - 2] != word[k] || word[k - 2] == word[k - 1] ||
            cartan.at(word[k - 1], word[k]) != -1)
            throw InvalidWordError("3-move not applicable at position " + std::to_string(k));
        // (b, a, b) -> (a, b, a) on positions (k-1, k, k+1).
        out[k - 2] = word[k - 1];
        out[k - 1] = word[k - 2];
        out[k] = word[k - 1];
    }
    return out;
}

int WordTables::letter(int k) const {
    if (k < 0) return -k;
    return word[k - 1];
}

int WordTables::succ(int k) const {
    const int a = letter(k);
    const int from = k < 0 ? 1 : k + 1;
    for (int l = from; l <= N; ++l)
        if (word[l - 1] == a) return l;
    return N + 1;
}

int WordTables::pred(int k) const {
    const int a = letter(k);
    for (int l = k - 1; l >= 1; --l)
        if (word[l - 1] == a) return l;
    return -a;
}

int WordTables::bracket(int k, int l) const {
    const int kp = succ(k);
    if (l == k || l == kp) return -1;
    if (k < l && l < kp) return -cartan.at(letter(k), letter(l));
    return 0;
}

std::vector<int> WordTables::index_set() const {
    std::vector<int> M;
    for (int a = 1; a <= n; ++a) M.push_back(-a);
    for (int k = 1; k <= N; ++k) M.push_back(k);
    return M;
}

WordTables word_tables(const CartanMatrix& cartan, const Word& word) {
    require_longest_word(cartan, word);
    WordTables t;
    t.word = word;
    t.cartan = cartan;
    t.n = cartan.n;
    t.N = static_cast<int>(word.size());
    t.m.assign(cartan.n, 0);
    t.occ.assign(cartan.n, {});
    for (int k = 1; k <= t.N; ++k) {
        t.m[word[k - 1] - 1]++;
        t.occ[word[k - 1] - 1].push_back(k);
    }
    return t;
}

const WordGraph& word_graph(const CartanMatrix& cartan) {
    static std::mutex mutex;
    static std::unordered_map<std::string, std::unique_ptr<WordGraph>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(cartan.label);
    if (it != cache.end()) return *it->second;

    auto graph = std::make_unique<WordGraph>();
    const Word start = canonical_longest_word(cartan);
    graph->words.push_back(start);
    graph->index[start] = 0;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        const Word w = graph->words[v];
        for (const Move& move : applicable_moves(cartan, w)) {
            const Word u = move_apply(cartan, w, move);
            auto [pos, inserted] = graph->index.try_emplace(u, static_cast<int>(graph->words.size()));
            if (inserted) {
                graph->words.push_back(u);
                queue.push_back(pos->second);
            }
        }
    }
    graph->edges.assign(graph->words.size(), {});
    for (std::size_t v = 0; v < graph->words.size(); ++v)
        for (const Move& move : applicable_moves(cartan, graph->words[v]))
            graph->edges[v].push_back({move, graph->index.at(move_apply(cartan, graph->words[v], move))});

    auto [pos, _] = cache.emplace(cartan.label, std::move(graph));
    return *pos->second;
}

std::vector<Move> move_path(const CartanMatrix& cartan, const Word& from, const Word& to) {
    require_longest_word(cartan, from);
    require_longest_word(cartan, to);
    const WordGraph& graph = word_graph(cartan);
    const int src = graph.index.at(from);
    const int dst = graph.index.at(to);
    // BFS storing the (move, parent) that discovered each vertex.
    std::vector<int> parent(graph.words.size(), -1);
    std::vector<Move> via(graph.words.size(), Move{Move::Two, 0});
    std::vector<bool> seen(graph.words.size(), false);
    std::deque<int> queue{src};
    seen[src] = true;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        if (v == dst) break;
        for (const auto& [move, u] : graph.edges[v]) {
            if (seen[u]) continue;
            seen[u] = true;
            parent[u] = v;
            via[u] = move;
            queue.push_back(u);
        }
    }
    if (!seen[dst]) throw InvalidWordError("words are not connected by moves");
    std::vector<Move> path;
    for (int v = dst; v != src; v = parent[v]) path.push_back(via[v]);
    std::reverse(path.begin(), path.end());
    return path;
}

Word word_ending_with(const CartanMatrix& cartan, const Word& from, int last_letter) {
    require_longest_word(cartan, from);
    if (last_letter < 1 || last_letter > cartan.n) throw DomainError("letter out of range");
    if (from.back() == last_letter) return from;
    const WordGraph& graph = word_graph(cartan);
    // BFS from `from`; the first word found ending in the letter is at
    // minimal move distance, keeping pullback chains short.
    std::vector<bool> seen(graph.words.size(), false);
    std::deque<int> queue{graph.index.at(from)};
    seen[graph.index.at(from)] = true;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        if (graph.words[v].back() == last_letter) return graph.words[v];
        for (const auto& [move, u] : graph.edges[v]) {
            (void)move;
            if (!seen[u]) {
                seen[u] = true;
                queue.push_back(u);
            }
        }
    }
    throw InvalidWordError("no reduced word of the longest element ends with the letter");
}

} // namespace stringcone
