// SPDX-License-Identifier: Apache-2.0

#include "stringcone/transitions.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <mutex>
#include <tuple>

namespace stringcone {

namespace {

std::mutex g_space_mutex;

SpacePtr cached_space(std::map<std::pair<int, int>, SpacePtr>& cache, int a, int b,
                      const std::function<std::vector<std::string>()>& names) {
    std::lock_guard<std::mutex> lock(g_space_mutex);
    auto it = cache.find({a, b});
    if (it != cache.end()) return it->second;
    SpacePtr s = make_space(names());
    cache.emplace(std::make_pair(a, b), s);
    return s;
}

} // namespace

SpacePtr chart_space(int N) {
    static std::map<std::pair<int, int>, SpacePtr> cache;
    return cached_space(cache, 0, N, [N] {
        std::vector<std::string> names;
        for (int k = 1; k <= N; ++k) names.push_back("x" + std::to_string(k));
        return names;
    });
}

SpacePtr graded_space(int n, int N) {
    static std::map<std::pair<int, int>, SpacePtr> cache;
    return cached_space(cache, n, N, [n, N] {
        std::vector<std::string> names;
        for (int a = 1; a <= n; ++a) names.push_back("l" + std::to_string(a));
        for (int k = 1; k <= N; ++k) names.push_back("x" + std::to_string(k));
        return names;
    });
}

SpacePtr cluster_space(int n, int N) {
    static std::map<std::pair<int, int>, SpacePtr> cache;
    return cached_space(cache, -n, N, [n, N] {
        std::vector<std::string> names;
        for (int a = 1; a <= n; ++a) names.push_back("x-" + std::to_string(a));
        for (int k = 1; k <= N; ++k) names.push_back("x" + std::to_string(k));
        return names;
    });
}

std::size_t cluster_index(int n, int k) {
    if (k < 0) return static_cast<std::size_t>(-k - 1);
    return static_cast<std::size_t>(n + k - 1);
}

namespace {

// The chart map of a single move: coordinates of the target chart written
// in the source chart's coordinates.
RationalMap move_map(TransitionKind kind, int N, const Move& move) {
    const SpacePtr space = chart_space(N);
    auto var = [&](int k) { return PosRat::variable(space, "x" + std::to_string(k)); };
    RationalMap out{space, space, {}};
    out.coords.reserve(static_cast<std::size_t>(N));
    for (int k = 1; k <= N; ++k) out.coords.push_back(var(k));
    const int p = move.pos;
    if (move.kind == Move::Two) {
        std::swap(out.coords[p - 1], out.coords[p]);
        return out;
    }
    const PosRat a = var(p - 1), b = var(p), c = var(p + 1);
    if (kind == TransitionKind::Lusztig) {
        const PosRat s = a + c;
        out.coords[p - 2] = b * c / s;
        out.coords[p - 1] = s;
        out.coords[p] = a * b / s;
    } else {
        const PosRat s = a * c + b;
        out.coords[p - 2] = b * c / s;
        out.coords[p - 1] = a * c;
        out.coords[p] = s / c;
    }
    return out;
}

using TransitionKey = std::tuple<std::string, int, Word, Word>;

} // namespace

const RationalMap& transition_map(const CartanMatrix& cartan, TransitionKind kind,
                                  const Word& i, const Word& j) {
    static std::map<TransitionKey, RationalMap> cache;
    static std::mutex mutex;
    require_longest_word(cartan, i);
    require_longest_word(cartan, j);
    const TransitionKey key{cartan.label, static_cast<int>(kind), i, j};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const int N = static_cast<int>(i.size());
    RationalMap total = identity_map(chart_space(N));
    Word cur = i;
    for (const Move& move : move_path(cartan, i, j)) {
        total = compose(move_map(kind, N, move), total);
        cur = move_apply(cartan, cur, move);
    }
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(key, std::move(total)).first->second;
}

RationalMap graded_transition_map(const CartanMatrix& cartan, TransitionKind kind,
                                  const Word& i, const Word& j) {
    const int n = cartan.n, N = static_cast<int>(i.size());
    const SpacePtr graded = graded_space(n, N);
    const RationalMap& base = transition_map(cartan, kind, i, j);
    // Embedding of the x-only chart into the graded chart.
    RationalMap embed{graded, chart_space(N), {}};
    for (int k = 1; k <= N; ++k)
        embed.coords.push_back(PosRat::variable(graded, "x" + std::to_string(k)));
    RationalMap out{graded, graded, {}};
    for (int a = 1; a <= n; ++a)
        out.coords.push_back(PosRat::variable(graded, "l" + std::to_string(a)));
    for (const PosRat& coord : base.coords) out.coords.push_back(substitute(coord, embed));
    return out;
}

namespace {

long long nu_level(const CartanMatrix& cartan, const Word& i, int k,
                   const std::vector<long long>& x) {
    long long value = x[static_cast<std::size_t>(k - 1)];
    for (int l = k + 1; l <= static_cast<int>(i.size()); ++l)
        value += cartan.at(i[static_cast<std::size_t>(k - 1)], i[static_cast<std::size_t>(l - 1)]) *
                 x[static_cast<std::size_t>(l - 1)];
    return value;
}

std::vector<int> letter_positions(const Word& i, int a) {
    std::vector<int> out;
    for (int k = 1; k <= static_cast<int>(i.size()); ++k)
        if (i[static_cast<std::size_t>(k - 1)] == a) out.push_back(k);
    return out;
}

} // namespace

long long crystal_eps_star(const CartanMatrix& cartan, const Word& i, int a,
                           const std::vector<long long>& x) {
    const std::vector<int> positions = letter_positions(i, a);
    if (positions.empty()) throw InvalidWordError("letter absent from the word");
    long long best = nu_level(cartan, i, positions.front(), x);
    for (std::size_t t = 1; t < positions.size(); ++t)
        best = std::max(best, nu_level(cartan, i, positions[t], x));
    return best;
}

std::vector<long long> crystal_f_star(const CartanMatrix& cartan, const Word& i, int a,
                                      const std::vector<long long>& x) {
    const std::vector<int> positions = letter_positions(i, a);
    if (positions.empty()) throw InvalidWordError("letter absent from the word");
    int argmax = positions.front();
    long long best = nu_level(cartan, i, argmax, x);
    for (std::size_t t = 1; t < positions.size(); ++t) {
        const long long v = nu_level(cartan, i, positions[t], x);
        if (v > best) {
            best = v;
            argmax = positions[t];
        }
    }
    std::vector<long long> out = x;
    ++out[static_cast<std::size_t>(argmax - 1)];
    return out;
}

namespace {

using TropKey = std::tuple<std::string, Word, Word>;

const TropMap& cached_trop_transition(const CartanMatrix& cartan, const Word& from,
                                      const Word& to) {
    static std::map<TropKey, TropMap> cache;
    static std::mutex mutex;
    const TropKey key{cartan.label, from, to};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    TropMap t = trop_map(transition_map(cartan, TransitionKind::Lusztig, from, to));
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(key, std::move(t)).first->second;
}

} // namespace

std::vector<long long> kashiwara_star(const CartanMatrix& cartan, const Word& i,
                                      const std::vector<long long>& x) {
    const Word istar = star_reversed_word(cartan, i);
    std::vector<long long> reversed(x.rbegin(), x.rend());
    return cached_trop_transition(cartan, istar, i).eval(reversed);
}

long long lusztig_eps(const CartanMatrix& cartan, const Word& i, int a,
                      const std::vector<long long>& x) {
    // BFS through the move graph for the nearest word starting with a.
    const WordGraph& graph = word_graph(cartan);
    const int start = graph.index.at(i);
    std::deque<int> queue{start};
    std::vector<char> seen(graph.words.size(), 0);
    seen[static_cast<std::size_t>(start)] = 1;
    int found = -1;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        if (graph.words[static_cast<std::size_t>(v)].front() == a) {
            found = v;
            break;
        }
        for (const auto& [move, w] : graph.edges[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                queue.push_back(w);
            }
    }
    if (found < 0) throw InvalidWordError("no reduced word starts with the letter");
    const Word& j = graph.words[static_cast<std::size_t>(found)];
    return cached_trop_transition(cartan, i, j).eval(x).front();
}

namespace {

PosRat kappa_type_seed(const CartanMatrix& cartan, const Word& j, bool dual) {
    const int n = cartan.n, N = static_cast<int>(j.size());
    const SpacePtr graded = graded_space(n, N);
    const int last = j.back();
    ExpoVec exps(graded->dim(), 0);
    if (dual) {
        for (int b = 1; b <= n; ++b)
            exps[static_cast<std::size_t>(star_involution(cartan, b) - 1)] +=
                cartan.at(last, b);
    } else {
        exps[static_cast<std::size_t>(star_involution(cartan, last) - 1)] = 1;
    }
    exps[static_cast<std::size_t>(n + N - 1)] = -1;
    return PosRat::monomial(graded, exps, 1);
}

PosRat zeta_seed(const CartanMatrix& cartan, const Word& j) {
    const int n = cartan.n, N = static_cast<int>(j.size());
    const SpacePtr graded = graded_space(n, N);
    ExpoVec exps(graded->dim(), 0);
    exps[static_cast<std::size_t>(n + N - 1)] = 1;
    return PosRat::monomial(graded, exps, 1);
}

PosRat nu_type_fn(const CartanMatrix& cartan, const Word& i, int a, bool dual) {
    const int n = cartan.n, N = static_cast<int>(i.size());
    const SpacePtr graded = graded_space(n, N);
    PosPoly num(graded);
    for (int k : letter_positions(i, a)) {
        ExpoVec exps(graded->dim(), 0);
        if (dual) {
            for (int b = 1; b <= n; ++b) exps[static_cast<std::size_t>(b - 1)] += cartan.at(a, b);
        } else {
            exps[static_cast<std::size_t>(a - 1)] = 1;
        }
        exps[static_cast<std::size_t>(n + k - 1)] -= 1;
        for (int l = k + 1; l <= N; ++l)
            exps[static_cast<std::size_t>(n + l - 1)] -=
                cartan.at(i[static_cast<std::size_t>(l - 1)], a);
        num.add_term(exps, 1);
    }
    return PosRat(num, PosPoly::constant(graded, 1));
}

PosRat compute_cone_fn(const CartanMatrix& cartan, const Word& i, int a, ConeFnKind kind) {
    const int n = cartan.n, N = static_cast<int>(i.size());
    require_longest_word(cartan, i);
    if (a < 1 || a > n) throw DomainError("cone function index out of range");
    const SpacePtr graded = graded_space(n, N);
    switch (kind) {
    case ConeFnKind::LusztigCone: {
        PosPoly num(graded);
        for (int k : letter_positions(i, a)) {
            ExpoVec exps(graded->dim(), 0);
            exps[static_cast<std::size_t>(n + k - 1)] = 1;
            num.add_term(exps, 1);
        }
        return PosRat(num, PosPoly::constant(graded, 1));
    }
    case ConeFnKind::Nu:
        return nu_type_fn(cartan, i, a, false);
    case ConeFnKind::NuDual:
        return nu_type_fn(cartan, i, a, true);
    case ConeFnKind::Kappa:
    case ConeFnKind::KappaDual:
    case ConeFnKind::Zeta: {
        const Word j = i.back() == a ? i : word_ending_with(cartan, i, a);
        const PosRat seed = kind == ConeFnKind::Zeta ? zeta_seed(cartan, j)
                                                     : kappa_type_seed(cartan, j, kind == ConeFnKind::KappaDual);
        const TransitionKind tkind =
            kind == ConeFnKind::Zeta ? TransitionKind::String : TransitionKind::Lusztig;
        const PosRat result = j == i ? seed
                                     : substitute(seed, graded_transition_map(cartan, tkind, i, j));
        if (!result.has_monomial_denominator())
            throw DomainError("pullback failed to normalize to a regular function");
        return result;
    }
    }
    throw DomainError("unknown cone function kind");
}

} // namespace

const PosRat& cone_fn(const CartanMatrix& cartan, const Word& i, int a, ConeFnKind kind) {
    static std::map<std::tuple<std::string, Word, int, int>, PosRat> cache;
    static std::mutex mutex;
    const std::tuple<std::string, Word, int, int> key{cartan.label, i, a, static_cast<int>(kind)};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    PosRat value = compute_cone_fn(cartan, i, a, kind);
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(key, std::move(value)).first->second;
}

} // namespace stringcone
