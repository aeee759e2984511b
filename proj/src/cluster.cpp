// SPDX-License-Identifier: Apache-2.0

#include "stringcone/cluster.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

namespace stringcone {

int Seed::eps_of(int k, int l) const {
    auto it = eps.find({k, l});
    if (it != eps.end()) return it->second;
    it = eps.find({l, k});
    if (it != eps.end()) return -it->second;
    return 0;
}

std::vector<int> Seed::index_set() const {
    std::vector<int> out;
    for (int a = 1; a <= n; ++a) out.push_back(-a);
    for (int k = 1; k <= N; ++k) out.push_back(k);
    return out;
}

namespace {

// Position of k in the canonical order -1,-2,...,-n,1,...,N, used whenever
// an edge rule compares extended indices.
int order_index(int n, int k) { return static_cast<int>(cluster_index(n, k)); }

void put_eps(Seed& seed, int k, int l, int value) {
    if (value == 0) {
        seed.eps.erase({k, l});
        return;
    }
    seed.eps[{k, l}] = value;
}

void add_eps(Seed& seed, int k, int l, int delta) {
    if (delta == 0) return;
    put_eps(seed, k, l, seed.eps_of(k, l) + delta);
}

} // namespace

Seed seed_from_word(const CartanMatrix& cartan, const Word& i) {
    require_longest_word(cartan, i);
    const WordTables tables = word_tables(cartan, i);
    Seed seed;
    seed.cartan_label = cartan.label;
    seed.word = i;
    seed.n = cartan.n;
    seed.N = tables.N;
    for (int a = 1; a <= seed.n; ++a) {
        seed.frozen.insert(-a);
        seed.frozen.insert(tables.occ[static_cast<std::size_t>(a - 1)].back());
    }
    for (int k : seed.index_set()) {
        const int succ = tables.succ(k);
        if (succ <= seed.N) put_eps(seed, k, succ, 1); // horizontal k -> k+
    }
    for (int k : seed.index_set()) {
        const int kp = tables.succ(k);
        if (kp > seed.N) continue;
        for (int l = 1; l <= seed.N; ++l) {
            if (order_index(seed.n, k) >= order_index(seed.n, l)) continue;
            const int lp = tables.succ(l);
            if (!(l < kp && kp < lp)) continue;
            if (cartan.at(tables.letter(k), tables.letter(l)) >= 0) continue;
            add_eps(seed, l, k, 1); // inclined l -> k
        }
    }
    return seed;
}

Seed mutate_seed(const Seed& seed, int k) {
    if (seed.is_frozen(k)) throw DomainError("mutation at a frozen vertex");
    Seed out = seed;
    out.eps.clear();
    const std::vector<int> index = seed.index_set();
    auto pos = [](int v) { return v > 0 ? v : 0; };
    for (std::size_t s = 0; s < index.size(); ++s)
        for (std::size_t t = s + 1; t < index.size(); ++t) {
            const int j = index[s], l = index[t];
            int value;
            if (j == k || l == k) {
                value = -seed.eps_of(j, l);
            } else {
                value = seed.eps_of(j, l) + pos(seed.eps_of(l, k)) * seed.eps_of(j, k) -
                        pos(seed.eps_of(j, k)) * seed.eps_of(l, k);
            }
            put_eps(out, j, l, value);
        }
    return out;
}

Seed relabel_seed(const Seed& seed, const std::map<int, int>& perm) {
    auto image = [&perm](int k) {
        auto it = perm.find(k);
        return it == perm.end() ? k : it->second;
    };
    Seed out = seed;
    out.eps.clear();
    out.frozen.clear();
    for (int k : seed.frozen) out.frozen.insert(image(k));
    for (const auto& [pair, value] : seed.eps)
        put_eps(out, image(pair.first), image(pair.second), value);
    return out;
}

std::vector<QuiverArrow> quiver_of(const Seed& seed) {
    std::vector<QuiverArrow> arrows;
    for (const auto& [pair, value] : seed.eps) {
        if (value == 0) continue;
        const int source = value > 0 ? pair.first : pair.second;
        const int target = value > 0 ? pair.second : pair.first;
        if (seed.is_frozen(source) && seed.is_frozen(target)) continue;
        arrows.push_back({source, target, value > 0 ? value : -value});
    }
    auto key = [&seed](const QuiverArrow& a) {
        return std::make_pair(order_index(seed.n, a.source), order_index(seed.n, a.target));
    };
    std::sort(arrows.begin(), arrows.end(),
              [&key](const QuiverArrow& a, const QuiverArrow& b) { return key(a) < key(b); });
    return arrows;
}

bool quivers_equal(const Seed& a, const Seed& b) {
    return a.n == b.n && a.N == b.N && a.frozen == b.frozen && quiver_of(a) == quiver_of(b);
}

namespace {

PosRat vertex_var(const Seed& seed, int k) {
    const SpacePtr space = cluster_space(seed.n, seed.N);
    const std::string name = k < 0 ? "x-" + std::to_string(-k) : "x" + std::to_string(k);
    return PosRat::variable(space, name);
}

} // namespace

RationalMap a_mutation(const Seed& seed, int k) {
    if (seed.is_frozen(k)) throw DomainError("mutation at a frozen vertex");
    const SpacePtr space = cluster_space(seed.n, seed.N);
    RationalMap out = identity_map(space);
    PosRat plus = PosRat::one(space), minus = PosRat::one(space);
    for (int j : seed.index_set()) {
        const int e = seed.eps_of(j, k);
        if (e > 0) plus = plus * vertex_var(seed, j).pow(e);
        if (e < 0) minus = minus * vertex_var(seed, j).pow(-e);
    }
    out.coords[cluster_index(seed.n, k)] = (plus + minus) / vertex_var(seed, k);
    return out;
}

RationalMap x_mutation(const Seed& seed, int k) {
    if (seed.is_frozen(k)) throw DomainError("mutation at a frozen vertex");
    const SpacePtr space = cluster_space(seed.n, seed.N);
    const PosRat xk = vertex_var(seed, k);
    RationalMap out = identity_map(space);
    for (int l : seed.index_set()) {
        if (l == k) {
            out.coords[cluster_index(seed.n, k)] = xk.inv();
            continue;
        }
        const int e = seed.eps_of(l, k);
        if (e == 0) continue;
        const PosRat factor = PosRat::one(space) + (e > 0 ? xk.inv() : xk);
        out.coords[cluster_index(seed.n, l)] = vertex_var(seed, l) * factor.pow(-e);
    }
    return out;
}

RationalMap move_chart_map(const CartanMatrix& cartan, Variety variety, const Word& cur,
                           const Move& move) {
    const Seed seed = seed_from_word(cartan, cur);
    const Word nxt = move_apply(cartan, cur, move);
    const std::map<int, int> transposition{{move.pos, move.pos + 1}, {move.pos + 1, move.pos}};
    const SpacePtr space = cluster_space(seed.n, seed.N);

    Seed relabeled;
    RationalMap base{space, space, {}};
    if (move.kind == Move::Two) {
        relabeled = relabel_seed(seed, transposition);
        base = identity_map(space);
    } else {
        const int vertex = move.pos - 1;
        relabeled = relabel_seed(mutate_seed(seed, vertex), transposition);
        base = variety == Variety::X ? x_mutation(seed, vertex) : a_mutation(seed, vertex);
    }
    if (!quivers_equal(relabeled, seed_from_word(cartan, nxt)))
        throw Error("braid move failed to reproduce the target word's quiver");

    RationalMap out{space, space, {}};
    out.coords.reserve(base.coords.size());
    for (int m : seed.index_set()) {
        auto it = transposition.find(m);
        const int source = it == transposition.end() ? m : it->second;
        out.coords.push_back(base.coords[cluster_index(seed.n, source)]);
    }
    return out;
}

const RationalMap& chart_transition(const CartanMatrix& cartan, Variety variety,
                                    const Word& i, const Word& j) {
    static std::map<std::tuple<std::string, int, Word, Word>, RationalMap> cache;
    static std::mutex mutex;
    require_longest_word(cartan, i);
    require_longest_word(cartan, j);
    const std::tuple<std::string, int, Word, Word> key{cartan.label, static_cast<int>(variety),
                                                       i, j};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const int N = static_cast<int>(i.size());
    RationalMap total = identity_map(cluster_space(cartan.n, N));
    Word cur = i;
    for (const Move& move : move_path(cartan, i, j)) {
        total = compose(move_chart_map(cartan, variety, cur, move), total);
        cur = move_apply(cartan, cur, move);
    }
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(key, std::move(total)).first->second;
}

} // namespace stringcone
