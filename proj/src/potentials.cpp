// SPDX-License-Identifier: Apache-2.0

#include "stringcone/potentials.hpp"

#include <mutex>
#include <tuple>

namespace stringcone {

namespace {

PosRat vertex_inverse(const SpacePtr& space, int n, int k) {
    ExpoVec exps(space->dim(), 0);
    exps[cluster_index(n, k)] = -1;
    return PosRat::monomial(space, exps, 1);
}

PosRat require_regular(PosRat f) {
    if (!f.has_monomial_denominator())
        throw DomainError("potential component failed to normalize to a regular function");
    return f;
}

PosRat compute_ghkk(const CartanMatrix& cartan, const Word& i, int a) {
    require_longest_word(cartan, i);
    const int n = cartan.n, N = static_cast<int>(i.size());
    const SpacePtr space = cluster_space(n, N);
    if (a == 0 || a > n || a < -n) throw DomainError("divisor index out of range");
    if (a < 0) {
        const WordTables tables = word_tables(cartan, i);
        const auto& occ = tables.occ[static_cast<std::size_t>(-a - 1)];
        PosPoly num(space);
        ExpoVec exps(space->dim(), 0);
        exps[cluster_index(n, a)] = -1; // x_{a,0} = x_{-a}
        num.add_term(exps, 1);
        // Partial products over x_{a,0}..x_{a,k}, stopping before the last
        // occurrence.
        for (std::size_t r = 0; r + 1 < occ.size(); ++r) {
            exps[cluster_index(n, occ[r])] -= 1;
            num.add_term(exps, 1);
        }
        return PosRat(num, PosPoly::constant(space, 1));
    }
    if (a == i.back()) return vertex_inverse(space, n, N);
    const Word j = word_ending_with(cartan, i, a);
    return require_regular(
        substitute(vertex_inverse(space, n, N), chart_transition(cartan, Variety::X, i, j)));
}

PosRat compute_bk(const CartanMatrix& cartan, const Word& i, int a) {
    require_longest_word(cartan, i);
    const int n = cartan.n, N = static_cast<int>(i.size());
    const SpacePtr space = cluster_space(n, N);
    if (a == 0 || a > n || a < -n) throw DomainError("divisor index out of range");
    const WordTables tables = word_tables(cartan, i);
    if (a < 0) {
        PosPoly num(space);
        for (int k : tables.occ[static_cast<std::size_t>(-a - 1)]) {
            ExpoVec exps(space->dim(), 0);
            exps[cluster_index(n, tables.pred(k))] -= 1;
            exps[cluster_index(n, k)] -= 1;
            for (int l : tables.index_set()) {
                if (!(cluster_index(n, l) < cluster_index(n, k) && k < tables.succ(l))) continue;
                exps[cluster_index(n, l)] -= cartan.at(tables.letter(l), -a);
            }
            num.add_term(exps, 1);
        }
        return PosRat(num, PosPoly::constant(space, 1));
    }
    if (a == i.back()) {
        ExpoVec exps(space->dim(), 0);
        exps[cluster_index(n, tables.pred(N))] = 1;
        exps[cluster_index(n, N)] = -1;
        return PosRat::monomial(space, exps, 1);
    }
    const Word j = word_ending_with(cartan, i, a);
    const WordTables jt = word_tables(cartan, j);
    ExpoVec exps(space->dim(), 0);
    exps[cluster_index(n, jt.pred(N))] = 1;
    exps[cluster_index(n, N)] = -1;
    const PosRat seed = PosRat::monomial(space, exps, 1);
    return require_regular(substitute(seed, chart_transition(cartan, Variety::A, i, j)));
}

} // namespace

const PosRat& ghkk_component(const CartanMatrix& cartan, const Word& i, int a) {
    static std::map<std::tuple<std::string, Word, int>, PosRat> cache;
    static std::mutex mutex;
    const std::tuple<std::string, Word, int> key{cartan.label, i, a};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    PosRat value = compute_ghkk(cartan, i, a);
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(key, std::move(value)).first->second;
}

const PosRat& bk_component(const CartanMatrix& cartan, const Word& i, int a) {
    static std::map<std::tuple<std::string, Word, int>, PosRat> cache;
    static std::mutex mutex;
    const std::tuple<std::string, Word, int> key{cartan.label, i, a};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    PosRat value = compute_bk(cartan, i, a);
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(key, std::move(value)).first->second;
}

PosRat ghkk_component_via_mutation(const CartanMatrix& cartan, const Word& i, int a) {
    require_longest_word(cartan, i);
    const int n = cartan.n, N = static_cast<int>(i.size());
    const SpacePtr space = cluster_space(n, N);
    if (a == i.back()) return vertex_inverse(space, n, N);
    if (a >= 0) throw DomainError("mutation route applies to negative divisors");
    const WordTables tables = word_tables(cartan, i);
    const auto& occ = tables.occ[static_cast<std::size_t>(-a - 1)];
    Seed seed = seed_from_word(cartan, i);
    RationalMap total = identity_map(space);
    for (std::size_t r = 0; r + 1 < occ.size(); ++r) {
        total = compose(x_mutation(seed, occ[r]), total);
        seed = mutate_seed(seed, occ[r]);
    }
    // Optimized-seed certificate: no arrow from v_{-a} into a mutable vertex.
    for (int m : seed.index_set())
        if (!seed.is_frozen(m) && seed.eps_of(a, m) > 0)
            throw Error("mutated seed is not optimized for the divisor");
    return require_regular(substitute(vertex_inverse(space, n, a), total));
}

PosRat potential_total(const CartanMatrix& cartan, PotentialKind kind, const Word& i) {
    const SpacePtr space = cluster_space(cartan.n, static_cast<int>(i.size()));
    PosRat total = PosRat::constant(space, 0);
    for (int a = 1; a <= cartan.n; ++a) {
        total = total + (kind == PotentialKind::W ? ghkk_component(cartan, i, a)
                                                  : bk_component(cartan, i, a));
        total = total + (kind == PotentialKind::W ? ghkk_component(cartan, i, -a)
                                                  : bk_component(cartan, i, -a));
    }
    return total;
}

} // namespace stringcone
