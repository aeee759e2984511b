// SPDX-License-Identifier: Apache-2.0

#include "stringcone/chartmaps.hpp"

namespace stringcone {

namespace {

PosRat graded_monomial(const SpacePtr& space, const ExpoVec& exps) {
    return PosRat::monomial(space, exps, 1);
}

} // namespace

RationalMap chart_map(const CartanMatrix& cartan, const Word& i, ChartMapKind kind) {
    require_longest_word(cartan, i);
    const WordTables tables = word_tables(cartan, i);
    const int n = tables.n, N = tables.N;
    const SpacePtr graded = graded_space(n, N);
    const SpacePtr cluster = cluster_space(n, N);
    auto graded_x = [&](int k) { return static_cast<std::size_t>(n + k - 1); };
    auto graded_l = [&](int a) { return static_cast<std::size_t>(a - 1); };

    RationalMap out{nullptr, nullptr, {}};
    switch (kind) {
    case ChartMapKind::GrIotaStar: {
        out.source = graded;
        out.target = cluster;
        for (int k : tables.index_set()) {
            ExpoVec exps(graded->dim(), 0);
            const int succ = tables.succ(k);
            if (k > 0) exps[graded_x(k)] = 1;
            if (succ <= N)
                exps[graded_x(succ)] -= 1;
            else
                exps[graded_l(star_involution(cartan, tables.letter(k)))] -= 1;
            out.coords.push_back(graded_monomial(graded, exps));
        }
        return out;
    }
    case ChartMapKind::GrCA: {
        out.source = cluster;
        out.target = graded;
        for (int a = 1; a <= n; ++a) {
            const int astar = star_involution(cartan, a);
            ExpoVec exps(cluster->dim(), 0);
            exps[cluster_index(n, tables.occ[static_cast<std::size_t>(astar - 1)].back())] = -1;
            out.coords.push_back(graded_monomial(cluster, exps));
        }
        for (int k = 1; k <= N; ++k) {
            ExpoVec exps(cluster->dim(), 0);
            for (int l : tables.index_set()) exps[cluster_index(n, l)] += tables.bracket(l, k);
            out.coords.push_back(graded_monomial(cluster, exps));
        }
        return out;
    }
    case ChartMapKind::GrCAStar: {
        out.source = graded;
        out.target = cluster;
        for (int k : tables.index_set()) {
            ExpoVec exps(graded->dim(), 0);
            if (k < 0) {
                exps[graded_l(-k)] = -1;
                for (int l = 1; l <= N; ++l)
                    exps[graded_x(l)] +=
                        cartan.at(tables.letter(l), tables.letter(k)) + tables.bracket(k, l);
            } else {
                for (int l = 1; l <= N; ++l) exps[graded_x(l)] += tables.bracket(k, l);
            }
            out.coords.push_back(graded_monomial(graded, exps));
        }
        return out;
    }
    case ChartMapKind::GrIota: {
        out.source = cluster;
        out.target = graded;
        for (int a = 1; a <= n; ++a) {
            ExpoVec exps(cluster->dim(), 0);
            exps[cluster_index(n, tables.occ[static_cast<std::size_t>(a - 1)].back())] = -1;
            out.coords.push_back(graded_monomial(cluster, exps));
        }
        for (int k = 1; k <= N; ++k) {
            ExpoVec exps(cluster->dim(), 0);
            exps[cluster_index(n, tables.pred(k))] += 1;
            exps[cluster_index(n, k)] -= 1;
            out.coords.push_back(graded_monomial(cluster, exps));
        }
        return out;
    }
    }
    throw DomainError("unknown chart map kind");
}

RationalMap d_map(const CartanMatrix& cartan, int N) {
    const int n = cartan.n;
    const SpacePtr graded = graded_space(n, N);
    RationalMap out{graded, graded, {}};
    for (int a = 1; a <= n; ++a) {
        ExpoVec exps(graded->dim(), 0);
        for (int b = 1; b <= n; ++b) exps[static_cast<std::size_t>(b - 1)] = cartan.at(a, b);
        out.coords.push_back(graded_monomial(graded, exps));
    }
    for (int k = 1; k <= N; ++k)
        out.coords.push_back(PosRat::variable(graded, "x" + std::to_string(k)));
    return out;
}

RationalMap phi_chart(const CartanMatrix& cartan, const Word& i) {
    const int N = static_cast<int>(i.size());
    return compose(chart_map(cartan, i, ChartMapKind::GrIotaStar),
                   compose(d_map(cartan, N), chart_map(cartan, i, ChartMapKind::GrCA)));
}

RationalMap phi_chart_alt(const CartanMatrix& cartan, const Word& i) {
    const int N = static_cast<int>(i.size());
    return compose(chart_map(cartan, i, ChartMapKind::GrCAStar),
                   compose(d_map(cartan, N), chart_map(cartan, i, ChartMapKind::GrIota)));
}

} // namespace stringcone
