// SPDX-License-Identifier: Apache-2.0

#include "stringcone/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace stringcone {

namespace {

// Edge list of the Dynkin diagram for the supported simply-laced types.
std::vector<std::pair<int, int>> dynkin_edges(char series, int n) {
    std::vector<std::pair<int, int>> edges;
    switch (series) {
    case 'A':
        if (n < 1) throw DomainError("type A requires rank >= 1");
        for (int a = 1; a < n; ++a) edges.push_back({a, a + 1});
        break;
    case 'D':
        // Fork at node 2: adjacent to 1, 3 and 4; chain continues 4-5-...-n.
        if (n < 4) throw DomainError("type D requires rank >= 4");
        edges.push_back({1, 2});
        edges.push_back({2, 3});
        edges.push_back({2, 4});
        for (int a = 4; a < n; ++a) edges.push_back({a, a + 1});
        break;
    case 'E':
        // Standard numbering: chain 1-3-4-5-6(-7-8), node 2 attached to 4.
        if (n < 6 || n > 8) throw DomainError("type E requires rank 6, 7 or 8");
        edges.push_back({1, 3});
        edges.push_back({3, 4});
        edges.push_back({2, 4});
        for (int a = 4; a < n; ++a) edges.push_back({a, a + 1});
        break;
    default:
        throw DomainError("unsupported Lie type series");
    }
    return edges;
}

} // namespace

CartanMatrix build_cartan(const std::string& label) {
    if (label.size() < 2 || !std::isalpha(static_cast<unsigned char>(label[0])))
        throw DomainError("bad Cartan label: " + label);
    const char series = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
    int n = 0;
    for (std::size_t i = 1; i < label.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(label[i])))
            throw DomainError("bad Cartan label: " + label);
        n = n * 10 + (label[i] - '0');
    }
    if (n <= 0 || n > 16) throw DomainError("rank out of range in label: " + label);

    CartanMatrix cartan;
    cartan.label = std::string(1, series) + std::to_string(n);
    cartan.n = n;
    cartan.c.assign(n, std::vector<int>(n, 0));
    for (int a = 0; a < n; ++a) cartan.c[a][a] = 2;
    for (auto [a, b] : dynkin_edges(series, n)) {
        cartan.c[a - 1][b - 1] = -1;
        cartan.c[b - 1][a - 1] = -1;
    }
    return cartan;
}

RootVec simple_reflection(const CartanMatrix& cartan, int a, const RootVec& beta) {
    // s_a(beta) = beta - <beta, alpha_a^vee> alpha_a; the pairing is
    // sum_b c_{a,b} beta_b for the symmetric simply-laced Cartan matrix.
    long long pairing = 0;
    for (int b = 1; b <= cartan.n; ++b) pairing += static_cast<long long>(cartan.at(a, b)) * beta[b - 1];
    RootVec out = beta;
    out[a - 1] -= static_cast<int>(pairing);
    return out;
}

std::vector<RootVec> positive_roots(const CartanMatrix& cartan) {
    // Orbit closure of the simple roots under simple reflections, keeping
    // the positive ones.
    std::set<RootVec> seen;
    std::vector<RootVec> queue;
    for (int a = 1; a <= cartan.n; ++a) {
        RootVec alpha(cartan.n, 0);
        alpha[a - 1] = 1;
        seen.insert(alpha);
        queue.push_back(alpha);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const RootVec beta = queue[head];
        for (int a = 1; a <= cartan.n; ++a) {
            RootVec gamma = simple_reflection(cartan, a, beta);
            const bool positive = std::all_of(gamma.begin(), gamma.end(), [](int x) { return x >= 0; });
            if (positive && seen.insert(gamma).second) queue.push_back(gamma);
        }
    }
    std::vector<RootVec> roots(seen.begin(), seen.end());
    std::sort(roots.begin(), roots.end(), [](const RootVec& x, const RootVec& y) {
        const int hx = std::accumulate(x.begin(), x.end(), 0);
        const int hy = std::accumulate(y.begin(), y.end(), 0);
        if (hx != hy) return hx < hy;
        return x < y;
    });
    return roots;
}

int longest_length(const CartanMatrix& cartan) {
    return static_cast<int>(positive_roots(cartan).size());
}

BigInt weyl_dim(const CartanMatrix& cartan, const WeightVec& lambda) {
    if (static_cast<int>(lambda.size()) != cartan.n)
        throw DomainError("weight has wrong rank");
    for (long long v : lambda)
        if (v < 0) throw DomainError("weight is not dominant");
    // <lambda + rho, beta^vee> = sum_b m_b (lambda_b + 1) for
    // beta = sum_b m_b alpha_b (simply laced: beta^vee = beta).
    BigInt num = 1, den = 1;
    for (const RootVec& beta : positive_roots(cartan)) {
        BigInt top = 0, bottom = 0;
        for (int b = 0; b < cartan.n; ++b) {
            top += BigInt(beta[b]) * (lambda[b] + 1);
            bottom += beta[b];
        }
        num *= top;
        den *= bottom;
    }
    return num / den; // always divides exactly
}

} // namespace stringcone
