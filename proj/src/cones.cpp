// SPDX-License-Identifier: Apache-2.0

#include "stringcone/cones.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace stringcone {

namespace {

constexpr std::size_t kDimensionCap = 16;

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

std::vector<long long> primitive_row(std::vector<long long> row) {
    long long g = 0;
    for (long long v : row) g = gcd_ll(g, v < 0 ? -v : v);
    if (g > 1)
        for (long long& v : row) v /= g;
    return row;
}

std::vector<BigInt> primitive_ray(std::vector<BigInt> ray) {
    BigInt g = 0;
    for (const BigInt& v : ray) g = boost::multiprecision::gcd(g, abs(v));
    if (g > 1)
        for (BigInt& v : ray) v /= g;
    return ray;
}

BigInt dot(const std::vector<long long>& row, const std::vector<BigInt>& ray) {
    BigInt total = 0;
    for (std::size_t i = 0; i < row.size(); ++i) total += BigInt(row[i]) * ray[i];
    return total;
}

} // namespace

ConeH make_cone(SpacePtr space, std::vector<std::vector<long long>> rows) {
    std::set<std::vector<long long>> canonical;
    for (auto& row : rows) {
        if (row.size() != space->dim()) throw DomainError("inequality row has wrong length");
        if (std::all_of(row.begin(), row.end(), [](long long v) { return v == 0; })) continue;
        canonical.insert(primitive_row(std::move(row)));
    }
    return ConeH{std::move(space),
                 std::vector<std::vector<long long>>(canonical.begin(), canonical.end())};
}

std::vector<std::vector<long long>> trop_rows(const PosRat& f) {
    if (!f.has_monomial_denominator())
        throw DomainError("tropical rows need a monomial denominator");
    const ExpoVec& den = f.den().terms().begin()->first;
    std::vector<std::vector<long long>> rows;
    for (const auto& [exps, coeff] : f.num().terms()) {
        (void)coeff;
        std::vector<long long> row(exps.size());
        for (std::size_t i = 0; i < exps.size(); ++i) row[i] = exps[i] - den[i];
        rows.push_back(std::move(row));
    }
    return rows;
}

ConeH build_cone(const CartanMatrix& cartan, const Word& i, ConeKind kind) {
    require_longest_word(cartan, i);
    const int n = cartan.n, N = static_cast<int>(i.size());
    std::vector<std::vector<long long>> rows;
    auto append = [&rows](const std::vector<std::vector<long long>>& more) {
        rows.insert(rows.end(), more.begin(), more.end());
    };
    switch (kind) {
    case ConeKind::GradedString:
    case ConeKind::GradedStringDual:
        for (int a = 1; a <= n; ++a) {
            append(trop_rows(cone_fn(cartan, i, a, ConeFnKind::Zeta)));
            append(trop_rows(cone_fn(cartan, i, a,
                                     kind == ConeKind::GradedString ? ConeFnKind::Nu
                                                                    : ConeFnKind::NuDual)));
        }
        return make_cone(graded_space(n, N), std::move(rows));
    case ConeKind::GradedLusztig:
    case ConeKind::GradedLusztigDual:
        for (int a = 1; a <= n; ++a) {
            append(trop_rows(cone_fn(cartan, i, a, ConeFnKind::LusztigCone)));
            append(trop_rows(cone_fn(cartan, i, a,
                                     kind == ConeKind::GradedLusztig ? ConeFnKind::Kappa
                                                                     : ConeFnKind::KappaDual)));
        }
        return make_cone(graded_space(n, N), std::move(rows));
    case ConeKind::Ghkk:
    case ConeKind::Bk:
        for (int a = 1; a <= n; ++a)
            for (int sign : {1, -1}) {
                const PosRat& component = kind == ConeKind::Ghkk
                                              ? ghkk_component(cartan, i, sign * a)
                                              : bk_component(cartan, i, sign * a);
                append(trop_rows(component));
            }
        return make_cone(cluster_space(n, N), std::move(rows));
    }
    throw DomainError("unknown cone kind");
}

IntMat cmm_matrix(const CartanMatrix& cartan, const Word& i, bool dual) {
    require_longest_word(cartan, i);
    const int n = cartan.n, N = static_cast<int>(i.size());
    const std::size_t dim = static_cast<std::size_t>(n + N);
    IntMat out(dim, std::vector<BigInt>(dim, 0));
    for (int a = 1; a <= n; ++a)
        out[static_cast<std::size_t>(a - 1)]
           [static_cast<std::size_t>(star_involution(cartan, a) - 1)] = 1;
    for (int k = 1; k <= N; ++k) {
        auto& row = out[static_cast<std::size_t>(n + k - 1)];
        const int ik = i[static_cast<std::size_t>(k - 1)];
        if (dual) {
            for (int a = 1; a <= n; ++a) row[static_cast<std::size_t>(a - 1)] += cartan.at(ik, a);
        } else {
            row[static_cast<std::size_t>(ik - 1)] += 1;
        }
        row[static_cast<std::size_t>(n + k - 1)] -= 1;
        for (int l = k + 1; l <= N; ++l)
            row[static_cast<std::size_t>(n + l - 1)] -=
                cartan.at(ik, i[static_cast<std::size_t>(l - 1)]);
    }
    return out;
}

IntMat cmm_matrix_composed(const CartanMatrix& cartan, const Word& i, bool dual) {
    if (dual)
        return int_mul(linear_matrix(chart_map(cartan, i, ChartMapKind::GrCA)),
                       unimodular_inverse(linear_matrix(chart_map(cartan, i, ChartMapKind::GrIota))));
    return int_mul(unimodular_inverse(linear_matrix(chart_map(cartan, i, ChartMapKind::GrIotaStar))),
                   linear_matrix(chart_map(cartan, i, ChartMapKind::GrCAStar)));
}

ConeH transform_cone(const ConeH& cone, const IntMat& map, SpacePtr target_space) {
    const IntMat inv = unimodular_inverse(map);
    std::vector<std::vector<long long>> rows;
    rows.reserve(cone.rows.size());
    for (const auto& row : cone.rows) {
        std::vector<long long> out(row.size(), 0);
        for (std::size_t j = 0; j < out.size(); ++j) {
            BigInt total = 0;
            for (std::size_t s = 0; s < row.size(); ++s) total += BigInt(row[s]) * inv[s][j];
            out[j] = static_cast<long long>(total);
        }
        rows.push_back(std::move(out));
    }
    return make_cone(std::move(target_space), std::move(rows));
}

namespace {

// Greedy selection of dim linearly independent rows (rational elimination).
std::vector<std::size_t> independent_rows(const std::vector<std::vector<long long>>& rows,
                                          std::size_t dim) {
    std::vector<std::size_t> picked;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t r = 0; r < rows.size() && picked.size() < dim; ++r) {
        std::vector<Rat> v(rows[r].begin(), rows[r].end());
        for (const auto& b : basis) {
            std::size_t lead = 0;
            while (lead < dim && b[lead] == 0) ++lead;
            if (lead < dim && v[lead] != 0) {
                const Rat factor = v[lead] / b[lead];
                for (std::size_t j = lead; j < dim; ++j) v[j] -= factor * b[j];
            }
        }
        if (std::any_of(v.begin(), v.end(), [](const Rat& x) { return x != 0; })) {
            // Normalize the new basis vector to leading coefficient 1 so
            // elimination above stays a single pass.
            std::size_t lead = 0;
            while (v[lead] == 0) ++lead;
            const Rat inv_lead = Rat(1) / v[lead];
            for (auto& x : v) x *= inv_lead;
            // Keep basis vectors sorted by leading index for the pass above.
            basis.push_back(std::move(v));
            std::sort(basis.begin(), basis.end(), [dim](const auto& a, const auto& b) {
                std::size_t la = 0, lb = 0;
                while (la < dim && a[la] == 0) ++la;
                while (lb < dim && b[lb] == 0) ++lb;
                return la < lb;
            });
            picked.push_back(r);
        }
    }
    return picked;
}

} // namespace

std::vector<std::vector<BigInt>> cone_extreme_rays(const ConeH& cone) {
    const std::size_t dim = cone.space->dim();
    if (dim > kDimensionCap)
        throw DimensionCapError("ambient dimension exceeds the double-description cap");
    if (dim == 0) return {};
    const auto& rows = cone.rows;
    const std::vector<std::size_t> basis = independent_rows(rows, dim);
    if (basis.size() < dim)
        throw DomainError("cone is not pointed; extreme rays are undefined");

    // Initial simplicial cone from the basis rows: ray j is the j-th column
    // of the basis inverse (scaled integral), so <row_i, ray_j> = delta_ij
    // up to a positive factor.
    IntMat bmat(dim, std::vector<BigInt>(dim));
    for (std::size_t s = 0; s < dim; ++s)
        for (std::size_t j = 0; j < dim; ++j) bmat[s][j] = rows[basis[s]][j];
    const BigInt det = int_det(bmat);
    if (det == 0) throw DomainError("internal: basis rows are singular");
    // Solve bmat * ray_j = det * e_j with Cramer's rule via the adjugate:
    // adj = det * inverse. Compute the inverse over the rationals.
    std::vector<std::vector<Rat>> work(dim, std::vector<Rat>(2 * dim, 0));
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t j = 0; j < dim; ++j) work[r][j] = Rat(bmat[r][j]);
        work[r][dim + r] = 1;
    }
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t pivot = col;
        while (work[pivot][col] == 0) ++pivot;
        std::swap(work[col], work[pivot]);
        const Rat lead = work[col][col];
        for (auto& x : work[col]) x /= lead;
        for (std::size_t r = 0; r < dim; ++r) {
            if (r == col || work[r][col] == 0) continue;
            const Rat factor = work[r][col];
            for (std::size_t j = 0; j < 2 * dim; ++j) work[r][j] -= factor * work[col][j];
        }
    }
    std::vector<std::vector<BigInt>> rays;
    for (std::size_t j = 0; j < dim; ++j) {
        // Column j of the inverse, cleared to integers, oriented so the
        // basis inequalities evaluate >= 0.
        BigInt lcm = 1;
        for (std::size_t r = 0; r < dim; ++r) {
            const BigInt d = denominator(work[r][dim + j]);
            lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
        }
        std::vector<BigInt> ray(dim);
        for (std::size_t r = 0; r < dim; ++r)
            ray[r] = numerator(work[r][dim + j]) * (lcm / denominator(work[r][dim + j]));
        rays.push_back(primitive_ray(std::move(ray)));
    }

    std::vector<std::size_t> processed = basis;
    std::set<std::size_t> in_basis(basis.begin(), basis.end());

    auto tight_set = [&](const std::vector<BigInt>& ray) {
        std::vector<char> tight(processed.size());
        for (std::size_t t = 0; t < processed.size(); ++t)
            tight[t] = dot(rows[processed[t]], ray) == 0;
        return tight;
    };

    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (in_basis.count(r)) continue;
        const auto& row = rows[r];
        std::vector<BigInt> values;
        values.reserve(rays.size());
        bool any_negative = false;
        for (const auto& ray : rays) {
            values.push_back(dot(row, ray));
            if (values.back() < 0) any_negative = true;
        }
        if (!any_negative) {
            processed.push_back(r);
            continue;
        }
        // Combinatorial adjacency: rays p, q are adjacent iff no third ray
        // is tight on every processed row tight at both.
        std::vector<std::vector<char>> tights;
        tights.reserve(rays.size());
        for (const auto& ray : rays) tights.push_back(tight_set(ray));
        std::vector<std::vector<BigInt>> next;
        for (std::size_t p = 0; p < rays.size(); ++p)
            if (values[p] >= 0) next.push_back(rays[p]);
        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (values[p] <= 0) continue;
            for (std::size_t q = 0; q < rays.size(); ++q) {
                if (values[q] >= 0) continue;
                bool adjacent = true;
                for (std::size_t other = 0; other < rays.size() && adjacent; ++other) {
                    if (other == p || other == q) continue;
                    bool covers = true;
                    for (std::size_t t = 0; t < processed.size() && covers; ++t)
                        if (tights[p][t] && tights[q][t] && !tights[other][t]) covers = false;
                    if (covers) adjacent = false;
                }
                if (!adjacent) continue;
                std::vector<BigInt> blend(dim);
                for (std::size_t s = 0; s < dim; ++s)
                    blend[s] = values[p] * rays[q][s] - values[q] * rays[p][s];
                next.push_back(primitive_ray(std::move(blend)));
            }
        }
        std::set<std::vector<BigInt>> dedup(next.begin(), next.end());
        rays.assign(dedup.begin(), dedup.end());
        processed.push_back(r);
    }
    std::set<std::vector<BigInt>> dedup(rays.begin(), rays.end());
    return {dedup.begin(), dedup.end()};
}

bool in_cone(const ConeH& cone, const std::vector<long long>& point) {
    for (const auto& row : cone.rows) {
        long long total = 0;
        for (std::size_t j = 0; j < row.size(); ++j) total += row[j] * point[j];
        if (total < 0) return false;
    }
    return true;
}

bool cones_equal(const ConeH& a, const ConeH& b) {
    if (a.space->dim() != b.space->dim()) return false;
    if (a.rows == b.rows) return true;
    const auto rays_a = cone_extreme_rays(a);
    const auto rays_b = cone_extreme_rays(b);
    auto inside = [](const ConeH& cone, const std::vector<BigInt>& ray) {
        for (const auto& row : cone.rows)
            if (dot(row, ray) < 0) return false;
        return true;
    };
    for (const auto& ray : rays_a)
        if (!inside(b, ray)) return false;
    for (const auto& ray : rays_b)
        if (!inside(a, ray)) return false;
    return true;
}

namespace {

long long to_ll(const BigInt& v) { return static_cast<long long>(v); }

long long floor_div(const BigInt& num, const BigInt& den) {
    BigInt q = num / den, r = num % den;
    if (r != 0 && ((num < 0) != (den < 0))) --q;
    return to_ll(q);
}

} // namespace

std::vector<std::vector<long long>> polytope_points(const CartanMatrix& cartan, const Word& i,
                                                    PolytopeKind kind, const WeightVec& lambda) {
    require_longest_word(cartan, i);
    const int n = cartan.n, N = static_cast<int>(i.size());
    if (static_cast<int>(lambda.size()) != n) throw DomainError("weight has wrong rank");
    for (long long v : lambda)
        if (v < 0) throw DomainError("weight is not dominant");
    const ConeH cone = build_cone(
        cartan, i, kind == PolytopeKind::String ? ConeKind::GradedString : ConeKind::GradedLusztig);

    // Homogenize the lambda-slice: coordinates (t, x), slice at t = 1.
    std::vector<std::string> names{"t"};
    for (int k = 1; k <= N; ++k) names.push_back("x" + std::to_string(k));
    std::vector<std::vector<long long>> hrows;
    for (const auto& row : cone.rows) {
        std::vector<long long> hrow(static_cast<std::size_t>(N) + 1, 0);
        for (int a = 0; a < n; ++a)
            hrow[0] += row[static_cast<std::size_t>(a)] * lambda[static_cast<std::size_t>(a)];
        for (int k = 0; k < N; ++k)
            hrow[static_cast<std::size_t>(k) + 1] = row[static_cast<std::size_t>(n + k)];
        hrows.push_back(std::move(hrow));
    }
    std::vector<long long> trow(static_cast<std::size_t>(N) + 1, 0);
    trow[0] = 1;
    hrows.push_back(std::move(trow));
    const ConeH hcone = make_cone(make_space(std::move(names)), std::move(hrows));

    // Exact vertices of the slice; a ray with t = 0 would mean an unbounded
    // polytope, which dominant weights never produce.
    std::vector<Rat> lo(static_cast<std::size_t>(N)), hi(static_cast<std::size_t>(N));
    bool first = true;
    for (const auto& ray : cone_extreme_rays(hcone)) {
        if (ray[0] == 0) {
            bool zero = std::all_of(ray.begin(), ray.end(), [](const BigInt& v) { return v == 0; });
            if (!zero) throw DomainError("weight polytope is unbounded");
            continue;
        }
        for (int k = 0; k < N; ++k) {
            const Rat coord = Rat(ray[static_cast<std::size_t>(k) + 1], ray[0]);
            if (first || coord < lo[static_cast<std::size_t>(k)]) lo[static_cast<std::size_t>(k)] = coord;
            if (first || coord > hi[static_cast<std::size_t>(k)]) hi[static_cast<std::size_t>(k)] = coord;
        }
        first = false;
    }
    if (first) return {}; // empty slice

    std::vector<long long> low(static_cast<std::size_t>(N)), high(static_cast<std::size_t>(N));
    for (int k = 0; k < N; ++k) {
        const auto uk = static_cast<std::size_t>(k);
        const Rat neg_lo = -lo[uk];
        low[uk] = -floor_div(numerator(neg_lo), denominator(neg_lo)); // ceil
        high[uk] = floor_div(numerator(hi[uk]), denominator(hi[uk]));
        if (low[uk] > high[uk]) return {};
    }

    std::vector<std::vector<long long>> points;
    std::vector<long long> x = low;
    auto satisfies = [&](const std::vector<long long>& candidate) {
        for (const auto& row : cone.rows) {
            long long total = 0;
            for (int a = 0; a < n; ++a)
                total += row[static_cast<std::size_t>(a)] * lambda[static_cast<std::size_t>(a)];
            for (int k = 0; k < N; ++k)
                total += row[static_cast<std::size_t>(n + k)] * candidate[static_cast<std::size_t>(k)];
            if (total < 0) return false;
        }
        return true;
    };
    while (true) {
        if (satisfies(x)) points.push_back(x);
        int k = N - 1;
        while (k >= 0 && x[static_cast<std::size_t>(k)] == high[static_cast<std::size_t>(k)]) {
            x[static_cast<std::size_t>(k)] = low[static_cast<std::size_t>(k)];
            --k;
        }
        if (k < 0) break;
        ++x[static_cast<std::size_t>(k)];
    }
    std::sort(points.begin(), points.end());
    return points;
}

} // namespace stringcone
