// SPDX-License-Identifier: Apache-2.0

#include "stringcone/verify.hpp"

#include <deque>
#include <functional>
#include <initializer_list>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "stringcone/cartan.hpp"
#include "stringcone/chartmaps.hpp"
#include "stringcone/cluster.hpp"
#include "stringcone/cones.hpp"
#include "stringcone/errors.hpp"
#include "stringcone/matrix.hpp"
#include "stringcone/posrat.hpp"
#include "stringcone/potentials.hpp"
#include "stringcone/transitions.hpp"
#include "stringcone/words.hpp"

namespace stringcone {

namespace {

struct Tally {
    long long checks = 0;
    long long failures = 0;
    std::string first;

    void note(bool ok, const std::string& what) {
        ++checks;
        if (!ok && failures++ == 0) first = what;
    }

    VerifyResult result(const std::string& name) const {
        VerifyResult r;
        r.name = name;
        if (checks == 0) {
            r.pass = true;
            r.detail = "0 checks (scope empty for this type filter)";
        } else if (failures == 0) {
            r.pass = true;
            r.detail = std::to_string(checks) + " checks";
        } else {
            r.pass = false;
            r.detail = std::to_string(failures) + " of " + std::to_string(checks) +
                       " checks failed; first: " + first;
        }
        return r;
    }
};

std::string word_str(const Word& w) {
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k > 0) out += ',';
        out += std::to_string(w[k]);
    }
    return out;
}

std::vector<std::string> scope(const std::string& filter,
                               std::initializer_list<const char*> defaults) {
    if (!filter.empty()) return {filter};
    return std::vector<std::string>(defaults.begin(), defaults.end());
}

// The canonical word plus its nearest distinct neighbors, up to `count`
// words; used as the spot-check scope for types too large to enumerate.
std::vector<Word> spot_words(const CartanMatrix& cartan, std::size_t count) {
    Word start = canonical_longest_word(cartan);
    std::vector<Word> out{start};
    std::set<Word> seen{start};
    std::deque<Word> queue{start};
    while (!queue.empty() && out.size() < count) {
        Word cur = queue.front();
        queue.pop_front();
        for (const Move& mv : applicable_moves(cartan, cur)) {
            Word nxt = move_apply(cartan, cur, mv);
            if (!seen.insert(nxt).second) continue;
            out.push_back(nxt);
            queue.push_back(nxt);
            if (out.size() >= count) break;
        }
    }
    return out;
}

// Every word for small types (N <= 6), three spot words otherwise.
std::vector<Word> words_in_scope(const CartanMatrix& cartan) {
    if (longest_length(cartan) <= 6) return word_graph(cartan).words;
    return spot_words(cartan, 3);
}

std::vector<std::vector<long long>> box_points(int dim, long long lo, long long hi) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> x(static_cast<std::size_t>(dim), lo);
    while (true) {
        out.push_back(x);
        int k = dim - 1;
        while (k >= 0 && x[static_cast<std::size_t>(k)] == hi) {
            x[static_cast<std::size_t>(k)] = lo;
            --k;
        }
        if (k < 0) break;
        ++x[static_cast<std::size_t>(k)];
    }
    return out;
}

// ---------------------------------------------------------------- examples

void suite_examples(Tally& t, const std::string& filter) {
    if (!filter.empty() && filter != "A2") return;
    CartanMatrix c = build_cartan("A2");
    const Word i{1, 2, 1};
    SpacePtr csp = cluster_space(2, 3);
    SpacePtr gsp = graded_space(2, 3);
    auto cv = [&](const std::string& nm) { return PosRat::variable(csp, nm); };
    auto gv = [&](const std::string& nm) { return PosRat::variable(gsp, nm); };

    Seed seed = seed_from_word(c, i);
    const std::vector<QuiverArrow> expected_arrows{
        {-1, 1, 1}, {1, -2, 1}, {1, 3, 1}, {2, 1, 1}};
    t.note(quiver_of(seed) == expected_arrows, "quiver arrows of 1,2,1");
    t.note(seed.frozen == std::set<int>{-2, -1, 2, 3}, "frozen vertices of 1,2,1");

    const std::vector<std::pair<int, PosRat>> w_expected{
        {-1, cv("x-1").inv() + (cv("x-1") * cv("x1")).inv()},
        {1, cv("x3").inv()},
        {-2, cv("x-2").inv()},
        {2, cv("x2").inv() + (cv("x1") * cv("x2")).inv()},
    };
    for (const auto& [a, expected] : w_expected)
        t.note(ghkk_component(c, i, a).to_string() == expected.to_string(),
               "potential component a=" + std::to_string(a));

    const std::vector<std::pair<int, PosRat>> fb_expected{
        {-1, cv("x-2") / (cv("x-1") * cv("x1")) + cv("x2") / (cv("x1") * cv("x3"))},
        {1, cv("x1") / cv("x3")},
        {-2, cv("x1") / (cv("x-2") * cv("x2"))},
        {2, cv("x-1") / cv("x1") + cv("x-2") * cv("x3") / (cv("x1") * cv("x2"))},
    };
    for (const auto& [a, expected] : fb_expected)
        t.note(bk_component(c, i, a).to_string() == expected.to_string(),
               "decoration component a=" + std::to_string(a));

    auto expect_map = [&](ChartMapKind kind, SpacePtr src, SpacePtr tgt,
                          std::vector<PosRat> coords, const std::string& label) {
        RationalMap expected{std::move(src), std::move(tgt), std::move(coords)};
        t.note(chart_map(c, i, kind).to_string() == expected.to_string(), label);
    };
    expect_map(ChartMapKind::GrIotaStar, gsp, csp,
               {gv("x1").inv(), gv("x2").inv(), gv("x1") / gv("x3"), gv("x2") / gv("l1"),
                gv("x3") / gv("l2")},
               "chart map gr-iota-star");
    expect_map(ChartMapKind::GrCA, csp, gsp,
               {cv("x2").inv(), cv("x3").inv(), cv("x-2") / (cv("x-1") * cv("x1")),
                cv("x1") / (cv("x-2") * cv("x2")), cv("x2") / (cv("x1") * cv("x3"))},
               "chart map gr-ca");
    expect_map(ChartMapKind::GrCAStar, gsp, csp,
               {gv("x1") * gv("x3").pow(2) / (gv("l1") * gv("x2")),
                gv("x2") / (gv("l2") * gv("x3")), gv("x2") / (gv("x1") * gv("x3")),
                gv("x3") / gv("x2"), gv("x3").inv()},
               "chart map gr-ca-star");
    expect_map(ChartMapKind::GrIota, csp, gsp,
               {cv("x3").inv(), cv("x2").inv(), cv("x-1") / cv("x1"),
                cv("x-2") / cv("x2"), cv("x1") / cv("x3")},
               "chart map gr-iota");
}

// ----------------------------------------------------------- factorization

void suite_factorization(Tally& t, const std::string& filter) {
    for (const std::string& label : scope(filter, {"A2", "A3", "D4"})) {
        CartanMatrix c = build_cartan(label);
        for (const Word& i : words_in_scope(c)) {
            const std::string tag = label + " word " + word_str(i);
            const RationalMap gi = chart_map(c, i, ChartMapKind::GrIotaStar);
            const RationalMap ca = chart_map(c, i, ChartMapKind::GrCA);
            const RationalMap cas = chart_map(c, i, ChartMapKind::GrCAStar);
            const RationalMap io = chart_map(c, i, ChartMapKind::GrIota);
            for (int a = 1; a <= c.n; ++a) {
                const std::string sa = std::to_string(a);
                t.note(substitute(ghkk_component(c, i, a), gi)
                           .equals(cone_fn(c, i, a, ConeFnKind::Kappa)),
                       tag + ": kappa factorization a=" + sa);
                t.note(substitute(ghkk_component(c, i, -a), gi)
                           .equals(cone_fn(c, i, a, ConeFnKind::LusztigCone)),
                       tag + ": Lusztig grading factorization a=" + sa);
                t.note(substitute(cone_fn(c, i, a, ConeFnKind::KappaDual), ca)
                           .equals(bk_component(c, i, a)),
                       tag + ": dual kappa decoration a=" + sa);
                t.note(substitute(cone_fn(c, i, a, ConeFnKind::LusztigCone), ca)
                           .equals(bk_component(c, i, -a)),
                       tag + ": grading decoration a=" + sa);
                t.note(substitute(ghkk_component(c, i, a), cas)
                           .equals(cone_fn(c, i, a, ConeFnKind::Zeta)),
                       tag + ": zeta factorization a=" + sa);
                t.note(substitute(ghkk_component(c, i, -a), cas)
                           .equals(cone_fn(c, i, a, ConeFnKind::Nu)),
                       tag + ": nu factorization a=" + sa);
                t.note(substitute(cone_fn(c, i, a, ConeFnKind::Zeta), io)
                           .equals(bk_component(c, i, a)),
                       tag + ": zeta decoration a=" + sa);
                t.note(substitute(cone_fn(c, i, a, ConeFnKind::NuDual), io)
                           .equals(bk_component(c, i, -a)),
                       tag + ": dual nu decoration a=" + sa);
            }
        }
    }
}

// -------------------------------------------------------------- unimodular

void suite_unimodular(Tally& t, const std::string& filter) {
    static const std::pair<ChartMapKind, const char*> kinds[] = {
        {ChartMapKind::GrIotaStar, "gr-iota-star"},
        {ChartMapKind::GrCA, "gr-ca"},
        {ChartMapKind::GrCAStar, "gr-ca-star"},
        {ChartMapKind::GrIota, "gr-iota"},
    };
    for (const std::string& label : scope(filter, {"A3"})) {
        CartanMatrix c = build_cartan(label);
        for (const Word& i : words_in_scope(c))
            for (const auto& [kind, name] : kinds)
                t.note(is_unimodular(linear_matrix(chart_map(c, i, kind))),
                       label + " word " + word_str(i) + ": " + name + " unimodular");
    }
}

// --------------------------------------------------------------------- cmm

void suite_cmm(Tally& t, const std::string& filter) {
    for (const std::string& label : scope(filter, {"A2", "A3"})) {
        CartanMatrix c = build_cartan(label);
        for (const Word& i : words_in_scope(c)) {
            const std::string tag = label + " word " + word_str(i);
            for (bool dual : {false, true}) {
                const std::string variant = dual ? " (dual)" : "";
                IntMat closed = cmm_matrix(c, i, dual);
                t.note(closed == cmm_matrix_composed(c, i, dual),
                       tag + ": closed form vs composed route" + variant);
                ConeH src = build_cone(
                    c, i, dual ? ConeKind::GradedStringDual : ConeKind::GradedString);
                ConeH dst = build_cone(
                    c, i, dual ? ConeKind::GradedLusztigDual : ConeKind::GradedLusztig);
                t.note(cones_equal(transform_cone(src, closed, dst.space), dst),
                       tag + ": cone image" + variant);
            }
        }
    }
}

// -------------------------------------------------------------- transforms

void suite_transforms(Tally& t, const std::string& filter) {
    for (const std::string& label : scope(filter, {"A2", "A3"})) {
        CartanMatrix c = build_cartan(label);
        for (const Word& i : words_in_scope(c)) {
            const std::string tag = label + " word " + word_str(i);
            const int N = static_cast<int>(i.size());
            SpacePtr csp = cluster_space(c.n, N);
            SpacePtr gsp = graded_space(c.n, N);
            ConeH ghkk = build_cone(c, i, ConeKind::Ghkk);
            ConeH bk = build_cone(c, i, ConeKind::Bk);
            t.note(cones_equal(transform_cone(build_cone(c, i, ConeKind::GradedLusztig),
                                              linear_matrix(chart_map(c, i, ChartMapKind::GrIotaStar)),
                                              csp),
                               ghkk),
                   tag + ": graded Lusztig cone onto GHKK cone");
            t.note(cones_equal(transform_cone(build_cone(c, i, ConeKind::GradedString),
                                              linear_matrix(chart_map(c, i, ChartMapKind::GrCAStar)),
                                              csp),
                               ghkk),
                   tag + ": graded string cone onto GHKK cone");
            t.note(cones_equal(transform_cone(bk,
                                              linear_matrix(chart_map(c, i, ChartMapKind::GrCA)),
                                              gsp),
                               build_cone(c, i, ConeKind::GradedLusztigDual)),
                   tag + ": decoration cone onto dual graded Lusztig cone");
            t.note(cones_equal(transform_cone(bk,
                                              linear_matrix(chart_map(c, i, ChartMapKind::GrIota)),
                                              gsp),
                               build_cone(c, i, ConeKind::GradedStringDual)),
                   tag + ": decoration cone onto dual graded string cone");
        }
    }
}

// -------------------------------------------------------------- ghkk-route

void suite_ghkk_route(Tally& t, const std::string& filter) {
    for (const std::string& label : scope(filter, {"A2", "A3"})) {
        CartanMatrix c = build_cartan(label);
        for (const Word& i : words_in_scope(c))
            for (int a = 1; a <= c.n; ++a)
                t.note(ghkk_component_via_mutation(c, i, -a).equals(ghkk_component(c, i, -a)),
                       label + " word " + word_str(i) + ": mutation route a=" +
                           std::to_string(-a));
    }
}

// --------------------------------------------------------------- polytopes

void suite_polytopes(Tally& t, const std::string& filter) {
    for (const std::string& label : scope(filter, {"A2", "A3"})) {
        CartanMatrix c = build_cartan(label);
        std::vector<WeightVec> weights;
        if (c.n == 2) {
            for (long long p = 0; p <= 2; ++p)
                for (long long q = 0; q <= 2; ++q) weights.push_back({p, q});
        } else if (c.n == 3) {
            weights = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
        } else {
            WeightVec zero(static_cast<std::size_t>(c.n), 0);
            WeightVec first = zero;
            first[0] = 1;
            weights = {zero, first};
        }
        std::vector<Word> words = words_in_scope(c);
        if (words.size() > 2) words.resize(2);
        for (const Word& i : words) {
            for (const WeightVec& lambda : weights) {
                const BigInt dim = weyl_dim(c, lambda);
                std::string wtag;
                for (long long v : lambda) wtag += std::to_string(v) + ",";
                const std::string tag =
                    label + " word " + word_str(i) + " weight " + wtag;
                t.note(BigInt(polytope_points(c, i, PolytopeKind::String, lambda).size()) == dim,
                       tag + " string count");
                t.note(BigInt(polytope_points(c, i, PolytopeKind::Lusztig, lambda).size()) == dim,
                       tag + " Lusztig count");
            }
        }
    }
}

// ----------------------------------------------------------------- crystal

// The weight-free string cone: the x-block of the tropical zeta rows.
ConeH string_cone_x(const CartanMatrix& cartan, const Word& i) {
    const int N = static_cast<int>(i.size());
    std::vector<std::vector<long long>> rows;
    for (int a = 1; a <= cartan.n; ++a) {
        for (const auto& row : trop_rows(cone_fn(cartan, i, a, ConeFnKind::Zeta))) {
            for (int b = 0; b < cartan.n; ++b)
                if (row[static_cast<std::size_t>(b)] != 0)
                    throw Error("zeta row has a weight component");
            rows.emplace_back(row.begin() + cartan.n, row.end());
        }
    }
    return make_cone(chart_space(N), std::move(rows));
}

void suite_crystal(Tally& t, const std::string& filter) {
    for (const std::string& label : scope(filter, {"A2", "A3"})) {
        if (label != "A2" && label != "A3") continue; // sampled scopes only
        CartanMatrix c = build_cartan(label);
        const int N = longest_length(c);
        std::vector<Word> words = word_graph(c).words;
        if (words.size() > 2) words.resize(2);

        // Lusztig data: star is an involution and eps of the starred data
        // reads off the last coordinate.
        std::vector<std::vector<long long>> lusztig_pts;
        if (label == "A2") {
            lusztig_pts = box_points(N, 0, 3);
        } else {
            std::mt19937 rng(20260815u);
            std::uniform_int_distribution<long long> draw(0, 3);
            for (int s = 0; s < 500; ++s) {
                std::vector<long long> x(static_cast<std::size_t>(N));
                for (auto& v : x) v = draw(rng);
                lusztig_pts.push_back(std::move(x));
            }
        }
        for (const Word& i : words) {
            const std::string tag = label + " word " + word_str(i);
            const int a_star = star_involution(c, i.back());
            for (const auto& x : lusztig_pts) {
                const auto star = kashiwara_star(c, i, x);
                t.note(kashiwara_star(c, i, star) == x, tag + ": star involution");
                t.note(lusztig_eps(c, i, a_star, star) == x.back(),
                       tag + ": eps of starred data");
            }
        }

        // String data: the string cone is stable under the starred
        // lowering operators.
        for (const Word& i : words) {
            const std::string tag = label + " word " + word_str(i);
            ConeH cone = string_cone_x(c, i);
            std::vector<std::vector<long long>> pts;
            for (const auto& x : box_points(N, 0, label == "A2" ? 3 : 2)) {
                if (!in_cone(cone, x)) continue;
                pts.push_back(x);
                if (pts.size() >= 500) break;
            }
            for (const auto& x : pts)
                for (int a = 1; a <= c.n; ++a)
                    t.note(in_cone(cone, crystal_f_star(c, i, a, x)),
                           tag + ": lowering stability a=" + std::to_string(a));
        }
    }
}

// --------------------------------------------------------------- theorem-a

void suite_theorem_a(Tally& t, const std::string& filter) {
    for (const std::string& label : scope(filter, {"A2", "A3"})) {
        CartanMatrix c = build_cartan(label);
        for (const Word& i : words_in_scope(c)) {
            const std::string tag = label + " word " + word_str(i);
            const RationalMap phi = phi_chart(c, i);
            t.note(maps_equal(phi, phi_chart_alt(c, i)),
                   tag + ": two comparison-map factorizations");
            for (int a = 1; a <= c.n; ++a) {
                for (int sign : {1, -1}) {
                    const int d = sign * a;
                    t.note(substitute(ghkk_component(c, i, d), phi)
                               .equals(bk_component(c, i, d)),
                           tag + ": decoration from potential a=" + std::to_string(d));
                }
            }
        }
        // Covariance under one 3-move from the canonical word.
        const Word w0 = canonical_longest_word(c);
        for (const Move& mv : applicable_moves(c, w0)) {
            if (mv.kind != Move::Three) continue;
            const Word j = move_apply(c, w0, mv);
            RationalMap lhs = compose(phi_chart(c, j), chart_transition(c, Variety::A, w0, j));
            RationalMap rhs = compose(chart_transition(c, Variety::X, w0, j), phi_chart(c, w0));
            t.note(maps_equal(lhs, rhs),
                   label + ": comparison map intertwines the 3-move " + word_str(w0) +
                       " -> " + word_str(j));
            break;
        }
    }
}

// ------------------------------------------------------------------ cycles

void suite_cycles(Tally& t, const std::string& filter) {
    for (const std::string& label : scope(filter, {"A3"})) {
        if (label != "A2" && label != "A3") continue; // enumerable scopes only
        CartanMatrix c = build_cartan(label);
        const WordGraph& g = word_graph(c);
        const int N = longest_length(c);
        const std::size_t count = g.words.size();
        const RationalMap id = identity_map(chart_space(N));
        const int max_len = 6;

        // All-pairs move distances, for pruning walks that cannot close.
        std::vector<std::vector<int>> dist(count, std::vector<int>(count, -1));
        for (std::size_t s = 0; s < count; ++s) {
            std::deque<std::size_t> queue{s};
            dist[s][s] = 0;
            while (!queue.empty()) {
                std::size_t v = queue.front();
                queue.pop_front();
                for (const auto& [mv, w] : g.edges[v]) {
                    const auto uw = static_cast<std::size_t>(w);
                    if (dist[s][uw] >= 0) continue;
                    dist[s][uw] = dist[s][v] + 1;
                    queue.push_back(uw);
                }
            }
        }

        for (TransitionKind kind : {TransitionKind::Lusztig, TransitionKind::String}) {
            const std::string kind_name =
                kind == TransitionKind::Lusztig ? "Lusztig" : "string";
            for (std::size_t s = 0; s < count; ++s) {
                std::function<void(std::size_t, int, const RationalMap&)> dfs =
                    [&](std::size_t v, int depth, const RationalMap& acc) {
                        if (depth > 0 && v == s)
                            t.note(maps_equal(acc, id),
                                   label + " " + kind_name + ": closed walk of length " +
                                       std::to_string(depth) + " at " + word_str(g.words[s]));
                        if (depth == max_len) return;
                        for (const auto& [mv, w] : g.edges[v]) {
                            const auto uw = static_cast<std::size_t>(w);
                            if (dist[uw][s] > max_len - depth - 1) continue;
                            const RationalMap& step =
                                transition_map(c, kind, g.words[v], g.words[uw]);
                            dfs(uw, depth + 1, compose(step, acc));
                        }
                    };
                dfs(s, 0, id);
            }
        }
    }
}

using SuiteFn = void (*)(Tally&, const std::string&);

const std::map<std::string, SuiteFn>& suite_table() {
    static const std::map<std::string, SuiteFn> table{
        {"examples", suite_examples},
        {"factorization", suite_factorization},
        {"unimodular", suite_unimodular},
        {"cmm", suite_cmm},
        {"transforms", suite_transforms},
        {"ghkk-route", suite_ghkk_route},
        {"polytopes", suite_polytopes},
        {"crystal", suite_crystal},
        {"theorem-a", suite_theorem_a},
        {"cycles", suite_cycles},
    };
    return table;
}

} // namespace

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> names{
        "examples", "factorization", "unimodular", "cmm",       "transforms",
        "ghkk-route", "polytopes",   "crystal",    "theorem-a", "cycles"};
    return names;
}

VerifyResult run_verify(const std::string& suite, const std::string& type_filter) {
    const auto& table = suite_table();
    auto it = table.find(suite);
    if (it == table.end()) throw Error("unknown verify suite: " + suite);
    Tally t;
    try {
        it->second(t, type_filter);
    } catch (const std::exception& e) {
        VerifyResult r;
        r.name = suite;
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
        return r;
    }
    return t.result(suite);
}

std::vector<VerifyResult> run_verify_all(const std::string& type_filter) {
    std::vector<VerifyResult> out;
    for (const std::string& name : verify_suites())
        out.push_back(run_verify(name, type_filter));
    return out;
}

} // namespace stringcone
