// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end.
//
// Exit codes: 0 success; 1 bad flags or any other error; 2 invalid word;
// 3 dimension cap exceeded. With --format json, failures print a
// machine-readable {"error": {...}} object; all numbers in JSON output are
// decimal strings and keys are sorted, so output is byte-stable.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stringcone/cartan.hpp"
#include "stringcone/chartmaps.hpp"
#include "stringcone/cluster.hpp"
#include "stringcone/cones.hpp"
#include "stringcone/errors.hpp"
#include "stringcone/json_io.hpp"
#include "stringcone/potentials.hpp"
#include "stringcone/transitions.hpp"
#include "stringcone/verify.hpp"
#include "stringcone/words.hpp"

namespace {

using namespace stringcone;

bool g_json = false;

void emit(const Json& payload, const std::string& text) {
    if (g_json)
        std::cout << payload.dump() << "\n";
    else
        std::cout << text;
}

std::vector<long long> parse_ll_list(const std::string& text, const std::string& flag) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw Error("could not parse " + flag + " entry '" + item + "'");
        }
        if (used != item.size())
            throw Error("could not parse " + flag + " entry '" + item + "'");
        out.push_back(value);
    }
    if (out.empty()) throw Error(flag + " must be a comma-separated integer list");
    return out;
}

Word parse_word(const CartanMatrix& cartan, const std::string& text) {
    Word word;
    for (long long v : parse_ll_list(text, "--word")) {
        if (v < 1 || v > cartan.n)
            throw InvalidWordError("letter " + std::to_string(v) + " outside [1.." +
                                   std::to_string(cartan.n) + "]");
        word.push_back(static_cast<int>(v));
    }
    require_longest_word(cartan, word);
    return word;
}

WeightVec parse_weight(const CartanMatrix& cartan, const std::string& text) {
    WeightVec lambda = parse_ll_list(text, "--weight");
    if (static_cast<int>(lambda.size()) != cartan.n)
        throw Error("--weight needs exactly " + std::to_string(cartan.n) + " entries");
    return lambda;
}

std::string render_posrat_lines(const std::string& prefix,
                                const std::vector<std::pair<int, const PosRat*>>& items) {
    std::ostringstream os;
    for (const auto& [a, value] : items)
        os << prefix << "[" << a << "] = " << value->to_string() << "\n";
    return os.str();
}

std::string render_rows(const std::vector<std::vector<long long>>& rows) {
    std::ostringstream os;
    for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) os << (k ? " " : "") << row[k];
        os << "\n";
    }
    return os.str();
}

// ------------------------------------------------------------ subcommands

void cmd_cartan(const std::string& type) {
    CartanMatrix c = build_cartan(type);
    std::ostringstream os;
    os << c.label << " (rank " << c.n << ")\n";
    for (int a = 1; a <= c.n; ++a) {
        for (int b = 1; b <= c.n; ++b) os << (b > 1 ? " " : "") << c.at(a, b);
        os << "\n";
    }
    emit(to_json(c), os.str());
}

void cmd_words(const std::string& type) {
    CartanMatrix c = build_cartan(type);
    const WordGraph& g = word_graph(c);
    Json payload;
    payload["count"] = dec_string(static_cast<long long>(g.words.size()));
    Json list = Json::array();
    std::ostringstream os;
    for (const Word& w : g.words) {
        Json jw = Json::array();
        for (std::size_t k = 0; k < w.size(); ++k) {
            jw.push_back(dec_string(static_cast<long long>(w[k])));
            os << (k ? "," : "") << w[k];
        }
        os << "\n";
        list.push_back(std::move(jw));
    }
    payload["words"] = std::move(list);
    emit(payload, os.str());
}

void cmd_transition(const std::string& type, const std::string& word,
                    const std::string& to, const std::string& kind) {
    CartanMatrix c = build_cartan(type);
    Word i = parse_word(c, word);
    Word j = parse_word(c, to);
    TransitionKind k = kind == "string" ? TransitionKind::String : TransitionKind::Lusztig;
    const RationalMap& m = transition_map(c, k, i, j);
    emit(to_json(m), m.to_string() + "\n");
}

void cmd_quiver(const std::string& type, const std::string& word) {
    CartanMatrix c = build_cartan(type);
    Seed seed = seed_from_word(c, parse_word(c, word));
    std::ostringstream os;
    for (const QuiverArrow& a : quiver_of(seed)) {
        os << "v" << a.source << " -> v" << a.target;
        if (a.mult != 1) os << " (x" << a.mult << ")";
        os << "\n";
    }
    os << "frozen:";
    for (int k : seed.frozen) os << " " << k;
    os << "\n";
    emit(quiver_to_json(seed), os.str());
}

void cmd_mutate(const std::string& type, const std::string& word, int at) {
    CartanMatrix c = build_cartan(type);
    Seed seed = seed_from_word(c, parse_word(c, word));
    const auto vertices = seed.index_set();
    if (std::find(vertices.begin(), vertices.end(), at) == vertices.end())
        throw DomainError("no vertex " + std::to_string(at));
    if (seed.is_frozen(at))
        throw DomainError("vertex " + std::to_string(at) + " is frozen");
    Seed out = mutate_seed(seed, at);
    std::ostringstream os;
    for (const QuiverArrow& a : quiver_of(out)) {
        os << "v" << a.source << " -> v" << a.target;
        if (a.mult != 1) os << " (x" << a.mult << ")";
        os << "\n";
    }
    os << "frozen:";
    for (int k : out.frozen) os << " " << k;
    os << "\n";
    emit(to_json(out), os.str());
}

void cmd_components(const std::string& type, const std::string& word, int divisor,
                    bool have_divisor, PotentialKind kind) {
    CartanMatrix c = build_cartan(type);
    Word i = parse_word(c, word);
    auto component = [&](int a) -> const PosRat& {
        return kind == PotentialKind::W ? ghkk_component(c, i, a) : bk_component(c, i, a);
    };
    const std::string prefix = kind == PotentialKind::W ? "W" : "f";
    if (have_divisor) {
        if (divisor == 0 || divisor < -c.n || divisor > c.n)
            throw DomainError("--divisor must lie in -[n] u [n]");
        const PosRat& f = component(divisor);
        emit(to_json(f), prefix + "[" + std::to_string(divisor) + "] = " + f.to_string() + "\n");
        return;
    }
    Json payload = Json::object();
    std::vector<std::pair<int, const PosRat*>> items;
    for (int a = 1; a <= c.n; ++a) {
        for (int d : {-a, a}) {
            const PosRat& f = component(d);
            payload[std::to_string(d)] = to_json(f);
            items.emplace_back(d, &f);
        }
    }
    std::sort(items.begin(), items.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    emit(payload, render_posrat_lines(prefix, items));
}

ChartMapKind parse_chart_kind(const std::string& kind) {
    if (kind == "gr-iota-star") return ChartMapKind::GrIotaStar;
    if (kind == "gr-ca") return ChartMapKind::GrCA;
    if (kind == "gr-ca-star") return ChartMapKind::GrCAStar;
    if (kind == "gr-iota") return ChartMapKind::GrIota;
    throw Error("unknown chart map kind: " + kind);
}

void cmd_chart(const std::string& type, const std::string& word, const std::string& kind) {
    CartanMatrix c = build_cartan(type);
    RationalMap m = chart_map(c, parse_word(c, word), parse_chart_kind(kind));
    emit(to_json(m), m.to_string() + "\n");
}

ConeKind parse_cone_kind(const std::string& kind) {
    if (kind == "ghkk") return ConeKind::Ghkk;
    if (kind == "bk") return ConeKind::Bk;
    if (kind == "graded-string") return ConeKind::GradedString;
    if (kind == "graded-string-dual") return ConeKind::GradedStringDual;
    if (kind == "graded-lusztig") return ConeKind::GradedLusztig;
    if (kind == "graded-lusztig-dual") return ConeKind::GradedLusztigDual;
    throw Error("unknown cone kind: " + kind);
}

void cmd_cone(const std::string& type, const std::string& word, const std::string& kind,
              bool rays) {
    CartanMatrix c = build_cartan(type);
    ConeH cone = build_cone(c, parse_word(c, word), parse_cone_kind(kind));
    Json payload = to_json(cone);
    std::ostringstream os;
    os << "coordinates:";
    for (const auto& nm : cone.space->names()) os << " " << nm;
    os << "\nrows:\n" << render_rows(cone.rows);
    if (rays) {
        Json jrays = Json::array();
        os << "extreme rays:\n";
        for (const auto& ray : cone_extreme_rays(cone)) {
            Json jr = Json::array();
            for (std::size_t k = 0; k < ray.size(); ++k) {
                jr.push_back(dec_string(ray[k]));
                os << (k ? " " : "") << ray[k];
            }
            os << "\n";
            jrays.push_back(std::move(jr));
        }
        payload["rays"] = std::move(jrays);
    }
    emit(payload, os.str());
}

void cmd_polytope(const std::string& type, const std::string& word, const std::string& kind,
                  const std::string& weight, bool count_only) {
    CartanMatrix c = build_cartan(type);
    Word i = parse_word(c, word);
    WeightVec lambda = parse_weight(c, weight);
    PolytopeKind k = kind == "lusztig" ? PolytopeKind::Lusztig : PolytopeKind::String;
    auto points = polytope_points(c, i, k, lambda);
    Json payload;
    payload["count"] = dec_string(static_cast<long long>(points.size()));
    if (count_only) {
        emit(payload, std::to_string(points.size()) + "\n");
        return;
    }
    Json list = Json::array();
    for (const auto& p : points) {
        Json jp = Json::array();
        for (long long v : p) jp.push_back(dec_string(v));
        list.push_back(std::move(jp));
    }
    payload["points"] = std::move(list);
    emit(payload, render_rows(points));
}

void cmd_phi(const std::string& type, const std::string& word) {
    CartanMatrix c = build_cartan(type);
    RationalMap m = phi_chart(c, parse_word(c, word));
    emit(to_json(m), m.to_string() + "\n");
}

int cmd_verify(const std::string& type, const std::string& suite) {
    std::vector<VerifyResult> results;
    if (suite == "all")
        results = run_verify_all(type);
    else
        results.push_back(run_verify(suite, type));
    bool all_pass = true;
    Json list = Json::array();
    std::ostringstream os;
    for (const VerifyResult& r : results) {
        all_pass = all_pass && r.pass;
        Json jr;
        jr["detail"] = r.detail;
        jr["pass"] = r.pass ? "true" : "false";
        jr["suite"] = r.name;
        list.push_back(std::move(jr));
        os << "[" << (r.pass ? "PASS" : "FAIL") << "] " << r.name << ": " << r.detail << "\n";
    }
    Json payload;
    payload["results"] = std::move(list);
    payload["pass"] = all_pass ? "true" : "false";
    emit(payload, os.str());
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact cone parametrizations of canonical bases: charts, potentials, "
                 "decorations, cones and weight polytopes for simply-laced types"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string type = "A2", word, to, kind, weight, suite = "all";
    int at = 0, divisor = 0;
    bool count_only = false, rays = false;

    auto add_type = [&](CLI::App* sub) {
        sub->add_option("--type", type, "Cartan type label, e.g. A2, A3, D4")->required();
    };
    auto add_word = [&](CLI::App* sub) {
        sub->add_option("--word", word, "Comma-separated reduced word of the longest element")
            ->required();
    };

    CLI::App* c_cartan = app.add_subcommand("cartan", "Print the Cartan matrix");
    add_type(c_cartan);

    CLI::App* c_words = app.add_subcommand("words", "List all reduced words of the longest element");
    add_type(c_words);

    CLI::App* c_transition = app.add_subcommand("transition", "Chart transition map between two words");
    add_type(c_transition);
    add_word(c_transition);
    c_transition->add_option("--to", to, "Target word")->required();
    c_transition->add_option("--kind", kind, "Transition kind")
        ->check(CLI::IsMember({"lusztig", "string"}))
        ->required();

    CLI::App* c_quiver = app.add_subcommand("quiver", "Quiver of the seed attached to a word");
    add_type(c_quiver);
    add_word(c_quiver);

    CLI::App* c_mutate = app.add_subcommand("mutate", "Mutate the seed of a word at a vertex");
    add_type(c_mutate);
    add_word(c_mutate);
    c_mutate->add_option("--at", at, "Mutable vertex index")->required();

    CLI::App* c_potential = app.add_subcommand("potential", "Potential components on the cluster chart");
    add_type(c_potential);
    add_word(c_potential);
    CLI::Option* pot_div = c_potential->add_option("--divisor", divisor, "Component index in -[n] u [n]");

    CLI::App* c_decoration = app.add_subcommand("decoration", "Decoration components on the cluster chart");
    add_type(c_decoration);
    add_word(c_decoration);
    CLI::Option* dec_div = c_decoration->add_option("--divisor", divisor, "Component index in -[n] u [n]");

    CLI::App* c_chart = app.add_subcommand("chart", "One of the four graded chart maps");
    add_type(c_chart);
    add_word(c_chart);
    c_chart->add_option("--kind", kind, "Chart map kind")
        ->check(CLI::IsMember({"gr-iota-star", "gr-ca", "gr-ca-star", "gr-iota"}))
        ->required();

    CLI::App* c_cone = app.add_subcommand("cone", "H-description of one of the six cones");
    add_type(c_cone);
    add_word(c_cone);
    c_cone->add_option("--kind", kind, "Cone kind")
        ->check(CLI::IsMember({"ghkk", "bk", "graded-string", "graded-string-dual",
                               "graded-lusztig", "graded-lusztig-dual"}))
        ->required();
    c_cone->add_flag("--rays", rays, "Also list the extreme rays");

    CLI::App* c_polytope = app.add_subcommand("polytope", "Lattice points of a weight polytope");
    add_type(c_polytope);
    add_word(c_polytope);
    c_polytope->add_option("--kind", kind, "Polytope kind")
        ->check(CLI::IsMember({"string", "lusztig"}))
        ->required();
    c_polytope->add_option("--weight", weight, "Dominant weight coordinates")->required();
    c_polytope->add_flag("--count", count_only, "Print only the number of points");

    CLI::App* c_phi = app.add_subcommand("phi", "Comparison map from the decorated to the potential chart");
    add_type(c_phi);
    add_word(c_phi);

    CLI::App* c_verify = app.add_subcommand("verify", "Run self-verification suites");
    c_verify->add_option("--type", type, "Restrict to one Cartan type");
    {
        std::vector<std::string> allowed = stringcone::verify_suites();
        allowed.insert(allowed.begin(), "all");
        c_verify->add_option("--suite", suite, "Suite name or 'all'")
            ->check(CLI::IsMember(allowed));
    }

    std::string verify_type_filter;
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    g_json = format == "json";

    try {
        if (c_cartan->parsed()) cmd_cartan(type);
        else if (c_words->parsed()) cmd_words(type);
        else if (c_transition->parsed()) cmd_transition(type, word, to, kind);
        else if (c_quiver->parsed()) cmd_quiver(type, word);
        else if (c_mutate->parsed()) cmd_mutate(type, word, at);
        else if (c_potential->parsed())
            cmd_components(type, word, divisor, pot_div->count() > 0, PotentialKind::W);
        else if (c_decoration->parsed())
            cmd_components(type, word, divisor, dec_div->count() > 0, PotentialKind::FB);
        else if (c_chart->parsed()) cmd_chart(type, word, kind);
        else if (c_cone->parsed()) cmd_cone(type, word, kind, rays);
        else if (c_polytope->parsed()) cmd_polytope(type, word, kind, weight, count_only);
        else if (c_phi->parsed()) cmd_phi(type, word);
        else if (c_verify->parsed()) {
            if (c_verify->count("--type") > 0) verify_type_filter = type;
            return cmd_verify(verify_type_filter, suite);
        }
    } catch (const InvalidWordError& e) {
        emit(error_json("invalid-word", e.what()), std::string("error: ") + e.what() + "\n");
        return 2;
    } catch (const DimensionCapError& e) {
        emit(error_json("dimension-cap", e.what()), std::string("error: ") + e.what() + "\n");
        return 3;
    } catch (const std::exception& e) {
        emit(error_json("error", e.what()), std::string("error: ") + e.what() + "\n");
        return 1;
    }
    return 0;
}
