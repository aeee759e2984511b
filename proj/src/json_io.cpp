// SPDX-License-Identifier: Apache-2.0

#include "stringcone/json_io.hpp"

namespace stringcone {

std::string dec_string(const BigInt& v) { return v.str(); }

std::string dec_string(long long v) { return std::to_string(v); }

std::string dec_string(const Rat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

namespace {

Json exponents_json(const ExpoVec& exponents) {
    Json out = Json::array();
    for (Expo e : exponents) out.push_back(dec_string(e));
    return out;
}

Json poly_terms_json(const PosPoly& poly) {
    Json out = Json::array();
    for (const auto& [exponents, coeff] : poly.terms()) {
        Json term;
        term["coeff"] = dec_string(coeff);
        term["exponents"] = exponents_json(exponents);
        out.push_back(std::move(term));
    }
    return out;
}

} // namespace

Json to_json(const Space& space) {
    Json out = Json::array();
    for (const auto& name : space.names()) out.push_back(name);
    return out;
}

Json to_json(const PosPoly& poly) { return poly_terms_json(poly); }

Json to_json(const PosRat& value) {
    Json out;
    out["den"] = poly_terms_json(value.den());
    out["num"] = poly_terms_json(value.num());
    out["text"] = value.to_string();
    return out;
}

Json to_json(const RationalMap& map) {
    Json out;
    out["source"] = to_json(*map.source);
    out["target"] = to_json(*map.target);
    Json coords = Json::object();
    for (std::size_t k = 0; k < map.coords.size(); ++k)
        coords[map.target->name(k)] = map.coords[k].to_string();
    out["coords"] = std::move(coords);
    return out;
}

Json to_json(const TropForm& form) {
    Json out;
    Json num = Json::array();
    for (const auto& exponents : form.num_exps) num.push_back(exponents_json(exponents));
    Json den = Json::array();
    for (const auto& exponents : form.den_exps) den.push_back(exponents_json(exponents));
    out["den"] = std::move(den);
    out["num"] = std::move(num);
    out["text"] = form.to_string();
    return out;
}

Json to_json(const TropMap& map) {
    Json out;
    out["source"] = to_json(*map.source);
    out["target"] = to_json(*map.target);
    Json coords = Json::object();
    for (std::size_t k = 0; k < map.coords.size(); ++k)
        coords[map.target->name(k)] = map.coords[k].to_string();
    out["coords"] = std::move(coords);
    return out;
}

Json to_json(const ConeH& cone) {
    Json out;
    Json rows = Json::array();
    for (const auto& row : cone.rows) {
        Json entries = Json::array();
        for (long long v : row) entries.push_back(dec_string(v));
        rows.push_back(std::move(entries));
    }
    out["rows"] = std::move(rows);
    out["space"] = to_json(*cone.space);
    return out;
}

Json to_json(const CartanMatrix& cartan) {
    Json out;
    out["label"] = cartan.label;
    out["rank"] = dec_string(static_cast<long long>(cartan.n));
    Json rows = Json::array();
    for (int a = 1; a <= cartan.n; ++a) {
        Json row = Json::array();
        for (int b = 1; b <= cartan.n; ++b) row.push_back(dec_string(static_cast<long long>(cartan.at(a, b))));
        rows.push_back(std::move(row));
    }
    out["matrix"] = std::move(rows);
    return out;
}

Json to_json(const Seed& seed) {
    Json out;
    Json vertices = Json::array();
    for (int k : seed.index_set()) vertices.push_back(dec_string(static_cast<long long>(k)));
    out["vertices"] = std::move(vertices);
    Json frozen = Json::array();
    for (int k : seed.frozen) frozen.push_back(dec_string(static_cast<long long>(k)));
    out["frozen"] = std::move(frozen);
    Json eps = Json::array();
    for (const auto& [key, value] : seed.eps) {
        if (value == 0) continue;
        Json entry;
        entry["from"] = dec_string(static_cast<long long>(key.first));
        entry["to"] = dec_string(static_cast<long long>(key.second));
        entry["value"] = dec_string(static_cast<long long>(value));
        eps.push_back(std::move(entry));
    }
    out["exchange"] = std::move(eps);
    return out;
}

Json quiver_to_json(const Seed& seed) {
    Json out;
    Json arrows = Json::array();
    for (const auto& arrow : quiver_of(seed)) {
        Json entry;
        entry["mult"] = dec_string(static_cast<long long>(arrow.mult));
        entry["source"] = dec_string(static_cast<long long>(arrow.source));
        entry["target"] = dec_string(static_cast<long long>(arrow.target));
        arrows.push_back(std::move(entry));
    }
    out["arrows"] = std::move(arrows);
    Json frozen = Json::array();
    for (int k : seed.frozen) frozen.push_back(dec_string(static_cast<long long>(k)));
    out["frozen"] = std::move(frozen);
    Json vertices = Json::array();
    for (int k : seed.index_set()) vertices.push_back(dec_string(static_cast<long long>(k)));
    out["vertices"] = std::move(vertices);
    return out;
}

Json to_json(const IntMat& matrix) {
    Json rows = Json::array();
    for (const auto& row : matrix) {
        Json entries = Json::array();
        for (const auto& v : row) entries.push_back(dec_string(v));
        rows.push_back(std::move(entries));
    }
    return rows;
}

Json error_json(const std::string& type, const std::string& message) {
    Json out;
    out["error"] = Json{{"message", message}, {"type", type}};
    return out;
}

} // namespace stringcone
