#pragma once

/**
 * File formats beyond sets and maps: groups, categories, cochains, chains,
 * Eilenberg-MacLane models and semi-norm certificates.
 *
 * Rationals are written as [numerator, denominator] with integers when they
 * fit in 64 bits and decimal strings otherwise. Cochains list their nonzero
 * values as [dim, index, value...] rows.
 */

#include <algorithm>
#include <cctype>
#include <limits>
#include <string>
#include <vector>

#include "category.hpp"
#include "eilenberg_maclane.hpp"
#include "seminorm.hpp"
#include "serialize.hpp"

namespace simpcoh {

inline Json integer_json(const Integer& z) {
    if (z >= std::numeric_limits<long long>::min() && z <= std::numeric_limits<long long>::max())
        return Json(z.convert_to<long long>());
    return Json(z.str());
}

inline Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<long long>());
    if (j.is_string()) {
        auto s = j.get<std::string>();
        if (s.empty() || !std::all_of(s.begin() + (s[0] == '-' ? 1 : 0), s.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw ParseError("not an integer: " + s);
        return Integer(s);
    }
    throw ParseError("expected an integer");
}

inline Json rational_json(const Rational& q) {
    return Json::array({integer_json(boost::multiprecision::numerator(q)), integer_json(boost::multiprecision::denominator(q))});
}

inline Rational rational_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("a rational is a [numerator, denominator] pair");
    Integer d = integer_from_json(j[1]);
    if (d == 0) throw ParseError("zero denominator");
    return Rational(integer_from_json(j[0]), d);
}

// ---------------------------------------------------------------------------
// Groups and categories

/// Z/n, products like Z/2xZ/2, or S3.
inline FiniteGroup parse_group(const std::string& text) {
    if (text.size() >= 2 && text[0] == 'S') {
        try {
            int n = std::stoi(text.substr(1));
            if (n >= 1 && n <= 4) return FiniteGroup::symmetric(n);
        } catch (const std::exception&) {
        }
        throw ParseError("unsupported symmetric group " + text);
    }
    std::vector<int> moduli;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text.compare(pos, 2, "Z/") != 0) throw ParseError("cannot read group " + text);
        pos += 2;
        std::size_t end = pos;
        while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
        if (end == pos) throw ParseError("cannot read group " + text);
        moduli.push_back(std::stoi(text.substr(pos, end - pos)));
        if (moduli.back() < 1) throw ParseError("cyclic order must be positive");
        pos = end;
        if (pos < text.size()) {
            if (text[pos] != 'x' || pos + 1 == text.size()) throw ParseError("cannot read group " + text);
            ++pos;
        }
    }
    if (moduli.empty()) throw ParseError("empty group name");
    return moduli.size() == 1 ? FiniteGroup::cyclic(moduli[0]) : FiniteGroup::cyclic_product(moduli);
}

inline Json to_json(const FiniteGroup& G) {
    Json j;
    j["order"] = G.order();
    j["mul"] = G.table();
    if (!G.name().empty()) j["name"] = G.name();
    return j;
}

inline FiniteGroup group_from_json(const Json& j) {
    try {
        return FiniteGroup(j.at("order").get<int>(), j.at("mul").get<std::vector<int>>(), j.value("name", std::string()));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed group file: ") + e.what());
    }
}

/// Categories: `objects`, `homs` as [source, target] per arrow, `compose` as
/// triples [f, g, f then g], `identities` per object. A file with `order` and
/// `mul` is read as a one-object group.
inline FiniteCategory category_from_json(const Json& j) {
    if (j.contains("order")) return FiniteCategory::from_group(group_from_json(j));
    try {
        int objects = j.at("objects").get<int>();
        std::vector<FiniteCategory::Arrow> arrows;
        for (const auto& h : j.at("homs")) arrows.push_back({h.at(0).get<int>(), h.at(1).get<int>()});
        const std::size_t a = arrows.size();
        std::vector<int> then(a * a, -1);
        for (const auto& t : j.at("compose")) {
            auto f = t.at(0).get<std::size_t>(), g = t.at(1).get<std::size_t>();
            if (f >= a || g >= a) throw ParseError("composition refers to a missing arrow");
            then[f * a + g] = t.at(2).get<int>();
        }
        return FiniteCategory(objects, std::move(arrows), std::move(then), j.at("identities").get<std::vector<int>>());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed category file: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Cochains and chains

inline Json to_json(const RationalCochain& c) {
    Json j;
    j["degree"] = c.degree;
    j["coeff_group"] = "Q";
    Json values = Json::array();
    for (Index s = 0; s < c.values.size(); ++s)
        if (c[s] != 0) values.push_back(Json::array({c.degree, s, rational_json(c[s])}));
    j["values"] = std::move(values);
    return j;
}

inline Json to_json(const GroupCochain& c, const FiniteGroup& G) {
    Json j;
    j["degree"] = c.degree;
    j["coeff_group"] = G.name().empty() ? to_json(G) : Json(G.name());
    Json values = Json::array();
    for (Index s = 0; s < c.values.size(); ++s)
        if (c[s] != G.unit()) values.push_back(Json::array({c.degree, s, c[s]}));
    j["values"] = std::move(values);
    return j;
}

inline RationalCochain rational_cochain_from_json(const Json& j, const SimplicialSet& K) {
    try {
        int n = j.at("degree").get<int>();
        if (j.value("coeff_group", std::string("Q")) != "Q") throw ParseError("expected rational coefficients");
        if (n < 0 || n > K.dim_cap()) throw ParseError("degree outside the set's cap");
        RationalCochain c{n, std::vector<Rational>(K.size(n), 0)};
        for (const auto& v : j.at("values")) {
            if (v.at(0).get<int>() != n) throw ParseError("value in the wrong dimension");
            auto s = v.at(1).get<Index>();
            if (s >= K.size(n)) throw ParseError("simplex index out of range");
            c[s] = rational_from_json(v.at(2));
        }
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed cochain file: ") + e.what());
    }
}

/// Chains as (dim, index, numerator, denominator) quadruples.
inline Json to_json(const Chain& c) {
    Json j;
    j["degree"] = c.degree;
    Json terms = Json::array();
    for (const auto& [s, a] : c.terms.terms()) {
        auto r = rational_json(a);
        terms.push_back(Json::array({c.degree, s, r[0], r[1]}));
    }
    j["terms"] = std::move(terms);
    return j;
}

/// Chains of a product with Gamma, keyed by (simplex, Gamma tuple).
template <class Key, class KeyJson>
Json formal_sum_json(const FormalSum<Key>& c, KeyJson key) {
    Json terms = Json::array();
    for (const auto& [k, a] : c.terms()) {
        auto r = rational_json(a);
        terms.push_back(Json::array({key(k), r[0], r[1]}));
    }
    return terms;
}

// ---------------------------------------------------------------------------
// Eilenberg-MacLane models and certificates

inline Json to_json(const EMModel& em) {
    Json j = to_json(em.set());
    Json side = Json::array();
    for (int q = 0; q <= em.dim_cap(); ++q) {
        Json level = Json::array();
        for (Index s = 0; s < em.set().size(q); ++s) level.push_back(em.cocycle(q, s));
        side.push_back(std::move(level));
    }
    j["group"] = to_json(em.group());
    j["degree"] = em.degree();
    j["cocycle_values"] = std::move(side);
    return j;
}

/// Rebuilds the model from its group, degree and cap and checks it against the file.
inline EMModel em_from_json(const Json& j) {
    try {
        EMModel em(group_from_json(j.at("group")), j.at("degree").get<int>(), j.at("dim_cap").get<int>());
        if (to_json(em) != j) throw ParseError("file does not match the Eilenberg-MacLane model it describes");
        return em;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed Eilenberg-MacLane file: ") + e.what());
    }
}

inline Json to_json(const SeminormCertificate& c) {
    Json j;
    j["degree"] = c.degree;
    j["mode"] = to_string(c.mode);
    j["value"] = rational_json(c.value);
    if (c.degree > 0) j["primitive"] = to_json(c.primitive);
    j["optimizer"] = to_json(c.optimizer);
    j["dual"] = to_json(Chain{c.degree, c.dual});
    j["pivots"] = c.pivots;
    return j;
}

inline SimplicialMap load_map(const std::string& path, const SimplicialSet& source, const SimplicialSet& target) {
    return map_from_json(parse_json(read_file(path)), source, target);
}

}  // namespace simpcoh
