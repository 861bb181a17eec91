#pragma once

/**
 * JSON files for sets and maps. The writer emits a fixed layout so that
 * load followed by save reproduces the input bytes.
 */

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "simplicial_set.hpp"

namespace simpcoh {

using Json = nlohmann::ordered_json;

inline Json to_json(const SimplicialSet& K) {
    Json j;
    j["kind"] = K.is_delta() ? "delta" : "simplicial";
    j["dim_cap"] = K.dim_cap();
    j["cardinalities"] = K.cardinalities();
    j["faces"] = K.face_tables();
    if (!K.is_delta()) j["degeneracies"] = K.degeneracy_tables();
    if (K.has_labels()) j["labels"] = K.labels();
    return j;
}

inline SimplicialSet set_from_json(const Json& j) {
    try {
        std::string kind = j.at("kind").get<std::string>();
        if (kind != "simplicial" && kind != "delta") throw ParseError("kind must be simplicial or delta");
        Kind k = kind == "delta" ? Kind::delta : Kind::simplicial;
        int cap = j.at("dim_cap").get<int>();
        auto card = j.at("cardinalities").get<std::vector<std::size_t>>();
        auto faces = j.at("faces").get<SimplicialSet::Faces>();
        SimplicialSet::Degeneracies degens;
        if (k == Kind::simplicial) degens = j.at("degeneracies").get<SimplicialSet::Degeneracies>();
        else if (j.contains("degeneracies")) throw ParseError("a delta file must not list degeneracies");
        SimplicialSet::Labels labels;
        if (j.contains("labels")) labels = j.at("labels").get<SimplicialSet::Labels>();
        return SimplicialSet(k, cap, std::move(card), std::move(faces), std::move(degens), std::move(labels));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed set file: ") + e.what());
    }
}

inline Json to_json(const SimplicialMap& f, const std::string& source, const std::string& target) {
    Json j;
    j["source"] = source;
    j["target"] = target;
    j["maps"] = f.maps();
    return j;
}

inline SimplicialMap map_from_json(const Json& j, const SimplicialSet& source, const SimplicialSet& target) {
    try {
        return SimplicialMap(source, target, j.at("maps").get<SimplicialMap::Maps>());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed map file: ") + e.what());
    }
}

/// Canonical text: compact JSON followed by a newline.
inline std::string dump(const Json& j) { return j.dump() + "\n"; }

inline Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
}

inline SimplicialSet load_set(const std::string& path) { return set_from_json(parse_json(read_file(path))); }
inline void save_set(const std::string& path, const SimplicialSet& K) { write_file(path, dump(to_json(K))); }

}  // namespace simpcoh
