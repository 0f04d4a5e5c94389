#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "scae/errors.hpp"
#include "scae/fusion_ring.hpp"
#include "scae/modular_data.hpp"

namespace scae {

inline constexpr int kSchemaVersion = 1;

/**
 * Category file layout (canonical JSON, keys sorted):
 *
 *   schema_version  1
 *   source          {"family", "rank", "level"} or the string "external"
 *   simples         label strings, unit first
 *   dual            dual index of each simple
 *   fusion          [a, b, c, N] quadruples with N > 0, sorted
 *   twists          [num, den] turns per simple
 *   qdims           quantum dimension per simple
 */
inline nlohmann::json to_json(const ModularCategoryData& data)
{
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    if (data.source) {
        j["source"] = {{"family", std::string(1, family_char(data.source->family))},
                       {"rank", data.source->rank},
                       {"level", data.source->level}};
    } else {
        j["source"] = "external";
    }
    j["simples"] = data.ring.labels();
    j["dual"] = data.ring.dual_permutation();
    auto fusion = nlohmann::json::array();
    for (Index a = 0; a < data.size(); ++a)
        for (Index b = 0; b < data.size(); ++b)
            for (const auto& ch : data.ring.product(a, b)) fusion.push_back({a, b, ch.target, ch.multiplicity});
    j["fusion"] = std::move(fusion);
    auto twists = nlohmann::json::array();
    for (const auto& t : data.twist) twists.push_back({t.num(), t.den()});
    j["twists"] = std::move(twists);
    j["qdims"] = data.qdim;
    return j;
}

inline std::string serialize(const ModularCategoryData& data) { return to_json(data).dump() + "\n"; }

/// Parses and validates a category; every failure is an InputError.
inline ModularCategoryData from_json(const nlohmann::json& j)
{
    ModularCategoryData data;
    try {
        if (j.at("schema_version").get<int>() != kSchemaVersion) {
            throw InputError("unsupported schema_version " + j.at("schema_version").dump());
        }
        const auto& src = j.at("source");
        if (src.is_string()) {
            if (src.get<std::string>() != "external") throw InputError("source must be an object or \"external\"");
            data.name = "external";
        } else {
            WzwSource s{parse_family(src.at("family").get<std::string>()), src.at("rank").get<int>(),
                        src.at("level").get<int>()};
            data.source = s;
            data.name = std::string(1, family_char(s.family)) + std::to_string(s.rank) + "@" + std::to_string(s.level);
        }
        auto labels = j.at("simples").get<std::vector<std::string>>();
        auto dual = j.at("dual").get<std::vector<Index>>();
        if (data.name == "external") data.name = "external[" + std::to_string(labels.size()) + "]";
        data.ring = FusionRing(std::move(labels), 0, std::move(dual));
        for (const auto& q : j.at("fusion")) {
            if (!q.is_array() || q.size() != 4) throw InputError("fusion entries must be [a, b, c, N]");
            const auto n = q[3].get<std::int64_t>();
            if (n <= 0) throw InputError("fusion multiplicities must be positive");
            data.ring.add(q[0].get<Index>(), q[1].get<Index>(), q[2].get<Index>(), n);
        }
        for (const auto& t : j.at("twists")) {
            if (!t.is_array() || t.size() != 2) throw InputError("twists must be [num, den] pairs");
            data.twist.emplace_back(t[0].get<std::int64_t>(), t[1].get<std::int64_t>());
        }
        data.qdim = j.at("qdims").get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed category file: ") + e.what());
    }
    const AxiomReport axioms = verify_axioms(data.ring);
    if (!axioms) throw InputError("fusion ring fails its axioms: " + axioms.violation);
    try {
        validate(data);
    } catch (const MathError& e) {
        throw InputError(std::string("invalid category data: ") + e.what());
    }
    return data;
}

inline ModularCategoryData parse_category(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("category file is not valid JSON: ") + e.what());
    }
    return from_json(j);
}

inline ModularCategoryData load_category(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_category(buf.str());
}

inline void save_category(const ModularCategoryData& data, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    out << serialize(data);
    if (!out) throw InputError("write failed for " + path.string());
}

} // namespace scae
