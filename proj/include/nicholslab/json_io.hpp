#ifndef NICHOLSLAB_JSON_IO_HPP
#define NICHOLSLAB_JSON_IO_HPP

// JSON (de)serialization on top of nlohmann::json.

#include "braidorbits.hpp"
#include "enumerate.hpp"
#include "envgroup.hpp"
#include "rack.hpp"
#include "verify.hpp"
#include "ydbraiding.hpp"

#include <json.hpp>

#include <fstream>
#include <string>

namespace nicholslab {

using json = nlohmann::ordered_json;

/// {"size": d, "table": [[...]]}, 1-based entries.
inline Rack rack_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("table")) throw std::invalid_argument("rack JSON needs a \"table\" field");
    const auto table = j.at("table").get<Rack::Table>();
    if (j.contains("size") && j.at("size").get<std::size_t>() != table.size())
        throw std::invalid_argument("rack JSON: \"size\" does not match the table");
    return Rack::from_table(table);
}

inline json rack_to_json(const Rack& r) { return json{{"size", r.size()}, {"table", r.one_based_table()}}; }

inline Rack load_rack_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open rack file " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("rack file " + path + " is not valid JSON: " + e.what());
    }
    return rack_from_json(j);
}

/// "x1=-1,x4=1" or {"x1": -1, "x4": 1}
inline CharacterSpec character_from_text(const std::string& text)
{
    const auto first = text.find_first_not_of(" \t");
    if (first != std::string::npos && text[first] == '{') {
        CharacterSpec s;
        for (const auto& [k, v] : json::parse(text).items()) s.values.emplace_back(k, v.get<long>());
        return s;
    }
    return CharacterSpec::parse(text);
}

inline json character_to_json(const CharacterSpec& s)
{
    json j = json::object();
    for (const auto& [k, v] : s.values) j[k] = v;
    return j;
}

inline json profile_to_json(const OrbitProfile& p)
{
    json k = json::object(), l = json::object();
    for (const auto& [n, v] : p.k) k[std::to_string(n)] = v;
    for (const auto& [n, v] : p.l) l[std::to_string(n)] = v;
    json j{{"d", p.d}, {"k", k}, {"l", l}, {"S", rational_string(p.S)}, {"condition", p.condition_holds}};
    if (p.advisory) j["advisory"] = "decomposable input: k_n counted from element 1 only";
    return j;
}

inline json properties_to_json(const RackProperties& p)
{
    json j{{"quandle", p.quandle},
           {"crossed_set", p.crossed_set},
           {"involutive", p.involutive},
           {"faithful", p.faithful},
           {"indecomposable", p.indecomposable}};
    if (p.injective) j["injective"] = *p.injective;
    else j["injective"] = nullptr;
    return j;
}

inline json nichols_to_json(const NicholsSummary& s)
{
    json j{{"rack", s.rack},
           {"character", character_to_json(CharacterSpec::parse(s.character))},
           {"field", s.field},
           {"gauge", gauge_name(s.gauge)}};
    if (!s.dims.empty()) {
        j["dims"] = s.dims;
        j["finite"] = s.finite;
        j["truncated"] = !s.finite;
        j["total"] = s.total;
        if (s.factorization) j["factorization"] = *s.factorization;
        else j["factorization"] = nullptr;
        if (s.finite) j["palindromic"] = s.palindromic;
    }
    if (s.integral_monomial) {
        std::vector<std::uint32_t> chain;
        for (auto a : s.witness_chain) chain.push_back(a + 1);
        j["integral"] = {{"monomial", *s.integral_monomial},
                         {"is_integral", s.integral},
                         {"witness_chain", chain},
                         {"chain_value", s.chain_value}};
    }
    if (!s.symmetrizer.empty()) {
        json sym = json::array();
        for (const auto& [n, r] : s.symmetrizer) {
            json e{{"degree", n}, {"rank", r}};
            if (n < s.dims.size()) e["engine"] = s.dims[n];
            else if (!s.dims.empty()) e["engine"] = 0;
            sym.push_back(e);
        }
        j["symmetrizer"] = sym;
    }
    return j;
}

inline json report_to_json(const VerificationReport& rep, bool timings)
{
    json claims = json::array();
    for (const auto& c : rep.claims) {
        json j{{"criterion", c.criterion}, {"claim", c.id},          {"expected", c.expected},
               {"computed", c.computed},   {"status", status_name(c.status)}};
        if (!c.note.empty()) j["note"] = c.note;
        if (timings) j["runtime_seconds"] = c.runtime;
        claims.push_back(j);
    }
    json crit = json::array();
    for (int k = 1; k <= 11; ++k) {
        if (rep.of(k).empty()) continue;
        crit.push_back({{"criterion", k}, {"title", criterion_titles()[static_cast<std::size_t>(k)]},
                        {"status", status_name(rep.criterion_status(k))}});
    }
    return json{{"scale", scale_name(rep.scale)}, {"ok", rep.ok()}, {"criteria", crit}, {"claims", claims}};
}

}  // namespace nicholslab

#endif  // NICHOLSLAB_JSON_IO_HPP
