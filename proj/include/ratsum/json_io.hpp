#pragma once

/**
 * @file json_io.hpp
 * @brief JSON persistence for certificates, witnesses, and registries.
 *
 * Error taxonomy on load, in order of detection:
 *   parse_error        - file unreadable or not JSON
 *   schema_error       - JSON that does not match the expected shape
 *   verification_error - well-formed data whose mathematics fails recheck
 * Rationals travel as strings ("p" or "p/q"); serialization is canonical
 * (sorted keys, reduced rationals), so save/load round-trips are exact and
 * byte-stable.
 */

#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "certificate.hpp"
#include "errors.hpp"
#include "registry.hpp"
#include "witness.hpp"

namespace ratsum {

namespace detail {

using nlohmann::json;

inline json parse_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ratsum::parse_error("cannot open " + path);
    try {
        return json::parse(f);
    } catch (const json::parse_error& e) {
        throw ratsum::parse_error("invalid JSON in " + path + ": " + e.what());
    }
}

inline const json& get_field(const json& j, const char* key, const char* ctx) {
    if (!j.is_object() || !j.contains(key))
        throw schema_error(std::string(ctx) + ": missing field '" + key + "'");
    return j.at(key);
}

inline long long get_int(const json& j, const char* key, const char* ctx) {
    const json& v = get_field(j, key, ctx);
    if (!v.is_number_integer())
        throw schema_error(std::string(ctx) + ": field '" + key + "' must be an integer");
    return v.get<long long>();
}

inline std::string get_str(const json& j, const char* key, const char* ctx) {
    const json& v = get_field(j, key, ctx);
    if (!v.is_string())
        throw schema_error(std::string(ctx) + ": field '" + key + "' must be a string");
    return v.get<std::string>();
}

inline Rat get_rat(const json& j, const char* key, const char* ctx) {
    try {
        return Rat::parse(get_str(j, key, ctx));
    } catch (const std::invalid_argument& e) {
        throw schema_error(std::string(ctx) + ": " + e.what());
    }
}

inline const char* source_tag(CubicSource s) {
    switch (s) {
        case CubicSource::family_f1: return "family_f1";
        case CubicSource::family_f2: return "family_f2";
        case CubicSource::search: return "search";
        case CubicSource::registry: return "registry";
    }
    return "registry";
}

inline CubicSource source_from_tag(const std::string& s, const char* ctx) {
    if (s == "family_f1") return CubicSource::family_f1;
    if (s == "family_f2") return CubicSource::family_f2;
    if (s == "search") return CubicSource::search;
    if (s == "registry") return CubicSource::registry;
    throw schema_error(std::string(ctx) + ": unknown provenance source '" + s + "'");
}

inline json provenance_to_json(const CubicProvenance& p) {
    json out{{"source", source_tag(p.source)}};
    if (p.param >= 0) out["param"] = p.param;
    return out;
}

inline CubicProvenance provenance_from_json(const json& j, const char* ctx) {
    CubicProvenance p;
    p.source = source_from_tag(get_str(j, "source", ctx), ctx);
    p.param = j.contains("param") ? get_int(j, "param", ctx) : -1;
    return p;
}

inline json cubic_solution_to_json(const CubicSolution& s) {
    return {{"m", s.m.str()},
            {"x", s.x.str()},
            {"y", s.y.str()},
            {"z", s.z.str()},
            {"provenance", provenance_to_json(s.provenance)}};
}

inline CubicSolution cubic_solution_from_json(const json& j, const char* ctx) {
    CubicSolution s;
    s.m = get_rat(j, "m", ctx);
    s.x = get_rat(j, "x", ctx);
    s.y = get_rat(j, "y", ctx);
    s.z = get_rat(j, "z", ctx);
    s.provenance = provenance_from_json(get_field(j, "provenance", ctx), ctx);
    return s;
}

inline std::vector<long long> get_int_array(const json& j, const char* key, const char* ctx) {
    const json& v = get_field(j, key, ctx);
    if (!v.is_array() || v.empty())
        throw schema_error(std::string(ctx) + ": field '" + key + "' must be a nonempty array");
    std::vector<long long> out;
    out.reserve(v.size());
    for (const json& e : v) {
        if (!e.is_number_integer())
            throw schema_error(std::string(ctx) + ": '" + key + "' entries must be integers");
        out.push_back(e.get<long long>());
    }
    return out;
}

inline CycleTuple cycle_from_json(const json& j, const char* ctx) {
    CycleTuple t;
    t.n = get_int(j, "n", ctx);
    t.b = get_int_array(j, "b", ctx);
    t.k = static_cast<int>(t.b.size());
    return t;
}

inline json block_to_json(const Block& b);

struct BlockToJson {
    json operator()(const OnesBlock& o) const { return {{"kind", "ones"}, {"count", o.count}}; }
    json operator()(const PaperQuadBlock&) const { return {{"kind", "paper_quad"}}; }
    json operator()(const CubicTripleBlock& c) const {
        json out = cubic_solution_to_json(c.solution);
        out["kind"] = "cubic_triple";
        out["m"] = c.block_sum.str(); // block sum and solution m coincide by invariant
        return out;
    }
    json operator()(const CycleBlock& c) const {
        return {{"kind", "cycle"}, {"n", c.tuple.n}, {"b", c.tuple.b}};
    }
    json operator()(const ComposeBlock& c) const {
        json children = json::array();
        for (const Block& child : c.children) children.push_back(block_to_json(child));
        return {{"kind", "compose"}, {"children", std::move(children)}};
    }
};

inline json block_to_json(const Block& b) { return std::visit(BlockToJson{}, b.node); }

inline Block block_from_json(const json& j) {
    const std::string kind = get_str(j, "kind", "certificate block");
    if (kind == "ones") return make_ones(get_int(j, "count", "ones block"));
    if (kind == "paper_quad") return make_paper_quad();
    if (kind == "cubic_triple") {
        CubicSolution s = cubic_solution_from_json(j, "cubic_triple block");
        return Block{CubicTripleBlock{s.m, std::move(s)}};
    }
    if (kind == "cycle") return make_cycle(cycle_from_json(j, "cycle block"));
    if (kind == "compose") {
        const json& ch = get_field(j, "children", "compose block");
        if (!ch.is_array()) throw schema_error("compose block: 'children' must be an array");
        std::vector<Block> children;
        children.reserve(ch.size());
        for (const json& c : ch) children.push_back(block_from_json(c));
        return make_compose(std::move(children));
    }
    throw schema_error("certificate block: unknown kind '" + kind + "'");
}

} // namespace detail

inline nlohmann::json certificate_to_json(const Certificate& c) {
    return detail::block_to_json(c.root);
}

inline Certificate certificate_from_json(const nlohmann::json& j) {
    return Certificate{detail::block_from_json(j)};
}

/// Compact one-line canonical form, used by the CLI.
inline std::string certificate_to_string(const Certificate& c) {
    return certificate_to_json(c).dump();
}

inline nlohmann::json witness_to_json(const Witness& w) {
    nlohmann::json values = nlohmann::json::array();
    for (const Rat& v : w.values) values.push_back(v.str());
    return {{"n", w.n}, {"m", w.m.str()}, {"values", std::move(values)}};
}

/// Writes witness plus certificate as one pretty-printed JSON document.
inline void save_certificate(const Witness& w, const Certificate& c, const std::string& path) {
    nlohmann::json doc = witness_to_json(w);
    doc["format"] = "ratsum-witness";
    doc["version"] = 1;
    doc["certificate"] = certificate_to_json(c);
    std::ofstream f(path, std::ios::trunc);
    if (!f) throw std::runtime_error("save_certificate: cannot write " + path);
    f << doc.dump(2) << "\n";
}

/// Loads, schema-checks, re-expands the certificate, and requires the stored
/// witness to match the expansion exactly.
inline std::pair<Witness, Certificate> load_certificate(const std::string& path) {
    const detail::json doc = detail::parse_json_file(path);
    if (!doc.is_object()) throw schema_error("witness file: top level must be an object");
    if (detail::get_str(doc, "format", "witness file") != "ratsum-witness")
        throw schema_error("witness file: wrong format tag");
    if (detail::get_int(doc, "version", "witness file") != 1)
        throw schema_error("witness file: unsupported version");

    Witness stored;
    stored.n = detail::get_int(doc, "n", "witness file");
    stored.m = detail::get_rat(doc, "m", "witness file");
    const detail::json& vals = detail::get_field(doc, "values", "witness file");
    if (!vals.is_array()) throw schema_error("witness file: 'values' must be an array");
    for (const detail::json& v : vals) {
        if (!v.is_string()) throw schema_error("witness file: values must be rational strings");
        try {
            stored.values.push_back(Rat::parse(v.get<std::string>()));
        } catch (const std::invalid_argument& e) {
            throw schema_error(std::string("witness file: ") + e.what());
        }
    }
    Certificate cert = certificate_from_json(detail::get_field(doc, "certificate", "witness file"));

    Witness expanded;
    try {
        expanded = expand_certificate(cert);
    } catch (const invalid_block_error& e) {
        throw verification_error(std::string("certificate failed re-verification: ") + e.what());
    }
    if (expanded.n != stored.n || expanded.m != stored.m || expanded.values != stored.values)
        throw verification_error("stored witness does not match its certificate expansion");
    return {std::move(stored), std::move(cert)};
}

inline nlohmann::json registry_to_json(const Registry& r) {
    using detail::json;
    json cubic = json::array();
    for (const auto& [m, s] : r.cubic) {
        json e = detail::cubic_solution_to_json(s);
        e["key"] = m;
        cubic.push_back(std::move(e));
    }
    json table1 = json::array();
    for (const auto& [m, row] : r.table1) {
        json blocks = json::array();
        for (const auto& [s, c] : row.blocks) blocks.push_back(json::array({s, c}));
        table1.push_back(json{{"m", m}, {"blocks", std::move(blocks)}});
    }
    json table2 = json::array();
    for (const auto& [n, t] : r.table2) table2.push_back(json{{"n", n}, {"b", t.b}});
    json doc{{"format", "ratsum-registry"},
             {"version", r.version},
             {"cubic", std::move(cubic)},
             {"table1", std::move(table1)},
             {"table2", std::move(table2)}};
    if (r.fallback30) doc["fallback30"] = json{{"n", r.fallback30->n}, {"b", r.fallback30->b}};
    return doc;
}

inline Registry registry_from_json(const nlohmann::json& doc) {
    using detail::json;
    if (!doc.is_object()) throw schema_error("registry file: top level must be an object");
    if (detail::get_str(doc, "format", "registry file") != "ratsum-registry")
        throw schema_error("registry file: wrong format tag");
    Registry r;
    r.version = detail::get_str(doc, "version", "registry file");

    const json& cubic = detail::get_field(doc, "cubic", "registry file");
    if (!cubic.is_array()) throw schema_error("registry file: 'cubic' must be an array");
    for (const json& e : cubic) {
        const long long key = detail::get_int(e, "key", "registry cubic entry");
        r.cubic.emplace(key, detail::cubic_solution_from_json(e, "registry cubic entry"));
    }

    const json& t1 = detail::get_field(doc, "table1", "registry file");
    if (!t1.is_array()) throw schema_error("registry file: 'table1' must be an array");
    for (const json& e : t1) {
        Table1Row row;
        row.m = detail::get_int(e, "m", "table1 row");
        const json& blocks = detail::get_field(e, "blocks", "table1 row");
        if (!blocks.is_array()) throw schema_error("table1 row: 'blocks' must be an array");
        for (const json& b : blocks) {
            if (!b.is_array() || b.size() != 2 || !b[0].is_number_integer() ||
                !b[1].is_number_integer())
                throw schema_error("table1 row: blocks must be [sum, count] integer pairs");
            row.blocks.emplace_back(b[0].get<long long>(), b[1].get<long long>());
        }
        r.table1.emplace(row.m, std::move(row));
    }

    const json& t2 = detail::get_field(doc, "table2", "registry file");
    if (!t2.is_array()) throw schema_error("registry file: 'table2' must be an array");
    for (const json& e : t2) {
        CycleTuple t = detail::cycle_from_json(e, "table2 row");
        r.table2.emplace(t.n, std::move(t));
    }

    if (doc.contains("fallback30"))
        r.fallback30 = detail::cycle_from_json(doc.at("fallback30"), "fallback30");
    return r;
}

inline void save_registry(const Registry& r, const std::string& path) {
    std::ofstream f(path, std::ios::trunc);
    if (!f) throw std::runtime_error("save_registry: cannot write " + path);
    f << registry_to_json(r).dump(2) << "\n";
}

/// Parse, schema-check, then verify_registry before handing the data out.
inline Registry load_registry(const std::string& path) {
    Registry r = registry_from_json(detail::parse_json_file(path));
    verify_registry(r);
    return r;
}

} // namespace ratsum
