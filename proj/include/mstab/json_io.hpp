#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mstab/chamber.hpp"
#include "mstab/movcurve.hpp"
#include "mstab/picard.hpp"

namespace mstab {

using ordered_json = nlohmann::ordered_json;

// {"d": 4, "H": "3/2", "Delta": {"1": "-1/2", "2": "-1"}}
inline ordered_json to_json(const DivisorClass& dc) {
    ordered_json j;
    j["d"] = dc.d;
    j["H"] = to_string(dc.h);
    ordered_json deltas = ordered_json::object();
    for (const auto& [k, v] : dc.delta) deltas[std::to_string(k)] = to_string(v);
    j["Delta"] = deltas;
    return j;
}

inline DivisorClass divisor_from_json(const ordered_json& j) {
    DivisorClass dc(j.at("d").get<int>());
    dc.h = rat_from_string(j.at("H").get<std::string>());
    for (const auto& [key, val] : j.at("Delta").items()) {
        const int k = std::stoi(key);
        if (!dc.delta.count(k)) throw parse_error("Delta index out of range: " + key);
        dc.delta[k] = rat_from_string(val.get<std::string>());
    }
    return dc;
}

inline ordered_json to_json(const CurveClass& c) {
    ordered_json j;
    j["name"] = c.name;
    j["d"] = c.d;
    j["H"] = to_string(c.dot_h);
    ordered_json deltas = ordered_json::object();
    for (const auto& [k, v] : c.dot_delta) deltas[std::to_string(k)] = to_string(v);
    j["Delta"] = deltas;
    return j;
}

inline CurveClass curve_from_json(const ordered_json& j) {
    CurveClass c(j.at("d").get<int>(), j.at("name").get<std::string>());
    c.dot_h = rat_from_string(j.at("H").get<std::string>());
    for (const auto& [key, val] : j.at("Delta").items()) {
        const int k = std::stoi(key);
        if (!c.dot_delta.count(k)) throw parse_error("Delta index out of range: " + key);
        c.dot_delta[k] = rat_from_string(val.get<std::string>());
    }
    return c;
}

// {"chamber": string|null, "delta22": "...", "ddeg": "...", "delta13": "...", "moving": bool}
inline ordered_json to_json(const BaseLocusReport& r) {
    ordered_json j;
    if (r.chamber) j["chamber"] = *r.chamber;
    else j["chamber"] = nullptr;
    j["delta22"] = to_string(r.contains_delta22);
    j["ddeg"] = to_string(r.contains_ddeg);
    j["delta13"] = to_string(r.contains_delta13);
    j["moving"] = r.moving_cone_member;
    return j;
}

inline ordered_json to_json(const MovingCurveReport& r) {
    ordered_json j;
    j["kernel_dim"] = r.kernel_dim;
    j["rank"] = r.rank;
    j["pass"] = r.pass;
    j["retries_used"] = r.retries_used;
    j["seed"] = r.seed;
    return j;
}

inline FatPointConfig movcheck_config_from_json(const ordered_json& j) {
    FatPointConfig cfg;
    if (j.contains("preset")) {
        const auto name = j.at("preset").get<std::string>();
        if (name == "c3") cfg = preset_c3();
        else if (name == "c2") cfg = preset_c2();
        else throw parse_error("unknown movcheck preset '" + name + "'");
    }
    if (j.contains("a")) cfg.a = j.at("a").get<int>();
    if (j.contains("b")) cfg.b = j.at("b").get<int>();
    if (j.contains("p")) cfg.p = j.at("p").get<std::int64_t>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("retries")) cfg.retries = j.at("retries").get<int>();
    if (j.contains("expected_kernel_dim"))
        cfg.expected_kernel_dim = j.at("expected_kernel_dim").get<int>();
    if (j.contains("expected_rank")) cfg.expected_rank = j.at("expected_rank").get<int>();
    if (j.contains("points")) {
        const auto& pts = j.at("points");
        if (pts.is_string()) {
            // "random:N:m"
            const auto s = pts.get<std::string>();
            if (s.rfind("random:", 0) != 0) throw parse_error("points must be a list or 'random:N:m'");
            const auto rest = s.substr(7);
            const auto colon = rest.find(':');
            cfg.random_points = std::stoi(rest.substr(0, colon));
            cfg.random_mult = colon == std::string::npos ? 2 : std::stoi(rest.substr(colon + 1));
            cfg.points.clear();
        } else {
            cfg.points.clear();
            for (const auto& pj : pts) {
                FatPoint pt;
                pt.x = pj.at("x").get<std::int64_t>();
                pt.y = pj.at("y").get<std::int64_t>();
                pt.mult = pj.value("m", 2);
                cfg.points.push_back(pt);
            }
        }
    }
    if (j.contains("deformation")) {
        cfg.deformation.clear();
        for (const auto& dj : j.at("deformation"))
            cfg.deformation.emplace_back(dj.at(0).get<std::int64_t>(),
                                         dj.at(1).get<std::int64_t>());
    }
    return cfg;
}

/// Labeled exact-valued table with a provenance tag per row; emission is
/// byte-stable for a fixed configuration.
struct GoldenTable {
    std::string name;
    struct Row {
        std::string label;
        std::string value; // exact "p/q" or integer text
        std::string provenance;
    };
    std::vector<Row> rows;

    ordered_json to_json() const {
        ordered_json j;
        j["name"] = name;
        ordered_json rs = ordered_json::array();
        for (const auto& r : rows)
            rs.push_back({{"label", r.label}, {"value", r.value}, {"provenance", r.provenance}});
        j["rows"] = rs;
        return j;
    }

    std::string to_markdown() const {
        std::string out = "| label | value | provenance |\n|---|---|---|\n";
        for (const auto& r : rows)
            out += "| " + r.label + " | " + r.value + " | " + r.provenance + " |\n";
        return out;
    }

    std::string to_csv() const {
        std::string out = "label,value,provenance\n";
        for (const auto& r : rows) out += r.label + "," + r.value + "," + r.provenance + "\n";
        return out;
    }

    std::string to_plain() const {
        std::string out;
        for (const auto& r : rows)
            out += r.label + " = " + r.value + "  [" + r.provenance + "]\n";
        return out;
    }
};

} // namespace mstab
