#pragma once

#include <json.hpp>

#include "msl/derive.hpp"
#include "msl/factors.hpp"
#include "msl/orbits.hpp"
#include "msl/text.hpp"

namespace msl {

// One object per line, segments in canonical order.
inline nlohmann::json ms_to_json(const multisegment& m) {
    nlohmann::json lines = nlohmann::json::array();
    for (const auto& line : m.lines()) {
        nlohmann::json segs = nlohmann::json::array();
        for (const auto& [s, k] : m.entries()) {
            if (s.line() != line) continue;
            segs.push_back({{"start", s.start()}, {"len", s.length()}, {"mult", k}});
        }
        lines.push_back({{"line", line.display_id()}, {"segments", segs}});
    }
    return lines;
}

inline nlohmann::json factor_to_json(const formal_l_factor& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : f.terms) {
        nlohmann::json unit = nlohmann::json::object();
        for (const auto& [token, exp] : t.unit.exponents) unit[token] = exp;
        terms.push_back({{"unit", unit}, {"q2exp", t.q2exp}});
    }
    return terms;
}

inline nlohmann::json eps_to_json(const eps_factor& e) {
    nlohmann::json tokens = nlohmann::json::object();
    for (const auto& [t, k] : e.tokens) tokens[t] = k;
    return tokens;
}

inline nlohmann::json gamma_to_json(const gamma_factor& g) {
    return {{"eps", eps_to_json(g.eps)},
            {"numerator", {{"factor", factor_to_json(g.l_dual)}, {"at", "q^-1 T^-1"}}},
            {"denominator", factor_to_json(g.l)}};
}

inline nlohmann::json summand_to_json(const deligne_summand& s) {
    nlohmann::json out = {{"kind", s.kind == deligne_summand::kind_t::nilp ? "nilp" : "cyc"},
                          {"size", s.size},
                          {"line", s.line.display_id()}};
    if (s.kind == deligne_summand::kind_t::nilp) out["twist"] = s.twist;
    return out;
}

inline nlohmann::json parameter_to_json(const deligne_parameter& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& s : p.summands) out.push_back(summand_to_json(s));
    return out;
}

inline deligne_parameter parameter_from_json(const nlohmann::json& j, const line_registry& lines) {
    deligne_parameter out;
    for (const auto& item : j) {
        std::string id = item.at("line").get<std::string>();
        bool dualized = false;
        if (!id.empty() && id.back() == '^') {
            dualized = true;
            id.pop_back();
        }
        auto it = lines.find(id);
        if (it == lines.end()) raise(errc::unknown_line, "unknown line id '" + id + "'");
        deligne_summand s;
        s.line = dualized ? it->second.dual() : it->second;
        s.size = item.at("size").get<int>();
        if (s.size < 1) raise(errc::invalid_argument, "summand size must be >= 1");
        const std::string kind = item.at("kind").get<std::string>();
        if (kind == "nilp") {
            s.kind = deligne_summand::kind_t::nilp;
            s.twist = s.line.canonical(item.at("twist").get<int>());
        } else if (kind == "cyc") {
            s.kind = deligne_summand::kind_t::cyc;
            s.twist = 0;
        } else {
            raise(errc::parse_error, "summand kind must be nilp or cyc");
        }
        out.add(std::move(s));
    }
    return out;
}

inline nlohmann::json rank_table_to_json(const rank_table& t) {
    nlohmann::json dims = nlohmann::json::object();
    for (const auto& [v, d] : t.dims) dims[std::to_string(v)] = d;
    nlohmann::json ranks = nlohmann::json::array();
    for (const auto& [key, r] : t.ranks)
        ranks.push_back({{"vertex", key.first}, {"k", key.second}, {"rank", r}});
    return {{"dims", dims}, {"ranks", ranks}};
}

inline std::string hasse_to_dot(const hasse_diagram& h) {
    std::string out = "digraph poset {\n";
    for (const auto& node : h.nodes) out += "  \"" + format_ms(node) + "\";\n";
    for (const auto& [lo, hi] : h.edges)
        out += "  \"" + format_ms(h.nodes[lo]) + "\" -> \"" + format_ms(h.nodes[hi]) + "\";\n";
    out += "}\n";
    return out;
}

inline nlohmann::json hasse_to_json(const hasse_diagram& h) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& node : h.nodes) nodes.push_back(format_ms(node));
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [lo, hi] : h.edges) edges.push_back({lo, hi});
    return {{"nodes", nodes}, {"edges", edges}};
}

}  // namespace msl
