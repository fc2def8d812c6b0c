#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "lfmd/graph.hpp"

namespace lfmd {

inline nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["order"] = g.order();
    j["labels"] = g.labels();
    auto edges = nlohmann::json::array();
    for (auto [i, k] : g.edges()) edges.push_back({g.label(i), g.label(k)});
    j["edges"] = edges;
    return j;
}

/// Deterministic serialization: labels ascending, edges in canonical order.
/// Formats: json, dot, csv (edge list with header).
inline std::string export_graph(const Graph& g, std::string_view format) {
    if (format == "json") return graph_to_json(g).dump();
    if (format == "dot") {
        std::string out = "graph G {\n";
        for (int v : g.labels()) out += "  " + std::to_string(v) + ";\n";
        for (auto [i, k] : g.edges())
            out += "  " + std::to_string(g.label(i)) + " -- " + std::to_string(g.label(k)) + ";\n";
        out += "}\n";
        return out;
    }
    if (format == "csv") {
        std::string out = "u,v\n";
        for (auto [i, k] : g.edges())
            out += std::to_string(g.label(i)) + "," + std::to_string(g.label(k)) + "\n";
        return out;
    }
    throw unsupported_format_error("unsupported export format: " + std::string(format));
}

}  // namespace lfmd
