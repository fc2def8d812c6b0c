#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lfmd/distance.hpp"
#include "lfmd/graph.hpp"

namespace lfmd {

/// Vertex indices x with d(x,i) != d(x,j). The unreachable sentinel compares
/// equal to itself and unequal to every finite distance.
inline std::vector<int> resolving_indices(const DistanceMatrix& d, int i, int j) {
    std::vector<int> out;
    for (int x = 0; x < d.order(); ++x)
        if (d.at(x, i) != d.at(x, j)) out.push_back(x);
    return out;
}

inline std::vector<int> indices_to_labels(const Graph& g, const std::vector<int>& idx) {
    std::vector<int> out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(g.label(i));
    return out;  // index order follows label order, so already sorted
}

/// R{u,v} for an edge uv, as a sorted label set.
inline std::vector<int> local_resolving_neighborhood(const Graph& g, const DistanceMatrix& d,
                                                     std::pair<int, int> edge_labels) {
    int i = g.index_of(edge_labels.first);
    int j = g.index_of(edge_labels.second);
    if (i < 0 || j < 0 || i == j || !g.has_edge(i, j))
        throw not_adjacent_error("vertices are not adjacent");
    return indices_to_labels(g, resolving_indices(d, i, j));
}

/// R{u,v} for an arbitrary distinct pair (adjacency not required).
inline std::vector<int> global_resolving_neighborhood(const Graph& g, const DistanceMatrix& d,
                                                      std::pair<int, int> pair_labels) {
    int i = g.index_of(pair_labels.first);
    int j = g.index_of(pair_labels.second);
    if (i < 0 || j < 0) throw invalid_pair_error("pair member is not a vertex");
    if (i == j) throw invalid_pair_error("pair members must be distinct");
    return indices_to_labels(g, resolving_indices(d, i, j));
}

struct EdgeRecord {
    int u, v;  // labels, u < v
    std::vector<int> neighborhood;
    std::size_t cardinality = 0;
};

struct ResolvingProfile {
    std::vector<EdgeRecord> records;
    std::size_t ell = 0;   // min |R{e}| over edges
    std::size_t beta = 0;  // max |R{e}| over edges
    std::vector<std::pair<int, int>> ell_witnesses;
    std::vector<std::pair<int, int>> beta_witnesses;
};

inline ResolvingProfile edge_resolving_profile(const Graph& g) {
    if (g.edge_count() == 0) throw no_edges_error("graph has no edges");
    DistanceMatrix d = all_pairs_distances(g);
    ResolvingProfile p;
    p.ell = static_cast<std::size_t>(g.order()) + 1;
    for (auto [i, j] : g.edges()) {
        EdgeRecord rec;
        rec.u = g.label(i);
        rec.v = g.label(j);
        rec.neighborhood = indices_to_labels(g, resolving_indices(d, i, j));
        rec.cardinality = rec.neighborhood.size();
        p.ell = std::min(p.ell, rec.cardinality);
        p.beta = std::max(p.beta, rec.cardinality);
        p.records.push_back(std::move(rec));
    }
    for (const auto& rec : p.records) {
        if (rec.cardinality == p.ell) p.ell_witnesses.push_back({rec.u, rec.v});
        if (rec.cardinality == p.beta) p.beta_witnesses.push_back({rec.u, rec.v});
    }
    return p;  // records follow canonical edge order, so witnesses are sorted
}

inline std::string profile_to_csv(const ResolvingProfile& p) {
    std::string out = "u,v,cardinality,neighborhood\n";
    for (const auto& rec : p.records) {
        out += std::to_string(rec.u) + "," + std::to_string(rec.v) + "," +
               std::to_string(rec.cardinality) + ",";
        for (std::size_t i = 0; i < rec.neighborhood.size(); ++i) {
            if (i) out += " ";
            out += std::to_string(rec.neighborhood[i]);
        }
        out += "\n";
    }
    return out;
}

inline nlohmann::json profile_to_json(const ResolvingProfile& p) {
    nlohmann::json j;
    auto records = nlohmann::json::array();
    for (const auto& rec : p.records)
        records.push_back({{"u", rec.u},
                           {"v", rec.v},
                           {"cardinality", rec.cardinality},
                           {"neighborhood", rec.neighborhood}});
    j["records"] = records;
    j["ell"] = p.ell;
    j["beta"] = p.beta;
    auto pairs = [](const std::vector<std::pair<int, int>>& w) {
        auto a = nlohmann::json::array();
        for (auto [u, v] : w) a.push_back({u, v});
        return a;
    };
    j["ell_witnesses"] = pairs(p.ell_witnesses);
    j["beta_witnesses"] = pairs(p.beta_witnesses);
    return j;
}

}  // namespace lfmd
