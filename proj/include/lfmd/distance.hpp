#pragma once

#include <algorithm>
#include <queue>
#include <vector>

#include "lfmd/graph.hpp"

namespace lfmd {

/// All-pairs unweighted shortest-path distances. Unreachable pairs hold the
/// sentinel kUnreachable, which compares equal only to itself.
class DistanceMatrix {
public:
    static constexpr int kUnreachable = -1;

    explicit DistanceMatrix(int order) : order_(order), d_(static_cast<std::size_t>(order) * order, kUnreachable) {}

    int order() const { return order_; }
    int at(int i, int j) const { return d_[static_cast<std::size_t>(i) * order_ + j]; }
    void set(int i, int j, int v) { d_[static_cast<std::size_t>(i) * order_ + j] = v; }

private:
    int order_;
    std::vector<int> d_;
};

inline DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.order();
    DistanceMatrix dm(n);
    std::vector<int> dist(n);
    std::queue<int> q;
    for (int src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), DistanceMatrix::kUnreachable);
        dist[src] = 0;
        q.push(src);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u))
                if (dist[v] == DistanceMatrix::kUnreachable) {
                    dist[v] = dist[u] + 1;
                    q.push(v);
                }
        }
        for (int j = 0; j < n; ++j) dm.set(src, j, dist[j]);
    }
    return dm;
}

struct Bipartition {
    bool bipartite = false;
    std::vector<int> side_a;  // labels, sorted
    std::vector<int> side_b;
};

/// Component id per vertex index; components numbered by lowest contained index.
inline std::vector<int> component_ids(const Graph& g) {
    const int n = g.order();
    std::vector<int> comp(n, -1);
    int next = 0;
    std::queue<int> q;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u))
                if (comp[v] == -1) {
                    comp[v] = next;
                    q.push(v);
                }
        }
        ++next;
    }
    return comp;
}

inline bool is_connected(const Graph& g) {
    for (int c : component_ids(g))
        if (c != 0) return false;
    return true;
}

/// Two-coloring test. When bipartite, the partition puts the lowest-labeled
/// vertex of each component in side A.
inline Bipartition is_bipartite(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(n, -1);
    std::queue<int> q;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;  // vertex indices follow label order, so s is the lowest label
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    q.push(v);
                } else if (color[v] == color[u]) {
                    return {};
                }
            }
        }
    }
    Bipartition p;
    p.bipartite = true;
    for (int i = 0; i < n; ++i) (color[i] == 0 ? p.side_a : p.side_b).push_back(g.label(i));
    return p;
}

}  // namespace lfmd
