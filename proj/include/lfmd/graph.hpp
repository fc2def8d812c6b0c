#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "lfmd/errors.hpp"

namespace lfmd {

/// Immutable simple undirected graph. Vertices carry distinct positive
/// integer labels (not necessarily contiguous); all adjacency is stored over
/// 0-based indices into the sorted label list.
class Graph {
public:
    Graph(std::vector<int> labels, const std::vector<std::pair<int, int>>& label_edges) {
        labels_ = std::move(labels);
        std::sort(labels_.begin(), labels_.end());
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (labels_[i] <= 0) throw invalid_input_error("vertex labels must be positive");
            if (i > 0 && labels_[i] == labels_[i - 1])
                throw invalid_input_error("duplicate vertex label");
        }
        adj_.resize(labels_.size());
        std::set<std::pair<int, int>> seen;
        for (auto [a, b] : label_edges) {
            int i = index_of(a);
            int j = index_of(b);
            if (i < 0 || j < 0) throw invalid_input_error("edge endpoint is not a vertex");
            if (i == j) throw invalid_input_error("self-loop");
            if (i > j) std::swap(i, j);
            seen.insert({i, j});
        }
        edges_.assign(seen.begin(), seen.end());
        for (auto [i, j] : edges_) {
            adj_[i].push_back(j);
            adj_[j].push_back(i);
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }

    int order() const { return static_cast<int>(labels_.size()); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<int>& labels() const { return labels_; }
    int label(int index) const { return labels_[index]; }

    /// Index of a label, or -1 when absent.
    int index_of(int label) const {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
        if (it == labels_.end() || *it != label) return -1;
        return static_cast<int>(it - labels_.begin());
    }

    const std::vector<int>& neighbors(int index) const { return adj_[index]; }
    int degree(int index) const { return static_cast<int>(adj_[index].size()); }

    /// Canonical edge list: index pairs (i, j) with i < j, lexicographic.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_edge(int i, int j) const {
        if (i > j) std::swap(i, j);
        return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(i, j));
    }

private:
    std::vector<int> labels_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
};

inline int gcd_int(int a, int b) { return std::gcd(a, b); }

/// T_n<S>: vertices 1..n, edge {p,q} iff |p-q| in S.
inline Graph build_toeplitz(int n, const std::set<int>& diffs) {
    if (n < 2) throw invalid_family_error("Toeplitz graph needs n >= 2");
    if (diffs.empty()) throw invalid_family_error("difference set must be nonempty");
    for (int s : diffs)
        if (s < 1 || s > n - 1)
            throw invalid_family_error("difference out of range 1..n-1");
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    std::vector<std::pair<int, int>> edges;
    for (int s : diffs)
        for (int p = 1; p + s <= n; ++p) edges.push_back({p, p + s});
    return Graph(std::move(labels), edges);
}

/// G(Z_n): vertices are the nonzero zero divisors of Z_n, edge {u,v} iff
/// u*v = 0 (mod n).
inline Graph build_zero_divisor(int n) {
    if (n < 2) throw invalid_input_error("modulus must be >= 2");
    std::vector<int> labels;
    for (int x = 1; x < n; ++x)
        if (gcd_int(x, n) > 1) labels.push_back(x);
    if (labels.empty()) throw empty_graph_error("Z_n has no zero divisors (n is prime)");
    std::vector<std::pair<int, int>> edges;
    for (std::size_t a = 0; a < labels.size(); ++a)
        for (std::size_t b = a + 1; b < labels.size(); ++b)
            if (static_cast<long long>(labels[a]) * labels[b] % n == 0)
                edges.push_back({labels[a], labels[b]});
    return Graph(std::move(labels), edges);
}

/// G(Z*_n): vertices 1..n-1, edge {u,v} iff u*v mod n is not a unit of Z_n
/// (a zero product counts as non-unit).
inline Graph build_zero_divisor_star(int n) {
    if (n < 3) throw invalid_input_error("modulus must be >= 3");
    std::vector<int> labels(n - 1);
    std::iota(labels.begin(), labels.end(), 1);
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int prod = static_cast<int>(static_cast<long long>(u) * v % n);
            if (prod == 0 || gcd_int(prod, n) > 1) edges.push_back({u, v});
        }
    return Graph(std::move(labels), edges);
}

}  // namespace lfmd
