#pragma once

#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "lfmd/errors.hpp"
#include "lfmd/resolving.hpp"
#include "lfmd/simplex.hpp"

namespace lfmd {

struct Caps {
    int max_order = 200;
    int max_lp_rows = 5000;
    int ldim_cap = 20;

    static Caps from_env() {
        Caps c;
        auto read = [](const char* name, int& slot) {
            if (const char* v = std::getenv(name)) {
                int parsed = std::atoi(v);
                if (parsed > 0) slot = parsed;
            }
        };
        read("LFMD_MAX_ORDER", c.max_order);
        read("LFMD_MAX_LP_ROWS", c.max_lp_rows);
        read("LFMD_LDIM_CAP", c.ldim_cap);
        return c;
    }
};

namespace detail {

// Deduplicated constraint rows, deterministic (lexicographic) order.
inline std::vector<std::vector<int>> dedup(std::set<std::vector<int>>&& rows) {
    return {std::make_move_iterator(rows.begin()), std::make_move_iterator(rows.end())};
}

}  // namespace detail

/// One constraint per edge: the local resolving neighborhood must carry
/// total weight >= 1. Duplicate neighborhoods collapse to one row.
inline CoveringLp assemble_local_lp(const Graph& g, const DistanceMatrix& d) {
    CoveringLp lp;
    lp.num_vars = g.order();
    std::set<std::vector<int>> rows;
    for (auto [i, j] : g.edges()) rows.insert(resolving_indices(d, i, j));
    lp.rows = detail::dedup(std::move(rows));
    return lp;
}

/// Same covering LP over all distinct vertex pairs.
inline CoveringLp assemble_global_lp(const Graph& g, const DistanceMatrix& d) {
    CoveringLp lp;
    lp.num_vars = g.order();
    std::set<std::vector<int>> rows;
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j) rows.insert(resolving_indices(d, i, j));
    lp.rows = detail::dedup(std::move(rows));
    return lp;
}

/// Order is checked before any quadratic work; row count after assembly.
inline void check_order(const Graph& g, const Caps& caps) {
    if (g.order() > caps.max_order)
        throw capacity_error("graph order " + std::to_string(g.order()) + " exceeds cap " +
                             std::to_string(caps.max_order));
}

inline void check_caps(const Graph& g, const CoveringLp& lp, const Caps& caps) {
    check_order(g, caps);
    if (static_cast<int>(lp.rows.size()) > caps.max_lp_rows)
        throw capacity_error("LP has " + std::to_string(lp.rows.size()) + " rows, cap " +
                             std::to_string(caps.max_lp_rows));
}

/// Exact local fractional metric dimension. Edgeless graphs yield the EMPTY
/// status with value 0 (empty constraint set).
inline LpSolution solve_lfmd_exact(const Graph& g, const Caps& caps = {}) {
    check_order(g, caps);
    DistanceMatrix d = all_pairs_distances(g);
    CoveringLp lp = assemble_local_lp(g, d);
    check_caps(g, lp, caps);
    return solve_covering_lp(lp);
}

/// Exact fractional metric dimension (constraints over all distinct pairs).
inline LpSolution solve_fmd_exact(const Graph& g, const Caps& caps = {}) {
    if (g.order() < 2) throw invalid_input_error("fractional metric dimension needs order >= 2");
    check_order(g, caps);
    DistanceMatrix d = all_pairs_distances(g);
    CoveringLp lp = assemble_global_lp(g, d);
    check_caps(g, lp, caps);
    return solve_covering_lp(lp);
}

/// Minimum size of a vertex set W such that every edge {u,v} has some w in W
/// with d(w,u) != d(w,v). Exhaustive search by increasing cardinality.
inline int local_metric_dimension_integer(const Graph& g, int cap = 20) {
    if (g.order() > cap)
        throw capacity_error("order " + std::to_string(g.order()) +
                             " exceeds exhaustive-search cap " + std::to_string(cap));
    if (g.edge_count() == 0) return 0;
    DistanceMatrix d = all_pairs_distances(g);
    const int n = g.order();
    std::vector<std::uint32_t> edge_masks;
    for (auto [i, j] : g.edges()) {
        std::uint32_t mask = 0;
        for (int x : resolving_indices(d, i, j)) mask |= 1u << x;
        edge_masks.push_back(mask);
    }
    std::vector<int> pick;
    auto covers = [&](std::uint32_t w) {
        for (std::uint32_t m : edge_masks)
            if ((m & w) == 0) return false;
        return true;
    };
    // Lexicographic k-subset enumeration; k is tiny at desk scale.
    for (int k = 1; k <= n; ++k) {
        pick.assign(k, 0);
        for (int i = 0; i < k; ++i) pick[i] = i;
        while (true) {
            std::uint32_t w = 0;
            for (int i : pick) w |= 1u << i;
            if (covers(w)) return k;
            int pos = k - 1;
            while (pos >= 0 && pick[pos] == n - k + pos) --pos;
            if (pos < 0) break;
            ++pick[pos];
            for (int i = pos + 1; i < k; ++i) pick[i] = pick[i - 1] + 1;
        }
    }
    return n;
}

struct BoundReport {
    // The lower bounds hold only for connected graphs (isolated vertices
    // inflate n without ever entering a resolving neighborhood), so they are
    // absent when the graph is disconnected. The n/ell upper bound is
    // unconditional: the constant weighting 1/ell is always feasible.
    std::optional<Rational> lower_nt;     // n / beta
    Rational upper_ell;                   // n / ell
    std::optional<Rational> lower_lemma;  // n / (n - ldim + 1)
    std::optional<Rational> exact;
};

inline BoundReport generic_bounds(const Graph& g, bool with_integer_ldim = false,
                                  const Caps& caps = {}) {
    ResolvingProfile p = edge_resolving_profile(g);  // throws no_edges_error when edgeless
    BoundReport r;
    r.upper_ell = Rational(g.order(), static_cast<int>(p.ell));
    if (is_connected(g)) {
        r.lower_nt = Rational(g.order(), static_cast<int>(p.beta));
        if (with_integer_ldim) {
            int ldim = local_metric_dimension_integer(g, caps.ldim_cap);
            r.lower_lemma = Rational(g.order(), g.order() - ldim + 1);
        }
    }
    return r;
}

inline nlohmann::json solution_to_json(const Graph& g, const CoveringLp& lp,
                                       const LpSolution& s) {
    nlohmann::json j;
    j["status"] = s.status == LpStatus::Empty ? "EMPTY" : "OPTIMAL";
    j["value"] = to_fraction_string(s.value);
    nlohmann::json primal = nlohmann::json::object();
    for (int i = 0; i < static_cast<int>(s.primal.size()); ++i)
        primal[std::to_string(g.label(i))] = to_fraction_string(s.primal[i]);
    j["primal"] = primal;
    auto dual = nlohmann::json::array();
    for (std::size_t i = 0; i < s.dual.size(); ++i) {
        std::vector<int> labels;
        for (int v : lp.rows[i]) labels.push_back(g.label(v));
        dual.push_back({{"constraint", labels}, {"multiplier", to_fraction_string(s.dual[i])}});
    }
    j["dual"] = dual;
    auto bound = nlohmann::json::object();
    for (int i = 0; i < static_cast<int>(s.bound_dual.size()); ++i)
        if (s.bound_dual[i] != 0)
            bound[std::to_string(g.label(i))] = to_fraction_string(s.bound_dual[i]);
    j["bound_dual"] = bound;
    return j;
}

}  // namespace lfmd
