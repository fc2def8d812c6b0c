#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lfmd/distance.hpp"
#include "lfmd/families.hpp"
#include "lfmd/lfmd.hpp"
#include "lfmd/tables.hpp"

namespace lfmd {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string details;
};

namespace acceptance_detail {

struct Solved {
    CoveringLp lp;
    LpSolution sol;
};

inline Solved solve_local(const Graph& g, const Caps& caps = {}) {
    check_order(g, caps);
    DistanceMatrix d = all_pairs_distances(g);
    Solved s{assemble_local_lp(g, d), {}};
    check_caps(g, s.lp, caps);
    s.sol = solve_covering_lp(s.lp);
    return s;
}

inline Solved solve_global(const Graph& g, const Caps& caps = {}) {
    check_order(g, caps);
    DistanceMatrix d = all_pairs_distances(g);
    Solved s{assemble_global_lp(g, d), {}};
    check_caps(g, s.lp, caps);
    s.sol = solve_covering_lp(s.lp);
    return s;
}

// Criterion 1: T_16<1,4,8> worked-example profile and certified bounds.
inline CriterionResult criterion_1() {
    CriterionResult r{1, "T16<1,4,8> profile, generic bounds, certified optimum in [8/7, 2]", false, ""};
    Graph g = build_toeplitz(16, {1, 4, 8});
    ResolvingProfile p = edge_resolving_profile(g);
    BoundReport b = generic_bounds(g);
    Solved s = solve_local(g);
    bool cert = verify_certificate(s.lp, s.sol);
    bool ok = p.ell == 8 && p.beta == 14 && b.lower_nt == Rational(8, 7) && b.upper_ell == 2 &&
              cert && Rational(8, 7) <= s.sol.value && s.sol.value <= 2;
    r.passed = ok;
    r.details = "ell=" + std::to_string(p.ell) + " beta=" + std::to_string(p.beta) +
                " bounds=[" + to_fraction_string(b.lower_nt.value_or(0)) + ", " + to_fraction_string(b.upper_ell) +
                "] exact=" + to_fraction_string(s.sol.value) +
                (cert ? " (certificate verified)" : " (CERTIFICATE FAILED)");
    return r;
}

// Criterion 2: G(Z*_12) worked-example profile and certified bounds.
inline CriterionResult criterion_2() {
    CriterionResult r{2, "G(Z*_12) profile, generic bounds, certified optimum in [11/5, 11/2]", false, ""};
    Graph g = build_zero_divisor_star(12);
    ResolvingProfile p = edge_resolving_profile(g);
    BoundReport b = generic_bounds(g);
    Solved s = solve_local(g);
    bool cert = verify_certificate(s.lp, s.sol);
    bool ok = p.ell == 2 && p.beta == 5 && b.lower_nt == Rational(11, 5) &&
              b.upper_ell == Rational(11, 2) && cert && Rational(11, 5) <= s.sol.value &&
              s.sol.value <= Rational(11, 2);
    r.passed = ok;
    r.details = "ell=" + std::to_string(p.ell) + " beta=" + std::to_string(p.beta) +
                " bounds=[" + to_fraction_string(b.lower_nt.value_or(0)) + ", " + to_fraction_string(b.upper_ell) +
                "] exact=" + to_fraction_string(s.sol.value) +
                (cert ? " (certificate verified)" : " (CERTIFICATE FAILED)");
    return r;
}

// Criterion 3: connected bipartite family members have optimum exactly 1.
inline CriterionResult criterion_3() {
    CriterionResult r{3, "Bipartite family equalities: exact optimum 1", false, ""};
    std::vector<std::pair<std::string, Graph>> cases;
    cases.push_back({"G(Z_22)", build_zero_divisor(22)});
    cases.push_back({"G(Z_33)", build_zero_divisor(33)});
    for (int wp : {5, 7, 9, 11, 13})
        cases.push_back({"T_" + std::to_string(wp) + "<1," + std::to_string(wp - 2) + ">",
                         build_toeplitz(wp, {1, wp - 2})});
    for (int p : {5, 7, 11, 13})
        cases.push_back({"T_" + std::to_string(3 * p) + "<3," + std::to_string(p) + ">",
                         build_toeplitz(3 * p, {3, p})});
    bool ok = true;
    std::string bad;
    for (auto& [name, g] : cases) {
        Solved s = solve_local(g);
        if (!verify_certificate(s.lp, s.sol) || s.sol.value != 1) {
            ok = false;
            bad += " " + name + "=" + to_fraction_string(s.sol.value);
        }
    }
    r.passed = ok;
    r.details = ok ? std::to_string(cases.size()) + " instances, all exactly 1, certified"
                   : "mismatches:" + bad;
    return r;
}

// Criterion 4: G(Z_{p^k}) closed form (p^(k-1)-1)/2 checked by the LP.
inline CriterionResult criterion_4() {
    CriterionResult r{4, "G(Z_{p^k}) exact case vs certified optimum", false, ""};
    bool ok = true;
    std::string detail;
    for (auto [p, k] : std::vector<std::pair<int, int>>{{5, 2}, {7, 2}, {11, 2}, {5, 3}}) {
        FamilySpec spec = FamilySpec::zd_pk(p, k);
        Rational claimed = theorem_bounds(spec).lower;
        ComparisonRecord rec = compare_one(spec, Caps{});
        if (rec.verdict == Verdict::NOT_APPLICABLE) {
            detail += " (" + std::to_string(p) + "," + std::to_string(k) + ") skipped: " + rec.notes + ";";
            continue;
        }
        detail += " (" + std::to_string(p) + "," + std::to_string(k) + ") claimed " +
                  to_fraction_string(claimed) + " computed " + to_fraction_string(*rec.computed_exact);
        if (rec.verdict == Verdict::CONFIRMED) {
            detail += " EQUAL;";
        } else if (rec.annotated) {
            detail += " documented discrepancy (closed form holds only for k=2);";
        } else {
            detail += " MISMATCH;";
            ok = false;
        }
    }
    r.passed = ok;
    r.details = detail;
    return r;
}

// Criterion 5: interval confirmation sweeps; annotated violations are
// documented discrepancies and do not block.
inline CriterionResult criterion_5() {
    CriterionResult r{5, "Interval confirmation sweeps over all closed-form families", false, ""};
    struct Sweep {
        FamilyTag tag;
        int lo, hi;
    };
    std::vector<Sweep> sweeps = {
        {FamilyTag::TOEPLITZ_1_WM2, 4, 40},  {FamilyTag::TOEPLITZ_1_2_WM1, 8, 40},
        {FamilyTag::TOEPLITZ_POW2, 3, 5},    {FamilyTag::TOEPLITZ_2P, 3, 13},
        {FamilyTag::ZDSTAR_2K, 3, 5},        {FamilyTag::ZDSTAR_3K, 2, 3},
        {FamilyTag::ZDSTAR_P2, 3, 7},
    };
    bool ok = true;
    int confirmed = 0, annotated = 0;
    std::string bad;
    for (const auto& sw : sweeps) {
        auto recs = validate_family(sw.tag, sw.lo, sw.hi);
        for (const auto& rec : recs) {
            if (rec.verdict == Verdict::CONFIRMED) ++confirmed;
            if (rec.verdict == Verdict::VIOLATED) {
                if (rec.annotated) {
                    ++annotated;
                } else {
                    ok = false;
                    bad += " " + describe_spec(rec.spec);
                }
            }
        }
    }
    r.passed = ok;
    r.details = std::to_string(confirmed) + " confirmed, " + std::to_string(annotated) +
                " annotated documented discrepancies" + (ok ? "" : "; BLOCKING:" + bad);
    return r;
}

inline const std::vector<std::vector<std::string>>& expected_t2() {
    static const std::vector<std::vector<std::string>> rows = {
        {"8.", "1.14286", "2", "1.94118", "2", "1.4"},
        {"9.", "1.125", "2", "1.94737", "2", "1.39286"},
        {"10.", "1.11111", "2", "1.95238", "2", "1.3871"},
        {"11.", "1.1", "2", "1.95652", "2", "1.38235"},
        {"12.", "1.09091", "2", "1.96", "2", "1.37838"},
        {"13.", "1.08333", "2", "1.96296", "2", "1.375"},
        {"14.", "1.07692", "2", "1.96552", "2", "1.37209"},
        {"15.", "1.07143", "2", "1.96774", "2", "1.36957"},
        {"16.", "1.06667", "2", "1.9697", "2", "1.36735"},
        {"17.", "1.0625", "2", "1.97143", "2", "1.36538"},
        {"18.", "1.05882", "2", "1.97297", "2", "1.36364"},
        {"19.", "1.05556", "2", "1.97436", "2", "1.36207"},
        {"20.", "1.05263", "2", "1.97561", "2", "1.36066"},
    };
    return rows;
}

inline const std::vector<std::vector<std::string>>& expected_tt2() {
    static const std::vector<std::vector<std::string>> rows = {
        {"8.", "1.06667", "1.13333", "1.03125", "1", "1.02941"},
        {"9.", "1.05882", "1.11765", "1.02778", "1", "1.02632"},
        {"10.", "1.05263", "1.10526", "1.025", "1", "1.02381"},
        {"11.", "1.04762", "1.09524", "1.02273", "1", "1.02174"},
        {"12.", "1.04348", "1.08696", "1.02083", "1", "1.02"},
        {"13.", "1.04", "1.08", "1.01923", "1", "1.01852"},
        {"14.", "1.03704", "1.07407", "1.01786", "1", "1.01724"},
        {"15.", "1.03448", "1.06897", "1.01667", "1", "1.01613"},
        {"16.", "1.03226", "1.06452", "1.01563", "1", "1.01515"},
        {"17.", "1.0303", "1.06061", "1.01471", "1", "1.01429"},
        {"18.", "1.02857", "1.05714", "1.01389", "1", "1.01351"},
        {"19.", "1.02703", "1.05405", "1.01316", "1", "1.01282"},
        {"20.", "1.02564", "1.05128", "1.0125", "1", "1.0122"},
    };
    return rows;
}

inline const std::vector<std::vector<std::string>>& expected_t3() {
    static const std::vector<std::vector<std::string>> rows = {
        {"4.", "2.", "7.5", "40."},
        {"5.", "4.", "15.5", "121."},
        {"6.", "8.", "31.5", "364."},
        {"7.", "16.", "63.5", "1093."},
        {"8.", "32.", "127.5", "3280."},
        {"9.", "64.", "255.5", "9841."},
        {"10.", "128.", "511.5", "29,524."},
        {"11.", "256.", "1023.5", "88,573."},
        {"12.", "512.", "2047.5", "265,720."},
        {"13.", "1024.", "4095.5", "797,161."},
        {"14.", "2048.", "8191.5", "2.39148e6"},
        {"15.", "4096.", "16,383.5", "7.17445e6"},
        {"16.", "8192.", "32,767.5", "2.15234e7"},
        {"17.", "16,384.", "65,535.5", "6.45701e7"},
        {"18.", "32,768.", "131,072.", "1.9371e8"},
        {"19.", "65,536.", "262,144.", "5.81131e8"},
        {"20.", "131,072.", "524,288.", "1.74339e9"},
    };
    return rows;
}

inline const std::vector<std::vector<std::string>>& expected_t4() {
    static const std::vector<std::vector<std::string>> rows = {
        {"4.", "1.14286", "1.66667", "2.85714"},
        {"5.", "1.06667", "1.82353", "2.95122"},
        {"6.", "1.03226", "1.90909", "2.98361"},
        {"7.", "1.01587", "1.95385", "2.99452"},
        {"8.", "1.00787", "1.97674", "2.99817"},
        {"9.", "1.00392", "1.98833", "2.99939"},
        {"10.", "1.00196", "1.99415", "2.9998"},
        {"11.", "1.00098", "1.99707", "2.99993"},
        {"12.", "1.00049", "1.99854", "2.99998"},
        {"13.", "1.00024", "1.99927", "2.99999"},
        {"14.", "1.00012", "1.99963", "3."},
        {"15.", "1.00006", "1.99982", "3."},
        {"16.", "1.00003", "1.99991", "3."},
        {"17.", "1.00002", "1.99995", "3."},
        {"18.", "1.00001", "1.99998", "3."},
        {"19.", "1.", "1.99999", "3."},
        {"20.", "1.", "1.99999", "3."},
    };
    return rows;
}

// Criterion 6: table reproduction, digit for digit against frozen strings.
inline CriterionResult criterion_6() {
    CriterionResult r{6, "Table reproduction digit-for-digit (T2, TT2, T3, T4)", false, ""};
    struct Check {
        TableId id;
        const std::vector<std::vector<std::string>>& expected;
    };
    std::vector<Check> checks = {{TableId::T2, expected_t2()},
                                 {TableId::TT2, expected_tt2()},
                                 {TableId::T3, expected_t3()},
                                 {TableId::T4, expected_t4()}};
    bool ok = true;
    int cells = 0;
    std::string bad;
    for (const auto& c : checks) {
        Table t = reproduce_table(c.id);
        if (t.rows.size() != c.expected.size()) {
            ok = false;
            bad += " " + t.id + " row count";
            continue;
        }
        for (std::size_t i = 0; i < t.rows.size(); ++i)
            for (std::size_t j = 0; j < c.expected[i].size(); ++j) {
                ++cells;
                if (t.rows[i][j] != c.expected[i][j]) {
                    ok = false;
                    bad += " " + t.id + "[" + std::to_string(i) + "][" + std::to_string(j) +
                           "]=" + t.rows[i][j] + "!=" + c.expected[i][j];
                }
            }
        if (c.id == TableId::TT2 && t.notes.empty()) {
            ok = false;
            bad += " TT2 missing discrepancy note";
        }
    }
    r.passed = ok;
    r.details = ok ? std::to_string(cells) + " cells matched; TT2 discrepancy note attached"
                   : "mismatches:" + bad;
    return r;
}

// Criterion 7: property suite over 200 seeded random small graphs.
inline CriterionResult criterion_7() {
    CriterionResult r{7, "Property suite over 200 seeded random graphs (order <= 12)", false, ""};
    std::mt19937 rng(193707244u);
    bool ok = true;
    std::string bad;
    int with_edges = 0, edgeless = 0;
    auto fail = [&](const std::string& what, int i) {
        ok = false;
        bad += " [graph " + std::to_string(i) + "] " + what + ";";
    };
    static const int zd_pool[] = {4, 6, 8, 9, 10, 12, 14, 15, 16, 18, 20, 21, 22, 25, 27};
    for (int i = 0; i < 200; ++i) {
        Graph g = [&]() {
            switch (i % 3) {
                case 0: {  // random Toeplitz
                    int n = 2 + static_cast<int>(rng() % 11);
                    int m = 1 + static_cast<int>(rng() % 3);
                    std::set<int> diffs;
                    while (static_cast<int>(diffs.size()) < std::min(m, n - 1))
                        diffs.insert(1 + static_cast<int>(rng() % (n - 1)));
                    return build_toeplitz(n, diffs);
                }
                case 1:  // random zero-divisor graph, order <= 12
                    return build_zero_divisor(zd_pool[rng() % 15]);
                default:  // random Z* graph, order <= 12
                    return build_zero_divisor_star(3 + static_cast<int>(rng() % 11));
            }
        }();
        DistanceMatrix d = all_pairs_distances(g);
        const int n = g.order();

        // Endpoint membership over every distinct pair.
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                auto rs = resolving_indices(d, a, b);
                if (!std::binary_search(rs.begin(), rs.end(), a) ||
                    !std::binary_search(rs.begin(), rs.end(), b))
                    fail("endpoint membership", i);
            }

        Solved local = solve_local(g);
        if (!verify_certificate(local.lp, local.sol)) fail("local certificate", i);
        if (g.edge_count() == 0) {
            ++edgeless;
            if (local.sol.status != LpStatus::Empty || local.sol.value != 0)
                fail("edgeless convention", i);
        } else {
            ++with_edges;
            ResolvingProfile prof = edge_resolving_profile(g);
            bool all_full = true;
            for (const auto& rec : prof.records)
                if (static_cast<int>(rec.cardinality) != n) all_full = false;
            bool conn = is_connected(g);
            bool conn_bip = conn && is_bipartite(g).bipartite;
            if (conn_bip != all_full) fail("connected-bipartite equivalence", i);
            // The n/ell upper bound is unconditional; the lower bounds
            // assume connectivity (isolated vertices enter no neighborhood).
            if (!(local.sol.value <= Rational(n, static_cast<int>(prof.ell))))
                fail("LFMD <= n/ell", i);
            if (conn) {
                if (!(Rational(n, static_cast<int>(prof.beta)) <= local.sol.value))
                    fail("n/beta <= LFMD", i);
                int ldim = local_metric_dimension_integer(g);
                if (!(Rational(n, n - ldim + 1) <= local.sol.value)) fail("integer-ldim left bound", i);
            }
        }
        if (n >= 2) {
            Solved global = solve_global(g);
            if (!verify_certificate(global.lp, global.sol)) fail("global certificate", i);
            if (global.sol.value < local.sol.value) fail("FMD >= LFMD", i);
        }
    }
    r.passed = ok;
    r.details = ok ? "200 graphs (" + std::to_string(with_edges) + " with edges, " +
                         std::to_string(edgeless) + " edgeless), all properties hold"
                   : "violations:" + bad;
    return r;
}

// Criterion 8: asymptotic-label consistency sweep. The unbounded families'
// computed exact optima are required to be nondecreasing in k; constant
// families must return the identical rational across the sweep.
inline CriterionResult criterion_8() {
    CriterionResult r{8, "Asymptotic classification consistency (k = 3..6 sweeps)", false, ""};
    Caps caps = Caps::from_env();
    bool ok = true;
    std::string detail;

    auto sweep = [&](const std::string& name, FamilyTag tag, int klo, int khi) {
        std::vector<Rational> values;
        std::string seq;
        std::string skipped;
        for (int k = klo; k <= khi; ++k) {
            FamilySpec spec;
            switch (tag) {
                case FamilyTag::TOEPLITZ_POW2: spec = FamilySpec::toeplitz_pow2(k); break;
                case FamilyTag::ZDSTAR_2K: spec = FamilySpec::zdstar_2k(k); break;
                default: spec = FamilySpec::zdstar_3k(k); break;
            }
            try {
                Graph g = instantiate(spec);
                Solved s = solve_local(g, caps);
                if (!verify_certificate(s.lp, s.sol)) {
                    ok = false;
                    detail += " " + name + " k=" + std::to_string(k) + " certificate FAILED;";
                    continue;
                }
                values.push_back(s.sol.value);
                if (!seq.empty()) seq += ", ";
                seq += to_fraction_string(s.sol.value);
            } catch (const capacity_error&) {
                skipped += (skipped.empty() ? "" : ",") + std::string(" k=") + std::to_string(k);
            }
        }
        bool mono = true;
        for (std::size_t i = 1; i < values.size(); ++i)
            if (values[i] < values[i - 1]) mono = false;
        detail += " " + name + ": [" + seq + "]";
        if (!skipped.empty()) detail += " (skipped:" + skipped + ", order above cap)";
        if (mono) {
            detail += " nondecreasing;";
        } else {
            ok = false;
            detail += " NOT nondecreasing - the printed upper bound grows with k but the "
                      "certified exact optimum shrinks, so the Unbounded label does not "
                      "describe the optimum itself;";
        }
    };
    sweep("TOEPLITZ_POW2", FamilyTag::TOEPLITZ_POW2, 3, 6);
    sweep("ZDSTAR_2K", FamilyTag::ZDSTAR_2K, 3, 6);
    sweep("ZDSTAR_3K", FamilyTag::ZDSTAR_3K, 3, 6);

    // Constant families: one identical rational across the sweep.
    auto constant_sweep = [&](const std::string& name, const std::vector<FamilySpec>& specs) {
        std::vector<Rational> values;
        for (const auto& spec : specs) {
            Solved s = solve_local(instantiate(spec), caps);
            values.push_back(s.sol.value);
        }
        bool same = true;
        for (const auto& v : values)
            if (v != values.front()) same = false;
        if (same) {
            detail += " " + name + ": constant " + to_fraction_string(values.front()) + ";";
        } else {
            ok = false;
            detail += " " + name + " NOT constant;";
        }
    };
    constant_sweep("TOEPLITZ_3P", {FamilySpec::toeplitz_3p(5), FamilySpec::toeplitz_3p(7),
                                   FamilySpec::toeplitz_3p(11), FamilySpec::toeplitz_3p(13)});
    constant_sweep("ZD_2P", {FamilySpec::zd_2p(3), FamilySpec::zd_2p(5), FamilySpec::zd_2p(7),
                             FamilySpec::zd_2p(11)});
    constant_sweep("ZD_KP", {FamilySpec::zd_kp(3, 5), FamilySpec::zd_kp(3, 7),
                             FamilySpec::zd_kp(5, 7), FamilySpec::zd_kp(3, 11)});

    r.passed = ok;
    r.details = detail;
    return r;
}

}  // namespace acceptance_detail

inline std::vector<CriterionResult> run_acceptance() {
    using namespace acceptance_detail;
    return {criterion_1(), criterion_2(), criterion_3(), criterion_4(),
            criterion_5(), criterion_6(), criterion_7(), criterion_8()};
}

}  // namespace lfmd
