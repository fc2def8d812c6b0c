#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "lfmd/graph.hpp"
#include "lfmd/lfmd.hpp"

namespace lfmd {

enum class FamilyTag {
    TOEPLITZ_1_WM2,   // T_w<1, w-2>
    TOEPLITZ_1_2_WM1, // T_w<1, 2, w-1>
    TOEPLITZ_POW2,    // T_{2^k}<1, 2^{k-2}, 2^{k-1}>, k >= 3
    TOEPLITZ_2P,      // T_{2p}<2, p>, p odd prime
    TOEPLITZ_3P,      // T_{3p}<3, p>, p prime, p > 3
    ZD_2P,            // G(Z_{2p}), p odd prime
    ZD_KP,            // G(Z_{kp}), k, p distinct odd primes
    ZD_PK,            // G(Z_{p^k}), p prime > 3, k >= 2
    ZDSTAR_2K,        // G(Z*_{2^k}), k > 2
    ZDSTAR_3K,        // G(Z*_{3^k}), k > 1
    ZDSTAR_P2,        // G(Z*_{p^2}), p prime
    GENERIC,          // arbitrary T_n<S> or Z_n graph
};

inline const char* family_name(FamilyTag t) {
    switch (t) {
        case FamilyTag::TOEPLITZ_1_WM2: return "TOEPLITZ_1_WM2";
        case FamilyTag::TOEPLITZ_1_2_WM1: return "TOEPLITZ_1_2_WM1";
        case FamilyTag::TOEPLITZ_POW2: return "TOEPLITZ_POW2";
        case FamilyTag::TOEPLITZ_2P: return "TOEPLITZ_2P";
        case FamilyTag::TOEPLITZ_3P: return "TOEPLITZ_3P";
        case FamilyTag::ZD_2P: return "ZD_2P";
        case FamilyTag::ZD_KP: return "ZD_KP";
        case FamilyTag::ZD_PK: return "ZD_PK";
        case FamilyTag::ZDSTAR_2K: return "ZDSTAR_2K";
        case FamilyTag::ZDSTAR_3K: return "ZDSTAR_3K";
        case FamilyTag::ZDSTAR_P2: return "ZDSTAR_P2";
        case FamilyTag::GENERIC: return "GENERIC";
    }
    return "GENERIC";
}

inline FamilyTag family_from_name(std::string s) {
    for (char& c : s) c = static_cast<char>(c == '-' ? '_' : std::toupper(static_cast<unsigned char>(c)));
    for (FamilyTag t :
         {FamilyTag::TOEPLITZ_1_WM2, FamilyTag::TOEPLITZ_1_2_WM1, FamilyTag::TOEPLITZ_POW2,
          FamilyTag::TOEPLITZ_2P, FamilyTag::TOEPLITZ_3P, FamilyTag::ZD_2P, FamilyTag::ZD_KP,
          FamilyTag::ZD_PK, FamilyTag::ZDSTAR_2K, FamilyTag::ZDSTAR_3K, FamilyTag::ZDSTAR_P2,
          FamilyTag::GENERIC})
        if (s == family_name(t)) return t;
    throw invalid_family_error("unknown family tag: " + s);
}

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline BigInt ipow(int base, int exp) {
    BigInt r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

/// Parameterized family member. The meaningful parameters depend on the tag:
/// wp for the two T<1,...> families, k for the power families, p for the
/// prime families, (p, k) for ZD_PK, (k, p) for ZD_KP, (n, diffs) for GENERIC.
struct FamilySpec {
    FamilyTag tag = FamilyTag::GENERIC;
    int wp = 0;
    int p = 0;
    int k = 0;
    int n = 0;
    std::set<int> diffs;

    static FamilySpec toeplitz_1_wm2(int wp) { return {FamilyTag::TOEPLITZ_1_WM2, wp, 0, 0, 0, {}}; }
    static FamilySpec toeplitz_1_2_wm1(int wp) { return {FamilyTag::TOEPLITZ_1_2_WM1, wp, 0, 0, 0, {}}; }
    static FamilySpec toeplitz_pow2(int k) { return {FamilyTag::TOEPLITZ_POW2, 0, 0, k, 0, {}}; }
    static FamilySpec toeplitz_2p(int p) { return {FamilyTag::TOEPLITZ_2P, 0, p, 0, 0, {}}; }
    static FamilySpec toeplitz_3p(int p) { return {FamilyTag::TOEPLITZ_3P, 0, p, 0, 0, {}}; }
    static FamilySpec zd_2p(int p) { return {FamilyTag::ZD_2P, 0, p, 0, 0, {}}; }
    static FamilySpec zd_kp(int k, int p) { return {FamilyTag::ZD_KP, 0, p, k, 0, {}}; }
    static FamilySpec zd_pk(int p, int k) { return {FamilyTag::ZD_PK, 0, p, k, 0, {}}; }
    static FamilySpec zdstar_2k(int k) { return {FamilyTag::ZDSTAR_2K, 0, 0, k, 0, {}}; }
    static FamilySpec zdstar_3k(int k) { return {FamilyTag::ZDSTAR_3K, 0, 0, k, 0, {}}; }
    static FamilySpec zdstar_p2(int p) { return {FamilyTag::ZDSTAR_P2, 0, p, 0, 0, {}}; }
};

inline void validate_spec(const FamilySpec& s) {
    auto fail = [&](const std::string& why) {
        throw invalid_family_error(std::string(family_name(s.tag)) + ": " + why);
    };
    switch (s.tag) {
        case FamilyTag::TOEPLITZ_1_WM2:
        case FamilyTag::TOEPLITZ_1_2_WM1:
            if (s.wp < 4) fail("requires wp >= 4");
            break;
        case FamilyTag::TOEPLITZ_POW2:
            if (s.k < 3) fail("requires k >= 3");
            break;
        case FamilyTag::TOEPLITZ_2P:
            if (!is_prime(s.p) || s.p == 2) fail("requires an odd prime p");
            break;
        case FamilyTag::TOEPLITZ_3P:
            if (!is_prime(s.p) || s.p <= 3) fail("requires a prime p > 3");
            break;
        case FamilyTag::ZD_2P:
            if (!is_prime(s.p) || s.p == 2) fail("requires an odd prime p");
            break;
        case FamilyTag::ZD_KP:
            if (!is_prime(s.k) || !is_prime(s.p) || s.k == s.p || s.k == 2 || s.p == 2)
                fail("requires distinct odd primes k, p");
            break;
        case FamilyTag::ZD_PK:
            if (!is_prime(s.p) || s.p <= 3 || s.k < 2) fail("requires a prime p > 3 and k >= 2");
            break;
        case FamilyTag::ZDSTAR_2K:
            if (s.k <= 2) fail("requires k > 2");
            break;
        case FamilyTag::ZDSTAR_3K:
            if (s.k <= 1) fail("requires k > 1");
            break;
        case FamilyTag::ZDSTAR_P2:
            if (!is_prime(s.p)) fail("requires a prime p");
            break;
        case FamilyTag::GENERIC:
            if (s.n < 2) fail("requires n >= 2");
            break;
    }
}

inline std::string describe_spec(const FamilySpec& s) {
    std::string out = family_name(s.tag);
    switch (s.tag) {
        case FamilyTag::TOEPLITZ_1_WM2:
        case FamilyTag::TOEPLITZ_1_2_WM1: out += " wp=" + std::to_string(s.wp); break;
        case FamilyTag::TOEPLITZ_POW2:
        case FamilyTag::ZDSTAR_2K:
        case FamilyTag::ZDSTAR_3K: out += " k=" + std::to_string(s.k); break;
        case FamilyTag::TOEPLITZ_2P:
        case FamilyTag::TOEPLITZ_3P:
        case FamilyTag::ZD_2P:
        case FamilyTag::ZDSTAR_P2: out += " p=" + std::to_string(s.p); break;
        case FamilyTag::ZD_KP: out += " k=" + std::to_string(s.k) + " p=" + std::to_string(s.p); break;
        case FamilyTag::ZD_PK: out += " p=" + std::to_string(s.p) + " k=" + std::to_string(s.k); break;
        case FamilyTag::GENERIC: out += " n=" + std::to_string(s.n); break;
    }
    return out;
}

struct BoundInterval {
    enum Kind { EXACT, INTERVAL } kind = INTERVAL;
    Rational lower;
    Rational upper;
};

inline BoundInterval exact_bound(const Rational& v) { return {BoundInterval::EXACT, v, v}; }
inline BoundInterval interval_bound(const Rational& lo, const Rational& hi) {
    return {BoundInterval::INTERVAL, lo, hi};
}

/// Claimed closed-form interval/equality for the family member.
inline BoundInterval theorem_bounds(const FamilySpec& s) {
    validate_spec(s);
    switch (s.tag) {
        case FamilyTag::TOEPLITZ_1_WM2:
            if (s.wp % 2 == 1) return exact_bound(1);
            return interval_bound(Rational(s.wp, s.wp - 1), Rational(s.wp, s.wp - 2));
        case FamilyTag::TOEPLITZ_1_2_WM1:
            if (s.wp == 4) return exact_bound(2);
            switch (s.wp % 4) {
                case 0: return interval_bound(Rational(s.wp, s.wp - 2), 2);
                case 1: return interval_bound(Rational(s.wp, s.wp - 1), Rational(2 * s.wp, s.wp + 1));
                case 2: return interval_bound(1, 2);
                default: return interval_bound(Rational(s.wp, s.wp - 1), Rational(4 * s.wp, 3 * s.wp - 5));
            }
        case FamilyTag::TOEPLITZ_POW2:
            return interval_bound(Rational(ipow(2, s.k), ipow(2, s.k) - 2), Rational(ipow(2, s.k - 3)));
        case FamilyTag::TOEPLITZ_2P:
            return interval_bound(Rational(2 * s.p, 2 * s.p - 1), Rational(s.p, s.p - 1));
        case FamilyTag::TOEPLITZ_3P:
        case FamilyTag::ZD_2P:
        case FamilyTag::ZD_KP:
            return exact_bound(1);
        case FamilyTag::ZD_PK:
            return exact_bound(Rational(ipow(s.p, s.k - 1) - 1, 2));
        case FamilyTag::ZDSTAR_2K:
            return interval_bound(Rational(ipow(2, s.k) - 1, ipow(2, s.k - 1) + 1),
                                  Rational(ipow(2, s.k) - 1, 2));
        case FamilyTag::ZDSTAR_3K:
            return interval_bound(Rational(ipow(3, s.k) - 1, ipow(3, s.k - 1) + 1),
                                  Rational(ipow(3, s.k) - 1, 2));
        case FamilyTag::ZDSTAR_P2:
            return interval_bound(
                Rational(BigInt(s.p) * s.p - 1, BigInt(s.p) * s.p - s.p + 1),
                Rational(BigInt(s.p) * s.p - 1, 2));
        case FamilyTag::GENERIC:
            break;
    }
    throw invalid_family_error("GENERIC family carries no closed-form bounds");
}

inline Graph instantiate(const FamilySpec& s) {
    validate_spec(s);
    switch (s.tag) {
        case FamilyTag::TOEPLITZ_1_WM2:
            return build_toeplitz(s.wp, {1, s.wp - 2});
        case FamilyTag::TOEPLITZ_1_2_WM1:
            return build_toeplitz(s.wp, {1, 2, s.wp - 1});
        case FamilyTag::TOEPLITZ_POW2:
            return build_toeplitz(1 << s.k, {1, 1 << (s.k - 2), 1 << (s.k - 1)});
        case FamilyTag::TOEPLITZ_2P:
            return build_toeplitz(2 * s.p, {2, s.p});
        case FamilyTag::TOEPLITZ_3P:
            return build_toeplitz(3 * s.p, {3, s.p});
        case FamilyTag::ZD_2P:
            return build_zero_divisor(2 * s.p);
        case FamilyTag::ZD_KP:
            return build_zero_divisor(s.k * s.p);
        case FamilyTag::ZD_PK: {
            long long n = 1;
            for (int i = 0; i < s.k; ++i) n *= s.p;
            if (n > 1'000'000) throw capacity_error("modulus too large");
            return build_zero_divisor(static_cast<int>(n));
        }
        case FamilyTag::ZDSTAR_2K:
            return build_zero_divisor_star(1 << s.k);
        case FamilyTag::ZDSTAR_3K: {
            long long n = 1;
            for (int i = 0; i < s.k; ++i) n *= 3;
            if (n > 1'000'000) throw capacity_error("modulus too large");
            return build_zero_divisor_star(static_cast<int>(n));
        }
        case FamilyTag::ZDSTAR_P2:
            return build_zero_divisor_star(s.p * s.p);
        case FamilyTag::GENERIC:
            return build_toeplitz(s.n, s.diffs);
    }
    throw invalid_family_error("unreachable");
}

/// Family members whose claimed closed form is contradicted by the certified
/// exact optimum; the computed value is authoritative and the record is
/// annotated instead of blocking a validation run.
inline std::optional<std::string> known_discrepancy(const FamilySpec& s) {
    switch (s.tag) {
        case FamilyTag::TOEPLITZ_1_2_WM1:
            if (s.wp % 4 == 3 && s.wp >= 7)
                return "claimed upper bound 4*wp/(3*wp-5) is below the certified exact optimum 2 "
                       "for every tested wp = 3 (mod 4); the wp = 3 (mod 4) case formula "
                       "understates the optimum";
            return std::nullopt;
        case FamilyTag::TOEPLITZ_POW2:
            if (s.k == 3)
                return "claimed interval [2^k/(2^k-2), 2^(k-3)] degenerates to the empty "
                       "interval [4/3, 1] at k=3; certified exact optimum is 5/3";
            return std::nullopt;
        case FamilyTag::ZDSTAR_3K:
            if (s.k == 2)
                return "claimed lower bound (3^k-1)/(3^(k-1)+1) = 2 exceeds the certified exact "
                       "optimum 3/2 at k=2 (the maximum neighborhood cardinality is 7, "
                       "not 3^(k-1)+1 = 4)";
            return std::nullopt;
        case FamilyTag::ZD_PK:
            if (s.k >= 3)
                return "closed form (p^(k-1)-1)/2 holds only for k=2, where the graph is "
                       "complete; for k >= 3 the graph is a complete split graph and the "
                       "certified exact optimum is smaller (e.g. 5/2 at p=5, k=3)";
            return std::nullopt;
        default:
            return std::nullopt;
    }
}

enum class Verdict { CONFIRMED, VIOLATED, NOT_APPLICABLE };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::CONFIRMED: return "CONFIRMED";
        case Verdict::VIOLATED: return "VIOLATED";
        case Verdict::NOT_APPLICABLE: return "NOT-APPLICABLE";
    }
    return "NOT-APPLICABLE";
}

struct ComparisonRecord {
    FamilySpec spec;
    BoundInterval claimed;
    std::optional<Rational> computed_exact;
    std::optional<BoundReport> generic;
    Verdict verdict = Verdict::NOT_APPLICABLE;
    bool annotated = false;  // documented discrepancy, non-blocking
    std::string notes;
};

inline ComparisonRecord compare_one(const FamilySpec& spec, const Caps& caps) {
    ComparisonRecord rec;
    rec.spec = spec;
    rec.claimed = theorem_bounds(spec);
    try {
        Graph g = instantiate(spec);
        check_order(g, caps);
        DistanceMatrix d = all_pairs_distances(g);
        CoveringLp lp = assemble_local_lp(g, d);
        check_caps(g, lp, caps);
        LpSolution sol = solve_covering_lp(lp);
        if (!verify_certificate(lp, sol))
            throw std::logic_error("duality certificate verification failed");
        rec.computed_exact = sol.value;
        rec.generic = generic_bounds(g);
        bool inside = rec.claimed.lower <= sol.value && sol.value <= rec.claimed.upper;
        rec.verdict = inside ? Verdict::CONFIRMED : Verdict::VIOLATED;
        if (!inside) {
            if (auto note = known_discrepancy(spec)) {
                rec.annotated = true;
                rec.notes = *note;
            } else {
                rec.notes = "computed exact value " + to_fraction_string(sol.value) +
                            " falls outside the claimed interval";
            }
        }
    } catch (const capacity_error& e) {
        rec.verdict = Verdict::NOT_APPLICABLE;
        rec.notes = std::string("capacity exceeded: ") + e.what();
    }
    return rec;
}

/// Sweep the family's natural parameter over [lo, hi]; values that do not
/// satisfy the family predicate are skipped. ZD_KP and ZD_PK sweep the
/// modulus n and pick out qualifying factorizations.
inline std::vector<ComparisonRecord> validate_family(FamilyTag tag, int lo, int hi,
                                                     const Caps& caps = {}) {
    std::vector<FamilySpec> specs;
    auto add = [&](const FamilySpec& s) {
        try {
            validate_spec(s);
            specs.push_back(s);
        } catch (const invalid_family_error&) {
        }
    };
    for (int v = lo; v <= hi; ++v) {
        switch (tag) {
            case FamilyTag::TOEPLITZ_1_WM2: add(FamilySpec::toeplitz_1_wm2(v)); break;
            case FamilyTag::TOEPLITZ_1_2_WM1: add(FamilySpec::toeplitz_1_2_wm1(v)); break;
            case FamilyTag::TOEPLITZ_POW2: add(FamilySpec::toeplitz_pow2(v)); break;
            case FamilyTag::TOEPLITZ_2P: add(FamilySpec::toeplitz_2p(v)); break;
            case FamilyTag::TOEPLITZ_3P: add(FamilySpec::toeplitz_3p(v)); break;
            case FamilyTag::ZD_2P: add(FamilySpec::zd_2p(v)); break;
            case FamilyTag::ZDSTAR_2K: add(FamilySpec::zdstar_2k(v)); break;
            case FamilyTag::ZDSTAR_3K: add(FamilySpec::zdstar_3k(v)); break;
            case FamilyTag::ZDSTAR_P2: add(FamilySpec::zdstar_p2(v)); break;
            case FamilyTag::ZD_KP:
                for (int q = 3; q * q < v; q += 2)
                    if (v % q == 0 && is_prime(q) && is_prime(v / q)) add(FamilySpec::zd_kp(q, v / q));
                break;
            case FamilyTag::ZD_PK:
                for (int q = 5; q * q <= v; ++q) {
                    if (!is_prime(q)) continue;
                    long long pw = static_cast<long long>(q) * q;
                    for (int e = 2; pw <= v; ++e, pw *= q)
                        if (pw == v) add(FamilySpec::zd_pk(q, e));
                }
                break;
            case FamilyTag::GENERIC:
                throw invalid_family_error("GENERIC family cannot be swept");
        }
    }
    std::vector<ComparisonRecord> out;
    out.reserve(specs.size());
    for (const auto& s : specs) out.push_back(compare_one(s, caps));
    return out;
}

/// True when some VIOLATED record lacks a documented-discrepancy annotation.
inline bool has_blocking_violation(const std::vector<ComparisonRecord>& recs) {
    for (const auto& r : recs)
        if (r.verdict == Verdict::VIOLATED && !r.annotated) return true;
    return false;
}

inline nlohmann::json record_to_json(const ComparisonRecord& r) {
    nlohmann::json j;
    j["spec"] = describe_spec(r.spec);
    j["claimed"] = {{"kind", r.claimed.kind == BoundInterval::EXACT ? "EXACT" : "INTERVAL"},
                    {"lower", to_fraction_string(r.claimed.lower)},
                    {"upper", to_fraction_string(r.claimed.upper)}};
    if (r.computed_exact) j["computed_exact"] = to_fraction_string(*r.computed_exact);
    if (r.generic) {
        j["generic"] = {{"upper_ell", to_fraction_string(r.generic->upper_ell)}};
        if (r.generic->lower_nt)
            j["generic"]["lower_nt"] = to_fraction_string(*r.generic->lower_nt);
    }
    j["verdict"] = verdict_name(r.verdict);
    if (r.annotated) j["annotated_discrepancy"] = true;
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

inline nlohmann::json records_to_json(const std::vector<ComparisonRecord>& recs) {
    auto a = nlohmann::json::array();
    for (const auto& r : recs) a.push_back(record_to_json(r));
    return a;
}

}  // namespace lfmd
