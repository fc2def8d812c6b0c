#pragma once

#include <string>
#include <vector>

#include "lfmd/families.hpp"
#include "lfmd/rational.hpp"

namespace lfmd {

enum class TableId { T1, T2, TT2, T3, T4 };

inline TableId table_from_name(std::string s) {
    for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (s == "T1") return TableId::T1;
    if (s == "T2") return TableId::T2;
    if (s == "TT2") return TableId::TT2;
    if (s == "T3") return TableId::T3;
    if (s == "T4") return TableId::T4;
    throw invalid_input_error("unknown table id: " + s);
}

struct Table {
    std::string id;
    std::string title;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> notes;
};

/// 5 fractional digits, half away from zero, trailing zeros trimmed,
/// integers plain ("2", "1.4").
inline std::string format_decimal5(const Rational& r) { return to_decimal_string(r, 5, false); }

/// Same rounding but integers keep the point ("3.", "1.").
inline std::string format_decimal5_point(const Rational& r) { return to_decimal_string(r, 5, true); }

namespace detail {

// Thousands separators for 5+ digit integer parts (4-digit values stay plain).
inline std::string with_commas(std::string digits) {
    if (digits.size() <= 4) return digits;
    for (int pos = static_cast<int>(digits.size()) - 3; pos > 0; pos -= 3)
        digits.insert(static_cast<std::size_t>(pos), ",");
    return digits;
}

}  // namespace detail

/// 6 significant digits for positive values: integers rendered with a
/// trailing point and thousands separators; values at or above 10^6 in
/// e-notation with trailing mantissa zeros trimmed ("2.39148e6").
inline std::string format_sig6(const Rational& r) {
    BigInt ip = numerator(r) / denominator(r);
    std::string ips = ip.str();
    int dcount = ip == 0 ? 1 : static_cast<int>(ips.size());
    if (dcount > 6) {
        int e = dcount - 1;
        BigInt pow_e = 1;
        for (int i = 0; i < e; ++i) pow_e *= 10;
        BigInt scaled = round_scaled(r / Rational(pow_e), 5);
        if (scaled >= 1000000) {  // rounding carried into the next decade
            ++e;
            pow_e *= 10;
            scaled = round_scaled(r / Rational(pow_e), 5);
        }
        std::string s = scaled.str();
        std::string fpart = s.substr(1);
        while (!fpart.empty() && fpart.back() == '0') fpart.pop_back();
        std::string out(1, s[0]);
        if (!fpart.empty()) out += "." + fpart;
        return out + "e" + std::to_string(e);
    }
    int fd = 6 - dcount;
    BigInt scaled = round_scaled(r, fd);
    std::string s = scaled.str();
    if (static_cast<int>(s.size()) <= fd) s.insert(0, fd + 1 - s.size(), '0');
    std::string ipart = s.substr(0, s.size() - fd);
    std::string fpart = fd > 0 ? s.substr(s.size() - fd) : std::string();
    while (!fpart.empty() && fpart.back() == '0') fpart.pop_back();
    std::string out = detail::with_commas(ipart);
    out += ".";
    out += fpart;
    return out;
}

/// Asymptotic classification metadata for the studied families.
inline Table asymptotic_classification_table() {
    Table t;
    t.id = "T1";
    t.title = "Asymptotic behaviour of the studied families";
    t.header = {"G", "ldim_f(G)", "Asymptotic Behaviour"};
    t.rows = {
        {"T_wp<1,wp-2>", "1 if wp odd; [wp/(wp-1), wp/(wp-2)] if wp even", "Bounded"},
        {"T_wp<1,2,wp-1>",
         "2 if wp=4; [wp/(wp-2), 2] if wp=0 mod 4, wp!=4; [wp/(wp-1), 2wp/(wp+1)] if wp=1 mod 4; "
         "[1, 2] if wp=2 mod 4; [wp/(wp-1), 4wp/(3wp-5)] if wp=3 mod 4",
         "Bounded"},
        {"T_{2^k}<1,2^(k-2),2^(k-1)>", "[2^k/(2^k-2), 2^(k-3)]", "Unbounded"},
        {"T_{2p}<2,p>", "[2p/(2p-1), p/(p-1)]", "Bounded"},
        {"T_{3p}<3,p>", "1", "Constant"},
        {"G(Z_{2p})", "1", "Constant"},
        {"G(Z_{kp})", "1", "Constant"},
        {"G(Z_{p^k})", "(p^(k-1)-1)/2", "Unbounded"},
        {"G(Z*_{2^k})", "[(2^k-1)/(2^(k-1)+1), (2^k-1)/2]", "Unbounded"},
        {"G(Z*_{3^k})", "[(3^k-1)/(3^(k-1)+1), (3^k-1)/2]", "Unbounded"},
        {"G(Z*_{p^2})", "[(p^2-1)/(p^2-p+1), (p^2-1)/2]", "Unbounded"},
    };
    return t;
}

/// Upper-bound comparison; row index k maps to wp = 2k for the first column
/// and wp = 4k, 4k+1, 4k+2, 4k+3 for the four residue columns.
inline Table upper_bound_comparison_table() {
    Table t;
    t.id = "T2";
    t.title = "Upper bound comparison for the Toeplitz families";
    t.header = {"wp", "T_wp<1,wp-2>", "T_{wp=0 mod 4}", "T_{wp=1 mod 4}", "T_{wp=2 mod 4}",
                "T_{wp=3 mod 4}"};
    for (int k = 8; k <= 20; ++k) {
        int w1 = 2 * k, w3 = 4 * k + 1, w5 = 4 * k + 3;
        t.rows.push_back({std::to_string(k) + ".",
                          format_decimal5(Rational(w1, w1 - 2)),
                          format_decimal5(2),
                          format_decimal5(Rational(2 * w3, w3 + 1)),
                          format_decimal5(2),
                          format_decimal5(Rational(4 * w5, 3 * w5 - 5))});
    }
    return t;
}

/// Lower-bound comparison under the same row mapping. The wp = 0 mod 4
/// column is reproduced as printed, which needs wp = 4k+2 in wp/(wp-2);
/// the theorem-consistent value 4k/(4k-2) does not match the printed digits.
inline Table lower_bound_comparison_table() {
    Table t;
    t.id = "TT2";
    t.title = "Lower bound comparison for the Toeplitz families";
    t.header = {"wp", "T_wp<1,wp-2>", "T_{wp=0 mod 4}", "T_{wp=1 mod 4}", "T_{wp=2 mod 4}",
                "T_{wp=3 mod 4}"};
    for (int k = 8; k <= 20; ++k) {
        int w1 = 2 * k, w3 = 4 * k + 1, w5 = 4 * k + 3;
        t.rows.push_back({std::to_string(k) + ".",
                          format_decimal5(Rational(w1, w1 - 1)),
                          format_decimal5(Rational(4 * k + 2, 4 * k - 2)),
                          format_decimal5(Rational(w3, w3 - 1)),
                          format_decimal5(1),
                          format_decimal5(Rational(w5, w5 - 1))});
    }
    t.notes.push_back(
        "Column 'T_{wp=0 mod 4}' reproduces the printed digits, which equal (4k+2)/(4k-2) "
        "rather than the case formula's 4k/(4k-2); documented discrepancy.");
    return t;
}

/// Upper bounds of the three unbounded power families, k = 4..20.
inline Table power_upper_bound_table() {
    Table t;
    t.id = "T3";
    t.title = "Upper bounds for the power families";
    t.header = {"k", "T_{2^k}<1,2^(k-2),2^(k-1)>", "G(Z*_{2^k})", "G(Z*_{3^k})"};
    for (int k = 4; k <= 20; ++k) {
        t.rows.push_back({std::to_string(k) + ".",
                          format_sig6(Rational(ipow(2, k - 3))),
                          format_sig6(Rational(ipow(2, k) - 1, 2)),
                          format_sig6(Rational(ipow(3, k) - 1, 2))});
    }
    return t;
}

/// Lower bounds of the three unbounded power families, k = 4..20.
inline Table power_lower_bound_table() {
    Table t;
    t.id = "T4";
    t.title = "Lower bounds for the power families";
    t.header = {"k", "T_{2^k}<1,2^(k-2),2^(k-1)>", "G(Z*_{2^k})", "G(Z*_{3^k})"};
    for (int k = 4; k <= 20; ++k) {
        t.rows.push_back({std::to_string(k) + ".",
                          format_decimal5_point(Rational(ipow(2, k), ipow(2, k) - 2)),
                          format_decimal5_point(Rational(ipow(2, k) - 1, ipow(2, k - 1) + 1)),
                          format_decimal5_point(Rational(ipow(3, k) - 1, ipow(3, k - 1) + 1))});
    }
    return t;
}

inline Table reproduce_table(TableId id) {
    switch (id) {
        case TableId::T1: return asymptotic_classification_table();
        case TableId::T2: return upper_bound_comparison_table();
        case TableId::TT2: return lower_bound_comparison_table();
        case TableId::T3: return power_upper_bound_table();
        case TableId::T4: return power_lower_bound_table();
    }
    throw invalid_input_error("unknown table id");
}

inline std::string table_to_markdown(const Table& t) {
    std::string out = "# " + t.id + ": " + t.title + "\n\n";
    auto row_line = [](const std::vector<std::string>& cells) {
        std::string line = "|";
        for (const auto& c : cells) line += " " + c + " |";
        return line + "\n";
    };
    out += row_line(t.header);
    std::string sep = "|";
    for (std::size_t i = 0; i < t.header.size(); ++i) sep += " --- |";
    out += sep + "\n";
    for (const auto& r : t.rows) out += row_line(r);
    for (const auto& n : t.notes) out += "\nNote: " + n + "\n";
    return out;
}

inline std::string table_to_csv(const Table& t) {
    auto cell = [](const std::string& c) {
        if (c.find(',') == std::string::npos && c.find('"') == std::string::npos) return c;
        std::string quoted = "\"";
        for (char ch : c) {
            if (ch == '"') quoted += '"';
            quoted += ch;
        }
        return quoted + "\"";
    };
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) s += ",";
            s += cell(cells[i]);
        }
        return s + "\n";
    };
    std::string out = line(t.header);
    for (const auto& r : t.rows) out += line(r);
    for (const auto& n : t.notes) out += line({"note", n});
    return out;
}

}  // namespace lfmd
