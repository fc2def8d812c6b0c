#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace lfmd {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms; the "/q" part is omitted when q == 1.
inline std::string to_fraction_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

/// Rounds r to `digits` fractional digits, half away from zero.
/// Returns the scaled integer round(r * 10^digits).
inline BigInt round_scaled(const Rational& r, int digits) {
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    BigInt num = numerator(r) * scale;
    BigInt den = denominator(r);
    bool neg = num < 0;
    if (neg) num = -num;
    BigInt q = num / den;
    BigInt rem = num % den;
    if (2 * rem >= den) ++q;
    return neg ? BigInt(-q) : q;
}

/// Decimal rendering with `digits` fractional digits, round half away from
/// zero, trailing zeros trimmed. If the rounded value is an integer the
/// fractional part disappears; `keep_point` controls whether a bare "." is
/// kept ("3." vs "3").
inline std::string to_decimal_string(const Rational& r, int digits = 5, bool keep_point = false) {
    BigInt scaled = round_scaled(r, digits);
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    std::string s = scaled.str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    std::string ipart = s.substr(0, s.size() - digits);
    std::string fpart = digits > 0 ? s.substr(s.size() - digits) : std::string();
    while (!fpart.empty() && fpart.back() == '0') fpart.pop_back();
    std::string out = (neg ? "-" : "") + ipart;
    if (!fpart.empty())
        out += "." + fpart;
    else if (keep_point)
        out += ".";
    return out;
}

}  // namespace lfmd
