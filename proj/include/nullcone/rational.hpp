#pragma once

// Exact rationals and rational vectors.
//
// Rat is GMP's mpq_class: arbitrary precision, always kept in canonical
// reduced form (gcd(num, den) = 1, den > 0). QVec is a plain coordinate
// vector; its length is checked against the GramSpace it is used with.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "nullcone/errors.hpp"

namespace nullcone {

using Rat = mpq_class;
using QVec = std::vector<Rat>;

/// Parses "p/q", "p" or "-p/q" (surrounding whitespace allowed).
inline Rat parse_rat(std::string_view text) {
    auto begin = text.find_first_not_of(" \t");
    auto end = text.find_last_not_of(" \t");
    if (begin == std::string_view::npos) throw InputError("empty rational literal");
    std::string s(text.substr(begin, end - begin + 1));
    if (s.front() == '+') s.erase(0, 1);
    auto slash = s.find('/');
    auto digits_ok = [](const std::string& part, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !part.empty() && part[0] == '-') i = 1;
        if (i == part.size()) return false;
        return std::all_of(part.begin() + static_cast<std::ptrdiff_t>(i), part.end(),
                           [](char c) { return c >= '0' && c <= '9'; });
    };
    if (slash == std::string::npos) {
        if (!digits_ok(s, true)) throw InputError("malformed rational literal '" + s + "'");
        return Rat(mpz_class(s, 10));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false))
        throw InputError("malformed rational literal '" + s + "'");
    mpz_class d(den, 10);
    if (d == 0) throw InputError("zero denominator in '" + s + "'");
    Rat r(mpz_class(num, 10), d);
    r.canonicalize();
    return r;
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(Rat r) {
    r.canonicalize();
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const QVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

inline QVec zero_vec(std::size_t n) { return QVec(n, Rat(0)); }

inline bool is_zero(const QVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return sgn(x) == 0; });
}

inline QVec operator+(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw InputError("vector length mismatch in +");
    QVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline QVec operator-(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw InputError("vector length mismatch in -");
    QVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline QVec operator-(const QVec& a) {
    QVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return out;
}

inline QVec operator*(const Rat& c, const QVec& a) {
    QVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
    return out;
}

// Lexicographic order on coordinate tuples; std::vector's operator< already
// does this, named here for readability at call sites.
inline bool lex_less(const QVec& a, const QVec& b) { return a < b; }

/// Stable textual key, usable for hashing / memo tables.
inline std::string key_of(const QVec& v) {
    std::string out;
    for (const auto& x : v) {
        out += to_string(x);
        out += ',';
    }
    return out;
}

}  // namespace nullcone
