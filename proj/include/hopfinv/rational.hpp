#pragma once

/*
 * rational.hpp - exact rational scalars.
 *
 * Rationals are GMP mpq_class values, kept canonical (gcd(num,den)=1,
 * den>=1) by GMP itself.  Everything above this layer is written against
 * this alias plus the few helpers below.
 */

#include <gmpxx.h>
#include <optional>
#include <string>
#include <stdexcept>

namespace hopfinv {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string rat_to_string(const Rational& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Parses "a" or "a/b" with optional sign; returns nullopt on malformed input.
inline std::optional<Rational> rat_from_string(const std::string& s) {
    if (s.empty()) return std::nullopt;
    size_t i = 0;
    auto digits = [&](std::string& out) {
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) out += s[i++];
        return i > start;
    };
    std::string num, den;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') neg = (s[i++] == '-');
    if (!digits(num)) return std::nullopt;
    if (i < s.size() && s[i] == '/') {
        ++i;
        if (!digits(den)) return std::nullopt;
    }
    if (i != s.size()) return std::nullopt;
    Rational q(Integer(num), den.empty() ? Integer(1) : Integer(den));
    if (q.get_den() == 0) return std::nullopt;
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

} // namespace hopfinv
