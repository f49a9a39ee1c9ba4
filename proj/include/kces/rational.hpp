#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace kces {

/// Exact rational scalar. Arithmetic results stay canonical (reduced,
/// positive denominator); values built with the two-argument constructor
/// may need an explicit canonicalize().
using Rational = mpq_class;

/// Arbitrary-precision integer, used for all counting formulas.
using Int = mpz_class;

/// Parses "a" or "a/b" with optional leading '-'. Throws std::invalid_argument
/// on malformed input or zero denominator.
inline Rational rational_from_string(std::string_view s) {
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    std::size_t pos = 0;
    if (s[0] == '-' || s[0] == '+')
        pos = 1;
    if (pos == s.size())
        throw std::invalid_argument("malformed rational: " + std::string(s));
    bool seen_slash = false;
    for (std::size_t i = pos; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '/') {
            if (seen_slash || i == pos || i + 1 == s.size())
                throw std::invalid_argument("malformed rational: " + std::string(s));
            seen_slash = true;
        } else if (c < '0' || c > '9') {
            throw std::invalid_argument("malformed rational: " + std::string(s));
        }
    }
    Rational q(std::string(s), 10);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + std::string(s));
    q.canonicalize();
    return q;
}

/// Canonical string form: reduced, denominator omitted when 1.
inline std::string rational_to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

}  // namespace kces
