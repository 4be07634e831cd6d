#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <sstream>
#include <string>
#include <string_view>

#include "polycut/errors.hpp"

namespace polycut {

// Exact arithmetic substrate. GMP-backed rationals keep every value in
// canonical form: positive denominator, coprime numerator and denominator,
// zero stored as 0/1.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline int sign_of(const Rational& q) { return q.sign(); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Parses "p" or "p/q" with optional leading sign. Rejects zero denominators.
inline Rational parse_rational(std::string_view text) {
    const auto bad = [&] {
        return input_error("invalid rational '" + std::string(text) + "'");
    };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    const auto check_int = [&](std::string_view part, bool allow_sign) {
        if (part.empty()) throw bad();
        std::size_t i = 0;
        if (allow_sign && (part[0] == '+' || part[0] == '-')) i = 1;
        if (i == part.size()) throw bad();
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') throw bad();
    };
    const auto to_bigint = [](std::string_view part) {
        // GMP rejects a leading plus sign.
        if (part[0] == '+') part.remove_prefix(1);
        return BigInt(std::string(part));
    };
    if (slash == std::string_view::npos) {
        check_int(text, true);
        return Rational(to_bigint(text));
    }
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = text.substr(slash + 1);
    check_int(num, true);
    check_int(den, false);
    const BigInt d = to_bigint(den);
    if (d == 0) throw bad();
    return Rational(to_bigint(num)) / Rational(d);
}

/// Serializes as "p" or "p/q", matching the canonical GMP form.
inline std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

} // namespace polycut
