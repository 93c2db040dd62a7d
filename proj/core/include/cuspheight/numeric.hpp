#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cuspheight {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

/// Input that cannot be parsed or violates a structural precondition. CLI exit code 2.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The precision ladder was exhausted before a certificate was obtained. CLI exit code 3.
struct precision_exhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A theorem-backed assertion was certifiably violated. CLI exit code 1.
struct verification_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int int_from_string(std::string_view s) {
    if (s.empty()) throw input_error("empty integer literal");
    try {
        return Int(std::string(s));
    } catch (const std::exception&) {
        throw input_error("bad integer literal: " + std::string(s));
    }
}

/// Parses "p" or "p/q". Decimal input is rejected, not rounded.
inline Rat rat_from_string(std::string_view s) {
    if (s.find('.') != std::string_view::npos || s.find('e') != std::string_view::npos ||
        s.find('E') != std::string_view::npos)
        throw input_error("decimal rational literal rejected (use p/q): " + std::string(s));
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(int_from_string(s));
    Int p = int_from_string(s.substr(0, slash));
    Int q = int_from_string(s.substr(slash + 1));
    if (q == 0) throw input_error("zero denominator: " + std::string(s));
    return Rat(p) / Rat(q);
}

inline std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

/// Extended gcd: returns g = gcd(a,b) and x, y with a*x + b*y = g.
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    if (b == 0) {
        x = (a < 0) ? -1 : 1;
        y = 0;
        return abs(a);
    }
    Int x1, y1;
    Int g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

} // namespace cuspheight
