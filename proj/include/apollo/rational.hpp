#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdio>
#include <string>

#include "apollo/errors.hpp"

namespace apollo {

// Exact scalar. Every predicate the engine decides is decided over this type.
// Expression templates are off so results materialize eagerly; generic code
// deduces plain number types that way.
using BigInt =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline int sign_of(const Rat& v) { return v.sign(); }

inline Rat abs_of(const Rat& v) { return v < 0 ? Rat(-v) : v; }

// Accepted literals: "p", "p/q", "p.ddd", with one optional leading sign and
// no interior whitespace. Finite decimals are exact rationals, so all three
// forms parse without loss.
inline Rat parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty number literal");
    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = (text[i] == '-');
        ++i;
    }
    auto digits = [&](std::size_t& pos) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected digits in number literal '" + text + "'");
        return text.substr(start, pos - start);
    };
    std::string whole = digits(i);
    BigInt num(whole);
    BigInt den(1);
    if (i < text.size() && text[i] == '/') {
        ++i;
        BigInt q(digits(i));
        if (q == 0) throw ParseError("zero denominator in '" + text + "'");
        den = q;
    } else if (i < text.size() && text[i] == '.') {
        ++i;
        std::string frac = digits(i);
        for (char c : frac) {
            num = num * 10 + (c - '0');
            den *= 10;
        }
    }
    if (i != text.size()) throw ParseError("trailing characters in number literal '" + text + "'");
    Rat r(num, den);
    return negative ? Rat(-r) : r;
}

inline std::string to_string(const Rat& v) {
    const BigInt& n = numerator(v);
    const BigInt& d = denominator(v);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

inline double to_double(const Rat& v) { return v.convert_to<double>(); }
inline double to_double(double v) { return v; }

// Shortest deterministic text for a double; %.17g round-trips exactly.
inline std::string to_string(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace apollo
