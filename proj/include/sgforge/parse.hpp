#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "sgforge/errors.hpp"
#include "sgforge/int_util.hpp"
#include "sgforge/kunz.hpp"
#include "sgforge/series.hpp"

namespace sgforge {

namespace detail {

struct Cursor {
    const std::string& text;
    size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    [[noreturn]] void fail(const std::string& expected) const {
        raise(errc::parse_error,
              "byte " + std::to_string(pos) + ": expected " + expected);
    }
    int64 integer() {
        skip_ws();
        size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("a number");
        if (pos - start > 18) fail("a smaller number");
        return std::stoll(text.substr(start, pos - start));
    }
};

}  // namespace detail

// integers separated by commas and/or whitespace, in input order
inline std::vector<int64> parse_int_list(const std::string& text) {
    detail::Cursor c{text};
    std::vector<int64> out;
    for (;;) {
        c.skip_ws();
        if (c.peek() == '-') {
            ++c.pos;
            int64 v = c.integer();
            raise(errc::zero_or_negative, "entry " + std::to_string(-v) + " is not positive");
        }
        out.push_back(c.integer());
        c.skip_ws();
        if (c.done()) break;
        if (c.peek() != ',') c.fail("',' between numbers");
        ++c.pos;
    }
    return out;
}

// generator list: parsed, rejects non-positive entries, sorted, deduplicated
inline std::vector<int64> parse_generators(const std::string& text) {
    auto v = parse_int_list(text);
    for (int64 g : v)
        if (g <= 0) raise(errc::zero_or_negative, "generator " + std::to_string(g) + " is not positive");
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline KunzPoint parse_kunz_point(const std::string& text) {
    auto v = parse_int_list(text);
    if (v.size() != 3)
        raise(errc::parse_error,
              "a point needs exactly 3 coordinates, got " + std::to_string(v.size()));
    return KunzPoint(v[0], v[1], v[2]);
}

namespace detail {

// c*t^k | c*t | t^k | t | c, with c an integer or a/b rational
inline Term parse_term(Cursor& c) {
    c.skip_ws();
    Rat coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        int64 num = c.integer();
        int64 den = 1;
        c.skip_ws();
        if (c.peek() == '/') {
            ++c.pos;
            den = c.integer();
            if (den == 0) c.fail("a nonzero denominator");
        }
        coeff = Rat(static_cast<long>(num), static_cast<long>(den));
        coeff.canonicalize();
        have_coeff = true;
        c.skip_ws();
        if (c.peek() == '*') {
            ++c.pos;
            c.skip_ws();
        }
    }
    if (c.peek() == 't') {
        ++c.pos;
        int64 exp = 1;
        c.skip_ws();
        if (c.peek() == '^') {
            ++c.pos;
            exp = c.integer();
        }
        return {exp, coeff};
    }
    if (!have_coeff) c.fail("a term like 2*t^3, t^3 or a constant");
    return {0, coeff};  // bare constant; the curve type rejects nonzero ones
}

inline SparsePoly parse_poly(Cursor& c) {
    std::vector<Term> terms;
    c.skip_ws();
    int sign = 1;
    if (c.peek() == '-') {
        sign = -1;
        ++c.pos;
    } else if (c.peek() == '+') {
        ++c.pos;
    }
    for (;;) {
        Term t = parse_term(c);
        t.coeff *= sign;
        terms.push_back(std::move(t));
        c.skip_ws();
        if (c.peek() == '+') {
            sign = 1;
            ++c.pos;
        } else if (c.peek() == '-') {
            sign = -1;
            ++c.pos;
        } else {
            break;
        }
    }
    return SparsePoly(std::move(terms));
}

}  // namespace detail

/*
 * Curve text: `x = <poly>; y = <poly>; ...` with distinct coordinate names.
 * Polynomials are +/- separated sums of c*t^k, t^k and rational constants.
 */
inline ParamCurve parse_curve(const std::string& text) {
    detail::Cursor c{text};
    std::vector<std::string> names;
    std::vector<SparsePoly> coords;
    for (;;) {
        c.skip_ws();
        if (c.done()) break;
        size_t start = c.pos;
        while (!c.done() && (std::isalnum(static_cast<unsigned char>(c.peek())) || c.peek() == '_'))
            ++c.pos;
        if (c.pos == start) c.fail("a coordinate name");
        std::string name = text.substr(start, c.pos - start);
        if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_')
            detail::Cursor{text, start}.fail("a coordinate name starting with a letter");
        for (const auto& n : names)
            if (n == name)
                raise(errc::duplicate_coordinate, "coordinate '" + name + "' appears twice");
        c.skip_ws();
        if (c.peek() != '=') c.fail("'='");
        ++c.pos;
        names.push_back(std::move(name));
        coords.push_back(detail::parse_poly(c));
        c.skip_ws();
        if (c.peek() == ';') {
            ++c.pos;
            continue;
        }
        if (!c.done()) c.fail("';' or end of input");
    }
    if (names.empty()) detail::Cursor{text, 0}.fail("a coordinate assignment");
    return ParamCurve(std::move(names), std::move(coords));
}

}  // namespace sgforge
