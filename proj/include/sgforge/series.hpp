#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "int_util.hpp"
#include "semigroup.hpp"

namespace sgforge {

using Rat = mpq_class;

constexpr int64 order_infinity = std::numeric_limits<int64>::max();

struct Term {
    int64 exp;
    Rat coeff;
};

namespace detail {

// sorted by exponent, no zero coefficients, optionally cut at trunc
inline void normalize_terms(std::vector<Term>& ts, int64 trunc = order_infinity) {
    std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
    std::vector<Term> out;
    out.reserve(ts.size());
    for (auto& t : ts) {
        if (t.exp > trunc) break;
        if (!out.empty() && out.back().exp == t.exp)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
    }
    ts = std::move(out);
}

}  // namespace detail

// exact polynomial in t over the rationals
class SparsePoly {
public:
    SparsePoly() = default;

    explicit SparsePoly(std::vector<Term> terms) : terms_(std::move(terms)) {
        detail::normalize_terms(terms_);
        for (const auto& t : terms_)
            if (t.exp < 0) raise(errc::invalid_curve, "negative exponent in polynomial");
    }

    static SparsePoly monomial(int64 exp, Rat coeff = Rat(1)) {
        return SparsePoly({{exp, std::move(coeff)}});
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int64 order() const { return terms_.empty() ? order_infinity : terms_.front().exp; }
    int64 degree() const { return terms_.empty() ? -1 : terms_.back().exp; }

    Rat coeff(int64 exp) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                                   [](const Term& t, int64 e) { return t.exp < e; });
        return (it != terms_.end() && it->exp == exp) ? it->coeff : Rat(0);
    }

    bool operator==(const SparsePoly& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].exp != o.terms_[i].exp || terms_[i].coeff != o.terms_[i].coeff) return false;
        return true;
    }

private:
    std::vector<Term> terms_;
};

/*
 * A power series known exactly up to and including exponent trunc().
 * Arithmetic truncates to the smaller window of the two operands, so a
 * result never pretends to more precision than its inputs carry.
 */
class TruncatedSeries {
public:
    TruncatedSeries() : trunc_(0) {}

    static TruncatedSeries zero(int64 trunc) { return TruncatedSeries(trunc, {}); }

    static TruncatedSeries one(int64 trunc) {
        return trunc < 0 ? zero(trunc) : TruncatedSeries(trunc, {{0, Rat(1)}});
    }

    static TruncatedSeries from_poly(const SparsePoly& p, int64 trunc) {
        std::vector<Term> ts;
        for (const auto& t : p.terms()) {
            if (t.exp > trunc) break;
            ts.push_back(t);
        }
        return TruncatedSeries(trunc, std::move(ts));
    }

    int64 trunc() const { return trunc_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // least exponent with a nonzero coefficient within the window
    int64 order() const { return terms_.empty() ? order_infinity : terms_.front().exp; }

    Rat leading_coeff() const { return terms_.empty() ? Rat(0) : terms_.front().coeff; }

    Rat coeff(int64 exp) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                                   [](const Term& t, int64 e) { return t.exp < e; });
        return (it != terms_.end() && it->exp == exp) ? it->coeff : Rat(0);
    }

    TruncatedSeries operator+(const TruncatedSeries& o) const { return combined(o, 1); }
    TruncatedSeries operator-(const TruncatedSeries& o) const { return combined(o, -1); }

    TruncatedSeries operator*(const TruncatedSeries& o) const {
        int64 n = std::min(trunc_, o.trunc_);
        std::map<int64, Rat> acc;
        for (const auto& a : terms_) {
            if (a.exp > n) break;
            for (const auto& b : o.terms_) {
                int64 e = checked_add(a.exp, b.exp);
                if (e > n) break;
                acc[e] += a.coeff * b.coeff;
            }
        }
        std::vector<Term> ts;
        ts.reserve(acc.size());
        for (auto& [e, c] : acc)
            if (sgn(c) != 0) ts.push_back({e, std::move(c)});
        return TruncatedSeries(n, std::move(ts));
    }

    void scale(const Rat& c) {
        if (sgn(c) == 0) {
            terms_.clear();
            return;
        }
        for (auto& t : terms_) t.coeff *= c;
    }

    // *this -= c * o, windows must agree (internal use by the echelon)
    void sub_scaled(const TruncatedSeries& o, const Rat& c) {
        std::vector<Term> out;
        out.reserve(terms_.size() + o.terms_.size());
        size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            if (j == o.terms_.size() || (i < terms_.size() && terms_[i].exp < o.terms_[j].exp)) {
                out.push_back(std::move(terms_[i++]));
            } else if (i == terms_.size() || o.terms_[j].exp < terms_[i].exp) {
                out.push_back({o.terms_[j].exp, -c * o.terms_[j].coeff});
                ++j;
            } else {
                Rat v = terms_[i].coeff - c * o.terms_[j].coeff;
                if (sgn(v) != 0) out.push_back({terms_[i].exp, std::move(v)});
                ++i;
                ++j;
            }
        }
        terms_ = std::move(out);
    }

    TruncatedSeries pow(int64 k) const {
        TruncatedSeries r = one(trunc_);
        for (int64 i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    bool operator==(const TruncatedSeries& o) const {
        if (trunc_ != o.trunc_ || terms_.size() != o.terms_.size()) return false;
        for (size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].exp != o.terms_[i].exp || terms_[i].coeff != o.terms_[i].coeff) return false;
        return true;
    }

private:
    TruncatedSeries(int64 trunc, std::vector<Term> terms)
        : trunc_(trunc), terms_(std::move(terms)) {}

    TruncatedSeries combined(const TruncatedSeries& o, int s) const {
        int64 n = std::min(trunc_, o.trunc_);
        TruncatedSeries r(n, {});
        r.terms_.reserve(terms_.size() + o.terms_.size());
        size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            int64 ea = i < terms_.size() ? terms_[i].exp : order_infinity;
            int64 eb = j < o.terms_.size() ? o.terms_[j].exp : order_infinity;
            int64 e = std::min(ea, eb);
            if (e > n) break;
            Rat v(0);
            if (ea == e) v += terms_[i++].coeff;
            if (eb == e) v += s * o.terms_[j++].coeff;
            if (sgn(v) != 0) r.terms_.push_back({e, std::move(v)});
        }
        return r;
    }

    int64 trunc_;
    std::vector<Term> terms_;
};

/*
 * A parameterized branch: finitely many exact polynomial coordinates, each
 * vanishing at t = 0, at least one of them nonzero.
 */
class ParamCurve {
public:
    ParamCurve(std::vector<std::string> names, std::vector<SparsePoly> coords)
        : names_(std::move(names)), coords_(std::move(coords)) {
        if (names_.size() != coords_.size() || coords_.empty())
            raise(errc::invalid_curve, "need matching coordinate names and polynomials");
        bool any = false;
        for (size_t i = 0; i < coords_.size(); ++i) {
            if (sgn(coords_[i].coeff(0)) != 0)
                raise(errc::nonzero_constant_term,
                      "coordinate " + names_[i] + " does not vanish at t = 0");
            if (!coords_[i].is_zero()) any = true;
        }
        if (!any) raise(errc::invalid_curve, "all coordinates are identically zero");
    }

    size_t dim() const { return coords_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<SparsePoly>& coords() const { return coords_; }

    // largest exponent appearing in any coordinate
    int64 max_degree() const {
        int64 d = 0;
        for (const auto& c : coords_) d = std::max(d, c.degree());
        return d;
    }

    bool operator==(const ParamCurve& o) const {
        return names_ == o.names_ && coords_ == o.coords_;
    }

private:
    std::vector<std::string> names_;
    std::vector<SparsePoly> coords_;
};

// polynomial in the curve's coordinates, e.g. y^2 - x^3
class MonomialPolynomial {
public:
    MonomialPolynomial() = default;

    void add_term(std::vector<int> exps, Rat coeff) {
        while (!exps.empty() && exps.back() == 0) exps.pop_back();
        auto [it, fresh] = terms_.try_emplace(std::move(exps), coeff);
        if (!fresh) {
            it->second += coeff;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

private:
    std::map<std::vector<int>, Rat> terms_;
};

// substitute the curve's coordinates into p, exact up to exponent n
inline TruncatedSeries pullback(const MonomialPolynomial& p, const ParamCurve& c, int64 n) {
    TruncatedSeries acc = TruncatedSeries::zero(n);
    for (const auto& [exps, coeff] : p.terms()) {
        if (exps.size() > c.dim())
            raise(errc::precondition_failed, "certificate uses more variables than the curve has");
        TruncatedSeries prod = TruncatedSeries::one(n);
        for (size_t i = 0; i < exps.size() && !prod.is_zero(); ++i)
            if (exps[i] > 0)
                prod = prod * TruncatedSeries::from_poly(c.coords()[i], n).pow(exps[i]);
        prod.scale(coeff);
        acc = acc + prod;
    }
    return acc;
}

/*
 * Row echelon staircase keyed by leading exponent.  Inserting a series
 * reduces it against the current pivots; if a nonzero remainder survives it
 * becomes the pivot for its leading exponent.  The resulting pivot key set
 * is the set of orders realizable by the row space, independent of the
 * insertion sequence.
 */
class OrderEchelon {
public:
    // returns the newly created pivot order, or nothing if the row vanished;
    // stop_at is an optimization valve: orders >= stop_at are promised to be
    // pivoted already, so reduction past it cannot create anything new
    std::optional<int64> insert(TruncatedSeries row, int64 stop_at = order_infinity) {
        for (;;) {
            int64 o = row.order();
            if (o >= stop_at || o == order_infinity) return std::nullopt;
            auto it = pivots_.find(o);
            if (it == pivots_.end()) {
                Rat lead = row.leading_coeff();
                row.scale(Rat(1) / lead);
                pivots_.emplace(o, std::move(row));
                return o;
            }
            row.sub_scaled(it->second, row.leading_coeff());
        }
    }

    bool has_pivot(int64 o) const { return pivots_.count(o) != 0; }

    std::vector<int64> pivot_orders() const {
        std::vector<int64> out;
        out.reserve(pivots_.size());
        for (const auto& [o, r] : pivots_) out.push_back(o);
        return out;
    }

private:
    std::map<int64, TruncatedSeries> pivots_;
};

constexpr int64 default_pivot_row_cap = 2'000'000;

/*
 * Orders <= n realizable by polynomials pulled back along the curve.
 *
 * Any pullback is a rational combination of pulled-back monomials, and a
 * monomial's exact order is the weighted sum of the coordinate orders, so the
 * monomials with weighted order <= n span everything visible in the window
 * [0, n].  Their truncated rows stream through the echelon as they are
 * enumerated; the pivot exponents are exactly the realizable orders, in
 * whatever order the rows arrive.
 *
 * Pruning: once every order in [tail, n] carries a pivot, a row of weight
 * >= tail can only reduce to zero, and so can its whole subtree, whose
 * weights are even larger.  Pivots are only ever added, so the skip stays
 * valid for the rest of the run.
 */
inline std::vector<int64> value_pivots(const ParamCurve& c, int64 n,
                                       int64 max_rows = default_pivot_row_cap) {
    if (n < 0) raise(errc::precondition_failed, "window bound must be non-negative");

    std::vector<TruncatedSeries> gens;
    std::vector<int64> ords;
    for (const auto& p : c.coords()) {
        if (p.is_zero() || p.order() > n) continue;
        gens.push_back(TruncatedSeries::from_poly(p, n));
        ords.push_back(p.order());
    }

    OrderEchelon ech;
    std::vector<char> has(static_cast<size_t>(n) + 1, 0);
    int64 tail = n + 1;  // every order in [tail, n] has a pivot
    int64 count = 0;
    // one row per monomial in the coordinates, i.e. per multiset of useful
    // generators with total weight <= n
    auto walk = [&](auto&& self, size_t start, int64 weight, const TruncatedSeries& prod) -> void {
        if (weight >= tail) return;
        if (++count > max_rows)
            raise(errc::divergence, "monomial enumeration exceeded " + std::to_string(max_rows) +
                                        " rows; the curve is too large for this window");
        if (auto p = ech.insert(prod, tail)) {
            has[static_cast<size_t>(*p)] = 1;
            while (tail > 0 && has[static_cast<size_t>(tail) - 1]) --tail;
        }
        for (size_t i = start; i < gens.size(); ++i) {
            int64 w = checked_add(weight, ords[i]);
            if (w > n) continue;
            self(self, i, w, prod * gens[i]);
        }
    };
    walk(walk, 0, 0, TruncatedSeries::one(n));
    return ech.pivot_orders();
}

struct OracleOptions {
    int64 trunc_ceiling = 4096;
    int64 max_rows = default_pivot_row_cap;
};

/*
 * The value semigroup of a curve, computed by growing the window until the
 * pivot set provably saturates.
 *
 * Acceptance at window n requires the pivots to agree with the semigroup S
 * generated by them on all of [0, n] and n >= 2 * conductor(S).  That pair
 * of facts forces S to be the full value set: every true value above n
 * exceeds the conductor and so already lies in S.
 *
 * A persistent common factor g > 1 among the pivots is evidence that the
 * parameterization factors through t^g.  A finite window can never prove
 * that, so it is reported only once the scaled-down pivot set has itself
 * saturated and the window has reached half the ceiling.
 */
inline NumericalSemigroup semigroup_of_curve(const ParamCurve& c, const OracleOptions& opts = {}) {
    const int64 ceiling = std::max<int64>(opts.trunc_ceiling, 1);
    int64 n = std::min(4 * c.max_degree(), ceiling);
    for (;;) {
        auto pivots = value_pivots(c, n, opts.max_rows);
        std::vector<int64> vals;
        for (int64 p : pivots)
            if (p > 0) vals.push_back(p);

        if (!vals.empty()) {
            int64 g = gcd_all(vals);
            if (g == 1) {
                auto s = NumericalSemigroup::from_generators(vals);
                if (n >= 2 * s.conductor()) {
                    bool match = true;
                    for (int64 v = 0, i = 0; v <= n && match; ++v) {
                        bool piv = i < static_cast<int64>(pivots.size()) &&
                                   pivots[static_cast<size_t>(i)] == v;
                        if (piv) ++i;
                        if (piv != s.contains(v)) match = false;
                    }
                    if (match) return s;
                }
            } else {
                std::vector<int64> scaled = vals;
                for (int64& v : scaled) v /= g;
                auto t = NumericalSemigroup::from_generators(scaled);
                if (2 * n >= ceiling && n / g >= 2 * t.conductor())
                    raise(errc::not_well_parameterized,
                          "every realizable order is divisible by g = " + std::to_string(g) +
                              "; substitute t -> t^(1/" + std::to_string(g) +
                              ") for a faithful parameterization");
            }
        }

        if (n >= ceiling)
            raise(errc::divergence, "no stable value semigroup within truncation ceiling " +
                                        std::to_string(ceiling));
        n = std::min(checked_mul(n, 2), ceiling);
    }
}

// does the certificate hit the promised order, and is the curve's value
// semigroup exactly s?
inline bool verify_witness(const NumericalSemigroup& s, const ParamCurve& c,
                           const MonomialPolynomial& cert, int64 target,
                           const OracleOptions& opts = {}) {
    if (pullback(cert, c, target).order() != target) return false;
    return semigroup_of_curve(c, opts) == s;
}

// ----- display helpers ----------------------------------------------------

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline std::string poly_to_string(const SparsePoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& t : p.terms()) {
        Rat c = abs(t.coeff);
        bool neg = sgn(t.coeff) < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (t.exp == 0) {
            out += rat_to_string(c);
        } else {
            if (c != 1) out += rat_to_string(c) + "*";
            out += t.exp == 1 ? "t" : "t^" + std::to_string(t.exp);
        }
    }
    return out;
}

inline std::string curve_to_string(const ParamCurve& c) {
    std::string out;
    for (size_t i = 0; i < c.dim(); ++i) {
        if (i) out += "; ";
        out += c.names()[i] + " = " + poly_to_string(c.coords()[i]);
    }
    return out;
}

inline std::string monomial_poly_to_string(const MonomialPolynomial& p,
                                           const std::vector<std::string>& names) {
    if (p.terms().empty()) return "0";
    std::string out;
    for (const auto& [exps, coeff] : p.terms()) {
        Rat c = abs(coeff);
        bool neg = sgn(coeff) < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono;
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += i < names.size() ? names[i] : "v" + std::to_string(i);
            if (exps[i] > 1) mono += "^" + std::to_string(exps[i]);
        }
        if (mono.empty()) {
            out += rat_to_string(c);
        } else {
            if (c != 1) out += rat_to_string(c) + "*";
            out += mono;
        }
    }
    return out;
}

}  // namespace sgforge
