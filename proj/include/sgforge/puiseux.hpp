#pragma once

#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sgforge/errors.hpp"
#include "sgforge/int_util.hpp"
#include "sgforge/semigroup.hpp"
#include "sgforge/series.hpp"

namespace sgforge {

/*
 * e_vec[i] = gcd(b_0..b_i), n_vec[i-1] = e_vec[i-1] / e_vec[i].  The n's
 * multiply back to b_0 / e_g.
 */
struct DivisorData {
    std::vector<int64> e_vec;
    std::vector<int64> n_vec;
};

inline DivisorData divisor_factor_vectors(const std::vector<int64>& b) {
    if (b.empty()) raise(errc::not_increasing, "sequence is empty");
    for (size_t i = 0; i < b.size(); ++i) {
        if (b[i] <= 0)
            raise(errc::zero_or_negative, "entry " + std::to_string(b[i]) + " is not positive");
        if (i > 0 && b[i] <= b[i - 1])
            raise(errc::not_increasing, "sequence is not strictly increasing at " +
                                            std::to_string(b[i - 1]) + ", " + std::to_string(b[i]));
    }
    DivisorData d;
    d.e_vec.push_back(b[0]);
    for (size_t i = 1; i < b.size(); ++i) {
        int64 e = std::gcd(d.e_vec.back(), b[i]);
        d.n_vec.push_back(d.e_vec.back() / e);
        d.e_vec.push_back(e);
    }
    return d;
}

struct CharacteristicCheck {
    bool valid;
    std::string reason;  // empty when valid

    explicit operator bool() const { return valid; }
};

/*
 * A sequence is a Puiseux characteristic when it is [1] alone, or starts
 * above 1, strictly increases, and its e-vector strictly decreases down to 1.
 * A pair reduces to coprimality.
 */
inline CharacteristicCheck validate_characteristic(const std::vector<int64>& lam) {
    if (lam.empty()) return {false, "empty sequence"};
    for (int64 v : lam)
        if (v <= 0) return {false, "entries must be positive"};
    if (lam.size() == 1) {
        if (lam[0] == 1) return {true, ""};
        return {false, "a single entry must be 1"};
    }
    if (lam[0] <= 1) return {false, "leading entry must exceed 1"};
    for (size_t i = 1; i < lam.size(); ++i)
        if (lam[i] <= lam[i - 1]) return {false, "sequence is not strictly increasing"};
    auto d = divisor_factor_vectors(lam);
    for (size_t i = 1; i < d.e_vec.size(); ++i)
        if (d.e_vec[i] >= d.e_vec[i - 1])
            return {false, "divisor vector is not strictly decreasing"};
    if (d.e_vec.back() != 1)
        return {false, "divisor vector ends at " + std::to_string(d.e_vec.back()) + ", not 1"};
    return {true, ""};
}

/*
 * b_0 = lambda_0, b_1 = lambda_1, then
 * b_i = lambda_i - lambda_{i-1} + n_{i-1} * b_{i-1}.
 * The output strictly increases and satisfies b_i > lambda_i for i > 1.
 */
inline std::vector<int64> puiseux_to_generators(const std::vector<int64>& lam) {
    auto chk = validate_characteristic(lam);
    if (!chk) raise(errc::invalid_characteristic, chk.reason);
    if (lam.size() == 1) return lam;

    auto d = divisor_factor_vectors(lam);
    std::vector<int64> b{lam[0], lam[1]};
    for (size_t i = 2; i < lam.size(); ++i) {
        int64 bi = checked_add(checked_sub(lam[i], lam[i - 1]),
                               checked_mul(d.n_vec[i - 2], b[i - 1]));
        if (bi <= lam[i])
            raise(errc::invalid_characteristic,
                  "recursion output " + std::to_string(bi) + " does not dominate " +
                      std::to_string(lam[i]));
        b.push_back(bi);
    }
    return b;
}

struct Planarity {
    bool planar;
    int failed_condition;  // 1, 2 or 3; 0 when planar
    std::string detail;

    explicit operator bool() const { return planar; }
};

/*
 * A minimal generator sequence comes from a plane branch exactly when
 *   (1) its e-vector strictly decreases and ends at 1,
 *   (2) n_i*b_i lies in <b_0,..,b_{i-1}> for i = 1..g,
 *   (3) n_i*b_i < b_{i+1} for i = 1..g-1.
 */
inline Planarity teissier_planarity(const std::vector<int64>& b) {
    auto s = NumericalSemigroup::from_generators(b);
    if (s.minimal_generators() != b)
        raise(errc::not_minimal_generators, "input is not a minimal generating sequence");

    auto d = divisor_factor_vectors(b);
    size_t g = b.size() - 1;

    for (size_t i = 1; i < d.e_vec.size(); ++i)
        if (d.e_vec[i] >= d.e_vec[i - 1])
            return {false, 1, "divisor vector is not strictly decreasing"};

    for (size_t i = 1; i <= g; ++i) {
        int64 v = checked_mul(d.n_vec[i - 1], b[i]);
        std::vector<int64> head(b.begin(), b.begin() + static_cast<long>(i));
        if (!subsemigroup_contains(head, v))
            return {false, 2,
                    "n_" + std::to_string(i) + "*b_" + std::to_string(i) + " = " +
                        std::to_string(v) + " is not a sum of earlier generators"};
    }

    for (size_t i = 1; i + 1 <= g; ++i) {
        int64 v = checked_mul(d.n_vec[i - 1], b[i]);
        if (v >= b[i + 1])
            return {false, 3,
                    "n_" + std::to_string(i) + "*b_" + std::to_string(i) + " = " +
                        std::to_string(v) + " is not below " + std::to_string(b[i + 1])};
    }
    return {true, 0, ""};
}

// necessary for planarity: the generator count fits under 1 + Omega(b_0)
inline bool planar_e_bound(const std::vector<int64>& b) {
    if (b.empty()) raise(errc::empty_generators, "no generators given");
    return static_cast<int64>(b.size()) <= 1 + omega(b[0]);
}

/*
 * Advisory bound: when every n_i*b_i is a sum of earlier generators, the
 * embedding obtained by dropping the generators that satisfy the separation
 * condition needs g+1-k coordinates, k the count of separated indices.
 * Nothing here certifies minimality, so callers must treat it as an upper
 * bound only.
 */
inline std::optional<int64> teissier_upper_bound(const std::vector<int64>& b) {
    auto s = NumericalSemigroup::from_generators(b);
    if (s.minimal_generators() != b)
        raise(errc::not_minimal_generators, "input is not a minimal generating sequence");

    auto d = divisor_factor_vectors(b);
    size_t g = b.size() - 1;
    for (size_t i = 1; i <= g; ++i) {
        std::vector<int64> head(b.begin(), b.begin() + static_cast<long>(i));
        if (!subsemigroup_contains(head, checked_mul(d.n_vec[i - 1], b[i]))) return std::nullopt;
    }
    int64 k = 0;
    for (size_t i = 1; i + 1 <= g; ++i)
        if (checked_mul(d.n_vec[i - 1], b[i]) < b[i + 1]) ++k;
    return static_cast<int64>(g) + 1 - k;
}

/*
 * Inverse of the generator recursion, defined on planar inputs:
 * lambda_i = b_i - n_{i-1} * b_{i-1} + lambda_{i-1}.
 */
inline std::vector<int64> generators_to_puiseux(const std::vector<int64>& b) {
    auto pl = teissier_planarity(b);
    if (!pl) raise(errc::not_planar, pl.detail);
    if (b.size() == 1) return b;

    auto d = divisor_factor_vectors(b);
    std::vector<int64> lam{b[0], b[1]};
    for (size_t i = 2; i < b.size(); ++i)
        lam.push_back(checked_add(checked_sub(b[i], checked_mul(d.n_vec[i - 2], b[i - 1])),
                                  lam[i - 1]));
    auto chk = validate_characteristic(lam);
    if (!chk) raise(errc::invalid_characteristic, "inversion failed: " + chk.reason);
    return lam;
}

// A with every multiple of m removed
inline std::set<int64> m_sieve(int64 m, const std::set<int64>& a) {
    if (m < 1) raise(errc::precondition_failed, "sieve modulus must be positive");
    std::set<int64> out;
    for (int64 v : a)
        if (v % m != 0) out.insert(v);
    return out;
}

/*
 * Essential exponents of y(t) against x = t^m: repeatedly sieve the support
 * by the running gcd and take the minimum survivor, until the gcd reaches 1.
 * Exponents that survive no sieve are inessential and never inspected.
 */
inline std::vector<int64> characteristic_from_support(int64 m, const std::set<int64>& support) {
    if (m < 1) raise(errc::precondition_failed, "x must be a positive power of t");
    for (int64 v : support)
        if (v <= 0) raise(errc::zero_or_negative, "support exponents must be positive");
    std::vector<int64> lam{m};
    int64 e = m;
    std::set<int64> cur = support;
    while (e > 1) {
        cur = m_sieve(e, cur);
        if (cur.empty())
            raise(errc::not_well_parameterized,
                  "every exponent is a multiple of " + std::to_string(e) +
                      "; substitute t -> t^(1/" + std::to_string(e) + ")");
        int64 l = *cur.begin();
        lam.push_back(l);
        e = std::gcd(e, l);
    }
    auto chk = validate_characteristic(lam);
    if (!chk) raise(errc::invalid_characteristic, chk.reason);
    return lam;
}

// x = t^{lambda_0}, y = sum of t^{lambda_i}: the simplest curve with this
// characteristic
inline ParamCurve canonical_plane_curve(const std::vector<int64>& lam) {
    auto chk = validate_characteristic(lam);
    if (!chk) raise(errc::invalid_characteristic, chk.reason);
    std::vector<Term> yt;
    for (size_t i = 1; i < lam.size(); ++i) yt.push_back({lam[i], Rat(1)});
    return ParamCurve({"x", "y"},
                      {SparsePoly(std::vector<Term>{{lam[0], Rat(1)}}), SparsePoly(std::move(yt))});
}

}  // namespace sgforge
