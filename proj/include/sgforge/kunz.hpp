#pragma once

#include <array>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "int_util.hpp"
#include "semigroup.hpp"

namespace sgforge {

/*
 * Lattice points for multiplicity 4.  A point (x1, x2, x3) with x_i > 4 and
 * x_i = i (mod 4) encodes the semigroup generated by {4, x1, x2, x3}: x_i is
 * the least element in residue class i mod 4.  The encoding is faithful
 * exactly on the cone cut out by
 *     x1 + x2 >= x3,  x2 + x3 >= x1,  2*x1 >= x2,  2*x3 >= x2,
 * and the face containing the point determines the embedding dimension.
 */
struct KunzPoint {
    int64 x1, x2, x3;

    KunzPoint(int64 a, int64 b, int64 c) : x1(a), x2(b), x3(c) {
        auto check = [](int64 v, int64 r) {
            if (v <= 4 || v % 4 != r)
                raise(errc::invalid_kunz_point, "coordinate " + std::to_string(v) +
                                                    " must exceed 4 and be congruent to " +
                                                    std::to_string(r) + " mod 4");
        };
        check(x1, 1);
        check(x2, 2);
        check(x3, 3);
    }

    bool operator==(const KunzPoint& o) const { return x1 == o.x1 && x2 == o.x2 && x3 == o.x3; }
    bool operator!=(const KunzPoint& o) const { return !(*this == o); }
};

enum class FaceKind { interior, facet, ray, outside };

inline const char* face_name(FaceKind k) {
    switch (k) {
        case FaceKind::interior: return "interior";
        case FaceKind::facet:    return "facet";
        case FaceKind::ray:      return "ray";
        case FaceKind::outside:  return "outside";
    }
    return "?";
}

enum class KunzIneq { x1_plus_x2_ge_x3, x2_plus_x3_ge_x1, two_x1_ge_x2, two_x3_ge_x2 };

inline const char* binding_name(KunzIneq q) {
    switch (q) {
        case KunzIneq::x1_plus_x2_ge_x3: return "x1+x2=x3";
        case KunzIneq::x2_plus_x3_ge_x1: return "x2+x3=x1";
        case KunzIneq::two_x1_ge_x2:     return "2x1=x2";
        case KunzIneq::two_x3_ge_x2:     return "2x3=x2";
    }
    return "?";
}

struct FaceClass {
    FaceKind kind;
    std::vector<KunzIneq> binding;  // empty unless facet or ray
};

namespace detail {

// rank over Q of an integer matrix with 3 columns
inline int rank3(std::vector<std::array<int64, 3>> rows) {
    int rank = 0;
    for (int col = 0; col < 3 && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(pivot)]);
        auto& pr = rows[static_cast<size_t>(rank)];
        for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
            auto& rr = rows[static_cast<size_t>(r)];
            if (rr[static_cast<size_t>(col)] == 0) continue;
            int64 a = pr[static_cast<size_t>(col)], b = rr[static_cast<size_t>(col)];
            for (int c = 0; c < 3; ++c)
                rr[static_cast<size_t>(c)] = checked_sub(checked_mul(a, rr[static_cast<size_t>(c)]),
                                                         checked_mul(b, pr[static_cast<size_t>(c)]));
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

// pure cone geometry; no congruence requirement on the triple
inline FaceClass classify_triple(int64 x1, int64 x2, int64 x3) {
    struct Constraint {
        KunzIneq tag;
        int64 slack;
        std::array<int64, 3> normal;
    };
    const Constraint cs[4] = {
        {KunzIneq::x1_plus_x2_ge_x3, x1 + x2 - x3, {1, 1, -1}},
        {KunzIneq::x2_plus_x3_ge_x1, x2 + x3 - x1, {-1, 1, 1}},
        {KunzIneq::two_x1_ge_x2, 2 * x1 - x2, {2, -1, 0}},
        {KunzIneq::two_x3_ge_x2, 2 * x3 - x2, {0, -1, 2}},
    };

    std::vector<KunzIneq> binding;
    std::vector<std::array<int64, 3>> normals;
    for (const auto& c : cs) {
        if (c.slack < 0) return {FaceKind::outside, {}};
        if (c.slack == 0) {
            binding.push_back(c.tag);
            normals.push_back(c.normal);
        }
    }
    if (binding.empty()) return {FaceKind::interior, {}};
    // a point on a one-dimensional face has two independent binding normals;
    // rank is computed exactly in case some binding pair ever degenerates
    if (detail::rank3(normals) >= 2) return {FaceKind::ray, std::move(binding)};
    return {FaceKind::facet, std::move(binding)};
}

inline FaceClass classify_face(const KunzPoint& p) { return classify_triple(p.x1, p.x2, p.x3); }

inline NumericalSemigroup semigroup_of_point(const KunzPoint& p) {
    return NumericalSemigroup::from_generators({4, p.x1, p.x2, p.x3});
}

inline KunzPoint kunz_point_of(const NumericalSemigroup& s) {
    if (s.multiplicity() != 4)
        raise(errc::wrong_multiplicity,
              "multiplicity is " + std::to_string(s.multiplicity()) + ", need 4");
    auto ap = s.apery_set(4);
    return KunzPoint(ap[1], ap[2], ap[3]);
}

inline int embedding_dim_from_face(const KunzPoint& p) {
    switch (classify_face(p).kind) {
        case FaceKind::interior: return 4;
        case FaceKind::facet:    return 3;
        case FaceKind::ray:      return 2;
        case FaceKind::outside:  break;
    }
    raise(errc::outside_cone, "point violates a cone inequality");
}

// all admissible points with coordinates at most `bound`, lexicographic
inline std::vector<std::pair<KunzPoint, FaceClass>> enumerate_points(int64 bound) {
    std::vector<std::pair<KunzPoint, FaceClass>> out;
    for (int64 a = 5; a <= bound; a += 4)
        for (int64 b = 6; b <= bound; b += 4)
            for (int64 c = 7; c <= bound; c += 4) {
                KunzPoint p(a, b, c);
                FaceClass f = classify_face(p);
                if (f.kind == FaceKind::outside) continue;
                out.emplace_back(p, std::move(f));
            }
    return out;
}

// exact value num / (den * sqrt(rad)); den > 0 and gcd(|num|, den) = 1
struct KiteCoord {
    int64 num, den, rad;

    double value() const {
        return static_cast<double>(num) /
               (static_cast<double>(den) * std::sqrt(static_cast<double>(rad)));
    }

    bool operator==(const KiteCoord& o) const {
        return num == o.num && den == o.den && rad == o.rad;
    }
};

namespace detail {

inline KiteCoord make_kite_coord(int64 num, int64 den, int64 rad) {
    if (num == 0) return {0, 1, rad};
    int64 g = std::gcd(num < 0 ? -num : num, den);
    return {num / g, den / g, rad};
}

}  // namespace detail

// scale-invariant planar coordinates: normalize to x1+x2+x3 = 1, then take
// u along (1,0,-1)/sqrt(2) and v along (-1,2,-1)/sqrt(6); u < 0 iff x3 > x1
inline std::pair<KiteCoord, KiteCoord> kite_projection(int64 x1, int64 x2, int64 x3) {
    int64 sigma = x1 + x2 + x3;
    return {detail::make_kite_coord(x1 - x3, sigma, 2),
            detail::make_kite_coord(2 * x2 - x1 - x3, sigma, 6)};
}

inline std::pair<KiteCoord, KiteCoord> kite_projection(const KunzPoint& p) {
    return kite_projection(p.x1, p.x2, p.x3);
}

}  // namespace sgforge
