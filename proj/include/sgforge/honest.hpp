#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "sgforge/errors.hpp"
#include "sgforge/int_util.hpp"
#include "sgforge/kunz.hpp"
#include "sgforge/puiseux.hpp"
#include "sgforge/semigroup.hpp"
#include "sgforge/series.hpp"

namespace sgforge {

enum class MeMethod { smooth, planar_test, theorem1, face_class, teissier_bound, e_chain };

inline const char* me_method_name(MeMethod m) {
    switch (m) {
        case MeMethod::smooth: return "Smooth";
        case MeMethod::planar_test: return "PlanarTest";
        case MeMethod::theorem1: return "Theorem1";
        case MeMethod::face_class: return "FaceClass";
        case MeMethod::teissier_bound: return "TeissierBound";
        case MeMethod::e_chain: return "EChain";
    }
    return "?";
}

struct MeWitness {
    ParamCurve curve;
    MonomialPolynomial certificate;
    int64 certificate_order;  // equals the top Apery value n_3
};

struct MeVerdict {
    int64 lower;
    int64 upper;
    bool exact;
    MeMethod method;
    std::optional<MeWitness> witness;
};

/*
 * Raw form of the multiplicity-4 criterion: me = 3 exactly when the largest
 * coordinate is not x_2 and exceeds twice the smallest.  Symmetric under
 * swapping x_1 and x_3.
 */
inline bool theorem1_condition(int64 x1, int64 x2, int64 x3) {
    int64 mx = std::max({x1, x2, x3});
    int64 mn = std::min({x1, x2, x3});
    return mx != x2 && mx > 2 * mn;
}

// decides me = 3 vs 4 for an interior point (e = 4)
inline bool theorem1_test(const KunzPoint& p) {
    if (classify_face(p).kind != FaceKind::interior)
        raise(errc::not_interior, "point is not interior to the cone");
    return theorem1_condition(p.x1, p.x2, p.x3);
}

/*
 * Which of the six strict orderings of (x_1, x_2, x_3) holds.  The
 * congruences make ties impossible.  Cases 3 and 4 put x_2 on top, so
 * theorem1_condition is false there.
 */
inline int ordering_case(const KunzPoint& p) {
    if (p.x1 < p.x2) {
        if (p.x2 < p.x3) return 1;  // x1 < x2 < x3
        return p.x1 < p.x3 ? 3 : 4;  // x2 on top
    }
    if (p.x2 < p.x3) return p.x1 < p.x3 ? 2 : 5;  // x2 at bottom
    return 6;  // x3 < x2 < x1
}

/*
 * Witness for an me = 3 verdict: three coordinates whose value semigroup is
 * S, plus a certificate polynomial whose pullback has order n_3.
 * With n_1 < n_2 < n_3 the nonzero Apery values and s = n_3 - 2n_1, the
 * curve is x = t^4, y = t^{n_1} + t^{n_1+s}, z = t^{n_2}; the certificate
 * cancels the t^{2n_1} head of y^2 with x^k or x^k z, whichever matches the
 * residue of 2n_1 mod 4.  The oracle re-verifies both claims.
 */
inline MeWitness witness_curve(const NumericalSemigroup& s, const OracleOptions& oracle = {}) {
    if (s.multiplicity() != 4)
        raise(errc::precondition_failed, "witness construction needs multiplicity 4");
    if (s.embedding_dim() != 4)
        raise(errc::precondition_failed, "witness construction needs embedding dimension 4");
    auto ap = s.apery_set(4);
    std::vector<int64> n{ap[1], ap[2], ap[3]};
    std::sort(n.begin(), n.end());
    if (!theorem1_condition(ap[1], ap[2], ap[3]))
        raise(errc::precondition_failed,
              "me is 4 here: need max Apery value off the even class and above twice the min");

    int64 sft = n[2] - 2 * n[0];
    ParamCurve curve({"x", "y", "z"},
                     {SparsePoly(std::vector<Term>{{4, Rat(1)}}),
                      SparsePoly(std::vector<Term>{{n[0], Rat(1)}, {n[0] + sft, Rat(1)}}),
                      SparsePoly(std::vector<Term>{{n[1], Rat(1)}})});

    MonomialPolynomial cert;
    cert.add_term({0, 2, 0}, Rat(1));  // y^2
    if (n[0] % 2 == 0) {
        cert.add_term({static_cast<int>(n[0] / 2), 0, 0}, Rat(-1));  // x^{2n_1/4}
    } else {
        // n_2 is the even value when the test holds and n_1 is odd, and
        // 2n_1 - n_2 is a positive multiple of 4 by the strict inequalities
        cert.add_term({static_cast<int>((2 * n[0] - n[1]) / 4), 0, 1}, Rat(-1));
    }

    if (!verify_witness(s, curve, cert, n[2], oracle))
        raise(errc::witness_verification_failed,
              "constructed curve failed oracle verification for " + curve_to_string(curve));
    return {std::move(curve), std::move(cert), n[2]};
}

struct MeOptions {
    bool certify = true;  // build and oracle-verify witnesses for m=4 me=3
    OracleOptions oracle;
};

/*
 * The decision procedure.  Exact for multiplicity <= 4 and for everything
 * the planarity test settles; otherwise a bracket [3, min(e, d)] where d is
 * the advisory bound when available.
 */
inline MeVerdict minimal_embedding_dimension(const NumericalSemigroup& s,
                                             const MeOptions& opts = {}) {
    const auto& gens = s.minimal_generators();
    int64 e = s.embedding_dim();
    int64 m = s.multiplicity();

    if (e == 1) return {1, 1, true, MeMethod::smooth, std::nullopt};
    if (e == 2) return {2, 2, true, MeMethod::planar_test, std::nullopt};
    if (e == 3) {
        int64 me = teissier_planarity(gens) ? 2 : 3;
        return {me, me, true, MeMethod::planar_test, std::nullopt};
    }
    if (m == 4) {
        // e = 4: the interior criterion is decisive
        if (theorem1_test(kunz_point_of(s))) {
            MeVerdict v{3, 3, true, MeMethod::theorem1, std::nullopt};
            if (opts.certify) v.witness = witness_curve(s, opts.oracle);
            return v;
        }
        return {4, 4, true, MeMethod::theorem1, std::nullopt};
    }

    // m >= 5, e >= 4: exact only when the planarity test settles it
    if (planar_e_bound(gens) && teissier_planarity(gens))
        return {2, 2, true, MeMethod::planar_test, std::nullopt};

    auto d = teissier_upper_bound(gens);
    int64 upper = std::min(e, d.value_or(e));
    MeMethod method = (d && *d < e) ? MeMethod::teissier_bound : MeMethod::e_chain;
    return {3, upper, false, method, std::nullopt};
}

/*
 * Family assertion for S = <4, 6, n_2, n_3>: whenever me = 3, the two odd
 * generators differ by exactly 2.
 */
inline bool four_six_family_check(const NumericalSemigroup& s) {
    const auto& g = s.minimal_generators();
    if (g.size() != 4 || g[0] != 4 || g[1] != 6 || g[2] % 2 == 0 || g[3] % 2 == 0)
        raise(errc::wrong_family, "need minimal generators {4, 6, odd, odd}");
    bool me3 = theorem1_test(kunz_point_of(s));
    return !me3 || g[3] == g[2] + 2;
}

}  // namespace sgforge
