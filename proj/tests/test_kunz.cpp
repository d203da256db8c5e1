#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <set>

#include "sgforge/kunz.hpp"
#include "support/brute.hpp"

using namespace sgforge;

namespace {

bool throws_with(errc code, const std::function<void()>& f) {
    try {
        f();
    } catch (const error& e) {
        return e.code() == code;
    }
    return false;
}

}  // namespace

TEST_CASE("point validation") {
    CHECK_NOTHROW(KunzPoint(5, 6, 7));
    CHECK(throws_with(errc::invalid_kunz_point, [] { KunzPoint(4, 6, 7); }));   // must exceed 4
    CHECK(throws_with(errc::invalid_kunz_point, [] { KunzPoint(6, 5, 7); }));   // wrong residues
    CHECK(throws_with(errc::invalid_kunz_point, [] { KunzPoint(5, 6, 9); }));
}

TEST_CASE("classification fixtures") {
    auto interior = classify_face(KunzPoint(13, 6, 15));
    CHECK(interior.kind == FaceKind::interior);
    CHECK(interior.binding.empty());

    auto facet = classify_face(KunzPoint(13, 6, 19));  // 13 + 6 = 19
    CHECK(facet.kind == FaceKind::facet);
    REQUIRE(facet.binding.size() == 1);
    CHECK(facet.binding[0] == KunzIneq::x1_plus_x2_ge_x3);

    auto facet2 = classify_face(KunzPoint(5, 10, 11));  // 2*5 = 10
    CHECK(facet2.kind == FaceKind::facet);
    REQUIRE(facet2.binding.size() == 1);
    CHECK(facet2.binding[0] == KunzIneq::two_x1_ge_x2);

    auto ray = classify_face(KunzPoint(5, 10, 15));  // on the edge x2 = 2*x1, x3 = 3*x1
    CHECK(ray.kind == FaceKind::ray);
    CHECK(ray.binding.size() == 2);

    auto outside = classify_face(KunzPoint(5, 6, 15));  // 5 + 6 < 15
    CHECK(outside.kind == FaceKind::outside);
}

TEST_CASE("semigroup <-> point round trips") {
    auto s = NumericalSemigroup::from_generators({4, 6, 13});
    auto p = kunz_point_of(s);
    CHECK(p == KunzPoint(13, 6, 19));
    CHECK(classify_face(p).kind == FaceKind::facet);

    CHECK(kunz_point_of(NumericalSemigroup::from_generators({4, 6, 13, 15})) == KunzPoint(13, 6, 15));
    CHECK(kunz_point_of(NumericalSemigroup::from_generators({4, 5, 10, 11})) == KunzPoint(5, 10, 11));
}

TEST_CASE("kunz_point_of requires multiplicity 4") {
    CHECK(throws_with(errc::wrong_multiplicity,
                      [] { kunz_point_of(NumericalSemigroup::from_generators({3, 4, 5})); }));
    CHECK(throws_with(errc::wrong_multiplicity,
                      [] { kunz_point_of(NumericalSemigroup::from_generators({2, 5})); }));
}

TEST_CASE("face class determines embedding dimension") {
    CHECK(embedding_dim_from_face(KunzPoint(13, 6, 15)) == 4);
    CHECK(embedding_dim_from_face(KunzPoint(13, 6, 19)) == 3);
    CHECK(embedding_dim_from_face(KunzPoint(5, 10, 15)) == 2);
    CHECK(throws_with(errc::outside_cone, [] { embedding_dim_from_face(KunzPoint(5, 6, 15)); }));

    // the ray point's semigroup really has two generators
    auto s = semigroup_of_point(KunzPoint(5, 10, 15));
    CHECK(s.minimal_generators() == std::vector<int64>{4, 5});
}

TEST_CASE("enumeration fixtures") {
    CHECK(enumerate_points(5).empty());

    auto seven = enumerate_points(7);
    REQUIRE(seven.size() == 1);
    CHECK(seven[0].first == KunzPoint(5, 6, 7));
    CHECK(seven[0].second.kind == FaceKind::interior);

    auto pts = enumerate_points(11);
    REQUIRE(pts.size() == 8);
    int interior = 0, facet = 0, ray = 0;
    std::set<std::array<int64, 3>> facets;
    for (const auto& [p, f] : pts) {
        if (f.kind == FaceKind::interior) ++interior;
        if (f.kind == FaceKind::facet) {
            ++facet;
            facets.insert({p.x1, p.x2, p.x3});
        }
        if (f.kind == FaceKind::ray) ++ray;
    }
    CHECK(interior == 5);
    CHECK(facet == 3);
    CHECK(ray == 0);
    CHECK(facets == std::set<std::array<int64, 3>>{{5, 6, 11}, {5, 10, 7}, {5, 10, 11}});

    // lexicographic order
    CHECK(pts.front().first == KunzPoint(5, 6, 7));
    CHECK(pts.back().first == KunzPoint(9, 10, 11));
}

TEST_CASE("the encoding is a bijection onto the cone") {
    auto pts = enumerate_points(27);
    std::set<std::vector<int64>> seen;
    for (const auto& [p, f] : pts) {
        auto s = semigroup_of_point(p);
        // round trip is the identity, so distinct points give distinct semigroups
        CHECK(kunz_point_of(s) == p);
        CHECK(seen.insert(s.minimal_generators()).second);
        // face class matches the true embedding dimension
        CHECK(embedding_dim_from_face(p) == s.embedding_dim());
        // coordinates really are the nonzero Apery values
        auto ap = s.apery_set(4);
        CHECK(ap == std::vector<int64>{0, p.x1, p.x2, p.x3});
    }
}

TEST_CASE("outside points are not faithful Apery tuples") {
    // x3 > x1 + x2 makes x3 redundant: the class-3 Apery value of the
    // generated semigroup is x1 + x2, not x3
    KunzPoint p(5, 6, 15);
    REQUIRE(classify_face(p).kind == FaceKind::outside);
    auto s = NumericalSemigroup::from_generators({4, 5, 6, 15});
    CHECK(s.apery_set(4)[3] == 11);
    CHECK(kunz_point_of(s) != p);

    // same on the 2*x1 >= x2 side: x2 > 2*x1 makes x2 redundant
    KunzPoint q(5, 14, 7);
    REQUIRE(classify_face(q).kind == FaceKind::outside);
    auto t = NumericalSemigroup::from_generators({4, 5, 14, 7});
    CHECK(t.apery_set(4)[2] == 10);
}

TEST_CASE("classification is symmetric under swapping x1 and x3") {
    // the swapped triple leaves the congruence lattice, so compare raw triples
    for (const auto& [p, f] : enumerate_points(23)) {
        auto g = classify_triple(p.x3, p.x2, p.x1);
        CHECK(g.kind == f.kind);
        CHECK(g.binding.size() == f.binding.size());
    }
}

TEST_CASE("kite projection") {
    auto [u0, v0] = kite_projection(1, 1, 1);
    CHECK(u0.num == 0);
    CHECK(v0.num == 0);

    auto [u, v] = kite_projection(KunzPoint(5, 6, 7));
    CHECK(u == KiteCoord{-1, 9, 2});
    CHECK(v == KiteCoord{0, 1, 6});

    // u is negative exactly when x3 dominates x1
    auto [u2, v2] = kite_projection(KunzPoint(13, 6, 19));
    CHECK(u2.num < 0);
    auto [u3, v3] = kite_projection(KunzPoint(21, 6, 7));
    CHECK(u3.num > 0);

    // scale invariance: (5,6,7) and 5*(5,6,7) = (25,30,35) project identically
    auto [u4, v4] = kite_projection(KunzPoint(25, 30, 35));
    CHECK(u4 == u);
    CHECK(v4 == v);

    // the four corner directions of the cone's cross-section
    auto [lu, lv] = kite_projection(1, 2, 3);
    CHECK(lu == KiteCoord{-1, 3, 2});
    CHECK(lv == KiteCoord{0, 1, 6});
    auto [tu, tv] = kite_projection(1, 2, 1);
    CHECK(tu == KiteCoord{0, 1, 2});
    CHECK(tv == KiteCoord{1, 2, 6});
    auto [bu, bv] = kite_projection(1, 0, 1);
    CHECK(bu == KiteCoord{0, 1, 2});
    CHECK(bv == KiteCoord{-1, 1, 6});
}
