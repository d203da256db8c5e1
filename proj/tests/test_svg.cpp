#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "sgforge/svg.hpp"

using namespace sgforge;

TEST_CASE("rendering is byte stable and counts match the enumeration") {
    auto a = render_kite_svg(31);
    auto b = render_kite_svg(31);
    CHECK(a.svg == b.svg);
    CHECK(a.points == static_cast<int64>(enumerate_points(31).size()));
    CHECK(a.me2 + a.me3 + a.me4 == a.points);
}

TEST_CASE("small bounds") {
    auto r = render_kite_svg(5);
    CHECK(r.points == 0);
    CHECK(r.svg.find("<polygon") != std::string::npos);
    CHECK(r.svg.find("<circle") == std::string::npos);

    r = render_kite_svg(7);
    CHECK(r.points == 1);
    CHECK(r.me4 == 1);

    // 5 interior points fail the me three criterion; 3 facet semigroups are
    // not planar
    r = render_kite_svg(11);
    CHECK(r.points == 8);
    CHECK(r.me4 == 5);
    CHECK(r.me3 == 3);
    CHECK(r.me2 == 0);

    CHECK_THROWS_AS(render_kite_svg(4), error);
}

TEST_CASE("file emission") {
    std::string path = "kite_test_out.svg";
    auto r1 = emit_kite_svg(15, path);
    std::ifstream in1(path, std::ios::binary);
    std::stringstream buf1;
    buf1 << in1.rdbuf();
    CHECK(buf1.str() == r1.svg);

    auto r2 = emit_kite_svg(15, path);
    CHECK(r1.svg == r2.svg);
    std::remove(path.c_str());

    CHECK_THROWS_AS(emit_kite_svg(15, "no_such_dir/x.svg"), error);
}
