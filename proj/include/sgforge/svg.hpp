#pragma once

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "sgforge/errors.hpp"
#include "sgforge/honest.hpp"
#include "sgforge/kunz.hpp"

namespace sgforge {

/*
 * All layout and color constants live here so output bytes depend only on
 * the bound.
 */
struct KiteStyle {
    static constexpr int width = 600;
    static constexpr int height = 700;
    static constexpr double origin_x = 300.0;
    static constexpr double origin_y = 250.0;
    static constexpr double scale = 900.0;
    static constexpr double point_radius = 4.0;
    static constexpr const char* background = "#ffffff";
    static constexpr const char* outline = "#24292f";
    static constexpr const char* me2_color = "#1f6feb";
    static constexpr const char* me3_color = "#2da44e";
    static constexpr const char* me4_color = "#cf222e";
};

struct KiteRender {
    std::string svg;
    int64 points = 0;
    int64 me2 = 0;
    int64 me3 = 0;
    int64 me4 = 0;
};

namespace detail {

inline std::string fixed2(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

inline std::pair<double, double> to_pixel(const KiteCoord& u, const KiteCoord& v) {
    return {KiteStyle::origin_x + u.value() * KiteStyle::scale,
            KiteStyle::origin_y - v.value() * KiteStyle::scale};
}

}  // namespace detail

/*
 * Slice of the cone drawn as the kite quadrilateral, with every admissible
 * point up to the bound plotted at its exact projection and colored by the
 * me verdict of its semigroup.  Output is a pure function of the bound.
 */
inline KiteRender render_kite_svg(int64 bound) {
    if (bound < 5)
        raise(errc::precondition_failed, "bound must be at least 5, the least admissible x1");

    KiteRender r;
    std::string& s = r.svg;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(KiteStyle::width) +
         "\" height=\"" + std::to_string(KiteStyle::height) + "\" viewBox=\"0 0 " +
         std::to_string(KiteStyle::width) + " " + std::to_string(KiteStyle::height) + "\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"" + std::string(KiteStyle::background) +
         "\"/>\n";

    // outline through the projections of the four extreme ray directions
    const std::pair<KiteCoord, KiteCoord> corners[4] = {
        kite_projection(1, 2, 3),  // left
        kite_projection(1, 2, 1),  // top
        kite_projection(3, 2, 1),  // right
        kite_projection(1, 0, 1),  // bottom
    };
    s += "<polygon points=\"";
    for (int i = 0; i < 4; ++i) {
        auto [x, y] = detail::to_pixel(corners[i].first, corners[i].second);
        if (i) s += " ";
        s += detail::fixed2(x) + "," + detail::fixed2(y);
    }
    s += "\" fill=\"none\" stroke=\"" + std::string(KiteStyle::outline) +
         "\" stroke-width=\"1.5\"/>\n";

    MeOptions fast;
    fast.certify = false;
    for (const auto& [p, face] : enumerate_points(bound)) {
        auto verdict = minimal_embedding_dimension(semigroup_of_point(p), fast);
        const char* color = KiteStyle::me4_color;
        if (verdict.lower == 2) {
            color = KiteStyle::me2_color;
            ++r.me2;
        } else if (verdict.lower == 3) {
            color = KiteStyle::me3_color;
            ++r.me3;
        } else {
            ++r.me4;
        }
        ++r.points;
        auto [u, v] = kite_projection(p);
        auto [x, y] = detail::to_pixel(u, v);
        s += "<circle cx=\"" + detail::fixed2(x) + "\" cy=\"" + detail::fixed2(y) + "\" r=\"" +
             detail::fixed2(KiteStyle::point_radius) + "\" fill=\"" + color +
             "\"><title>(" + std::to_string(p.x1) + "," + std::to_string(p.x2) + "," +
             std::to_string(p.x3) + ")</title></circle>\n";
    }

    const std::pair<const char*, const char*> legend[3] = {
        {KiteStyle::me2_color, "me = 2"},
        {KiteStyle::me3_color, "me = 3"},
        {KiteStyle::me4_color, "me = 4"},
    };
    for (int i = 0; i < 3; ++i) {
        int y = 620 + 24 * i;
        s += "<rect x=\"24\" y=\"" + std::to_string(y) + "\" width=\"14\" height=\"14\" fill=\"" +
             std::string(legend[i].first) + "\"/>\n";
        s += "<text x=\"46\" y=\"" + std::to_string(y + 12) +
             "\" font-family=\"monospace\" font-size=\"14\">" + legend[i].second + "</text>\n";
    }
    s += "<text x=\"24\" y=\"32\" font-family=\"monospace\" font-size=\"14\">points with "
         "coordinates up to " +
         std::to_string(bound) + "</text>\n";
    s += "</svg>\n";
    return r;
}

inline KiteRender emit_kite_svg(int64 bound, const std::string& path) {
    KiteRender r = render_kite_svg(bound);
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(errc::io_error, "cannot open " + path + " for writing");
    out << r.svg;
    out.close();
    if (!out) raise(errc::io_error, "failed writing " + path);
    return r;
}

}  // namespace sgforge
