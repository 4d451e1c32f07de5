#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "fit3d/io.hpp"

namespace fit3d {

namespace {

struct Box3 {
    Vec3 lo;
    Vec3 hi;
};

Box3 inflated_bounds(const PointCloud& cloud) {
    Vec3 lo = cloud.points.front();
    Vec3 hi = lo;
    for (const Vec3& p : cloud.points) {
        lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
        hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
    }
    const Vec3 ext = hi - lo;
    double max_ext = std::max({ext.x, ext.y, ext.z});
    if (max_ext == 0.0) max_ext = 2.0;  // single location: draw a unit-ish box around it
    const auto pad = [max_ext](double e) { return std::max(0.1 * e, 0.05 * max_ext); };
    const Vec3 p{pad(ext.x), pad(ext.y), pad(ext.z)};
    return {lo - p, hi + p};
}

// Slab clipping of the infinite line point + dir*t against the box.
bool clip_line(const Vec3& point, const Vec3& dir, const Box3& box, Vec3& a, Vec3& b) {
    double tmin = -std::numeric_limits<double>::infinity();
    double tmax = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < 3; ++i) {
        if (dir[i] == 0.0) {
            if (point[i] < box.lo[i] || point[i] > box.hi[i]) return false;
            continue;
        }
        double t0 = (box.lo[i] - point[i]) / dir[i];
        double t1 = (box.hi[i] - point[i]) / dir[i];
        if (t0 > t1) std::swap(t0, t1);
        tmin = std::max(tmin, t0);
        tmax = std::min(tmax, t1);
    }
    if (!(tmin <= tmax)) return false;
    a = point + dir * tmin;
    b = point + dir * tmax;
    return true;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string fmt_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

constexpr double kPanel = 320.0;
constexpr double kMargin = 28.0;
constexpr double kLegend = 40.0;

}  // namespace

std::string render_svg(const PointCloud& cloud, const FitResult& result) {
    if (cloud.empty()) throw std::invalid_argument("empty point cloud");
    const Box3 box = inflated_bounds(cloud);
    Vec3 line_a, line_b;
    const bool has_line = clip_line(result.centroid, result.direction, box, line_a, line_b);

    struct Projection {
        std::size_t u;
        std::size_t v;
        const char* name;
    };
    constexpr Projection projections[3] = {{0, 1, "xy"}, {0, 2, "xz"}, {1, 2, "yz"}};

    const double width = 3 * kPanel + 4 * kMargin;
    const double height = kPanel + 2 * kMargin + kLegend;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
        << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
        << "\" fill=\"white\"/>\n";

    for (std::size_t k = 0; k < 3; ++k) {
        const Projection& proj = projections[k];
        const double ox = kMargin + static_cast<double>(k) * (kPanel + kMargin);
        const double oy = kMargin;
        const double wu = box.hi[proj.u] - box.lo[proj.u];
        const double wv = box.hi[proj.v] - box.lo[proj.v];
        const double scale = std::min(kPanel / wu, kPanel / wv);
        const double off_u = (kPanel - scale * wu) / 2.0;
        const double off_v = (kPanel - scale * wv) / 2.0;
        const auto map_x = [&](const Vec3& p) { return ox + off_u + (p[proj.u] - box.lo[proj.u]) * scale; };
        const auto map_y = [&](const Vec3& p) { return oy + kPanel - off_v - (p[proj.v] - box.lo[proj.v]) * scale; };

        svg << "<g>\n"
            << "<rect x=\"" << fmt(ox) << "\" y=\"" << fmt(oy) << "\" width=\"" << fmt(kPanel)
            << "\" height=\"" << fmt(kPanel) << "\" fill=\"none\" stroke=\"#999999\"/>\n"
            << "<text x=\"" << fmt(ox + 6.0) << "\" y=\"" << fmt(oy + 16.0)
            << "\" font-family=\"monospace\" font-size=\"13\">" << proj.name << "</text>\n";
        if (has_line) {
            svg << "<line x1=\"" << fmt(map_x(line_a)) << "\" y1=\"" << fmt(map_y(line_a))
                << "\" x2=\"" << fmt(map_x(line_b)) << "\" y2=\"" << fmt(map_y(line_b))
                << "\" stroke=\"#d62728\" stroke-width=\"1.5\"/>\n";
        }
        for (const Vec3& p : cloud.points) {
            svg << "<circle cx=\"" << fmt(map_x(p)) << "\" cy=\"" << fmt(map_y(p))
                << "\" r=\"3\" fill=\"#1f77b4\" fill-opacity=\"0.8\"/>\n";
        }
        svg << "</g>\n";
    }

    svg << "<text x=\"" << fmt(kMargin) << "\" y=\"" << fmt(kMargin + kPanel + 26.0)
        << "\" font-family=\"monospace\" font-size=\"13\">rms distance = "
        << fmt_g(result.rms_distance) << "   classification = " << to_string(result.classification)
        << "   points = " << result.n_points << "</text>\n"
        << "</svg>\n";
    return svg.str();
}

void emit_svg(const PointCloud& cloud, const FitResult& result, const std::string& path) {
    const std::string body = render_svg(cloud, result);
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open " + path + " for writing");
    file << body;
    file.flush();
    if (!file) throw IoError("write failure on " + path);
}

}  // namespace fit3d
