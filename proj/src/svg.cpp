#include "patchwork/svg.hpp"

#include <algorithm>
#include <sstream>

#include "patchwork/error.hpp"

namespace patchwork {

namespace {

constexpr int kUnit = 20;  // pixels per lattice unit; even so edge midpoints stay integral
constexpr int kPad = 20;

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

struct Frame {
    int x0, y0, x1, y1;  // lattice bounding box of what is drawn
    int px(int x) const { return kPad + (x - x0) * kUnit; }
    int py(int y) const { return kPad + (y1 - y) * kUnit; }
    int width() const { return 2 * kPad + (x1 - x0) * kUnit; }
    int height() const { return 2 * kPad + (y1 - y0) * kUnit; }
    // half-unit coordinates, used for midpoints
    int hx(int x2) const { return kPad + (x2 - 2 * x0) * kUnit / 2; }
    int hy(int y2) const { return kPad + (2 * y1 - y2) * kUnit / 2; }
};

Frame bbox(const std::vector<Point>& pts, bool mirrored) {
    Frame f{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
    for (Point p : pts) {
        f.x0 = std::min(f.x0, p.x);
        f.y0 = std::min(f.y0, p.y);
        f.x1 = std::max(f.x1, p.x);
        f.y1 = std::max(f.y1, p.y);
    }
    if (mirrored) {
        int mx = std::max(std::abs(f.x0), std::abs(f.x1)), my = std::max(std::abs(f.y0), std::abs(f.y1));
        f = {-mx, -my, mx, my};
    }
    return f;
}

void header(std::ostringstream& out, const Frame& f, const std::string& title) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << f.width()
        << "\" height=\"" << f.height() << "\" viewBox=\"0 0 " << f.width() << " " << f.height()
        << "\">\n<title>" << title << "</title>\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

std::string polygon_points(const Frame& f, const std::vector<Point>& pts) {
    std::ostringstream s;
    for (size_t i = 0; i < pts.size(); ++i) s << (i ? " " : "") << f.px(pts[i].x) << "," << f.py(pts[i].y);
    return s.str();
}

void draw_edges(std::ostringstream& out, const Frame& f, const Configuration& c) {
    out << "<g stroke=\"#999\" stroke-width=\"1\">\n";
    for (int e = 0; e < (int)c.tri.edges.size(); ++e) {
        if (c.twists[e]) continue;
        Point a = c.tri.points[c.tri.edges[e][0]], b = c.tri.points[c.tri.edges[e][1]];
        out << "<line x1=\"" << f.px(a.x) << "\" y1=\"" << f.py(a.y) << "\" x2=\"" << f.px(b.x)
            << "\" y2=\"" << f.py(b.y) << "\"/>\n";
    }
    out << "</g>\n<g stroke=\"#c00\" stroke-width=\"3\" class=\"twists\">\n";
    for (int e : members(c.twists)) {
        Point a = c.tri.points[c.tri.edges[e][0]], b = c.tri.points[c.tri.edges[e][1]];
        out << "<line x1=\"" << f.px(a.x) << "\" y1=\"" << f.py(a.y) << "\" x2=\"" << f.px(b.x)
            << "\" y2=\"" << f.py(b.y) << "\"/>\n";
    }
    out << "</g>\n";
}

std::string subdivision(const Configuration& c) {
    Frame f = bbox(c.tri.points, false);
    std::ostringstream out;
    header(out, f, "subdivision");
    out << "<polygon points=\"" << polygon_points(f, c.tri.polygon)
        << "\" fill=\"#f4f4f4\" stroke=\"black\" stroke-width=\"2\"/>\n";
    draw_edges(out, f, c);
    out << "<g stroke=\"black\" stroke-width=\"1\">\n";
    for (size_t i = 0; i < c.tri.points.size(); ++i) {
        Point p = c.tri.points[i];
        out << "<circle cx=\"" << f.px(p.x) << "\" cy=\"" << f.py(p.y) << "\" r=\"4\" fill=\""
            << (c.signs[i] > 0 ? "black" : "white") << "\"/>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

std::string zones_view(const Configuration& c, const ZoneDecomposition& z) {
    Frame f = bbox(c.tri.points, false);
    std::ostringstream out;
    header(out, f, "zones");
    out << "<g stroke=\"none\">\n";
    for (int t = 0; t < (int)c.tri.triangles.size(); ++t) {
        int zone = z.zone[t];
        const char* fill = zone == z.special ? "#ffe08a" : z.color[zone] == 1 ? "#cfe3f7" : "#7fa7cf";
        std::vector<Point> tri;
        for (int v : c.tri.triangles[t]) tri.push_back(c.tri.points[v]);
        out << "<polygon points=\"" << polygon_points(f, tri) << "\" fill=\"" << fill
            << "\" data-zone=\"" << zone << "\"/>\n";
    }
    out << "</g>\n";
    draw_edges(out, f, c);
    out << "<polygon points=\"" << polygon_points(f, c.tri.polygon)
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n</svg>\n";
    return out.str();
}

std::string realpart_view(const Configuration& c, const Analysis& a) {
    std::vector<Point> all;
    for (Point p : c.tri.points) all.push_back(p);
    Frame f = bbox(all, true);
    std::ostringstream out;
    header(out, f, "real part");
    auto reflect = [](Point p, int eps) {
        return Point{(eps & 1) ? -p.x : p.x, (eps & 2) ? -p.y : p.y};
    };
    for (int eps = 0; eps < 4; ++eps) {
        std::vector<Point> poly;
        for (Point p : c.tri.polygon) poly.push_back(reflect(p, eps));
        out << "<polygon points=\"" << polygon_points(f, poly)
            << "\" fill=\"none\" stroke=\"#bbb\" stroke-width=\"1\"/>\n";
    }
    const auto& rp = a.real.real;
    std::vector<std::ostringstream> paths(rp.count());
    auto mid = [&](int e, int eps) {
        Point s = c.tri.points[c.tri.edges[e][0]] + c.tri.points[c.tri.edges[e][1]];
        return reflect(s, eps);  // doubled coordinates
    };
    for (int t = 0; t < (int)c.tri.triangles.size(); ++t) {
        auto es = c.tri.triangle_edges(t);
        for (int eps = 0; eps < 4; ++eps) {
            std::vector<int> in;
            for (int e : es)
                if (rp.phases[e][0] == eps || rp.phases[e][1] == eps) in.push_back(e);
            if (in.size() != 2) continue;
            int k = rp.component[2 * in[0] + (rp.phases[in[0]][0] == eps ? 0 : 1)];
            Point p = mid(in[0], eps), q = mid(in[1], eps);
            paths[k] << "M" << f.hx(p.x) << " " << f.hy(p.y) << "L" << f.hx(q.x) << " " << f.hy(q.y);
        }
    }
    for (int k = 0; k < rp.count(); ++k) {
        bool odd = a.real.nest && a.real.nest->oval_depth[k] % 2 == 1;
        out << "<path d=\"" << paths[k].str() << "\" fill=\"none\" stroke=\""
            << kPalette[k % 10] << "\" stroke-width=\"2\"" << (odd ? " stroke-dasharray=\"4 3\"" : "")
            << " data-component=\"" << k << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace

std::string render_svg(const Configuration& c, const Analysis& a, const std::string& view) {
    if (view == "subdivision") return subdivision(c);
    if (view == "zones") {
        if (!a.zones) throw Error(Code::ViewUnavailable, "no zone decomposition: " + a.zones_error);
        return zones_view(c, *a.zones);
    }
    if (view == "realpart") return realpart_view(c, a);
    throw Error(Code::ViewUnavailable, "unknown view '" + view + "'");
}

}  // namespace patchwork
