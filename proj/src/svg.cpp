#include "svg.hpp"

#include "overlay_graph.hpp"
#include "xi_bijection.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace hp {

namespace {

struct Box {
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    void add(double x, double y) {
        x0 = std::min(x0, x);
        y0 = std::min(y0, y);
        x1 = std::max(x1, x);
        y1 = std::max(y1, y);
    }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s = buf;
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s == "-0" ? "0" : s;
}

class Canvas {
public:
    Canvas(Box b, const SvgOptions& opt) : box_(b), cell_(opt.cell) {
        box_.x0 -= 1;
        box_.y0 -= 1;
        box_.x1 += 1;
        box_.y1 += 1;
        if (box_.x1 - box_.x0 > opt.max_extent || box_.y1 - box_.y0 > opt.max_extent)
            throw RenderTooLarge("picture spans more than " + std::to_string(opt.max_extent) + " lattice units");
    }

    double sx(double x) const { return (x - box_.x0) * cell_; }
    double sy(double y) const { return (box_.y1 - y) * cell_; }

    void line(double xa, double ya, double xb, double yb, const std::string& style) {
        body_ << "<line x1=\"" << num(sx(xa)) << "\" y1=\"" << num(sy(ya)) << "\" x2=\"" << num(sx(xb)) << "\" y2=\""
              << num(sy(yb)) << "\" " << style << "/>\n";
    }

    // A line y = x + offset clipped to the box.
    void diagonal(double offset, const std::string& style) {
        const double xa = std::max(box_.x0, box_.y0 - offset), xb = std::min(box_.x1, box_.y1 - offset);
        if (xa < xb) line(xa, xa + offset, xb, xb + offset, style);
    }

    void polygon(const std::vector<std::pair<double, double>>& pts, const std::string& style) {
        body_ << "<polygon points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i)
            body_ << (i ? " " : "") << num(sx(pts[i].first)) << ',' << num(sy(pts[i].second));
        body_ << "\" " << style << "/>\n";
    }

    void polyline(const std::vector<Point>& pts, const std::string& style) {
        if (pts.size() < 2) {
            if (pts.size() == 1) dot(pts[0], style);
            return;
        }
        body_ << "<polyline points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) body_ << (i ? " " : "") << num(sx(pts[i].x)) << ',' << num(sy(pts[i].y));
        body_ << "\" fill=\"none\" " << style << "/>\n";
    }

    void dot(Point p, const std::string& style) {
        body_ << "<circle cx=\"" << num(sx(p.x)) << "\" cy=\"" << num(sy(p.y)) << "\" r=\"" << num(cell_ * 0.15) << "\" "
              << style << "/>\n";
    }

    void axes() {
        if (box_.y0 <= 0 && 0 <= box_.y1) line(box_.x0, 0, box_.x1, 0, "stroke=\"#999\" stroke-width=\"1\"");
        if (box_.x0 <= 0 && 0 <= box_.x1) line(0, box_.y0, 0, box_.y1, "stroke=\"#999\" stroke-width=\"1\"");
    }

    std::string finish() const {
        std::ostringstream out;
        const double w = (box_.x1 - box_.x0) * cell_, h = (box_.y1 - box_.y0) * cell_;
        out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(w) << "\" height=\"" << num(h)
            << "\" viewBox=\"0 0 " << num(w) << ' ' << num(h) << "\">\n"
            << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
            << body_.str() << "</svg>\n";
        return out.str();
    }

private:
    Box box_;
    int cell_;
    std::ostringstream body_;
};

const char* path_colour(Colour c) { return c == Colour::blue ? "#1f5fd0" : "#1a9a3a"; }

const char* strip_fill(StripType t) {
    switch (t) {
        case StripType::BB: return "#dbe6fb";
        case StripType::BG: return "#d9efe8";
        case StripType::GB: return "#e9e2f6";
        case StripType::GG: return "#dcf2df";
    }
    return "#eeeeee";
}

std::vector<std::pair<double, double>> region_corners(const EssentialRegion& r) {
    const double c = r.blue_line, K = r.K, xm = r.x_max;
    if (c / 2 > xm) return {};
    return {{c / 2, c / 2}, {(c + K) / 2, (c - K) / 2}, {xm, xm - K}, {xm, xm}};
}

}  // namespace

std::string render_overlay_svg(const FoldedOverlay& o, const SvgOptions& opt) {
    const EssentialRegion region = EssentialRegion::of(o.inst);
    Box box;
    for (const auto& p : o.paths)
        for (Point q : p.pts) box.add(q.x, q.y);
    for (auto [x, y] : region_corners(region)) box.add(x, y);
    box.add(o.inst.N() - 1, o.inst.N() - 1);
    Canvas cv(box, opt);
    cv.axes();

    if (opt.region) {
        const auto corners = region_corners(region);
        if (!corners.empty()) cv.polygon(corners, "fill=\"#f4f1e6\" stroke=\"#c9bf9a\" stroke-width=\"1\"");
    }
    if (opt.columns) {
        try {
            const auto dec = decompose_strips(o);
            const OverlayGraph g = build_graph(o);
            const auto faces = finite_faces(g);
            for (const auto& col : dec.columns)
                for (int s : col.strips) {
                    std::vector<std::pair<double, double>> pts;
                    for (const auto& st : faces[dec.strips[s].face].boundary) pts.emplace_back(st.from.x, st.from.y);
                    cv.polygon(pts, std::string("fill=\"") + strip_fill(col.type) + "\" stroke=\"none\"");
                }
        } catch (const NonStripFace&) {
        }
    }
    cv.diagonal(0, "stroke=\"#555\" stroke-width=\"1\"");
    cv.diagonal(-o.inst.K(), "stroke=\"#b03030\" stroke-width=\"1\" stroke-dasharray=\"6 4\"");

    for (const auto& p : o.paths)
        cv.polyline(p.pts, std::string("stroke=\"") + path_colour(p.colour) + "\" stroke-width=\"3\" stroke-linejoin=\"round\"");
    if (opt.red_paths && !find_involutive_connection(o)) {
        try {
            for (const auto& p : xi_red_paths(o)) cv.polyline(p, "stroke=\"#d02020\" stroke-width=\"1.5\" stroke-dasharray=\"3 2\"");
        } catch (const std::logic_error&) {
        }
    }
    for (const auto& p : o.paths) cv.dot(p.pts.back(), "fill=\"#222\"");
    return cv.finish();
}

std::string render_tuple_svg(const PathTuple& t, int K, const SvgOptions& opt) {
    Box box;
    for (const auto& p : t.paths)
        for (Point q : p.points()) box.add(q.x, q.y);
    Canvas cv(box, opt);
    cv.axes();
    cv.diagonal(0, "stroke=\"#555\" stroke-width=\"1\"");
    cv.diagonal(-K, "stroke=\"#b03030\" stroke-width=\"1\" stroke-dasharray=\"6 4\"");
    for (const auto& p : t.paths) {
        const auto pts = p.points();
        cv.polyline(pts, "stroke=\"#333\" stroke-width=\"2.5\" stroke-linejoin=\"round\"");
        cv.dot(pts.front(), "fill=\"#fff\" stroke=\"#333\"");
        cv.dot(pts.back(), "fill=\"#333\"");
    }
    return cv.finish();
}

}  // namespace hp
