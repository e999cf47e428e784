#include "smt/cli/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace smt::cli {

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s(buf);
    if (s == "-0.000000") s = "0.000000";
    return s;
}

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

void SvgFigure::extend(const Point& p) {
    if (!has_bounds_) {
        min_x_ = max_x_ = p.x();
        min_y_ = max_y_ = p.y();
        has_bounds_ = true;
        return;
    }
    min_x_ = std::min(min_x_, p.x());
    max_x_ = std::max(max_x_, p.x());
    min_y_ = std::min(min_y_, p.y());
    max_y_ = std::max(max_y_, p.y());
}

void SvgFigure::add_point(const std::string& id, const Point& p, const std::string& color) {
    extend(p);
    items_.push_back({Kind::PointMark, id, {p}, 0.0, color, {}, Stroke::Solid});
}

void SvgFigure::add_label(const std::string& id, const Point& p, const std::string& text) {
    extend(p);
    items_.push_back({Kind::Label, id, {p}, 0.0, "black", text, Stroke::Solid});
}

void SvgFigure::add_segment(const std::string& id, const Point& a, const Point& b, const std::string& color,
                            Stroke stroke) {
    extend(a);
    extend(b);
    items_.push_back({Kind::Segment, id, {a, b}, 0.0, color, {}, stroke});
}

void SvgFigure::add_circle(const std::string& id, const Circle& c, const std::string& color, Stroke stroke) {
    extend(Point(c.center.x() - c.radius, c.center.y() - c.radius));
    extend(Point(c.center.x() + c.radius, c.center.y() + c.radius));
    items_.push_back({Kind::CircleShape, id, {c.center}, c.radius, color, {}, stroke});
}

void SvgFigure::add_polyline(const std::string& id, const std::vector<Point>& pts, const std::string& color,
                             Stroke stroke) {
    for (const auto& p : pts) extend(p);
    items_.push_back({Kind::Polyline, id, pts, 0.0, color, {}, stroke});
}

std::string SvgFigure::render() const {
    const double w0 = has_bounds_ ? max_x_ - min_x_ : 1.0;
    const double h0 = has_bounds_ ? max_y_ - min_y_ : 1.0;
    const double extent = std::max({w0, h0, 1e-9});
    const double margin = 0.05 * extent;
    const double line = 0.004 * extent;
    const double dot_r = 0.01 * extent;
    const double font = 0.03 * extent;

    const double vx = (has_bounds_ ? min_x_ : 0.0) - margin;
    const double vy = -(has_bounds_ ? max_y_ : 0.0) - margin;
    const double vw = w0 + 2.0 * margin;
    const double vh = h0 + 2.0 * margin;

    const auto dash = [&](Stroke s) -> std::string {
        switch (s) {
            case Stroke::Solid: return "";
            case Stroke::Dashed: return " stroke-dasharray=\"" + num(4.0 * line) + "," + num(2.0 * line) + "\"";
            case Stroke::Dotted: return " stroke-dasharray=\"" + num(line) + "," + num(line) + "\"";
        }
        return "";
    };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << num(vx) << ' ' << num(vy) << ' '
       << num(vw) << ' ' << num(vh) << "\" width=\"800\" height=\"" << num(800.0 * vh / vw) << "\">\n";
    for (const Item& it : items_) {
        const std::string id = escape(it.id);
        switch (it.kind) {
            case Kind::PointMark:
                os << "  <circle id=\"" << id << "\" cx=\"" << num(it.pts[0].x()) << "\" cy=\"" << num(-it.pts[0].y())
                   << "\" r=\"" << num(dot_r) << "\" fill=\"" << it.color << "\"/>\n";
                break;
            case Kind::Label:
                os << "  <text id=\"" << id << "\" x=\"" << num(it.pts[0].x() + dot_r) << "\" y=\""
                   << num(-it.pts[0].y() - dot_r) << "\" font-size=\"" << num(font) << "\">" << escape(it.text)
                   << "</text>\n";
                break;
            case Kind::Segment:
                os << "  <line id=\"" << id << "\" x1=\"" << num(it.pts[0].x()) << "\" y1=\"" << num(-it.pts[0].y())
                   << "\" x2=\"" << num(it.pts[1].x()) << "\" y2=\"" << num(-it.pts[1].y()) << "\" stroke=\""
                   << it.color << "\" stroke-width=\"" << num(line) << "\"" << dash(it.stroke) << "/>\n";
                break;
            case Kind::CircleShape:
                os << "  <circle id=\"" << id << "\" cx=\"" << num(it.pts[0].x()) << "\" cy=\"" << num(-it.pts[0].y())
                   << "\" r=\"" << num(it.radius) << "\" fill=\"none\" stroke=\"" << it.color << "\" stroke-width=\""
                   << num(line) << "\"" << dash(it.stroke) << "/>\n";
                break;
            case Kind::Polyline: {
                os << "  <polyline id=\"" << id << "\" points=\"";
                for (std::size_t i = 0; i < it.pts.size(); ++i) {
                    if (i) os << ' ';
                    os << num(it.pts[i].x()) << ',' << num(-it.pts[i].y());
                }
                os << "\" fill=\"none\" stroke=\"" << it.color << "\" stroke-width=\"" << num(line) << "\""
                   << dash(it.stroke) << "/>\n";
                break;
            }
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace smt::cli
