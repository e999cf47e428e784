#pragma once

#include <string>
#include <vector>

#include "smt/fermat3.hpp"
#include "smt/geometry.hpp"

namespace smt::cli {

/// Minimal SVG 1.1 figure builder. Every added object becomes exactly one
/// element carrying the given id; world y points up. Coordinates are
/// written with 6 decimals.
class SvgFigure {
public:
    enum class Stroke { Solid, Dashed, Dotted };

    void add_point(const std::string& id, const Point& p, const std::string& color = "black");
    void add_label(const std::string& id, const Point& p, const std::string& text);
    void add_segment(const std::string& id, const Point& a, const Point& b, const std::string& color = "black",
                     Stroke stroke = Stroke::Solid);
    void add_circle(const std::string& id, const Circle& c, const std::string& color = "gray",
                    Stroke stroke = Stroke::Dashed);
    void add_polyline(const std::string& id, const std::vector<Point>& pts, const std::string& color = "black",
                      Stroke stroke = Stroke::Solid);

    std::size_t element_count() const { return items_.size(); }
    std::string render() const;

private:
    enum class Kind { PointMark, Label, Segment, CircleShape, Polyline };
    struct Item {
        Kind kind;
        std::string id;
        std::vector<Point> pts;
        double radius = 0.0;
        std::string color;
        std::string text;
        Stroke stroke = Stroke::Solid;
    };

    void extend(const Point& p);

    std::vector<Item> items_;
    bool has_bounds_ = false;
    double min_x_ = 0.0, min_y_ = 0.0, max_x_ = 0.0, max_y_ = 0.0;
};

}  // namespace smt::cli
