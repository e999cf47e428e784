#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "smt/geometry.hpp"

namespace smt::cli {

class InstanceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A problem instance as read from a JSON file or from inline coordinates.
/// For `loci`, terminals are the fixed P1, P2, P4 and `path` is the polyline
/// followed by P3.
struct Instance {
    std::vector<Point> terminals;
    std::vector<std::string> labels;
    std::optional<double> eps_geom;
    std::optional<double> eps_solve;
    std::vector<Point> path;
    std::optional<std::size_t> samples;
};

Instance parse_instance(std::string_view text);
Instance load_instance(const std::filesystem::path& file);

/// Pairs up a flat coordinate list: x1 y1 x2 y2 ...
std::vector<Point> points_from_numbers(const std::vector<double>& values);

/// Parses "x,y x,y ..." (separators: whitespace or ';').
std::vector<Point> parse_point_list(std::string_view text);

/// Labels or the defaults P1, P2, ... when absent.
std::vector<std::string> labels_or_default(const Instance& inst, std::size_t count);

}  // namespace smt::cli
