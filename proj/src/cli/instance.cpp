#include "smt/cli/instance.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace smt::cli {

namespace {

using nlohmann::json;

Point point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw InstanceError("a point must be a two-element numeric array [x, y]");
    }
    const double x = j[0].get<double>();
    const double y = j[1].get<double>();
    if (!std::isfinite(x) || !std::isfinite(y)) throw InstanceError("point coordinates must be finite");
    return {x, y};
}

std::vector<Point> points_from_json(const json& j, const char* key) {
    if (!j.is_array()) throw InstanceError(std::string("'") + key + "' must be an array of points");
    std::vector<Point> out;
    for (const auto& p : j) out.push_back(point_from_json(p));
    return out;
}

}  // namespace

Instance parse_instance(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InstanceError(std::string("instance is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw InstanceError("instance must be a JSON object");
    if (!j.contains("terminals")) throw InstanceError("instance has no 'terminals'");

    Instance inst;
    inst.terminals = points_from_json(j.at("terminals"), "terminals");
    if (inst.terminals.size() < 3 || inst.terminals.size() > 4) {
        throw InstanceError("instance needs 3 or 4 terminals");
    }
    if (j.contains("labels")) {
        for (const auto& l : j.at("labels")) {
            if (!l.is_string()) throw InstanceError("labels must be strings");
            inst.labels.push_back(l.get<std::string>());
        }
        if (inst.labels.size() != inst.terminals.size()) {
            throw InstanceError("label count must match terminal count");
        }
    }
    if (j.contains("tolerance")) {
        const auto& t = j.at("tolerance");
        if (t.contains("eps_geom")) inst.eps_geom = t.at("eps_geom").get<double>();
        if (t.contains("eps_solve")) inst.eps_solve = t.at("eps_solve").get<double>();
    }
    if (j.contains("path")) inst.path = points_from_json(j.at("path"), "path");
    if (j.contains("samples")) {
        const auto& s = j.at("samples");
        if (!s.is_number_unsigned() || s.get<std::size_t>() == 0) {
            throw InstanceError("'samples' must be a positive integer");
        }
        inst.samples = s.get<std::size_t>();
    }
    return inst;
}

Instance load_instance(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw InstanceError("cannot open instance file " + file.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_instance(ss.str());
}

std::vector<Point> points_from_numbers(const std::vector<double>& values) {
    if (values.size() % 2 != 0) throw InstanceError("coordinates must come in x y pairs");
    std::vector<Point> out;
    for (std::size_t i = 0; i < values.size(); i += 2) {
        if (!std::isfinite(values[i]) || !std::isfinite(values[i + 1])) {
            throw InstanceError("point coordinates must be finite");
        }
        out.emplace_back(values[i], values[i + 1]);
    }
    return out;
}

std::vector<Point> parse_point_list(std::string_view text) {
    std::string s(text);
    for (char& c : s) {
        if (c == ';') c = ' ';
    }
    std::istringstream in(s);
    std::vector<Point> out;
    std::string token;
    while (in >> token) {
        const auto comma = token.find(',');
        if (comma == std::string::npos) throw InstanceError("expected x,y in point list, got '" + token + "'");
        try {
            std::size_t used_x = 0;
            std::size_t used_y = 0;
            const std::string xs = token.substr(0, comma);
            const std::string ys = token.substr(comma + 1);
            const double x = std::stod(xs, &used_x);
            const double y = std::stod(ys, &used_y);
            if (used_x != xs.size() || used_y != ys.size()) throw std::invalid_argument(token);
            out.push_back(points_from_numbers({x, y}).front());
        } catch (const std::logic_error&) {
            throw InstanceError("malformed point '" + token + "'");
        }
    }
    if (out.empty()) throw InstanceError("point list is empty");
    return out;
}

std::vector<std::string> labels_or_default(const Instance& inst, std::size_t count) {
    if (inst.labels.size() == count) return inst.labels;
    std::vector<std::string> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back("P" + std::to_string(i + 1));
    return out;
}

}  // namespace smt::cli
