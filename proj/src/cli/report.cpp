#include "smt/cli/report.hpp"

namespace smt::cli {

namespace {

Json names(const std::vector<DeltaName>& failing) {
    Json a = Json::array();
    for (auto n : failing) a.push_back(to_string(n));
    return a;
}

}  // namespace

Json to_json(const Point& p) { return Json::array({p.x(), p.y()}); }

Json to_json(const Tolerance& tol) {
    Json j;
    j["eps_geom"] = tol.eps_geom;
    j["eps_solve"] = tol.eps_solve;
    return j;
}

Json to_json(const Circle& c) {
    Json j;
    j["center"] = to_json(c.center);
    j["radius"] = c.radius;
    return j;
}

Json to_json(const Scratch4& s) {
    Json j;
    j["tau1"] = s.tau1;
    j["tau2"] = s.tau2;
    j["eta1"] = s.eta1;
    j["eta2"] = s.eta2;
    j["delta"] = s.delta;
    j["delta1"] = s.delta1;
    j["delta2"] = s.delta2;
    j["delta3"] = s.delta3;
    j["delta4"] = s.delta4;
    j["t_quad"] = s.t_quad;
    return j;
}

Json to_json(const Existence& e) {
    Json j;
    j["exists"] = e.exists();
    j["failing"] = names(e.failing);
    return j;
}

Json to_json(const FullTree& t, const std::vector<std::string>& labels) {
    Json j;
    j["topology"] = to_string(t.topology);
    j["s1"] = to_json(t.s1);
    j["s2"] = to_json(t.s2);
    j["length"] = t.length;
    Json edges = Json::array();
    const auto edge = [&](const std::string& from, const std::string& to, double len) {
        Json e;
        e["from"] = from;
        e["to"] = to;
        e["length"] = len;
        edges.push_back(std::move(e));
    };
    edge(labels[t.s1_terminals[0]], "S1", t.edge_lengths[0]);
    edge(labels[t.s1_terminals[1]], "S1", t.edge_lengths[1]);
    edge(labels[t.s2_terminals[0]], "S2", t.edge_lengths[2]);
    edge(labels[t.s2_terminals[1]], "S2", t.edge_lengths[3]);
    edge("S1", "S2", t.edge_lengths[4]);
    j["edges"] = std::move(edges);
    return j;
}

Json to_json(const Smt4Result& r, const std::vector<std::string>& labels) {
    Json j;
    j["has_full_tree"] = r.has_full_tree();
    j["tie"] = r.tie;
    j["length_gap_sq"] = r.length_gap_sq ? Json(*r.length_gap_sq) : Json(nullptr);
    j["chosen"] = r.chosen ? to_json(*r.chosen, labels) : Json(nullptr);
    j["alternate"] = r.alternate ? to_json(*r.alternate, labels) : Json(nullptr);
    j["failing"] = {{"T12_34", names(r.primary_failing)}, {"T41_23", names(r.alternate_failing)}};
    return j;
}

Json to_json(const Solution3& s, const std::vector<std::string>& labels) {
    Json j;
    j["kind"] = s.kind == Solution3Kind::Interior ? "Interior" : "DegenerateAtVertex";
    j["steiner"] = s.steiner ? to_json(*s.steiner) : Json(nullptr);
    j["vertex"] = s.vertex ? Json(labels[*s.vertex]) : Json(nullptr);
    j["kappas"] = s.kappas ? Json::array({(*s.kappas)[0], (*s.kappas)[1], (*s.kappas)[2]}) : Json(nullptr);
    j["s_abs"] = s.s_abs;
    j["length"] = s.length;
    return j;
}

Json to_json(const LocusReport& r) {
    Json j;
    j["c_small"] = to_json(r.c_small);
    j["c_hat"] = to_json(r.c_hat);
    j["q1"] = to_json(r.q1);
    j["i_point"] = to_json(r.i_point);
    j["s_124"] = r.s_124;
    return j;
}

Json to_json(const SweepRow& row) {
    Json j;
    j["p3"] = to_json(row.p3);
    if (row.defect != QuadDefect::None) {
        j["status"] = "invalid_quad";
        j["diagnostic"] = to_string(row.defect);
    } else if (!row.tree) {
        j["status"] = "no_full_tree";
        j["diagnostic"] = names(row.failing);
    } else {
        j["status"] = "ok";
        j["s1"] = to_json(row.tree->s1);
        j["s2"] = to_json(row.tree->s2);
        j["length"] = row.tree->length;
        j["on_c_small"] = row.on_c_small;
        j["on_c_hat"] = row.on_c_hat;
        j["c_small_offset"] = row.c_small_offset;
        j["c_hat_offset"] = row.c_hat_offset;
    }
    return j;
}

Json to_json(const OracleResult& r) {
    Json j;
    j["s1"] = to_json(r.s1);
    j["s2"] = to_json(r.s2);
    j["objective"] = r.objective;
    j["residual_inf"] = r.residual_inf;
    j["iters"] = r.iters;
    j["converged"] = r.converged;
    return j;
}

Json to_json(const Oracle3Result& r) {
    Json j;
    j["steiner"] = to_json(r.steiner);
    j["objective"] = r.objective;
    j["iters"] = r.iters;
    j["converged"] = r.converged;
    return j;
}

Json to_json(const IdentityCheck& c) {
    Json j;
    j["name"] = c.name;
    j["value"] = c.value;
    j["limit"] = c.limit;
    j["passed"] = c.passed;
    return j;
}

Json instance_json(const std::vector<Point>& terminals, const std::vector<std::string>& labels) {
    Json j;
    Json pts = Json::array();
    for (const auto& p : terminals) pts.push_back(to_json(p));
    j["terminals"] = std::move(pts);
    j["labels"] = labels;
    return j;
}

std::string serialize(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace smt::cli
