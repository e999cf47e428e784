#include "smt/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numeric>
#include <optional>

#include "CLI11.hpp"
#include "smt/batch.hpp"
#include "smt/cli/instance.hpp"
#include "smt/cli/report.hpp"
#include "smt/cli/svg.hpp"
#include "smt/fermat3.hpp"
#include "smt/identities.hpp"
#include "smt/loci.hpp"
#include "smt/oracle.hpp"
#include "smt/steiner4.hpp"

namespace smt::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct CommonOptions {
    std::vector<std::string> inputs;
    std::string svg_path;
    std::string json_path;
    std::optional<double> tol;
    bool timings = false;
};

struct Options {
    CommonOptions common;
    bool verify = false;
    bool normalize = false;
    std::string path;
    std::optional<std::size_t> samples;
    std::string check_point;
};

void add_common(CLI::App* cmd, CommonOptions& c) {
    cmd->add_option("inputs", c.inputs, "Instance file, or inline coordinates x1 y1 x2 y2 ...");
    cmd->add_option("--svg", c.svg_path, "Write an SVG figure to PATH");
    cmd->add_option("--json", c.json_path, "Also write the report to PATH");
    cmd->add_option("--tol", c.tol, "Relative geometric tolerance eps_geom");
    cmd->add_flag("--timings", c.timings, "Include wall-clock timings (makes output non-deterministic)");
}

bool is_number(const std::string& s) {
    try {
        std::size_t used = 0;
        (void)std::stod(s, &used);
        return used == s.size();
    } catch (const std::logic_error&) {
        return false;
    }
}

Instance resolve_instance(const std::vector<std::string>& inputs) {
    if (inputs.empty()) throw InstanceError("no instance given (file or inline coordinates)");
    if (inputs.size() == 1 && !is_number(inputs[0])) return load_instance(inputs[0]);
    std::vector<double> values;
    for (const auto& s : inputs) {
        if (!is_number(s)) throw InstanceError("expected a number, got '" + s + "'");
        values.push_back(std::stod(s));
    }
    Instance inst;
    inst.terminals = points_from_numbers(values);
    return inst;
}

Tolerance resolve_tolerance(const Instance& inst, const std::optional<double>& cli_tol) {
    Tolerance tol;
    if (inst.eps_geom) tol.eps_geom = *inst.eps_geom;
    if (inst.eps_solve) tol.eps_solve = *inst.eps_solve;
    if (cli_tol) {
        tol.eps_geom = *cli_tol;
        tol.eps_solve = std::min(tol.eps_solve, *cli_tol);
    }
    tol.validate();
    return tol;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InstanceError("cannot write " + path);
    f << content;
}

void emit(const Json& report, const CommonOptions& c, std::ostream& out) {
    const std::string text = serialize(report);
    out << text;
    if (!c.json_path.empty()) write_file(c.json_path, text);
}

OracleConfig oracle_config(const Tolerance& tol) {
    OracleConfig cfg;
    cfg.tol = tol;
    return cfg;
}

double elapsed_us(Clock::time_point start) {
    return std::chrono::duration<double, std::micro>(Clock::now() - start).count();
}

std::array<Point, 4> as_quad_points(const std::vector<Point>& pts) {
    if (pts.size() != 4) throw InstanceError("this command needs exactly 4 terminals");
    return {pts[0], pts[1], pts[2], pts[3]};
}

void draw_terminals(SvgFigure& fig, const std::vector<Point>& pts, const std::vector<std::string>& labels) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        fig.add_point("terminal-" + labels[i], pts[i]);
        fig.add_label("label-" + labels[i], pts[i], labels[i]);
    }
}

void draw_tree(SvgFigure& fig, const Quad& q, const FullTree& t, const std::string& prefix,
               const std::vector<std::string>& labels, SvgFigure::Stroke stroke, const std::string& color) {
    fig.add_point(prefix + "-S1", t.s1, color);
    fig.add_point(prefix + "-S2", t.s2, color);
    for (std::size_t k = 0; k < 2; ++k) {
        const auto a = t.s1_terminals[k];
        const auto b = t.s2_terminals[k];
        fig.add_segment(prefix + "-edge-" + labels[a] + "-S1", q[a], t.s1, color, stroke);
        fig.add_segment(prefix + "-edge-" + labels[b] + "-S2", q[b], t.s2, color, stroke);
    }
    fig.add_segment(prefix + "-edge-S1-S2", t.s1, t.s2, color, stroke);
}

// ---------------------------------------------------------------- solve3

int cmd_solve3(const Options& o, std::ostream& out) {
    const auto start = Clock::now();
    const Instance inst = resolve_instance(o.common.inputs);
    if (inst.terminals.size() != 3) throw InstanceError("solve3 needs exactly 3 terminals");
    const Tolerance tol = resolve_tolerance(inst, o.common.tol);
    const auto labels = labels_or_default(inst, 3);
    const auto& p = inst.terminals;

    const Triangle t = Triangle::make(p[0], p[1], p[2], tol);
    const FermatCondition cond = fermat_condition(t, tol);
    const Solution3 sol = solve3(t, tol);

    // The equilateral construction wants the apex outside the triangle.
    const bool ccw = signed_area2(p[0], p[1], p[2]) > 0.0;
    const auto [circle, q1] = ccw ? steiner_circle(p[0], p[1]) : steiner_circle(p[1], p[0]);

    Json report;
    report["command"] = "solve3";
    report["instance"] = instance_json(p, labels);
    report["tolerance"] = to_json(tol);
    Json jc;
    jc["all_sharp"] = cond.all_sharp;
    jc["wide_vertex"] = cond.wide_vertex ? Json(labels[*cond.wide_vertex]) : Json(nullptr);
    jc["margins"] = Json::array({cond.margins[0], cond.margins[1], cond.margins[2]});
    report["fermat_condition"] = std::move(jc);
    report["solution"] = to_json(sol, labels);
    Json cons;
    cons["side"] = ccw ? Json::array({labels[0], labels[1]}) : Json::array({labels[1], labels[0]});
    cons["circle"] = to_json(circle);
    cons["q1"] = to_json(q1);
    cons["q1_p3_distance"] = pairwise_distance(q1, p[2]);
    report["construction"] = std::move(cons);

    int code = kExitOk;
    if (o.verify) {
        const Oracle3Result orc = solve_numeric3(t, oracle_config(tol));
        const double scale = t.scale();
        const Point analytic = sol.steiner ? *sol.steiner : p[*sol.vertex];
        const bool obj_ok = std::abs(orc.objective - sol.length) <= kOracleObjectiveTolerance * scale;
        const bool pt_ok = pairwise_distance(orc.steiner, analytic) <= kOraclePointTolerance * scale;
        Json jo = to_json(orc);
        jo["objective_agrees"] = obj_ok;
        jo["point_agrees"] = pt_ok;
        report["oracle"] = std::move(jo);
        if (!(obj_ok && pt_ok)) code = kExitVerificationFailed;
    }
    if (o.common.timings) report["timings_us"] = {{"total", elapsed_us(start)}};
    emit(report, o.common, out);

    if (!o.common.svg_path.empty()) {
        SvgFigure fig;
        fig.add_circle("circle-c", circle, "gray", SvgFigure::Stroke::Dashed);
        fig.add_point("point-Q1", q1, "gray");
        fig.add_segment("simpson-Q1-" + labels[2], q1, p[2], "gray", SvgFigure::Stroke::Dotted);
        if (sol.steiner) {
            fig.add_point("steiner-S", *sol.steiner, "red");
            for (std::size_t i = 0; i < 3; ++i) {
                fig.add_segment("edge-" + labels[i] + "-S", p[i], *sol.steiner, "red");
            }
        } else {
            const std::size_t j = *sol.vertex;
            for (std::size_t i = 0; i < 3; ++i) {
                if (i != j) fig.add_segment("edge-" + labels[j] + "-" + labels[i], p[j], p[i], "red");
            }
        }
        draw_terminals(fig, p, labels);
        write_file(o.common.svg_path, fig.render());
    }
    return code;
}

// ---------------------------------------------------------------- solve4

Json oracle_block(const Quad& q, const FullTree& tree, const Tolerance& tol, bool& agrees) {
    // The oracle only knows T12_34; the alternate is checked on the relabeled quad.
    const bool primary = tree.topology == Topology::T12_34;
    const Quad qq = primary ? q : q.rotated();
    const Point s1 = primary ? tree.s1 : tree.s2;
    const Point s2 = primary ? tree.s2 : tree.s1;
    const OracleResult orc = solve_numeric(qq, oracle_config(tol));
    const double scale = q.scale();
    const bool obj_ok = std::abs(orc.objective - tree.length) <= kOracleObjectiveTolerance * scale;
    const bool pt_ok = std::max(pairwise_distance(orc.s1, s1), pairwise_distance(orc.s2, s2)) <=
                       kOraclePointTolerance * scale;
    agrees = obj_ok && pt_ok;
    Json j;
    j["topology"] = to_string(tree.topology);
    j["result"] = to_json(orc);
    j["objective_agrees"] = obj_ok;
    j["points_agree"] = pt_ok;
    return j;
}

int cmd_solve4(const Options& o, std::ostream& out) {
    const auto start = Clock::now();
    const Instance inst = resolve_instance(o.common.inputs);
    const auto input_pts = as_quad_points(inst.terminals);
    const Tolerance tol = resolve_tolerance(inst, o.common.tol);
    const auto input_labels = labels_or_default(inst, 4);

    std::array<std::size_t, 4> perm{0, 1, 2, 3};
    std::array<Point, 4> pts = input_pts;
    if (o.normalize) {
        const Normalized n = normalize_ccw(input_pts, tol);
        perm = n.permutation;
        pts = n.points;
    }
    std::vector<std::string> labels;
    for (auto k : perm) labels.push_back(input_labels[k]);

    const Quad q = validate_quad(pts, tol);
    const Smt4Result res = solve_smt4(q, tol);
    const auto [q1, q2] = q_points(q);

    Json report;
    report["command"] = "solve4";
    report["instance"] = instance_json(inst.terminals, input_labels);
    report["tolerance"] = to_json(tol);
    Json norm;
    norm["applied"] = o.normalize;
    norm["permutation"] = Json::array();
    for (auto k : perm) norm["permutation"].push_back(k + 1);
    norm["order"] = labels;
    report["normalization"] = std::move(norm);
    report["diagonal_angle"] = diagonal_angle(q);
    report["scratch"] = {{"T12_34", to_json(scratch(q))}, {"T41_23", to_json(scratch(q.rotated()))}};
    report["existence"] = {{"T12_34", to_json(existence(q, tol))}, {"T41_23", to_json(existence(q.rotated(), tol))}};
    report["solution"] = to_json(res, labels);
    Json cons;
    cons["q1"] = to_json(q1);
    cons["q2"] = to_json(q2);
    cons["q1_q2_distance"] = pairwise_distance(q1, q2);
    cons["length_via_diagonals"] = length_via_diagonals(q);
    report["construction"] = std::move(cons);

    int code = res.has_full_tree() ? kExitOk : kExitNoFullTree;
    if (o.verify && res.has_full_tree()) {
        bool agrees = true;
        report["oracle"] = oracle_block(q, *res.chosen, tol, agrees);
        if (!agrees) code = kExitVerificationFailed;
    }
    if (o.common.timings) report["timings_us"] = {{"total", elapsed_us(start)}};
    emit(report, o.common, out);

    if (!o.common.svg_path.empty()) {
        SvgFigure fig;
        std::vector<Point> outline(pts.begin(), pts.end());
        outline.push_back(pts[0]);
        fig.add_polyline("quad-outline", outline, "lightgray", SvgFigure::Stroke::Solid);
        fig.add_circle("circle-P1P2Q1", steiner_circle(q[0], q[1]).first, "gray", SvgFigure::Stroke::Dashed);
        fig.add_circle("circle-P3P4Q2", steiner_circle(q[2], q[3]).first, "gray", SvgFigure::Stroke::Dashed);
        fig.add_point("point-Q1", q1, "gray");
        fig.add_point("point-Q2", q2, "gray");
        fig.add_segment("segment-Q1-Q2", q1, q2, "gray", SvgFigure::Stroke::Dotted);
        if (res.alternate) draw_tree(fig, q, *res.alternate, "alternate", labels, SvgFigure::Stroke::Dashed, "blue");
        if (res.chosen) draw_tree(fig, q, *res.chosen, "chosen", labels, SvgFigure::Stroke::Solid, "red");
        draw_terminals(fig, std::vector<Point>(pts.begin(), pts.end()), labels);
        write_file(o.common.svg_path, fig.render());
    }
    return code;
}

// ---------------------------------------------------------------- loci

int cmd_loci(const Options& o, std::ostream& out) {
    const auto start = Clock::now();
    const Instance inst = resolve_instance(o.common.inputs);
    if (inst.terminals.size() != 3) throw InstanceError("loci needs the three fixed terminals P1 P2 P4");
    const Tolerance tol = resolve_tolerance(inst, o.common.tol);
    const std::vector<std::string> labels =
        inst.labels.size() == 3 ? inst.labels : std::vector<std::string>{"P1", "P2", "P4"};
    const Point& p1 = inst.terminals[0];
    const Point& p2 = inst.terminals[1];
    const Point& p4 = inst.terminals[2];

    const std::vector<Point> polyline = o.path.empty() ? inst.path : parse_point_list(o.path);
    if (polyline.empty()) throw InstanceError("loci needs a P3 path (--path or 'path' in the instance)");
    const std::size_t samples = o.samples.value_or(inst.samples.value_or(50));
    if (samples == 0) throw InstanceError("--samples must be positive");

    const LocusReport loci = wandering_loci(p1, p2, p4, tol);
    const std::vector<Point> p3s = sample_polyline(polyline, samples);
    const std::vector<SweepRow> rows = loci_sweep(p1, p2, p4, p3s, tol);

    Json report;
    report["command"] = "loci";
    report["instance"] = instance_json(inst.terminals, labels);
    report["tolerance"] = to_json(tol);
    report["loci"] = to_json(loci);
    Json jp;
    jp["polyline"] = Json::array();
    for (const auto& p : polyline) jp["polyline"].push_back(to_json(p));
    jp["samples"] = p3s.size();
    report["path"] = std::move(jp);
    Json jr = Json::array();
    std::size_t valid = 0;
    std::size_t on_both = 0;
    for (const auto& r : rows) {
        jr.push_back(to_json(r));
        if (r.tree) {
            ++valid;
            if (r.on_c_small && r.on_c_hat) ++on_both;
        }
    }
    report["rows"] = std::move(jr);
    report["summary"] = {{"rows", rows.size()}, {"valid", valid}, {"on_both_circles", on_both}};
    if (o.common.timings) report["timings_us"] = {{"total", elapsed_us(start)}};
    emit(report, o.common, out);

    if (!o.common.svg_path.empty()) {
        SvgFigure fig;
        fig.add_circle("circle-c", loci.c_small, "gray", SvgFigure::Stroke::Dashed);
        fig.add_circle("circle-c-hat", loci.c_hat, "gray", SvgFigure::Stroke::Dashed);
        fig.add_point("point-Q1", loci.q1, "gray");
        fig.add_point("point-I", loci.i_point, "green");
        fig.add_label("label-I", loci.i_point, "I");
        fig.add_segment("diagonal-" + labels[1] + "-" + labels[2], p2, p4, "lightgray", SvgFigure::Stroke::Dotted);
        fig.add_polyline("path-P3", p3s, "black", SvgFigure::Stroke::Dotted);
        std::vector<Point> trail1;
        std::vector<Point> trail2;
        for (const auto& r : rows) {
            if (!r.tree) continue;
            trail1.push_back(r.tree->s1);
            trail2.push_back(r.tree->s2);
        }
        fig.add_polyline("trail-S1", trail1, "red");
        fig.add_polyline("trail-S2", trail2, "blue");
        draw_terminals(fig, inst.terminals, labels);
        write_file(o.common.svg_path, fig.render());
    }
    return kExitOk;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const Options& o, std::ostream& out) {
    const Instance inst = resolve_instance(o.common.inputs);
    const auto pts = as_quad_points(inst.terminals);
    const Tolerance tol = resolve_tolerance(inst, o.common.tol);
    const auto labels = labels_or_default(inst, 4);
    const Quad q = validate_quad(pts, tol);
    const Smt4Result res = solve_smt4(q, tol);

    std::optional<std::pair<Point, Point>> injected;
    if (!o.check_point.empty()) {
        const auto cp = parse_point_list(o.check_point);
        if (cp.size() != 2) throw InstanceError("--check-point needs two points: x1,y1;x2,y2");
        injected = std::pair{cp[0], cp[1]};
    }

    Json report;
    report["command"] = "verify";
    report["instance"] = instance_json(inst.terminals, labels);
    report["tolerance"] = to_json(tol);
    report["has_full_tree"] = res.has_full_tree();
    report["tie"] = res.tie;

    bool passed = true;
    Json tops = Json::array();
    std::vector<FullTree> trees;
    if (res.chosen) trees.push_back(*res.chosen);
    if (res.alternate) trees.push_back(*res.alternate);
    std::sort(trees.begin(), trees.end(), [](const FullTree& a, const FullTree& b) { return a.topology < b.topology; });
    for (std::size_t k = 0; k < trees.size(); ++k) {
        const FullTree& tree = trees[k];
        const bool primary = tree.topology == Topology::T12_34;
        const Quad qq = primary ? q : q.rotated();
        Point s1 = primary ? tree.s1 : tree.s2;
        Point s2 = primary ? tree.s2 : tree.s1;
        // Injected points replace the first topology checked.
        const bool use_injected = injected && k == 0;
        if (use_injected) {
            s1 = primary ? injected->first : injected->second;
            s2 = primary ? injected->second : injected->first;
        }
        const OracleResult orc = solve_numeric(qq, oracle_config(tol));
        const auto checks = check_identities(qq, s1, s2, tol, orc);
        passed = passed && all_passed(checks);

        Json jt;
        jt["topology"] = to_string(tree.topology);
        jt["source"] = use_injected ? "check-point" : "analytic";
        jt["s1"] = to_json(primary ? s1 : s2);
        jt["s2"] = to_json(primary ? s2 : s1);
        jt["oracle"] = to_json(orc);
        Json jc = Json::array();
        for (const auto& c : checks) jc.push_back(to_json(c));
        jt["checks"] = std::move(jc);
        tops.push_back(std::move(jt));
    }
    report["topologies"] = std::move(tops);
    if (res.length_gap_sq) {
        const IdentityCheck gap = check_gap_identity(q, res, tol);
        passed = passed && gap.passed;
        report["topology_gap"] = to_json(gap);
    }
    report["passed"] = res.has_full_tree() && passed;
    emit(report, o.common, out);

    if (!res.has_full_tree()) return kExitNoFullTree;
    return passed ? kExitOk : kExitVerificationFailed;
}

}  // namespace

Normalized normalize_ccw(const std::array<Point, 4>& pts, const Tolerance& tol) {
    std::array<std::size_t, 4> idx{0, 1, 2, 3};
    const auto lex = [&](std::size_t a, std::size_t b) {
        return pts[a].x() < pts[b].x() || (pts[a].x() == pts[b].x() && pts[a].y() < pts[b].y());
    };
    std::iter_swap(idx.begin(), std::min_element(idx.begin(), idx.end(), lex));
    const Point& o = pts[idx[0]];
    std::sort(idx.begin() + 1, idx.end(), [&](std::size_t a, std::size_t b) {
        const Point da = pts[a] - o;
        const Point db = pts[b] - o;
        return std::atan2(da.y(), da.x()) < std::atan2(db.y(), db.x());
    });
    Normalized n;
    n.permutation = idx;
    for (std::size_t i = 0; i < 4; ++i) n.points[i] = pts[idx[i]];
    (void)validate_quad(n.points, tol);
    return n;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Euclidean Steiner minimal trees for three and four terminals", "smt"};
    app.require_subcommand(1);

    Options o;
    CLI::App* s3 = app.add_subcommand("solve3", "Steiner tree for three terminals");
    add_common(s3, o.common);
    s3->add_flag("--verify", o.verify, "Cross-check against the numeric oracle");

    CLI::App* s4 = app.add_subcommand("solve4", "Full Steiner trees for four terminals, both topologies");
    add_common(s4, o.common);
    s4->add_flag("--verify", o.verify, "Cross-check against the numeric oracle");
    s4->add_flag("--normalize", o.normalize, "Reorder terminals into counterclockwise convex order");

    CLI::App* lc = app.add_subcommand("loci", "Junction loci while P3 moves along a path");
    add_common(lc, o.common);
    lc->add_option("--path", o.path, "P3 polyline as \"x,y;x,y;...\"");
    lc->add_option("--samples", o.samples, "Number of P3 samples along the path (default 50)");

    CLI::App* vf = app.add_subcommand("verify", "Analytic solution against the oracle and identity suite");
    add_common(vf, o.common);
    vf->add_option("--check-point", o.check_point, "Check these junctions instead: \"x1,y1;x2,y2\"");

    std::vector<std::string> argv_store{"smt"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (s3->parsed()) return cmd_solve3(o, out);
        if (s4->parsed()) return cmd_solve4(o, out);
        if (lc->parsed()) return cmd_loci(o, out);
        return cmd_verify(o, out);
    } catch (const GeometryError& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    } catch (const InstanceError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitInvalidInput;
}

}  // namespace smt::cli
