#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "smt/cli/commands.hpp"
#include "smt/cli/svg.hpp"

using smt::cli::run;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(SMT_FIXTURE_DIR) + "/" + name; }

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / ("smt_test_cli_" + name); }

}  // namespace

TEST(Cli, Solve3Fixture) {
    const auto r = invoke({"solve3", fixture("triangle.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["command"], "solve3");
    EXPECT_EQ(j["solution"]["kind"], "Interior");
    EXPECT_NEAR(j["solution"]["length"].get<double>(), 7.347160139369031, 1e-12);
    EXPECT_NEAR(j["construction"]["q1_p3_distance"].get<double>(), 7.347160139369031, 1e-9);
}

TEST(Cli, Solve3InlineAndVerify) {
    const auto r = invoke({"solve3", "4", "4", "2", "1", "7", "1", "--verify"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["oracle"]["point_agrees"].get<bool>());
}

TEST(Cli, Solve4Fixtures) {
    const auto r = invoke({"solve4", fixture("quad_distinct.json"), "--verify"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["solution"]["chosen"]["topology"], "T12_34");
    EXPECT_FALSE(j["solution"]["tie"].get<bool>());
    EXPECT_NEAR(j["solution"]["chosen"]["length"].get<double>(), 14.912650672139758, 1e-12);

    const auto t = invoke({"solve4", fixture("quad_tie.json")});
    ASSERT_EQ(t.code, 0);
    EXPECT_TRUE(nlohmann::json::parse(t.out)["solution"]["tie"].get<bool>());
}

TEST(Cli, Solve4Normalize) {
    // Unit square given clockwise and starting elsewhere.
    const auto r = invoke({"solve4", "1", "1", "1", "0", "0", "0", "0", "1", "--normalize"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["normalization"]["permutation"], nlohmann::json::array({3, 2, 1, 4}));
    EXPECT_EQ(invoke({"solve4", "1", "1", "1", "0", "0", "0", "0", "1"}).code, 2);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(invoke({"solve4", fixture("wide_diagonals.json")}).code, 3);
    EXPECT_EQ(invoke({"solve4", fixture("no_full_tree.json")}).code, 3);
    const auto nc = invoke({"solve4", fixture("nonconvex.json")});
    EXPECT_EQ(nc.code, 2);
    EXPECT_NE(nc.err.find("NotConvex"), std::string::npos);
    EXPECT_EQ(invoke({"solve3", fixture("collinear.json")}).code, 2);
    EXPECT_EQ(invoke({"solve3", fixture("malformed.json")}).code, 2);
    EXPECT_EQ(invoke({"solve3", fixture("missing.json")}).code, 2);
    EXPECT_EQ(invoke({"solve3", "1", "2", "3"}).code, 2);
    EXPECT_EQ(invoke({"bogus"}).code, 2);
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"solve4", fixture("quad_distinct.json"), "--tol", "2"}).code, 2);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, VerifyPassesAndDetectsBadPoints) {
    const auto ok = invoke({"verify", fixture("quad_distinct.json")});
    ASSERT_EQ(ok.code, 0) << ok.out;
    const auto j = nlohmann::json::parse(ok.out);
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_EQ(j["topologies"].size(), 2u);

    const auto bad = invoke({"verify", fixture("quad_distinct.json"), "--check-point", "2.6,5.3;5.6,5.9"});
    EXPECT_EQ(bad.code, 4);
    EXPECT_FALSE(nlohmann::json::parse(bad.out)["passed"].get<bool>());

    EXPECT_EQ(invoke({"verify", fixture("no_full_tree.json")}).code, 3);
}

TEST(Cli, Loci) {
    const auto r = invoke({"loci", fixture("loci.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["rows"].size(), 50u);
    EXPECT_EQ(j["summary"]["valid"], j["summary"]["on_both_circles"]);
    EXPECT_GT(j["summary"]["valid"].get<int>(), 0);

    const auto inline_path = invoke({"loci", "5", "8", "1", "1", "10", "7", "--path", "11,3;1,1", "--samples", "5"});
    ASSERT_EQ(inline_path.code, 0) << inline_path.err;
    EXPECT_EQ(nlohmann::json::parse(inline_path.out)["rows"].size(), 5u);
    EXPECT_EQ(invoke({"loci", "5", "8", "1", "1", "10", "7"}).code, 2);
}

TEST(Cli, DeterministicOutput) {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"solve3", fixture("triangle.json")}, {"solve4", fixture("quad_tie.json"), "--verify"},
          {"loci", fixture("loci.json")}, {"verify", fixture("unit_square.json")}}) {
        const auto a = invoke(args);
        const auto b = invoke(args);
        EXPECT_EQ(a.out, b.out);
        EXPECT_EQ(nlohmann::ordered_json::parse(a.out).dump(2) + "\n", a.out);  // round-trips
    }
    const auto t = invoke({"solve3", fixture("triangle.json"), "--timings"});
    EXPECT_TRUE(nlohmann::json::parse(t.out).contains("timings_us"));
}

TEST(Cli, JsonFileMatchesStdout) {
    const auto path = temp_file("report.json");
    const auto r = invoke({"solve4", fixture("quad_distinct.json"), "--json", path.string()});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(slurp(path), r.out);
    fs::remove(path);
}

TEST(Cli, SvgGoldens) {
    const std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
        {"solve3_triangle.svg", {"solve3", fixture("triangle.json")}},
        {"solve4_quad_distinct.svg", {"solve4", fixture("quad_distinct.json")}},
        {"solve4_quad_tie.svg", {"solve4", fixture("quad_tie.json")}},
        {"loci.svg", {"loci", fixture("loci.json")}},
    };
    for (const auto& [golden, base] : cases) {
        const auto path = temp_file(golden);
        auto args = base;
        args.push_back("--svg");
        args.push_back(path.string());
        ASSERT_EQ(invoke(args).code, 0) << golden;
        EXPECT_EQ(slurp(path), slurp(fs::path(SMT_GOLDEN_DIR) / golden)) << golden;
        fs::remove(path);
    }
}

TEST(Svg, ElementsAndEscaping) {
    smt::cli::SvgFigure fig;
    fig.add_point("a", smt::Point(0, 0));
    fig.add_label("b", smt::Point(1, 1), "x<y&z");
    EXPECT_EQ(fig.element_count(), 2u);
    const std::string s = fig.render();
    EXPECT_NE(s.find("<svg"), std::string::npos);
    EXPECT_NE(s.find("x&lt;y&amp;z"), std::string::npos);
}

TEST(Cli, ExecutableExitCodes) {
    const std::string tool = SMT_TOOL_PATH;
    const auto status = [&](const std::string& rest) {
        const int s = std::system((tool + " " + rest + " > /dev/null 2>&1").c_str());
        return WEXITSTATUS(s);
    };
    EXPECT_EQ(status("solve4 " + fixture("quad_distinct.json")), 0);
    EXPECT_EQ(status("solve4 " + fixture("nonconvex.json")), 2);
    EXPECT_EQ(status("solve4 " + fixture("no_full_tree.json")), 3);
    EXPECT_EQ(status("verify " + fixture("quad_distinct.json") + " --check-point '2.6,5.3;5.6,5.9'"), 4);
}
