#include <gtest/gtest.h>

#include <algorithm>

#include "smt/identities.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace smt;

namespace {

const IdentityCheck& find(const std::vector<IdentityCheck>& checks, const std::string& name) {
    auto it = std::find_if(checks.begin(), checks.end(), [&](const IdentityCheck& c) { return c.name == name; });
    if (it == checks.end()) throw std::out_of_range(name);
    return *it;
}

}  // namespace

TEST(Identities, HoldOnRandomQuads) {
    for (const Quad& q : test::random_valid_quads(300, 41)) {
        const FullTree t = solve_topology(q);
        const auto checks = check_identities(q, t.s1, t.s2, {});
        for (const auto& c : checks) EXPECT_TRUE(c.passed) << c.name << " " << c.value << " > " << c.limit;
        EXPECT_TRUE(check_gap_identity(q, solve_smt4(q), {}).passed);
    }
}

TEST(Identities, IncludeOracleChecks) {
    const Quad q = validate_quad(test::example_quad());
    const FullTree t = solve_topology(q);
    const auto checks = check_identities(q, t.s1, t.s2, {}, solve_numeric(q));
    EXPECT_EQ(checks.size(), 9u);
    EXPECT_TRUE(all_passed(checks));
    EXPECT_TRUE(find(checks, "oracle_points").passed);
}

TEST(Identities, DetectPerturbedJunctions) {
    const Quad q = validate_quad(test::example_quad());
    const FullTree t = solve_topology(q);
    const auto checks = check_identities(q, t.s1 + Point(1e-3, 0), t.s2, {});
    EXPECT_FALSE(all_passed(checks));
    EXPECT_FALSE(find(checks, "angles_120").passed);
    EXPECT_FALSE(find(checks, "stationarity").passed);
    EXPECT_FALSE(find(checks, "s1_representations").passed);
    // Point-independent identities still hold.
    EXPECT_TRUE(find(checks, "delta_sum").passed);
    EXPECT_TRUE(find(checks, "length_identities").passed);
}

TEST(Identities, JunctionOutsideQuadFailsContainment) {
    const Quad q = validate_quad(test::unit_square());
    const auto checks = check_identities(q, Point(0.5, -0.2), Point(0.5, 0.5), {});
    EXPECT_FALSE(find(checks, "containment").passed);
}

TEST(Identities, GapIdentityOnFixedQuads) {
    for (const auto& p : {test::example_quad(), test::orthogonal_quad(), test::unit_square()}) {
        const Quad q = validate_quad(p);
        const auto c = check_gap_identity(q, solve_smt4(q), {});
        EXPECT_TRUE(c.passed) << c.value;
        EXPECT_EQ(c.name, "topology_gap");
    }
}
