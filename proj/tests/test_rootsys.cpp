#include "lietower/root_system.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace lietower;

namespace {

std::set<std::vector<int>> as_set(const std::vector<Root>& roots) {
    std::set<std::vector<int>> s;
    for (const Root& r : roots) s.insert(r.coeffs());
    return s;
}

}  // namespace

class RootSystemByType : public ::testing::TestWithParam<RootSystemType> {};

TEST_P(RootSystemByType, MatchesNormTwoLatticeVectors) {
    const auto t = GetParam();
    const auto rs = RootSystem::build(t);
    const auto c = oracle::e_cartan(t.rank());
    const auto lattice = oracle::norm_two_vectors(c, 4);
    std::set<std::vector<int>> expected(lattice.begin(), lattice.end());
    EXPECT_EQ(as_set(rs.roots()), expected);
}

TEST_P(RootSystemByType, CartanMatchesBourbakiDiagram) {
    const auto t = GetParam();
    const auto rs = RootSystem::build(t);
    const auto c = oracle::e_cartan(t.rank());
    for (std::size_t i = 0; i < t.rank(); ++i)
        for (std::size_t j = 0; j < t.rank(); ++j) EXPECT_EQ(rs.cartan()[i][j], c[i][j]) << i << "," << j;
}

TEST_P(RootSystemByType, HighestRootIsDominanceMaximum) {
    const auto t = GetParam();
    const auto rs = RootSystem::build(t);
    const auto lattice = oracle::norm_two_vectors(oracle::e_cartan(t.rank()), 4);
    EXPECT_EQ(rs.highest().coeffs(), oracle::dominance_maximum(lattice));
}

TEST_P(RootSystemByType, PositiveHalfAndCanonicalOrder) {
    const auto rs = RootSystem::build(GetParam());
    EXPECT_EQ(rs.positive().size() * 2, rs.roots().size());
    for (const Root& r : rs.positive()) EXPECT_TRUE(oracle::is_positive(r.coeffs()));
    EXPECT_TRUE(std::is_sorted(rs.roots().begin(), rs.roots().end()));
    for (const Root& r : rs.roots()) EXPECT_TRUE(rs.is_root(-r));
}

TEST_P(RootSystemByType, PairingIsBilinearFormOfCartan) {
    const auto t = GetParam();
    const auto rs = RootSystem::build(t);
    const auto c = oracle::e_cartan(t.rank());
    for (const Root& a : rs.roots())
        for (const Root& b : rs.positive()) {
            const int p = rs.pairing(a, b);
            EXPECT_EQ(p, oracle::form(c, a.coeffs(), b.coeffs()));
            EXPECT_GE(p, -2);
            EXPECT_LE(p, 2);
        }
}

TEST_P(RootSystemByType, ReflectionsPreserveRoots) {
    const auto rs = RootSystem::build(GetParam());
    for (const Root& a : rs.roots())
        for (const Root& s : rs.simple_roots()) EXPECT_TRUE(rs.is_root(rs.reflect(a, s)));
    EXPECT_TRUE(is_reflection_closed(rs));
}

INSTANTIATE_TEST_SUITE_P(Types, RootSystemByType, ::testing::Values(kE6, kE7),
                         [](const auto& info) { return info.param.name(); });

TEST(RootSystem, CountsAndHighestRoots) {
    const auto e6 = RootSystem::build(kE6);
    const auto e7 = RootSystem::build(kE7);
    EXPECT_EQ(e6.roots().size(), 72u);
    EXPECT_EQ(e6.positive().size(), 36u);
    EXPECT_EQ(e7.roots().size(), 126u);
    EXPECT_EQ(e7.positive().size(), 63u);
    EXPECT_EQ(e6.highest(), Root({1, 2, 2, 3, 2, 1}));
    EXPECT_EQ(e7.highest(), Root({2, 2, 3, 4, 3, 2, 1}));
}

TEST(RootSystem, ParseTypeAcceptsBothCases) {
    EXPECT_EQ(parse_type("e6").kind, SystemKind::E6);
    EXPECT_EQ(parse_type("E7").kind, SystemKind::E7);
    EXPECT_THROW(parse_type("e8"), std::invalid_argument);
}

TEST(RootSystem, DynkinEdges) {
    const auto rs = RootSystem::build(kE6);
    const std::vector<std::pair<int, int>> edges{{1, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}};
    EXPECT_EQ(edges_from_cartan(rs.cartan()), edges);
    EXPECT_EQ(detect_dynkin_type(rs.cartan()).label(), "E6");
}

TEST(Subsystem, OrthogonalToHighestRoot) {
    // Brute-force count of roots orthogonal to the highest root.
    for (auto t : {kE6, kE7}) {
        const auto rs = RootSystem::build(t);
        const auto c = oracle::e_cartan(t.rank());
        std::size_t count = 0;
        for (const Root& r : rs.roots())
            if (oracle::form(c, r.coeffs(), rs.highest().coeffs()) == 0) ++count;
        const auto sub = orthogonal_subsystem(rs, {rs.highest()});
        EXPECT_EQ(sub.roots.size(), count);
        EXPECT_EQ(sub.type_label(), t.kind == SystemKind::E6 ? "A5" : "D6");
    }
    EXPECT_EQ(orthogonal_subsystem(RootSystem::build(kE6), {RootSystem::build(kE6).highest()}).roots.size(), 30u);
    EXPECT_EQ(orthogonal_subsystem(RootSystem::build(kE7), {RootSystem::build(kE7).highest()}).roots.size(), 60u);
}

TEST(Subsystem, StandardLevis) {
    const auto e6 = RootSystem::build(kE6);
    EXPECT_EQ(subsystem(e6, {2, 3, 4, 5}).type_label(), "D4");
    EXPECT_EQ(subsystem(e6, {2, 3, 4, 5}).roots.size(), 24u);
    EXPECT_EQ(subsystem(e6, {1, 2, 3, 4, 5}).type_label(), "D5");
    const auto e7 = RootSystem::build(kE7);
    EXPECT_EQ(subsystem(e7, {1, 2, 3, 4, 5, 7}).type_label(), "A1xD5");
    EXPECT_EQ(subsystem(e7, {2, 3, 5, 7}).type_label(), "A1xA1xA1xA1");
}

TEST(Subsystem, EdgeCases) {
    const auto e6 = RootSystem::build(kE6);
    EXPECT_TRUE(subsystem(e6, {}).roots.empty());
    EXPECT_EQ(subsystem(e6, {}).type_label(), "");
    const auto a1 = subsystem(e6, {4});
    EXPECT_EQ(a1.roots.size(), 2u);
    EXPECT_EQ(a1.type_label(), "A1");
    EXPECT_THROW(subsystem(e6, {7}), std::invalid_argument);
    EXPECT_THROW(subsystem(e6, {0}), std::invalid_argument);
}
