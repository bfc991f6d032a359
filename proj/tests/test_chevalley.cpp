#include "lietower/lietower.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace lietower;

namespace {

const ChevalleyAlgebra& algebra(RootSystemType t) {
    static const ChevalleyAlgebra e6 = ChevalleyAlgebra::build(RootSystem::build(kE6));
    static const ChevalleyAlgebra e7 = ChevalleyAlgebra::build(RootSystem::build(kE7));
    return t.kind == SystemKind::E6 ? e6 : e7;
}

}  // namespace

class ChevalleyByType : public ::testing::TestWithParam<RootSystemType> {};

TEST_P(ChevalleyByType, Dimension) {
    const auto& alg = algebra(GetParam());
    EXPECT_EQ(alg.dimension(), GetParam().kind == SystemKind::E6 ? 78u : 133u);
}

TEST_P(ChevalleyByType, StructureConstantsAreStringLengths) {
    // |N_{a,b}| = p + 1 where b - p a, ..., b is the a-string through b.
    const auto& alg = algebra(GetParam());
    const auto& rs = alg.roots();
    for (const Root& a : rs.roots())
        for (const Root& b : rs.roots()) {
            const int n = alg.structure_constant(a, b);
            if (!rs.is_root(a + b)) {
                EXPECT_EQ(n, 0);
                continue;
            }
            int p = 0;
            while (rs.is_root(b - (p + 1) * a)) ++p;
            EXPECT_EQ(std::abs(n), p + 1) << a << " " << b;
            EXPECT_EQ(n, -alg.structure_constant(b, a));
            EXPECT_EQ(alg.structure_constant(-a, -b), -n);
        }
}

TEST_P(ChevalleyByType, CartanRelations) {
    const auto& alg = algebra(GetParam());
    const auto& rs = alg.roots();
    for (const Root& a : rs.roots())
        for (std::size_t i = 1; i <= rs.rank(); ++i) {
            // [h_i, e_a] = <a, alpha_i> e_a
            const AlgElement br = alg.bracket(alg.h(i), alg.e(a));
            EXPECT_EQ(br, alg.e(a, rs.pairing(a, rs.simple(i))));
        }
    for (std::size_t i = 1; i <= rs.rank(); ++i) {
        const Root& s = rs.simple(i);
        EXPECT_EQ(alg.bracket(alg.e(s), alg.e(-s)), alg.h(i));
    }
}

TEST_P(ChevalleyByType, BracketIsAntisymmetric) {
    const auto& alg = algebra(GetParam());
    const std::size_t d = alg.dimension();
    for (std::size_t i = 0; i < d; i += 3)
        for (std::size_t j = 0; j < d; j += 5) {
            const AlgElement x = alg.basis_element(i);
            const AlgElement y = alg.basis_element(j);
            EXPECT_EQ(alg.bracket(x, y) + alg.bracket(y, x), AlgElement(alg.rank()));
        }
}

TEST_P(ChevalleyByType, JacobiOnRandomRationalCombinations) {
    // Independent of the accumulator: full elements with mixed coefficients.
    const auto& alg = algebra(GetParam());
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> idx(0, static_cast<int>(alg.dimension()) - 1), num(-5, 5), den(1, 4);
    auto random_element = [&] {
        AlgElement x(alg.rank());
        for (int k = 0; k < 4; ++k) x += make_rational(num(rng), den(rng)) * alg.basis_element(static_cast<std::size_t>(idx(rng)));
        return x;
    };
    for (int trial = 0; trial < 200; ++trial) {
        const AlgElement x = random_element(), y = random_element(), z = random_element();
        const AlgElement j = alg.bracket(x, alg.bracket(y, z)) + alg.bracket(y, alg.bracket(z, x)) +
                             alg.bracket(z, alg.bracket(x, y));
        ASSERT_TRUE(j.is_zero()) << "trial " << trial;
    }
}

TEST_P(ChevalleyByType, SampledJacobiAccumulator) {
    const auto r = jacobi_sampled(algebra(GetParam()), 20000, 3);
    EXPECT_EQ(r.violations, 0u);
    EXPECT_EQ(r.triples, 20000u);
}

INSTANTIATE_TEST_SUITE_P(Types, ChevalleyByType, ::testing::Values(kE6, kE7),
                         [](const auto& info) { return info.param.name(); });

TEST(Chevalley, ExhaustiveJacobiE6) {
    const auto r = jacobi_exhaustive(algebra(kE6));
    EXPECT_EQ(r.triples, 78u * 78u * 78u);
    EXPECT_EQ(r.violations, 0u);
}

TEST(Chevalley, BracketExamples) {
    const auto& alg = algebra(kE6);
    const Root a1 = Root::simple(6, 1), a3 = Root::simple(6, 3), a2 = Root::simple(6, 2);
    // Adjacent simple roots: a1 + a3 is a root and the a1-string through a3 has length one.
    EXPECT_EQ(std::abs(alg.structure_constant(a1, a3)), 1);
    EXPECT_EQ(alg.structure_constant(a1, a2), 0);
    EXPECT_TRUE(alg.bracket(alg.e(a1), alg.e(a2)).is_zero());
    EXPECT_TRUE(alg.bracket(alg.e(alg.roots().highest()), alg.e(a3)).is_zero());
    EXPECT_EQ(alg.bracket(alg.e(a1), alg.e(a3)).coeff(a1 + a3), Rational(alg.structure_constant(a1, a3)));
    EXPECT_THROW(alg.index(Root({1, 1, 0, 0, 0, 0})), std::invalid_argument);
}

TEST(Chevalley, ActionMatrixAndKernel) {
    const auto& alg = algebra(kE6);
    const Root a1 = Root::simple(6, 1), a3 = Root::simple(6, 3);
    // sl2 spanned by e_a1, h_1, e_-a1 acting on itself.
    const std::vector<AlgElement> sl2{alg.e(a1), alg.h(1), alg.e(-a1)};
    const auto am = action_matrix(alg, sl2, sl2);
    ASSERT_EQ(am.per_generator.size(), 3u);
    // [h_1, e_a1] = 2 e_a1
    EXPECT_EQ(am.per_generator[1](0, 0), Rational(2));
    // Stabilizer of e_a1 in sl2 is spanned by e_a1.
    EXPECT_EQ(kernel_dim(am.evaluate({1, 0, 0})), 1u);
    // Stabilizer of h_1 is spanned by h_1.
    EXPECT_EQ(kernel_dim(am.evaluate({0, 1, 0})), 1u);
    EXPECT_EQ(kernel_dim(am.evaluate({0, 0, 0})), 3u);
    EXPECT_THROW(am.evaluate({1, 0}), std::invalid_argument);
    // e_a3 does not preserve the span.
    EXPECT_THROW(action_matrix(alg, {alg.e(a3)}, sl2), std::invalid_argument);
}

TEST(Chevalley, D4CartanWeightsOnCenterAreDistinct) {
    const auto e6 = RootSystem::build(kE6);
    const auto& alg = algebra(kE6);
    const auto r = named_parabolic(alg, NamedParabolic::R);
    std::set<std::vector<int>> weights;
    for (const Root& z : r.center_roots) {
        std::vector<int> w;
        for (int i : r.levi_keep) w.push_back(e6.pairing(z, e6.simple(static_cast<std::size_t>(i))));
        weights.insert(w);
    }
    EXPECT_EQ(weights.size(), r.center_roots.size());
    EXPECT_EQ(r.center_roots.size(), 8u);
}
