#include "lietower/lietower.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <regex>
#include <set>
#include <sstream>

using namespace lietower;

namespace {

const Workspace& workspace(RootSystemType t) {
    static const Workspace e6 = Workspace::build(kE6);
    static const Workspace e7 = Workspace::build(kE7);
    return t.kind == SystemKind::E6 ? e6 : e7;
}

const GoldenTables& golden() {
    static const GoldenTables g = load_golden(LIETOWER_GOLDEN_TABLES);
    return g;
}

std::vector<std::vector<mpq_class>> rows_of(const Matrix& m) {
    std::vector<std::vector<mpq_class>> r(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
    return r;
}

/// <x, y> = sum_i x_i y_-i + x_-i y_i, written out from the pairing e_i <-> e_-i.
Rational hyperbolic(const BasisEF& b, const std::vector<Rational>& x, const std::vector<Rational>& y) {
    Rational s = 0;
    for (int i = 1; i <= b.m; ++i) s += x[b.slot(i)] * y[b.slot(-i)] + x[b.slot(-i)] * y[b.slot(i)];
    return s;
}

std::vector<Root> filter(const RootSystem& rs, const std::function<bool(const Root&)>& keep) {
    std::vector<Root> out;
    for (const Root& r : rs.positive())
        if (keep(r)) out.push_back(r);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Root> sorted(std::vector<Root> v) {
    std::sort(v.begin(), v.end());
    return v;
}

struct Expected {
    RootSystemType type;
    std::size_t zu, x, y, big_rank, small_rank, stabilizer, acting_derived, acting_full;
    std::size_t tangent_big, tangent_small;
};

const std::vector<Expected> kExpected{
    {kE6, 8, 8, 8, 16, 8, 21, 28, 30, 8, 7},
    {kE7, 10, 16, 16, 32, 16, 39, 48, 49, 10, 9},
};

}  // namespace

class StructByType : public ::testing::TestWithParam<Expected> {
protected:
    const Workspace& ws() const { return workspace(GetParam().type); }
};

TEST_P(StructByType, UDecompositionMatchesCoefficientFilters) {
    const auto& w = ws();
    const bool e6 = w.type.kind == SystemKind::E6;
    const auto zu = filter(w.rs, [e6](const Root& r) { return e6 ? r.coeff(1) == 1 && r.coeff(6) == 1 : r.coeff(6) == 2; });
    const auto x = filter(w.rs, [e6](const Root& r) { return e6 ? r.coeff(1) == 1 && r.coeff(6) == 0 : r.coeff(6) == 1 && r.coeff(7) == 0; });
    const auto y = filter(w.rs, [e6](const Root& r) { return e6 ? r.coeff(1) == 0 && r.coeff(6) == 1 : r.coeff(6) == 1 && r.coeff(7) == 1; });
    EXPECT_EQ(sorted(w.ud.Zu_roots), zu);
    EXPECT_EQ(sorted(w.ud.X_roots), x);
    EXPECT_EQ(sorted(w.ud.Y_roots), y);
    EXPECT_EQ(zu.size(), GetParam().zu);
    EXPECT_EQ(x.size(), GetParam().x);
    EXPECT_EQ(y.size(), GetParam().y);
    EXPECT_TRUE(w.ud.y_forced);
    EXPECT_TRUE(std::binary_search(zu.begin(), zu.end(), w.beta1()));
    EXPECT_TRUE(std::binary_search(zu.begin(), zu.end(), w.beta2()));
}

TEST_P(StructByType, LemmaBracketTable) {
    const auto& w = ws();
    const auto& b = w.basis();
    EXPECT_EQ(b.m, static_cast<int>(w.rank()) - 2);
    EXPECT_EQ(b.e.at(1).root, w.beta1());
    EXPECT_EQ(b.e.at(-1).root, w.beta2());
    const AlgElement e1 = b.e_vec(w.alg, 1);
    for (int i : b.e_order()) {
        if (i == 1 || i == -1) continue;
        for (int j : b.f_order()) {
            const AlgElement br = w.alg.bracket(b.e_vec(w.alg, i), b.f_vec(w.alg, j));
            if (i == j)
                EXPECT_EQ(br, e1) << i << "," << j;
            else
                EXPECT_TRUE(br.is_zero()) << i << "," << j;
        }
    }
    for (int i : b.f_order()) {
        const AlgElement lhs = w.alg.bracket(b.e_vec(w.alg, -1), b.f_vec(w.alg, i));
        const AlgElement rhs = Rational(-1) * b.e_vec(w.alg, -i);
        EXPECT_EQ(lhs, rhs) << i;
    }
    EXPECT_TRUE(w.basis_search.check.valid());
    EXPECT_EQ(w.lemma.invariant_dim, 1u);
}

TEST_P(StructByType, LemmaPartEKillsRestOfN3) {
    const auto& w = ws();
    const auto& b = w.basis();
    std::set<Root> used;
    for (const auto& [i, s] : b.f) used.insert(s.root);
    for (const auto& [i, s] : b.e) used.insert(s.root);
    for (const Root& a : w.lemma.n3)
        if (!used.count(a) && !std::binary_search(w.lemma.ws.begin(), w.lemma.ws.end(), a)) {
            EXPECT_TRUE(w.alg.bracket(b.e_vec(w.alg, -1), w.alg.e(a)).is_zero()) << a;
        }
}

TEST_P(StructByType, HyperbolicFormIsInvariant) {
    const auto& w = ws();
    const auto& b = w.basis();
    const auto gens = levi_generators(w.alg, w.R.levi_keep);
    const auto basis = b.e_basis(w.alg);
    std::vector<std::vector<Rational>> unit;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        std::vector<Rational> u(basis.size());
        u[k] = 1;
        unit.push_back(u);
    }
    for (const AlgElement& x : gens)
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j) {
                const auto xi = b.e_coordinates(w.alg.bracket(x, basis[i]));
                const auto xj = b.e_coordinates(w.alg.bracket(x, basis[j]));
                EXPECT_EQ(hyperbolic(b, xi, unit[j]) + hyperbolic(b, unit[i], xj), 0);
            }
    const auto sig = w.zu.signature();
    EXPECT_EQ(sig.positive, static_cast<std::size_t>(b.m));
    EXPECT_EQ(sig.negative, static_cast<std::size_t>(b.m));
}

TEST_P(StructByType, SpectrumIdentity) {
    const auto& w = ws();
    const auto& b = w.basis();
    EXPECT_TRUE(spectrum_identity(b, w.zu).holds);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    auto q = [&] { return make_rational(num(rng), den(rng)); };
    for (int k = 0; k < 200; ++k) {
        Rational t = q();
        if (t == 0) t = 1;
        const Rational s = k % 3 == 0 ? Rational(0) : q();
        std::map<int, Rational> a;
        for (int i = 2; i <= b.m; ++i) {
            a[i] = q();
            a[-i] = q();
        }
        const auto sv = spectrum_vector(b, w.zu, t, s, a);
        EXPECT_EQ(hyperbolic(b, sv.v, sv.v), -2 * t * s);
        EXPECT_EQ(classify_character(w.zu, sv.v), s == 0 ? CharacterClass::small : CharacterClass::big);
    }
    EXPECT_THROW(spectrum_vector(b, w.zu, 0, 1, {}), std::invalid_argument);
    EXPECT_THROW(spectrum_vector(b, w.zu, 1, 1, {{1, 2}}), std::invalid_argument);
    EXPECT_EQ(classify_character(w.zu, std::vector<Rational>(2 * static_cast<std::size_t>(b.m))), CharacterClass::zero);
}

TEST_P(StructByType, InducedRanksAgreeWithBareiss) {
    const auto& e = GetParam();
    const auto& w = ws();
    const auto big = w.vec({{1, 1}, {-1, 1}});
    const auto small = w.vec({{1, 1}});
    const auto mb = w.induced.skew_matrix(big);
    const auto ms = w.induced.skew_matrix(small);
    EXPECT_EQ(oracle::bareiss_rank(rows_of(mb)), e.big_rank);
    EXPECT_EQ(oracle::bareiss_rank(rows_of(ms)), e.small_rank);
    EXPECT_EQ(w.induced.rank_at(big), e.big_rank);
    EXPECT_EQ(w.induced.rank_at(small), e.small_rank);
    EXPECT_EQ(e.big_rank, std::size_t{1} << (w.rank() - 2));
    EXPECT_EQ(e.small_rank, std::size_t{1} << (w.rank() - 3));
    // Skew-symmetry of the induced form.
    for (std::size_t i = 0; i < mb.rows(); ++i)
        for (std::size_t j = 0; j < mb.cols(); ++j) EXPECT_EQ(mb(i, j), -mb(j, i));
    const auto h = induced_heisenberg_rank(w.induced, big);
    EXPECT_EQ(h.heisenberg_dim, e.big_rank + 1);
    EXPECT_THROW(w.induced.rank_at(std::vector<Rational>(2 * static_cast<std::size_t>(w.basis().m))),
                 std::invalid_argument);
}

TEST_P(StructByType, InducedRanksOnRandomRepresentatives) {
    const auto& e = GetParam();
    const auto& w = ws();
    const auto& b = w.basis();
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
    auto q = [&](bool nonzero) {
        Rational r = make_rational(num(rng), den(rng));
        return nonzero && r == 0 ? Rational(1) : r;
    };
    for (int k = 0; k < 100; ++k) {
        std::map<int, Rational> a;
        for (int i = 2; i <= b.m; ++i) {
            a[i] = q(false);
            a[-i] = q(false);
        }
        const Rational t = q(true);
        const auto big = spectrum_vector(b, w.zu, t, q(true), a);
        const auto small = spectrum_vector(b, w.zu, t, 0, a);
        EXPECT_EQ(w.induced.rank_at(big.v), e.big_rank);
        EXPECT_EQ(w.induced.rank_at(small.v), e.small_rank);
    }
}

TEST_P(StructByType, StabilizerAgreesWithBareiss) {
    const auto& e = GetParam();
    const auto& w = ws();
    const auto v = w.vec({{1, 1}, {-1, 1}});
    const auto ev = w.actions.derived.evaluate(v);
    EXPECT_EQ(w.actions.derived_dim(), e.acting_derived);
    EXPECT_EQ(w.actions.full_dim(), e.acting_full);
    EXPECT_EQ(ev.cols() - oracle::bareiss_rank(rows_of(ev)), e.stabilizer);
    const auto s = stabilizer_dim(w.actions.derived, v);
    EXPECT_EQ(s.stabilizer, e.stabilizer);
    EXPECT_TRUE(s.rank_nullity);
    // [S,S] preserves the form, so its orbit through v stays on a level set.
    EXPECT_EQ(s.tangent, e.zu - 1);
    // The center of S rescales, which fills out the open orbit.
    EXPECT_EQ(stabilizer_dim(w.actions.full, v).tangent, e.tangent_big);
    EXPECT_EQ(stabilizer_dim(w.actions.full, w.vec({{1, 1}})).tangent, e.tangent_small);
    EXPECT_EQ(stabilizer_dim(w.actions.full, w.vec({})).tangent, 0u);
}

INSTANTIATE_TEST_SUITE_P(Types, StructByType, ::testing::ValuesIn(kExpected),
                         [](const auto& info) { return info.param.type.name(); });

TEST(Structures, E7A1FactorActsTrivially) {
    const auto& w = workspace(kE7);
    const auto& a1 = w.R.levi.components.front();
    ASSERT_EQ(a1.type.label(), "A1");
    const Root a7 = Root::simple(7, 7);
    for (const AlgElement& x : {w.alg.e(a7), w.alg.e(-a7), w.alg.h(7)})
        for (const AlgElement& z : w.basis().e_basis(w.alg)) EXPECT_TRUE(w.alg.bracket(x, z).is_zero());
    EXPECT_TRUE(component_acts_trivially(w.alg, w.basis(), a1));
    EXPECT_EQ(w.actions.derived_dim(), 3u + 45u);
}

TEST(Structures, E7NilradicalIdentity) {
    const auto& w = workspace(kE7);
    std::vector<Root> u(w.ud.Y_roots);
    u.insert(u.end(), w.ud.Zu_roots.begin(), w.ud.Zu_roots.end());
    u.push_back(Root::simple(7, 7));
    EXPECT_EQ(sorted(u), sorted(w.P.nilradical_roots));
    EXPECT_EQ(w.P.dim(), 27u);
    EXPECT_EQ(w.ud.Y_roots.size() + w.ud.Zu_roots.size() + 1, 27u);
    const auto c = n_decomposition_check(w.P, w.ud);
    EXPECT_TRUE(c.partition);
}

TEST(Structures, E7OmegaBlocks) {
    const auto& w = workspace(kE7);
    ASSERT_TRUE(w.omega.has_value());
    const auto& op = *w.omega;
    const Root a7 = Root::simple(7, 7);
    EXPECT_EQ(op.blocks.size(), 8u);
    EXPECT_EQ(op.exact_covers, 1u);
    std::multiset<Root> seen;
    for (const auto& b : op.blocks) {
        const Root& beta = w.tower.betas.at(static_cast<std::size_t>(b.j - 1));
        EXPECT_EQ(b.roots[1], b.roots[0] + a7);
        EXPECT_EQ(b.roots[2], beta - b.roots[1]);
        EXPECT_EQ(b.roots[3], b.roots[2] + a7);
        for (const Root& r : b.roots) seen.insert(r);
    }
    std::vector<Root> omega(w.ud.X_roots);
    omega.insert(omega.end(), w.ud.Y_roots.begin(), w.ud.Y_roots.end());
    EXPECT_EQ(std::vector<Root>(seen.begin(), seen.end()), sorted(omega));
}

TEST(Structures, E7BlockPolarizationsAreLagrangian) {
    const auto& w = workspace(kE7);
    const auto v = w.vec({{1, 1}, {-1, 1}});
    for (unsigned long mask : {0UL, 8UL, 255UL}) {
        const auto pol = polarization_from_blocks(w.omega->blocks, mask);
        for (const auto* half : {&pol.X1, &pol.Y1})
            for (const Root& x : *half)
                for (const Root& y : *half) {
                    const AlgElement br = w.alg.bracket(w.alg.e(x), w.alg.e(y));
                    if (br.is_zero()) continue;
                    EXPECT_EQ(hyperbolic(w.basis(), v, w.basis().e_coordinates(br)), 0);
                }
        EXPECT_TRUE(polarization_check(w.alg, w.ud, w.induced, v, *w.omega, pol).ok()) << mask;
    }
}

TEST(Golden, ParsesShippedTables) {
    const auto& g = golden();
    EXPECT_TRUE(g.has_type("E6"));
    EXPECT_TRUE(g.has_type("E7"));
    ASSERT_NE(g.find("E7", "X1"), nullptr);
    EXPECT_EQ(g.find("E6", "e_1")->rows.size(), 1u);
}

TEST(Golden, ParseErrors) {
    auto parse = [](const std::string& s) {
        std::istringstream in(s);
        return parse_golden(in);
    };
    EXPECT_THROW(parse("1 2 3 4 5 6\n"), GoldenError);
    EXPECT_THROW(parse("[E8] W\n0 0 0 0 0 0\n"), GoldenError);
    EXPECT_THROW(parse("[E6] W\n0 0 0 0 0\n"), GoldenError);
    EXPECT_THROW(parse("[E6] W\n0 0 x 0 0 0\n"), GoldenError);
    EXPECT_THROW(parse("[E6] W\n"), GoldenError);
    EXPECT_THROW(parse("[E6] W extra\n0 0 0 0 0 1\n"), GoldenError);
    EXPECT_THROW(parse("[E6] W\n0 0 0 0 0 1\n[E6] W\n0 0 0 0 0 1\n"), GoldenError);
    EXPECT_NO_THROW(parse("# only a comment\n[E6] W  # trailing\n* * * * * 1\n"));
    EXPECT_THROW(load_golden("/nonexistent/tables.txt"), GoldenError);
}

TEST(Golden, ShippedTablesMatchEverywhere) {
    for (auto t : {kE6, kE7}) {
        const auto checks = verify_tables(workspace(t), golden());
        EXPECT_GT(checks.size(), 20u);
        for (const auto& c : checks) EXPECT_EQ(c.status, Status::pass) << c.name;
    }
}

TEST(Golden, ModifiedCellIsFlagged) {
    std::ifstream in(LIETOWER_GOLDEN_TABLES);
    std::stringstream buf;
    buf << in.rdbuf();
    // Replace the E6 e_2 entry by a different root of Z(u).
    const std::string text = std::regex_replace(buf.str(), std::regex(R"(\[E6\] e_2\n1 2 3 2 1 1)"), "[E6] e_2\n1 1 2 2 1 1");
    ASSERT_NE(text, buf.str());
    std::istringstream mod(text);
    const auto g = parse_golden(mod);
    const auto checks = verify_tables(workspace(kE6), g);
    bool flagged = false;
    for (const auto& c : checks) {
        if (c.name == "tables.E6.e_2") flagged = c.status == Status::flagged;
        if (c.name == "tables.E6.e_3") {
            EXPECT_EQ(c.status, Status::pass);
        }
    }
    EXPECT_TRUE(flagged);
}

TEST(Verify, FastRunIsClean) {
    VerifyOptions opt;
    opt.fast = true;
    opt.golden = &golden();
    for (auto t : {kE6, kE7}) {
        const auto r = verify_all(t, opt);
        EXPECT_GT(r.checks().size(), 40u);
        EXPECT_EQ(r.count(Status::fail), 0u);
        EXPECT_EQ(r.count(Status::flagged), 0u);
        for (const auto& c : r.checks())
            if (c.status != Status::pass) ADD_FAILURE() << c.name;
    }
}
