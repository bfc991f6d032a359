#pragma once

#include "lietower/chevalley.hpp"
#include "lietower/decomposition.hpp"
#include "lietower/matrix.hpp"
#include "lietower/parabolic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lietower {

/// Chevalley generators e_{+a_k}, e_{-a_k}, h_k of [S,S] for the retained nodes.
inline std::vector<AlgElement> levi_generators(const ChevalleyAlgebra& alg, const std::vector<int>& keep) {
    std::vector<AlgElement> g;
    for (int k : keep) {
        const Root s = Root::simple(alg.rank(), static_cast<std::size_t>(k));
        g.push_back(alg.e(s));
        g.push_back(alg.e(-s));
        g.push_back(alg.h(static_cast<std::size_t>(k)));
    }
    return g;
}

/// Basis of the Levi: root vectors of its roots, then coroots of the retained
/// nodes ([S,S]) or all coroots (S itself, including its center).
inline std::vector<AlgElement> levi_basis(const ChevalleyAlgebra& alg, const ParabolicDecomposition& pd,
                                          bool with_center) {
    std::vector<AlgElement> b;
    for (const Root& r : pd.levi.roots) b.push_back(alg.e(r));
    if (with_center) {
        for (std::size_t i = 1; i <= alg.rank(); ++i) b.push_back(alg.h(i));
    } else {
        for (int k : pd.levi_keep) b.push_back(alg.h(static_cast<std::size_t>(k)));
    }
    return b;
}

inline std::vector<AlgElement> root_vectors(const ChevalleyAlgebra& alg, const std::vector<Root>& roots) {
    std::vector<AlgElement> v;
    for (const Root& r : roots) v.push_back(alg.e(r));
    return v;
}

/// Basis of the symmetric bilinear forms on the module that every acting
/// generator leaves invariant: <[x,u],w> + <u,[x,w]> = 0.
inline std::vector<Matrix> invariant_symmetric_forms(const ActionMatrix& am) {
    const std::size_t d = am.codomain_basis.size();
    std::vector<std::vector<std::size_t>> var(d, std::vector<std::size_t>(d));
    std::size_t nv = 0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) var[i][j] = var[j][i] = nv++;
    Matrix eqs(am.per_generator.size() * d * (d + 1) / 2, nv);
    std::size_t row = 0;
    for (const Matrix& a : am.per_generator)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i; j < d; ++j, ++row)
                for (std::size_t k = 0; k < d; ++k) {
                    if (a(k, i) != 0) eqs(row, var[k][j]) += a(k, i);
                    if (a(k, j) != 0) eqs(row, var[i][k]) += a(k, j);
                }
    std::vector<Matrix> forms;
    for (const auto& v : kernel_basis(eqs)) {
        Matrix g(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) g(i, j) = v[var[i][j]];
        forms.push_back(std::move(g));
    }
    return forms;
}

/// Scalar multiple of a Chevalley root vector.
struct ScaledRoot {
    Root root;
    Rational scale = 1;
};

/// Bases {e_i} of Z(u) and {f_i} of W cap s, i in +-1..+-m resp. +-2..+-m with m = n - 2.
struct BasisEF {
    int m = 0;
    std::map<int, ScaledRoot> e;
    std::map<int, ScaledRoot> f;

    /// e_1 .. e_m, e_-1 .. e_-m
    std::vector<int> e_order() const {
        std::vector<int> o;
        for (int i = 1; i <= m; ++i) o.push_back(i);
        for (int i = 1; i <= m; ++i) o.push_back(-i);
        return o;
    }
    /// f_2 .. f_m, f_-2 .. f_-m
    std::vector<int> f_order() const {
        std::vector<int> o;
        for (int i = 2; i <= m; ++i) o.push_back(i);
        for (int i = 2; i <= m; ++i) o.push_back(-i);
        return o;
    }

    AlgElement e_vec(const ChevalleyAlgebra& alg, int i) const {
        const auto& s = e.at(i);
        return alg.e(s.root, s.scale);
    }
    AlgElement f_vec(const ChevalleyAlgebra& alg, int i) const {
        const auto& s = f.at(i);
        return alg.e(s.root, s.scale);
    }
    std::vector<AlgElement> e_basis(const ChevalleyAlgebra& alg) const {
        std::vector<AlgElement> b;
        for (int i : e_order()) b.push_back(e_vec(alg, i));
        return b;
    }

    /// Position of e_i in e_order().
    std::size_t slot(int i) const { return static_cast<std::size_t>(i > 0 ? i - 1 : m - i - 1); }

    /// e-coordinates of an element of Z(u) given by root vectors.
    std::vector<Rational> e_coordinates(const AlgElement& z) const {
        std::vector<Rational> c(static_cast<std::size_t>(2 * m));
        for (const auto& [r, coeff] : z.root_part) {
            bool found = false;
            for (const auto& [i, s] : e)
                if (s.root == r) {
                    c[slot(i)] = coeff / s.scale;
                    found = true;
                }
            if (!found) throw std::invalid_argument("BasisEF::e_coordinates: element leaves Z(u)");
        }
        return c;
    }

    /// Element of Z(u) with the given e-coordinates.
    AlgElement element(const ChevalleyAlgebra& alg, const std::vector<Rational>& coords) const {
        AlgElement x(alg.rank());
        for (int i : e_order()) {
            const Rational& c = coords.at(slot(i));
            if (c != 0) x.add(e.at(i).root, c * e.at(i).scale);
        }
        return x;
    }
};

/// Root assignment to test: e_i and f_i root spaces.
struct BasisLabelling {
    std::map<int, Root> e_roots;
    std::map<int, Root> f_roots;
};

struct LabellingCheck {
    bool part_a = false;  // single positive root spaces; bases of Z(u) and W cap s
    bool part_b = false;  // e_1 in g_beta1, e_-1 in g_beta2
    bool part_c = false;  // [e_i, f_j] = delta_ij e_1 over signed indices
    bool part_d = false;  // hyperbolic form is the invariant form
    bool part_e = false;  // [e_-1, g_a] = 0 for the remaining root spaces of n3
    bool derived_identity = false;  // [e_-1, f_i] = -e_-i
    std::vector<std::string> failures;

    bool valid() const { return part_a && part_b && part_c && part_d && part_e && derived_identity; }
};

/// Everything the basis lemma is stated against.
struct LemmaSetting {
    Root beta1;
    Root beta2;
    std::vector<Root> zu;        // Z(u) roots, canonical; module order for `form`
    std::vector<Root> ws;        // W cap s roots
    std::vector<Root> n3;        // Q nilradical roots
    Matrix form;                 // invariant form on {e_alpha : alpha in zu}, <e_b1, e_b2> = 1
    std::size_t invariant_dim = 0;

    std::size_t zu_index(const Root& r) const {
        auto it = std::lower_bound(zu.begin(), zu.end(), r);
        if (it == zu.end() || *it != r) throw std::invalid_argument("LemmaSetting: not a Z(u) root " + r.str());
        return static_cast<std::size_t>(it - zu.begin());
    }
};

inline LemmaSetting make_lemma_setting(const ChevalleyAlgebra& alg, const ParabolicDecomposition& r,
                                       const UDecomposition& ud, const N3Decomposition& nd, const Root& beta1,
                                       const Root& beta2) {
    LemmaSetting ls;
    ls.beta1 = beta1;
    ls.beta2 = beta2;
    ls.zu = ud.Zu_roots;
    ls.n3 = nd.n3_roots;
    for (const Root& a : nd.W_roots)
        if (r.levi.contains(a)) ls.ws.push_back(a);
    const auto am = action_matrix(alg, levi_generators(alg, r.levi_keep), root_vectors(alg, ls.zu));
    const auto forms = invariant_symmetric_forms(am);
    ls.invariant_dim = forms.size();
    if (forms.size() != 1) throw std::logic_error("make_lemma_setting: invariant form on Z(u) is not unique");
    const Rational norm = forms.front()(ls.zu_index(beta1), ls.zu_index(beta2));
    if (norm == 0) throw std::logic_error("make_lemma_setting: invariant form does not pair beta1 with beta2");
    ls.form = forms.front();
    for (std::size_t i = 0; i < ls.zu.size(); ++i)
        for (std::size_t j = 0; j < ls.zu.size(); ++j) ls.form(i, j) /= norm;
    return ls;
}

/// Scales a root assignment deterministically and checks every part of the lemma.
///
/// Scaling: e_1, e_-1 and e_i (i > 0) are plain Chevalley vectors; e_-i is
/// scaled so that <e_i, e_-i> = 1; each f_i is scaled so that [e_i, f_i] = e_1.
inline LabellingCheck check_labelling(const ChevalleyAlgebra& alg, const LemmaSetting& ls,
                                      const BasisLabelling& lab, BasisEF& out) {
    LabellingCheck chk;
    const RootSystem& rs = alg.roots();
    out = BasisEF{};
    out.m = static_cast<int>(ls.zu.size() / 2);
    const int m = out.m;
    auto fail = [&chk](std::string s) { chk.failures.push_back(std::move(s)); };

    // Part a: shape of the assignment.
    chk.part_a = true;
    std::vector<Root> e_roots, f_roots;
    for (int i : out.e_order()) {
        auto it = lab.e_roots.find(i);
        if (it == lab.e_roots.end() || !it->second.is_positive() || !rs.is_root(it->second)) {
            chk.part_a = false;
            fail("e_" + std::to_string(i) + " is not a positive root space");
            continue;
        }
        e_roots.push_back(it->second);
    }
    for (int i : out.f_order()) {
        auto it = lab.f_roots.find(i);
        if (it == lab.f_roots.end() || !it->second.is_positive() || !rs.is_root(it->second)) {
            chk.part_a = false;
            fail("f_" + std::to_string(i) + " is not a positive root space");
            continue;
        }
        f_roots.push_back(it->second);
    }
    if (!chk.part_a) return chk;
    std::sort(e_roots.begin(), e_roots.end());
    std::sort(f_roots.begin(), f_roots.end());
    if (e_roots != ls.zu) {
        chk.part_a = false;
        fail("e roots are not a basis of Z(u)");
    }
    if (f_roots != ls.ws) {
        chk.part_a = false;
        fail("f roots are not a basis of W cap s");
    }
    if (!chk.part_a) return chk;

    chk.part_b = lab.e_roots.at(1) == ls.beta1 && lab.e_roots.at(-1) == ls.beta2;
    if (!chk.part_b) fail("e_1 / e_-1 are not in g_beta1 / g_beta2");

    auto form = [&](const Root& a, const Root& b) { return ls.form(ls.zu_index(a), ls.zu_index(b)); };
    const Rational g11 = form(lab.e_roots.at(1), lab.e_roots.at(-1));
    for (int i = 1; i <= m; ++i) {
        out.e[i] = {lab.e_roots.at(i), 1};
        const Rational g = form(lab.e_roots.at(i), lab.e_roots.at(-i));
        Rational c = 1;
        if (i == 1) {
            c = 1;
        } else if (g != 0 && g11 != 0) {
            c = g11 / g;
        }
        out.e[-i] = {lab.e_roots.at(-i), c};
    }
    const AlgElement e1 = out.e_vec(alg, 1);
    for (int i : out.f_order()) {
        const Root& gamma = lab.e_roots.at(i);
        const Root& delta = lab.f_roots.at(i);
        Rational d = 1;
        if (gamma + delta == lab.e_roots.at(1) && alg.structure_constant(gamma, delta) != 0)
            d = 1 / (out.e.at(i).scale * alg.structure_constant(gamma, delta));
        out.f[i] = {delta, d};
    }

    // Part c
    chk.part_c = true;
    for (int i : out.f_order())
        for (int j : out.f_order()) {
            const AlgElement br = alg.bracket(out.e_vec(alg, i), out.f_vec(alg, j));
            const bool ok = i == j ? br == e1 : br.is_zero();
            if (!ok) {
                chk.part_c = false;
                fail("[e_" + std::to_string(i) + ", f_" + std::to_string(j) + "] has the wrong value");
            }
        }

    // Part d: Gram matrix of the invariant form on the e-basis is hyperbolic,
    // once normalised by <e_1, e_-1>.
    chk.part_d = g11 != 0;
    if (chk.part_d) {
        for (int i : out.e_order())
            for (int j : out.e_order()) {
                const Rational v = out.e.at(i).scale * out.e.at(j).scale * form(out.e.at(i).root, out.e.at(j).root) / g11;
                const Rational want = (i == -j) ? 1 : 0;
                if (v != want) {
                    chk.part_d = false;
                    fail("<e_" + std::to_string(i) + ", e_" + std::to_string(j) + "> is " + to_string(v));
                }
            }
    } else {
        fail("<e_1, e_-1> vanishes");
    }

    // Part e
    chk.part_e = true;
    const AlgElement em1 = out.e_vec(alg, -1);
    for (const Root& a : ls.n3) {
        bool listed = false;
        for (const auto& [i, s] : out.e) listed = listed || s.root == a;
        for (const auto& [i, s] : out.f) listed = listed || s.root == a;
        if (listed) continue;
        if (!alg.bracket(em1, alg.e(a)).is_zero()) {
            chk.part_e = false;
            fail("[e_-1, g_" + a.str() + "] is nonzero");
        }
    }

    chk.derived_identity = true;
    for (int i : out.f_order()) {
        const AlgElement want = Rational(-1) * out.e_vec(alg, -i);
        if (!(alg.bracket(em1, out.f_vec(alg, i)) == want)) {
            chk.derived_identity = false;
            fail("[e_-1, f_" + std::to_string(i) + "] != -e_" + std::to_string(-i));
        }
    }
    return chk;
}

struct BasisSearch {
    BasisEF basis;
    LabellingCheck check;
    std::size_t candidates = 0;          // labellings examined
    std::size_t valid_labellings = 0;
    std::size_t valid_orientations = 0;  // distinct sign splits among the valid labellings
};

/// Z(u) roots other than beta1, beta2 paired by the invariant form, as
/// (positive-index member, negative-index member).
///
/// Orientation: the highest simple node whose coefficient differs inside every
/// pair; the member with the larger coefficient there takes the positive index.
/// Pairs are listed by their positive member, height descending.
inline std::vector<std::pair<Root, Root>> form_pairs(const LemmaSetting& ls) {
    std::vector<std::pair<Root, Root>> pairs;
    for (std::size_t i = 0; i < ls.zu.size(); ++i) {
        const Root& a = ls.zu[i];
        if (a == ls.beta1 || a == ls.beta2) continue;
        std::vector<std::size_t> partners;
        for (std::size_t j = 0; j < ls.zu.size(); ++j)
            if (ls.form(i, j) != 0) partners.push_back(j);
        if (partners.size() != 1) throw std::logic_error("form_pairs: root without a unique form partner");
        const Root& b = ls.zu[partners.front()];
        if (b == ls.beta1 || b == ls.beta2) throw std::logic_error("form_pairs: root paired with beta1 or beta2");
        if (a < b) pairs.emplace_back(a, b);
    }
    std::size_t node = 0;
    for (std::size_t k = ls.beta1.rank(); k >= 1 && node == 0; --k) {
        bool splits = true;
        for (const auto& [a, b] : pairs) splits = splits && a.coeff(k) != b.coeff(k);
        if (splits) node = k;
    }
    if (node == 0 && !pairs.empty()) throw std::logic_error("form_pairs: no node separates the pairs");
    for (auto& [a, b] : pairs)
        if (a.coeff(node) < b.coeff(node)) std::swap(a, b);
    std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
        if (x.first.height() != y.first.height()) return x.first.height() > y.first.height();
        return x.first < y.first;
    });
    return pairs;
}

/// Exhaustive search over root assignments. Each pair may flip its
/// orientation and the pairs are permuted over indices 2..m; the labelling
/// with no flips and the identity permutation comes first and is returned
/// when valid (otherwise the first valid one).
inline BasisSearch find_basis_ef(const ChevalleyAlgebra& alg, const LemmaSetting& ls) {
    const auto pairs = form_pairs(ls);
    const std::size_t k = pairs.size();
    BasisSearch search;
    bool found = false;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        bool orientation_valid = false;
        std::vector<std::size_t> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            BasisLabelling lab;
            lab.e_roots[1] = ls.beta1;
            lab.e_roots[-1] = ls.beta2;
            bool f_ok = true;
            for (std::size_t p = 0; p < k; ++p) {
                const auto& [plus, minus] = pairs[perm[p]];
                const bool flip = (mask >> perm[p]) & 1U;
                const int idx = static_cast<int>(p) + 2;
                lab.e_roots[idx] = flip ? minus : plus;
                lab.e_roots[-idx] = flip ? plus : minus;
                for (int s : {idx, -idx}) {
                    const Root d = ls.beta1 - lab.e_roots[s];
                    if (!alg.roots().is_root(d)) f_ok = false;
                    lab.f_roots[s] = d;
                }
            }
            ++search.candidates;
            if (!f_ok) continue;
            BasisEF basis;
            LabellingCheck chk = check_labelling(alg, ls, lab, basis);
            if (!chk.valid()) continue;
            ++search.valid_labellings;
            orientation_valid = true;
            if (!found) {
                search.basis = basis;
                search.check = chk;
                found = true;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (orientation_valid) ++search.valid_orientations;
    }
    if (!found) throw std::logic_error("find_basis_ef: no root assignment satisfies the basis lemma");
    return search;
}

/// Root assignment of an e/f basis.
inline BasisLabelling labelling_of(const BasisEF& b) {
    BasisLabelling lab;
    for (const auto& [i, s] : b.e) lab.e_roots[i] = s.root;
    for (const auto& [i, s] : b.f) lab.f_roots[i] = s.root;
    return lab;
}

/// Hyperbolic form on Z(u) in the e-basis order e_1..e_m, e_-1..e_-m.
struct ZuForm {
    IntMatrix gram;
    bool invariant = false;  // <[x,u],w> + <u,[x,w]> = 0 for all [S,S] generators

    Rational value(const std::vector<Rational>& u, const std::vector<Rational>& w) const {
        Rational s = 0;
        for (std::size_t i = 0; i < gram.size(); ++i) {
            if (u[i] == 0) continue;
            for (std::size_t j = 0; j < gram.size(); ++j)
                if (gram[i][j] != 0 && w[j] != 0) s += u[i] * gram[i][j] * w[j];
        }
        return s;
    }

    Matrix as_matrix() const {
        Matrix g(gram.size(), gram.size());
        for (std::size_t i = 0; i < gram.size(); ++i)
            for (std::size_t j = 0; j < gram.size(); ++j) g(i, j) = gram[i][j];
        return g;
    }

    Inertia signature() const { return inertia(as_matrix()); }
};

inline IntMatrix hyperbolic_gram(int m) {
    IntMatrix g(static_cast<std::size_t>(2 * m), std::vector<int>(static_cast<std::size_t>(2 * m), 0));
    for (int i = 0; i < m; ++i) {
        g[static_cast<std::size_t>(i)][static_cast<std::size_t>(m + i)] = 1;
        g[static_cast<std::size_t>(m + i)][static_cast<std::size_t>(i)] = 1;
    }
    return g;
}

/// <[x,u],w> + <u,[x,w]> = 0 for all generators, in the module coordinates of `am`.
inline bool form_is_invariant(const ActionMatrix& am, const Matrix& g) {
    for (const Matrix& a : am.per_generator) {
        const Matrix lhs = a.transpose() * g;
        const Matrix rhs = g * a;
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t j = 0; j < g.cols(); ++j)
                if (lhs(i, j) + rhs(i, j) != 0) return false;
    }
    return true;
}

inline ZuForm zu_form(const ChevalleyAlgebra& alg, const ParabolicDecomposition& r, const BasisEF& b) {
    ZuForm f;
    f.gram = hyperbolic_gram(b.m);
    const auto am = action_matrix(alg, levi_generators(alg, r.levi_keep), b.e_basis(alg));
    f.invariant = form_is_invariant(am, f.as_matrix());
    if (!f.invariant) throw std::logic_error("zu_form: hyperbolic form is not invariant under [S,S]");
    return f;
}

}  // namespace lietower
