#pragma once

#include "lietower/basis_lemma.hpp"
#include "lietower/polynomial.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lietower {

/// v = t e_1 + sum_i (t a_i e_i + t a_-i e_-i) - (s + sum_i a_i a_-i t) e_-1
struct SpectrumVector {
    Rational t;
    Rational s;
    std::map<int, Rational> a;  // indices +-2..+-m, missing entries are zero
    std::vector<Rational> v;    // e-coordinates
    Rational norm;              // <v, v>
};

inline SpectrumVector spectrum_vector(const BasisEF& b, const ZuForm& f, const Rational& t, const Rational& s,
                                      const std::map<int, Rational>& a) {
    if (t == 0) throw std::invalid_argument("spectrum_vector: t must be nonzero");
    SpectrumVector sv{t, s, a, std::vector<Rational>(static_cast<std::size_t>(2 * b.m)), 0};
    auto coef = [&a](int i) -> Rational {
        auto it = a.find(i);
        return it == a.end() ? Rational(0) : it->second;
    };
    for (const auto& [i, x] : a)
        if (i == 0 || i == 1 || i == -1 || i > b.m || i < -b.m)
            throw std::invalid_argument("spectrum_vector: index out of range " + std::to_string(i));
    Rational cross = 0;
    for (int i = 2; i <= b.m; ++i) {
        sv.v[b.slot(i)] = t * coef(i);
        sv.v[b.slot(-i)] = t * coef(-i);
        cross += coef(i) * coef(-i) * t;
    }
    sv.v[b.slot(1)] = t;
    sv.v[b.slot(-1)] = -(s + cross);
    sv.norm = f.value(sv.v, sv.v);
    return sv;
}

/// <v, v> as a polynomial in (t, s, a_2..a_m, a_-2..a_-m), compared with -2ts.
struct SpectrumIdentity {
    Polynomial norm;
    Polynomial expected;
    std::vector<std::string> variables;
    bool holds = false;
};

inline SpectrumIdentity spectrum_identity(const BasisEF& b, const ZuForm& f) {
    const std::size_t m = static_cast<std::size_t>(b.m);
    const std::size_t nv = 2 + 2 * (m - 1);
    SpectrumIdentity id;
    id.variables = {"t", "s"};
    for (int i = 2; i <= b.m; ++i) id.variables.push_back("a" + std::to_string(i));
    for (int i = 2; i <= b.m; ++i) id.variables.push_back("a-" + std::to_string(i));
    const Polynomial t = Polynomial::variable(nv, 0);
    const Polynomial s = Polynomial::variable(nv, 1);
    auto a = [&](int i) { return Polynomial::variable(nv, i > 0 ? 2 + static_cast<std::size_t>(i - 2) : 1 + m + static_cast<std::size_t>(-i - 2)); };

    std::vector<Polynomial> v(2 * m, Polynomial(nv));
    Polynomial cross(nv);
    for (int i = 2; i <= b.m; ++i) {
        v[b.slot(i)] = t * a(i);
        v[b.slot(-i)] = t * a(-i);
        cross += a(i) * a(-i) * t;
    }
    v[b.slot(1)] = t;
    v[b.slot(-1)] = Polynomial(nv) - (s + cross);

    id.norm = Polynomial(nv);
    for (std::size_t i = 0; i < 2 * m; ++i)
        for (std::size_t j = 0; j < 2 * m; ++j)
            if (f.gram[i][j] != 0) id.norm += Rational(f.gram[i][j]) * (v[i] * v[j]);
    id.expected = Rational(-2) * (t * s);
    id.holds = id.norm == id.expected;
    return id;
}

enum class CharacterClass { zero, small, big };

inline std::string to_string(CharacterClass c) {
    switch (c) {
    case CharacterClass::zero: return "zero";
    case CharacterClass::small: return "small";
    case CharacterClass::big: return "big";
    }
    return "?";
}

inline bool is_zero_vector(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline CharacterClass classify_character(const ZuForm& f, const std::vector<Rational>& v) {
    if (is_zero_vector(v)) return CharacterClass::zero;
    return f.value(v, v) == 0 ? CharacterClass::small : CharacterClass::big;
}

/// The skew forms w_v(x, y) = <v, [x, y]> on X + Y, with [x, y] read in Z(u).
class InducedForm {
public:
    InducedForm(const ChevalleyAlgebra& alg, const UDecomposition& ud, const BasisEF& b, const ZuForm& f)
        : f_(f), omega_(ud.X_roots) {
        omega_.insert(omega_.end(), ud.Y_roots.begin(), ud.Y_roots.end());
        std::sort(omega_.begin(), omega_.end());
        const std::size_t d = omega_.size();
        entries_.assign(d, std::vector<std::vector<Rational>>(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                const AlgElement br = alg.bracket(alg.e(omega_[i]), alg.e(omega_[j]));
                if (br.is_zero()) continue;
                entries_[i][j] = b.e_coordinates(br);  // throws if [x, y] leaves Z(u)
            }
    }

    const std::vector<Root>& omega() const { return omega_; }

    std::size_t index(const Root& r) const {
        auto it = std::lower_bound(omega_.begin(), omega_.end(), r);
        if (it == omega_.end() || *it != r) throw std::invalid_argument("InducedForm: root outside X + Y");
        return static_cast<std::size_t>(it - omega_.begin());
    }

    Matrix skew_matrix(const std::vector<Rational>& v) const {
        const std::size_t d = omega_.size();
        Matrix m(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (!entries_[i][j].empty()) m(i, j) = f_.value(v, entries_[i][j]);
        return m;
    }

    Rational value(const std::vector<Rational>& v, const Root& x, const Root& y) const {
        const auto& c = entries_[index(x)][index(y)];
        return c.empty() ? Rational(0) : f_.value(v, c);
    }

    /// Rank of w_v; errors on v = 0.
    std::size_t rank_at(const std::vector<Rational>& v) const {
        if (is_zero_vector(v)) throw std::invalid_argument("induced_heisenberg_rank: v must be nonzero");
        return rank(skew_matrix(v));
    }

private:
    ZuForm f_;
    std::vector<Root> omega_;
    std::vector<std::vector<std::vector<Rational>>> entries_;
};

struct InducedHeisenberg {
    std::size_t rank = 0;
    std::size_t heisenberg_dim = 0;  // rank + 1
    std::size_t abelian_dim = 0;     // dim(X + Y) - rank
};

inline InducedHeisenberg induced_heisenberg_rank(const InducedForm& form, const std::vector<Rational>& v) {
    InducedHeisenberg h;
    h.rank = form.rank_at(v);
    h.heisenberg_dim = h.rank + 1;
    h.abelian_dim = form.omega().size() - h.rank;
    return h;
}

/// Adjoint action of [S,S] and of S on Z(u) in e-coordinates.
struct ZuActions {
    ActionMatrix derived;  // acting set = root vectors of the Levi + coroots of its nodes
    ActionMatrix full;     // acting set = root vectors of the Levi + all coroots
    std::size_t derived_dim() const { return derived.domain_basis.size(); }
    std::size_t full_dim() const { return full.domain_basis.size(); }
};

inline ZuActions zu_actions(const ChevalleyAlgebra& alg, const ParabolicDecomposition& r, const BasisEF& b) {
    const auto module = b.e_basis(alg);
    return {action_matrix(alg, levi_basis(alg, r, false), module), action_matrix(alg, levi_basis(alg, r, true), module)};
}

struct StabilizerDims {
    std::size_t acting = 0;
    std::size_t stabilizer = 0;  // nullity of x -> [x, v]
    std::size_t tangent = 0;     // rank of x -> [x, v]
    bool rank_nullity = false;
};

inline StabilizerDims stabilizer_dim(const ActionMatrix& am, const std::vector<Rational>& v) {
    const Matrix ev = am.evaluate(v);
    StabilizerDims s;
    s.acting = ev.cols();
    s.stabilizer = kernel_dim(ev);
    s.tangent = rank(ev);
    s.rank_nullity = s.stabilizer + s.tangent == s.acting;
    return s;
}

/// True when the root vectors and coroots of a Levi component all act on Z(u) by zero.
inline bool component_acts_trivially(const ChevalleyAlgebra& alg, const BasisEF& b, const Component& c) {
    std::vector<AlgElement> acting;
    for (const Root& a : c.roots) acting.push_back(alg.e(a));
    for (const Root& s : c.simple) acting.push_back(alg.h_root(s));
    const ActionMatrix am = action_matrix(alg, acting, b.e_basis(alg));
    for (const Matrix& m : am.per_generator)
        if (!m.is_zero()) return false;
    return true;
}

}  // namespace lietower
