#pragma once

#include "lietower/chevalley.hpp"
#include "lietower/matrix.hpp"
#include "lietower/root_system.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace lietower {

/// Standard parabolic p = l + n for a set of retained simple nodes.
struct ParabolicDecomposition {
    std::vector<int> levi_keep;          // 1-based, sorted
    Subsystem levi;                      // roots supported on levi_keep
    std::vector<Root> nilradical_roots;  // canonical order
    std::vector<int> depth;              // aligned with nilradical_roots
    std::vector<Root> center_roots;      // center of n, from brackets
    int max_depth = 0;
    int nilpotency_class = 0;  // from the lower central series

    int depth_of(const Root& r) const {
        auto it = std::lower_bound(nilradical_roots.begin(), nilradical_roots.end(), r);
        if (it == nilradical_roots.end() || *it != r) throw std::invalid_argument("depth_of: not a nilradical root");
        return depth[static_cast<std::size_t>(it - nilradical_roots.begin())];
    }
    bool in_nilradical(const Root& r) const {
        return std::binary_search(nilradical_roots.begin(), nilradical_roots.end(), r);
    }
    std::size_t dim() const { return nilradical_roots.size(); }
    bool abelian() const { return nilpotency_class == 1; }

    /// Nilradical roots of a given depth.
    std::vector<Root> layer(int d) const {
        std::vector<Root> out;
        for (std::size_t i = 0; i < nilradical_roots.size(); ++i)
            if (depth[i] == d) out.push_back(nilradical_roots[i]);
        return out;
    }
};

/// Center of the span of root vectors for a root set closed under brackets.
inline std::vector<Root> bracket_center(const ChevalleyAlgebra& alg, const std::vector<Root>& roots) {
    std::vector<Root> center;
    for (const Root& z : roots) {
        bool central = true;
        for (const Root& x : roots)
            if (alg.roots().is_root(x + z) && alg.structure_constant(x, z) != 0) {
                central = false;
                break;
            }
        if (central) center.push_back(z);
    }
    return center;
}

/// Number of steps of the lower central series until it vanishes.
inline int nilpotency_class(const ChevalleyAlgebra& alg, const std::vector<Root>& roots) {
    if (roots.empty()) return 0;
    std::set<Root> current(roots.begin(), roots.end());
    int cls = 0;
    while (!current.empty()) {
        ++cls;
        std::set<Root> next;
        for (const Root& x : roots)
            for (const Root& y : current) {
                const Root s = x + y;
                if (alg.roots().is_root(s) && alg.structure_constant(x, y) != 0) next.insert(s);
            }
        if (cls > static_cast<int>(roots.size())) throw std::logic_error("nilpotency_class: span is not nilpotent");
        current = std::move(next);
    }
    return cls;
}

inline ParabolicDecomposition decompose(const ChevalleyAlgebra& alg, std::vector<int> keep) {
    const RootSystem& rs = alg.roots();
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    ParabolicDecomposition pd;
    pd.levi_keep = keep;
    pd.levi = subsystem(rs, keep);
    std::vector<bool> kept(rs.rank() + 1, false);
    for (int k : keep) kept[static_cast<std::size_t>(k)] = true;
    for (const Root& r : rs.positive()) {
        int d = 0;
        for (std::size_t i = 1; i <= rs.rank(); ++i)
            if (!kept[i]) d += r.coeff(i);
        if (d > 0) {
            pd.nilradical_roots.push_back(r);
            pd.depth.push_back(d);
            pd.max_depth = std::max(pd.max_depth, d);
        }
    }
    pd.center_roots = bracket_center(alg, pd.nilradical_roots);
    pd.nilpotency_class = nilpotency_class(alg, pd.nilradical_roots);
    return pd;
}

/// Every root lies in exactly one of levi, nilradical, or -nilradical.
inline bool partitions_roots(const RootSystem& rs, const ParabolicDecomposition& pd) {
    for (const Root& r : rs.roots()) {
        const int hits = static_cast<int>(pd.levi.contains(r)) + static_cast<int>(pd.in_nilradical(r)) +
                         static_cast<int>(pd.in_nilradical(-r));
        if (hits != 1) return false;
    }
    return true;
}

/// [g_a, g_b] lands in depth d(a) + d(b) for every nilradical pair.
inline bool grading_compatible(const ChevalleyAlgebra& alg, const ParabolicDecomposition& pd) {
    for (std::size_t i = 0; i < pd.nilradical_roots.size(); ++i)
        for (std::size_t j = 0; j < pd.nilradical_roots.size(); ++j) {
            const Root& a = pd.nilradical_roots[i];
            const Root& b = pd.nilradical_roots[j];
            const Root s = a + b;
            if (!alg.roots().is_root(s) || alg.structure_constant(a, b) == 0) continue;
            if (!pd.in_nilradical(s) || pd.depth_of(s) != pd.depth[i] + pd.depth[j]) return false;
        }
    return true;
}

/// Rank of the skew form (x, y) -> coefficient of e_z in [x, y] on `roots`.
inline std::size_t skew_form_rank(const ChevalleyAlgebra& alg, const std::vector<Root>& roots, const Root& z) {
    Matrix m(roots.size(), roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = 0; j < roots.size(); ++j)
            if (roots[i] + roots[j] == z) m(i, j) = alg.structure_constant(roots[i], roots[j]);
    return rank(m);
}

/// Heisenberg test on a root set with designated center root z: all brackets
/// land in g_z, z is central, and the form on the rest is nondegenerate.
inline bool is_heisenberg(const ChevalleyAlgebra& alg, const std::vector<Root>& roots, const Root& z) {
    if (std::find(roots.begin(), roots.end(), z) == roots.end()) return false;
    for (const Root& a : roots)
        for (const Root& b : roots) {
            const Root s = a + b;
            if (alg.roots().is_root(s) && alg.structure_constant(a, b) != 0 && s != z) return false;
        }
    std::vector<Root> rest;
    for (const Root& r : roots)
        if (r != z) rest.push_back(r);
    return skew_form_rank(alg, rest, z) == rest.size();
}

enum class NamedParabolic { P, Q, R, Pg };

inline std::string to_string(NamedParabolic p) {
    switch (p) {
    case NamedParabolic::P: return "P";
    case NamedParabolic::Q: return "Q";
    case NamedParabolic::R: return "R";
    case NamedParabolic::Pg: return "Pg";
    }
    return "?";
}

/// Heisenberg layers from the strongly orthogonal highest-root cascade.
///
/// Layers are stored in cascade order: layers[0] belongs to beta_1 and is the
/// Heisenberg nilradical of Q. The outermost-first numbering N_1 x N_2 x N_3
/// used for the tower labels layer k as N_{4-k}.
struct HeisenbergTower {
    std::vector<Root> betas;
    std::vector<std::vector<Root>> layers;
    Subsystem residual;

    static int outer_index(std::size_t cascade_index0) { return 4 - static_cast<int>(cascade_index0 + 1); }

    std::vector<std::size_t> layer_dims() const {
        std::vector<std::size_t> d;
        for (const auto& l : layers) d.push_back(l.size());
        return d;
    }

    /// Residual simple nodes (1-based); throws if the residual is not spanned by simple roots.
    std::vector<int> residual_nodes() const {
        std::vector<int> nodes;
        for (const auto& c : residual.components) {
            auto a = c.ambient_nodes();
            if (!a) throw std::logic_error("HeisenbergTower: residual is not a standard Levi");
            nodes.insert(nodes.end(), a->begin(), a->end());
        }
        std::sort(nodes.begin(), nodes.end());
        return nodes;
    }
};

/// Roots a with (a, b) > 0 for `beta` and orthogonal to all `previous`.
inline std::vector<Root> cascade_layer(const RootSystem& rs, const Root& beta, const std::vector<Root>& previous) {
    std::vector<Root> layer;
    for (const Root& a : rs.positive()) {
        if (rs.pairing(a, beta) <= 0) continue;
        bool orth = true;
        for (const Root& p : previous)
            if (rs.pairing(a, p) != 0) {
                orth = false;
                break;
            }
        if (orth) layer.push_back(a);
    }
    return layer;
}

inline HeisenbergTower heisenberg_tower(const ChevalleyAlgebra& alg) {
    const RootSystem& rs = alg.roots();
    HeisenbergTower t;
    for (int k = 0; k < 3; ++k) {
        const Subsystem sub = orthogonal_subsystem(rs, t.betas);
        if (sub.components.empty()) throw std::logic_error("heisenberg_tower: cascade ended early");
        // Component whose highest root is maximal in height, ties by canonical order.
        Root beta = sub.components.front().highest;
        for (const auto& c : sub.components)
            if (c.highest > beta) beta = c.highest;
        t.layers.push_back(cascade_layer(rs, beta, t.betas));
        t.betas.push_back(beta);
    }
    t.residual = orthogonal_subsystem(rs, t.betas);
    for (const auto& c : t.residual.components)
        if (c.type != DynkinType{'A', 1}) throw std::logic_error("heisenberg_tower: residual has a component beyond A1");
    for (std::size_t k = 0; k < t.layers.size(); ++k)
        if (!is_heisenberg(alg, t.layers[k], t.betas[k]))
            throw std::logic_error("heisenberg_tower: layer " + std::to_string(k + 1) + " is not Heisenberg");
    return t;
}

/// Neither b_i + b_j nor b_i - b_j is a root, for all i != j.
inline bool strongly_orthogonal(const RootSystem& rs, const std::vector<Root>& betas) {
    for (std::size_t i = 0; i < betas.size(); ++i)
        for (std::size_t j = i + 1; j < betas.size(); ++j)
            if (rs.is_root(betas[i] + betas[j]) || rs.is_root(betas[i] - betas[j])) return false;
    return true;
}

/// For cascade layers a < b, [T_a, T_b] stays inside T_a (the earlier cascade
/// layer is an ideal of what follows it).
inline bool tower_semidirect(const ChevalleyAlgebra& alg, const HeisenbergTower& t) {
    for (std::size_t a = 0; a < t.layers.size(); ++a)
        for (std::size_t b = a + 1; b < t.layers.size(); ++b)
            for (const Root& x : t.layers[a])
                for (const Root& y : t.layers[b]) {
                    const Root s = x + y;
                    if (!alg.roots().is_root(s) || alg.structure_constant(x, y) == 0) continue;
                    if (std::find(t.layers[a].begin(), t.layers[a].end(), s) == t.layers[a].end()) return false;
                }
    return true;
}

/// Layers and residual positive roots partition the positive roots.
inline bool tower_exhausts(const RootSystem& rs, const HeisenbergTower& t) {
    std::set<Root> seen;
    std::size_t total = 0;
    for (const auto& l : t.layers) {
        seen.insert(l.begin(), l.end());
        total += l.size();
    }
    seen.insert(t.residual.positive.begin(), t.residual.positive.end());
    total += t.residual.positive.size();
    return total == seen.size() && seen.size() == rs.positive().size();
}

/// Generic coadjoint-orbit dimension of a tensor product of one infinite-
/// dimensional representation per Heisenberg layer: sum of (dim - 1).
inline std::size_t rankable_orbit_dim(const std::vector<std::size_t>& layer_dims) {
    std::size_t s = 0;
    for (auto d : layer_dims) {
        if (d == 0 || d % 2 == 0) throw std::invalid_argument("rankable_orbit_dim: Heisenberg layers have odd dimension");
        s += d - 1;
    }
    return s;
}

inline std::size_t rank3_orbit_dim(const HeisenbergTower& t) { return rankable_orbit_dim(t.layer_dims()); }

/// Codimension of U2 = (N_B cap opposite P) x G_beta1 in N_B, against the
/// rank-three orbit dimension.
struct PrincipalSeriesBound {
    std::size_t positive_roots = 0;
    std::size_t levi_positive = 0;  // |{a > 0 : c_n(a) = 0}| = dim U1
    std::size_t u2_dim = 0;
    std::size_t codim = 0;
    std::size_t orbit_dim = 0;
    bool u2_is_subalgebra = false;
    bool inequality = false;  // 2 codim < orbit_dim
};

inline PrincipalSeriesBound principal_series_codim(const ChevalleyAlgebra& alg, const HeisenbergTower& t) {
    const RootSystem& rs = alg.roots();
    PrincipalSeriesBound b;
    const std::size_t n = rs.rank();
    std::vector<Root> u1;
    for (const Root& r : rs.positive())
        if (r.coeff(n) == 0) u1.push_back(r);
    b.positive_roots = rs.positive().size();
    b.levi_positive = u1.size();
    b.u2_dim = u1.size() + 1;
    b.codim = b.positive_roots - b.u2_dim;
    b.orbit_dim = rank3_orbit_dim(t);
    b.inequality = 2 * b.codim < b.orbit_dim;

    // U1 is closed under brackets and g_beta1 commutes with it.
    std::set<Root> u1set(u1.begin(), u1.end());
    bool ok = true;
    for (const Root& x : u1) {
        if (rs.is_root(x + rs.highest())) ok = false;
        for (const Root& y : u1)
            if (rs.is_root(x + y) && !u1set.count(x + y)) ok = false;
    }
    b.u2_is_subalgebra = ok;
    return b;
}

namespace detail {

inline std::vector<int> all_but(std::size_t n, std::initializer_list<int> drop) {
    std::vector<int> keep;
    for (int i = 1; i <= static_cast<int>(n); ++i)
        if (std::find(drop.begin(), drop.end(), i) == drop.end()) keep.push_back(i);
    return keep;
}

}  // namespace detail

/// The unique simple node not orthogonal to the highest root.
inline int heisenberg_node(const RootSystem& rs) {
    int node = 0;
    for (std::size_t i = 1; i <= rs.rank(); ++i)
        if (rs.pairing(rs.highest(), rs.simple(i)) != 0) {
            if (node != 0) throw std::logic_error("heisenberg_node: highest root meets two simple roots");
            node = static_cast<int>(i);
        }
    return node;
}

/// P, Q, R and Pg. The constructed Levi is checked against the stated types:
/// R has [S,S] of type D4 (E6) or A1xD5 with the A1 at alpha_7 (E7); Q drops
/// alpha_2 (E6) or alpha_1 (E7); Pg keeps {4} (E6) or {2,3,5,7} (E7).
inline ParabolicDecomposition named_parabolic(const ChevalleyAlgebra& alg, NamedParabolic name) {
    const RootSystem& rs = alg.roots();
    const auto type = rs.type();
    if (!type) throw std::invalid_argument("named_parabolic: needs E6 or E7");
    const bool e6 = type->kind == SystemKind::E6;
    const std::size_t n = rs.rank();
    switch (name) {
    case NamedParabolic::P: return decompose(alg, detail::all_but(n, {static_cast<int>(n)}));
    case NamedParabolic::Q: {
        const int node = heisenberg_node(rs);
        if (node != (e6 ? 2 : 1)) throw std::logic_error("named_parabolic: unexpected Heisenberg node");
        return decompose(alg, detail::all_but(n, {node}));
    }
    case NamedParabolic::R: {
        auto pd = decompose(alg, e6 ? detail::all_but(n, {1, 6}) : detail::all_but(n, {6}));
        if (pd.levi.type_label() != (e6 ? "D4" : "A1xD5"))
            throw std::logic_error("named_parabolic: R has Levi type " + pd.levi.type_label());
        if (!e6) {
            const auto a1 = pd.levi.components.front().ambient_nodes();
            if (!a1 || *a1 != std::vector<int>{7}) throw std::logic_error("named_parabolic: A1 factor of R is not at alpha_7");
        }
        return pd;
    }
    case NamedParabolic::Pg: {
        const auto nodes = heisenberg_tower(alg).residual_nodes();
        if (nodes != (e6 ? std::vector<int>{4} : std::vector<int>{2, 3, 5, 7}))
            throw std::logic_error("named_parabolic: tower residual does not match the Pg Levi");
        return decompose(alg, nodes);
    }
    }
    throw std::invalid_argument("named_parabolic: unknown name");
}

}  // namespace lietower
