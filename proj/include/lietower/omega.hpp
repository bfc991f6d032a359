#pragma once

#include "lietower/characters.hpp"

#include <array>
#include <set>
#include <stdexcept>
#include <vector>

namespace lietower {

/// Nilradical of P against Y + Z(u) + g_{alpha_7}.
struct NDecompositionCheck {
    std::size_t n_dim = 0;
    std::size_t y_dim = 0;
    std::size_t zu_dim = 0;
    bool partition = false;
    bool y_has_c7_one = false;
    bool alpha7_in_n = false;
};

inline NDecompositionCheck n_decomposition_check(const ParabolicDecomposition& p, const UDecomposition& ud) {
    NDecompositionCheck c;
    const std::size_t n = p.nilradical_roots.empty() ? 0 : p.nilradical_roots.front().rank();
    const Root a7 = Root::simple(n, n);
    c.n_dim = p.nilradical_roots.size();
    c.y_dim = ud.Y_roots.size();
    c.zu_dim = ud.Zu_roots.size();
    std::vector<Root> u(ud.Y_roots);
    u.insert(u.end(), ud.Zu_roots.begin(), ud.Zu_roots.end());
    u.push_back(a7);
    std::sort(u.begin(), u.end());
    c.partition = std::adjacent_find(u.begin(), u.end()) == u.end() && u == p.nilradical_roots;
    c.y_has_c7_one = std::all_of(ud.Y_roots.begin(), ud.Y_roots.end(), [n](const Root& r) { return r.coeff(n) == 1; });
    c.alpha7_in_n = contains_root(p.nilradical_roots, a7);
    return c;
}

/// {a1, a2, a3, a4} with a2 = a1 + alpha_7, a3 = beta_j - a2, a4 = a3 + alpha_7.
struct OmegaBlock {
    std::array<Root, 4> roots;
    int j = 0;  // 1 or 2

    /// The same block read from a3: a3, a4, beta_j - a4 = a1, a2.
    OmegaBlock swapped() const { return {{roots[2], roots[3], roots[0], roots[1]}, j}; }
};

struct OmegaPartition {
    std::vector<Root> omega;          // X + Y roots
    std::vector<OmegaBlock> blocks;   // first exact cover found
    std::size_t candidate_blocks = 0;
    std::size_t exact_covers = 0;     // number of distinct partitions
};

/// Conditions a and b for one ordered block.
inline bool block_conditions(const OmegaBlock& b, const UDecomposition& ud, const std::vector<Root>& betas,
                             const Root& alpha7) {
    if (b.j < 1 || b.j > 2) return false;
    const Root& beta = betas.at(static_cast<std::size_t>(b.j - 1));
    const auto& r = b.roots;
    const bool a = r[1] == r[0] + alpha7 && r[2] == beta - r[1] && r[3] == r[2] + alpha7;
    const bool bb = contains_root(ud.X_roots, r[0]) && contains_root(ud.X_roots, r[2]) &&
                    contains_root(ud.Y_roots, r[1]) && contains_root(ud.Y_roots, r[3]);
    return a && bb;
}

namespace detail {

inline void exact_cover(const std::vector<Root>& omega, const std::vector<OmegaBlock>& candidates,
                        std::set<Root>& covered, std::vector<OmegaBlock>& chosen, OmegaPartition& out) {
    auto next = std::find_if(omega.begin(), omega.end(), [&](const Root& r) { return !covered.count(r); });
    if (next == omega.end()) {
        if (out.exact_covers++ == 0) out.blocks = chosen;
        return;
    }
    for (const OmegaBlock& b : candidates) {
        if (std::find(b.roots.begin(), b.roots.end(), *next) == b.roots.end()) continue;
        if (std::any_of(b.roots.begin(), b.roots.end(), [&](const Root& r) { return covered.count(r) > 0; })) continue;
        for (const Root& r : b.roots) covered.insert(r);
        chosen.push_back(b);
        exact_cover(omega, candidates, covered, chosen, out);
        chosen.pop_back();
        for (const Root& r : b.roots) covered.erase(r);
    }
}

}  // namespace detail

/// Builds candidate blocks along alpha_7-strings and searches all exact covers of Omega.
/// Each block is stored with a1 the smaller of its two X roots.
inline OmegaPartition omega_partition(const RootSystem& rs, const UDecomposition& ud, const std::vector<Root>& betas) {
    const std::size_t n = rs.rank();
    const Root a7 = Root::simple(n, n);
    OmegaPartition op;
    op.omega = ud.X_roots;
    op.omega.insert(op.omega.end(), ud.Y_roots.begin(), ud.Y_roots.end());
    std::sort(op.omega.begin(), op.omega.end());

    std::vector<OmegaBlock> candidates;
    for (const Root& a1 : ud.X_roots)
        for (int j : {1, 2}) {
            OmegaBlock b{{a1, a1 + a7, betas.at(static_cast<std::size_t>(j - 1)) - (a1 + a7), Root(n)}, j};
            b.roots[3] = b.roots[2] + a7;
            if (!block_conditions(b, ud, betas, a7)) continue;
            if (b.roots[2] < b.roots[0]) continue;  // counted from its smaller X root
            if (b.roots[2] == b.roots[0]) continue;
            candidates.push_back(b);
        }
    op.candidate_blocks = candidates.size();
    std::set<Root> covered;
    std::vector<OmegaBlock> chosen;
    detail::exact_cover(op.omega, candidates, covered, chosen, op);
    if (op.exact_covers == 0) throw std::logic_error("omega_partition: Omega admits no block partition");
    return op;
}

struct Polarization {
    std::vector<Root> X1;
    std::vector<Root> Y1;
};

/// X1 takes a1, a2 of each block as oriented by `flip` (bit t swaps block t).
inline Polarization polarization_from_blocks(const std::vector<OmegaBlock>& blocks, unsigned long flip) {
    Polarization p;
    for (std::size_t t = 0; t < blocks.size(); ++t) {
        const OmegaBlock b = ((flip >> t) & 1UL) ? blocks[t].swapped() : blocks[t];
        p.X1.push_back(b.roots[0]);
        p.X1.push_back(b.roots[1]);
        p.Y1.push_back(b.roots[2]);
        p.Y1.push_back(b.roots[3]);
    }
    std::sort(p.X1.begin(), p.X1.end());
    std::sort(p.Y1.begin(), p.Y1.end());
    return p;
}

inline bool isotropic(const InducedForm& form, const std::vector<Rational>& v, const std::vector<Root>& half) {
    for (const Root& x : half)
        for (const Root& y : half)
            if (form.value(v, x, y) != 0) return false;
    return true;
}

/// [x, g_a] lies in the span of `half` and Z(u) for every x in the triple (e_a7, h_a7, e_-a7).
inline bool stable_mod_center(const ChevalleyAlgebra& alg, const UDecomposition& ud, const std::vector<Root>& half) {
    const std::size_t n = alg.rank();
    const Root a7 = Root::simple(n, n);
    const std::vector<AlgElement> triple{alg.e(a7), alg.h(n), alg.e(-a7)};
    for (const AlgElement& x : triple)
        for (const Root& a : half) {
            const AlgElement br = alg.bracket(x, alg.e(a));
            if (!is_zero_vector(br.cartan_part)) return false;
            for (const auto& [r, c] : br.root_part)
                if (!contains_root(half, r) && !contains_root(ud.Zu_roots, r)) return false;
        }
    return true;
}

struct PolarizationCheck {
    std::size_t x1_dim = 0;
    std::size_t y1_dim = 0;
    bool partition = false;     // X1, Y1 disjoint with union Omega
    bool nondegenerate = false; // w_v has full rank on Omega
    bool x1_isotropic = false;
    bool y1_isotropic = false;
    bool x1_stable = false;
    bool y1_stable = false;
    bool block_split = false;   // each block: a1, a2 in X1 and a3, a4 in Y1 for one of its orderings

    bool lagrangian() const { return partition && nondegenerate && x1_isotropic && y1_isotropic; }
    bool ok() const { return lagrangian() && x1_stable && y1_stable && block_split; }
};

inline PolarizationCheck polarization_check(const ChevalleyAlgebra& alg, const UDecomposition& ud,
                                            const InducedForm& form, const std::vector<Rational>& v,
                                            const OmegaPartition& op, const Polarization& pol) {
    PolarizationCheck c;
    c.x1_dim = pol.X1.size();
    c.y1_dim = pol.Y1.size();
    std::vector<Root> all(pol.X1);
    all.insert(all.end(), pol.Y1.begin(), pol.Y1.end());
    std::sort(all.begin(), all.end());
    c.partition = std::adjacent_find(all.begin(), all.end()) == all.end() && all == op.omega &&
                  pol.X1.size() == pol.Y1.size();
    c.nondegenerate = form.rank_at(v) == op.omega.size();
    c.x1_isotropic = isotropic(form, v, pol.X1);
    c.y1_isotropic = isotropic(form, v, pol.Y1);
    c.x1_stable = stable_mod_center(alg, ud, pol.X1);
    c.y1_stable = stable_mod_center(alg, ud, pol.Y1);
    c.block_split = true;
    for (const OmegaBlock& b : op.blocks) {
        bool fits = false;
        for (const OmegaBlock& o : {b, b.swapped()})
            fits = fits || (contains_root(pol.X1, o.roots[0]) && contains_root(pol.X1, o.roots[1]) &&
                            contains_root(pol.Y1, o.roots[2]) && contains_root(pol.Y1, o.roots[3]));
        c.block_split = c.block_split && fits;
    }
    return c;
}

}  // namespace lietower
