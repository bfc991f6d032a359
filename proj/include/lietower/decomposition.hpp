#pragma once

#include "lietower/parabolic.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace lietower {

inline bool contains_root(const std::vector<Root>& sorted, const Root& r) {
    return std::binary_search(sorted.begin(), sorted.end(), r);
}

/// u = X + Y + Z(u) for the nilradical u of R, with X = u cap l (l the Levi of P).
struct UDecomposition {
    std::vector<Root> u_roots;
    std::vector<Root> X_roots;
    std::vector<Root> Y_roots;
    std::vector<Root> Zu_roots;
    bool center_is_top_layer = false;  // Z(u) equals the maximal-depth layer
    bool y_forced = false;             // the root-space complement is unique
    bool x_commutative = false;
};

inline UDecomposition u_decompose(const ChevalleyAlgebra& alg, const ParabolicDecomposition& p,
                                  const ParabolicDecomposition& r) {
    UDecomposition ud;
    ud.u_roots = r.nilradical_roots;
    ud.Zu_roots = r.center_roots;
    for (const Root& a : ud.u_roots)
        if (p.levi.contains(a)) ud.X_roots.push_back(a);

    // Z(u) and X must be independent; Y is then the only sum of root spaces
    // completing them to u.
    bool overlap = false;
    for (const Root& a : ud.X_roots)
        if (contains_root(ud.Zu_roots, a)) overlap = true;
    for (const Root& a : ud.u_roots)
        if (!contains_root(ud.X_roots, a) && !contains_root(ud.Zu_roots, a)) ud.Y_roots.push_back(a);
    ud.y_forced = !overlap && ud.X_roots.size() + ud.Y_roots.size() + ud.Zu_roots.size() == ud.u_roots.size();

    ud.center_is_top_layer = r.nilpotency_class > 1 && ud.Zu_roots == r.layer(r.max_depth);
    ud.x_commutative = nilpotency_class(alg, ud.X_roots) <= 1;
    return ud;
}

/// n3 = W + W* + Z(n3) for the Heisenberg nilradical n3 of Q, with W = n3 cap l.
struct N3Decomposition {
    std::vector<Root> n3_roots;
    std::vector<Root> W_roots;
    std::vector<Root> Wstar_roots;
    std::vector<Root> Zn3_roots;
    bool polarization = false;  // W, W* isotropic and paired nondegenerately
    bool wstar_forced = false;
};

/// Skew form (x, y) -> coefficient of e_z in [x, y] between two root lists.
inline Matrix pairing_matrix(const ChevalleyAlgebra& alg, const std::vector<Root>& rows, const std::vector<Root>& cols,
                             const Root& z) {
    Matrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (rows[i] + cols[j] == z) m(i, j) = alg.structure_constant(rows[i], cols[j]);
    return m;
}

inline N3Decomposition n3_decompose(const ChevalleyAlgebra& alg, const ParabolicDecomposition& p,
                                    const ParabolicDecomposition& q) {
    N3Decomposition nd;
    nd.n3_roots = q.nilradical_roots;
    nd.Zn3_roots = q.center_roots;
    for (const Root& a : nd.n3_roots)
        if (p.levi.contains(a)) nd.W_roots.push_back(a);
    bool overlap = false;
    for (const Root& a : nd.W_roots)
        if (contains_root(nd.Zn3_roots, a)) overlap = true;
    for (const Root& a : nd.n3_roots)
        if (!contains_root(nd.W_roots, a) && !contains_root(nd.Zn3_roots, a)) nd.Wstar_roots.push_back(a);
    nd.wstar_forced = !overlap && nd.W_roots.size() + nd.Wstar_roots.size() + nd.Zn3_roots.size() == nd.n3_roots.size();

    if (nd.Zn3_roots.size() == 1 && nd.W_roots.size() == nd.Wstar_roots.size()) {
        const Root& z = nd.Zn3_roots.front();
        nd.polarization = pairing_matrix(alg, nd.W_roots, nd.W_roots, z).is_zero() &&
                          pairing_matrix(alg, nd.Wstar_roots, nd.Wstar_roots, z).is_zero() &&
                          rank(pairing_matrix(alg, nd.W_roots, nd.Wstar_roots, z)) == nd.W_roots.size();
    }
    return nd;
}

/// Every root space of Z(u) other than beta1, beta2 lies in W*.
inline bool center_outside_betas_in_wstar(const UDecomposition& ud, const N3Decomposition& nd, const Root& beta1,
                                          const Root& beta2) {
    for (const Root& a : ud.Zu_roots) {
        if (a == beta1 || a == beta2) continue;
        if (!contains_root(nd.Wstar_roots, a)) return false;
    }
    return true;
}

}  // namespace lietower
