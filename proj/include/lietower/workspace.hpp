#pragma once

#include "lietower/omega.hpp"

#include <optional>

namespace lietower {

/// Every derived structure for one type, built once and shared by the checks.
struct Workspace {
    RootSystemType type;
    RootSystem rs;
    ChevalleyAlgebra alg;
    ParabolicDecomposition P;
    ParabolicDecomposition Q;
    ParabolicDecomposition R;
    ParabolicDecomposition Pg;
    HeisenbergTower tower;
    UDecomposition ud;
    N3Decomposition nd;
    LemmaSetting lemma;
    BasisSearch basis_search;
    ZuForm zu;
    InducedForm induced;
    ZuActions actions;
    std::optional<OmegaPartition> omega;  // E7 only

    const BasisEF& basis() const { return basis_search.basis; }
    const Root& beta1() const { return tower.betas.at(0); }
    const Root& beta2() const { return tower.betas.at(1); }
    std::size_t rank() const { return rs.rank(); }

    /// e-coordinates of sum_i c_i e_i for a sparse index list.
    std::vector<Rational> vec(std::initializer_list<std::pair<int, Rational>> terms) const {
        std::vector<Rational> v(static_cast<std::size_t>(2 * basis().m));
        for (const auto& [i, c] : terms) v.at(basis().slot(i)) += c;
        return v;
    }

    static Workspace build(RootSystemType t) {
        RootSystem rs = RootSystem::build(t);
        ChevalleyAlgebra alg = ChevalleyAlgebra::build(rs);
        return Workspace(t, std::move(rs), std::move(alg));
    }

private:
    Workspace(RootSystemType t, RootSystem rs_in, ChevalleyAlgebra alg_in)
        : type(t),
          rs(std::move(rs_in)),
          alg(std::move(alg_in)),
          P(named_parabolic(alg, NamedParabolic::P)),
          Q(named_parabolic(alg, NamedParabolic::Q)),
          R(named_parabolic(alg, NamedParabolic::R)),
          Pg(named_parabolic(alg, NamedParabolic::Pg)),
          tower(heisenberg_tower(alg)),
          ud(u_decompose(alg, P, R)),
          nd(n3_decompose(alg, P, Q)),
          lemma(make_lemma_setting(alg, R, ud, nd, tower.betas.at(0), tower.betas.at(1))),
          basis_search(find_basis_ef(alg, lemma)),
          zu(zu_form(alg, R, basis_search.basis)),
          induced(alg, ud, basis_search.basis, zu),
          actions(zu_actions(alg, R, basis_search.basis)) {
        if (!ud.y_forced) throw std::logic_error("u_decompose: Y is not forced by the defining conditions");
        if (!nd.polarization) throw std::logic_error("n3_decompose: W, W* do not polarize n3 / Z(n3)");
        if (t.kind == SystemKind::E7) omega = omega_partition(rs, ud, tower.betas);
    }
};

}  // namespace lietower
