// Builds E7, walks the highest-root cascade and prints each Heisenberg layer.
#include <lietower/lietower.hpp>

#include <iostream>

using namespace lietower;

int main() {
    const auto rs = RootSystem::build(kE7);
    const auto alg = ChevalleyAlgebra::build(rs);
    const auto tower = heisenberg_tower(alg);

    for (std::size_t k = 0; k < tower.layers.size(); ++k) {
        const Root& beta = tower.betas[k];
        std::cout << "layer " << k + 1 << "  beta " << beta << "  dim " << tower.layers[k].size()
                  << "  skew rank " << skew_form_rank(alg, tower.layers[k], beta) << "\n";
    }
    std::cout << "residual " << tower.residual.type_label() << " on nodes";
    for (int n : tower.residual_nodes()) std::cout << " " << n;
    std::cout << "\n";

    const auto ps = principal_series_codim(alg, tower);
    std::cout << "orbit dim " << ps.orbit_dim << ", codim " << ps.codim << "\n";
}
