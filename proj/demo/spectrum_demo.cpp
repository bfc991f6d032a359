// The hyperbolic form on Z(u) for E6: spectrum vectors, their class, and the
// rank of the induced skew form on X + Y.
#include <lietower/lietower.hpp>

#include <iostream>

using namespace lietower;

int main() {
    const Workspace ws = Workspace::build(kE6);
    const BasisEF& b = ws.basis();

    for (int i : b.e_order()) std::cout << "e_" << i << "  " << b.e.at(i).root << "\n";

    const auto one = spectrum_vector(b, ws.zu, 1, 0, {{2, 1}, {-3, 2}});
    const auto two = spectrum_vector(b, ws.zu, 1, 5, {{2, 1}, {-3, 2}});
    for (const auto* sv : {&one, &two}) {
        std::cout << "s = " << sv->s << ": <v,v> = " << sv->norm << ", " << to_string(classify_character(ws.zu, sv->v))
                  << ", induced rank " << ws.induced.rank_at(sv->v) << "\n";
    }
}
