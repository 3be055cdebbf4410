// Walks through the small graphs on which the earlier bipartite bounds fail,
// and shows the triangle-free bounds holding on the same graphs.

#include <iomanip>
#include <iostream>

#include "sbn/sbn.hpp"

int main() {
    using namespace sbn;
    std::cout << std::fixed << std::setprecision(3);

    for (const auto& [name, g] : {std::pair{"P3", path(3)}, std::pair{"bistar", bistar()}}) {
        const auto r = branch_and_bound(g, Mode::closed_neighborhood);
        const int n = g.order();
        std::cout << name << " (" << graph6_encode(g) << "): beta_s = " << r.value << " via " << r.witness.str() << '\n'
                  << "  old bipartite bound  " << bound_bs_old(n) << (holds_bs_old(n, r.value) ? "  holds" : "  FAILS") << '\n'
                  << "  triangle-free bound  " << bound_bs_new(n) << (holds_bs(n, r.value) ? "  holds" : "  FAILS")
                  << (equal_bs(n, r.value) ? " with equality" : "") << '\n';
    }

    for (int p : {1, 2}) {
        const auto ce = counterexample_t12(p);
        const int n = ce.graph.order();
        const int w = weight(ce.assignment);
        std::cout << "t12 p=" << p << ": n = " << n << ", core -1 assignment is a bad function: "
                  << (is_bf(ce.graph, ce.assignment) ? "yes" : "no") << ", weight " << w << '\n'
                  << "  old beta_D bound " << bound_bd_old(n) << (holds_bd_old(n, w) ? "  holds" : "  FAILS") << '\n';
    }
}
