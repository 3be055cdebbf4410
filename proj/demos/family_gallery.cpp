// Prints members of the two extremal families with their equality witnesses.

#include <iostream>

#include "sbn/sbn.hpp"

int main() {
    using namespace sbn;
    for (Family family : {Family::lambda, Family::omega}) {
        const Mode mode = family == Family::lambda ? Mode::closed_neighborhood : Mode::open_neighborhood;
        for (int p = 1; p <= 3; ++p) {
            const Graph g = family_member({family, p, {}});
            const auto f = core_negative_assignment(g.order(), p);
            const auto verdict = recognize_family(g, family);
            std::cout << to_string(family) << " p=" << p << " n=" << g.order() << " weight=" << weight(f)
                      << " valid=" << is_valid(g, f, mode) << " recognized=" << verdict.is_member << '\n'
                      << "  " << graph6_encode(g) << '\n';
        }
    }
}
