// Tour of the core library: build a complex, inspect stars and links, and
// compute local betti profiles over GF(2).

#include <iostream>

#include "lhom/lhom.hpp"

int main() {
    using namespace lhom;

    // Three triangles glued along the edge {0,1}: the classic example of a
    // vertex whose neighborhood is not a manifold.
    const SimplicialComplex fan = SimplicialComplex::closure_of({
        Simplex{0, 1, 2},
        Simplex{0, 1, 3},
        Simplex{0, 1, 4},
    });
    std::cout << "fan complex: " << fan.size() << " simplices, dimension "
              << fan.dimension() << "\n";

    const PrimeField gf2(2);
    const Simplex edge{0, 1};

    std::cout << "star of " << edge << ":";
    for (const Simplex& s : fan.star(edge)) std::cout << ' ' << s;
    std::cout << "\nlink of " << edge << ":";
    const SimplicialComplex edge_link = fan.link(edge);
    for (const Simplex& s : edge_link.simplices()) std::cout << ' ' << s;
    std::cout << '\n';

    const BettiProfile profile = local_profile(fan, edge, 3, gf2);
    std::cout << "local profile of " << edge << ": (";
    for (std::size_t i = 0; i < profile.size(); ++i)
        std::cout << (i ? ", " : "") << profile[i];
    std::cout << ")\n";

    // The same degree-2 number through the link: the link is three isolated
    // vertices, whose 0th reduced betti number is 2.
    std::cout << "degree-2 local betti via link: " << local_betti_via_link(fan, edge, 2, gf2)
              << "\n";

    // A vertex of the glued edge has a contractible link (a star graph), so
    // its profile vanishes and differs from the edge's: the clustering
    // relation would not join them.
    const BettiProfile at_vertex = local_profile(fan, Simplex{0}, 3, gf2);
    std::cout << "local profile of {0}: (";
    for (std::size_t i = 0; i < at_vertex.size(); ++i)
        std::cout << (i ? ", " : "") << at_vertex[i];
    std::cout << ")\n";
    return 0;
}
