#pragma once

#include <string>
#include <vector>

#include "polyrec/face_lattice.hpp"

namespace polyrec::fixtures {

// One bundled catalog polytope, facets transcribed verbatim (vertex lists
// descending, list order as published).
struct Fixture {
    std::string id;
    int dimension;
    int vertices;
    std::vector<std::vector<int>> facets;
};

// P3..P12. P3/P4 are the 3-nearly simple pair with a common graph; P5..P9
// are the reconstructible 4-polytopes on 7 vertices; P10..P12 need the
// dimension as extra input.
const std::vector<Fixture>& bundled();
const Fixture& bundled(const std::string& id);

FaceLattice lattice_of(const Fixture& f);

// Named classics used across tests and docs.
FaceLattice simplex(int d);  // d+1 vertices
FaceLattice cube3();
FaceLattice triangular_prism();
FaceLattice pentagonal_prism();
FaceLattice square_pyramid();      // 1-nearly simple, apex 4
FaceLattice pentagonal_pyramid();  // 1-nearly simple, apex 5
FaceLattice polygon(int sides);
FaceLattice segment();

// 2-nearly simple 3-polytopes covering both adjacency cases:
// hexagonal roof: ridge vertices 6,7 of degree 4, adjacent.
FaceLattice hexagonal_roof();
// tetragonal trapezohedron (dual square antiprism): poles 8,9 of degree 4,
// non-adjacent.
FaceLattice tetragonal_trapezohedron();

}  // namespace polyrec::fixtures
