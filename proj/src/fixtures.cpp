#include "polyrec/fixtures.hpp"

#include <algorithm>

#include "polyrec/errors.hpp"

namespace polyrec::fixtures {

const std::vector<Fixture>& bundled() {
    static const std::vector<Fixture> fs = {
        {"P3", 4, 8,
         {{7, 6, 5, 4, 3, 2}, {7, 6, 5, 4, 1, 0}, {7, 6, 3, 2, 1}, {7, 5, 3, 1, 0}, {6, 4, 2, 1}, {5, 4, 3, 0}, {4, 3, 2, 1, 0}}},
        {"P4", 4, 8,
         {{7, 6, 5, 4, 3, 2}, {7, 6, 5, 4, 1, 0}, {7, 6, 3, 2, 1}, {7, 5, 3, 1, 0}, {6, 4, 2, 1}, {5, 4, 3, 0}, {4, 3, 2, 1}, {4, 3, 1, 0}}},
        {"P5", 4, 7,
         {{6, 5, 4, 3, 2, 1}, {6, 5, 4, 3, 0}, {6, 5, 2, 0}, {6, 4, 2, 0}, {5, 3, 1, 0}, {5, 2, 1, 0}, {4, 3, 1, 0}, {4, 2, 1, 0}}},
        {"P6", 4, 7,
         {{6, 5, 4, 3, 2, 1}, {6, 5, 4, 3, 0}, {6, 5, 2, 1, 0}, {4, 3, 2, 1, 0}, {6, 4, 2, 0}, {5, 3, 1, 0}}},
        {"P7", 4, 7,
         {{6, 5, 4, 3, 2, 1}, {6, 5, 4, 3, 0}, {6, 5, 2, 1, 0}, {6, 4, 2, 0}, {5, 3, 1, 0}, {4, 3, 2, 0}, {3, 2, 1, 0}}},
        {"P8", 4, 7,
         {{6, 5, 4, 3, 2, 1}, {6, 5, 4, 3, 2, 0}, {6, 5, 1, 0}, {6, 4, 1, 0}, {5, 3, 1, 0}, {4, 2, 1, 0}, {3, 2, 1, 0}}},
        {"P9", 4, 7,
         {{6, 5, 4, 3, 2}, {6, 5, 4, 3, 1}, {6, 5, 2, 1, 0}, {6, 4, 2, 1, 0}, {5, 3, 2, 0}, {5, 3, 1, 0}, {4, 3, 2, 0}, {4, 3, 1, 0}}},
        {"P10", 4, 7,
         {{6, 5, 4, 3}, {6, 5, 4, 2}, {6, 5, 3, 2}, {6, 4, 3, 1}, {6, 4, 2, 1}, {6, 3, 2, 0}, {6, 3, 1, 0}, {6, 2, 1, 0}, {5, 4, 3, 1}, {5, 4, 2, 0}, {5, 4, 1, 0}, {5, 3, 2, 0}, {5, 3, 1, 0}, {4, 2, 1, 0}}},
        {"P11", 5, 7,
         {{6, 5, 4, 3, 2, 1}, {6, 5, 4, 3, 2, 0}, {6, 5, 4, 3, 1, 0}, {6, 5, 2, 1, 0}, {6, 4, 2, 1, 0}, {5, 3, 2, 1, 0}, {4, 3, 2, 1, 0}}},
        {"P12", 6, 7,
         {{6, 5, 4, 3, 2, 1}, {6, 5, 4, 3, 2, 0}, {6, 5, 4, 3, 1, 0}, {6, 5, 4, 2, 1, 0}, {6, 5, 3, 2, 1, 0}, {6, 4, 3, 2, 1, 0}, {5, 4, 3, 2, 1, 0}}},
    };
    return fs;
}

const Fixture& bundled(const std::string& id) {
    for (const Fixture& f : bundled())
        if (f.id == id) return f;
    throw InputError("unknown fixture id: " + id);
}

FaceLattice lattice_of(const Fixture& f) { return FaceLattice::from_facets(f.vertices, f.facets); }

FaceLattice simplex(int d) {
    if (d < 1 || d > 10) throw InputError("simplex dimension out of range");
    std::vector<std::vector<int>> facets;
    for (int skip = 0; skip <= d; ++skip) {
        std::vector<int> f;
        for (int v = 0; v <= d; ++v)
            if (v != skip) f.push_back(v);
        facets.push_back(f);
    }
    if (d == 1) return segment();
    return FaceLattice::from_facets(d + 1, facets);
}

FaceLattice cube3() {
    return FaceLattice::from_facets(
        8, {{0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 5, 4}, {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}});
}

FaceLattice triangular_prism() {
    return FaceLattice::from_facets(6, {{0, 1, 2}, {3, 4, 5}, {0, 1, 4, 3}, {1, 2, 5, 4}, {0, 2, 5, 3}});
}

FaceLattice pentagonal_prism() {
    return FaceLattice::from_facets(10, {{0, 1, 2, 3, 4},
                                         {5, 6, 7, 8, 9},
                                         {0, 1, 6, 5},
                                         {1, 2, 7, 6},
                                         {2, 3, 8, 7},
                                         {3, 4, 9, 8},
                                         {4, 0, 5, 9}});
}

FaceLattice square_pyramid() {
    return FaceLattice::from_facets(5, {{0, 1, 2, 3}, {0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {3, 0, 4}});
}

FaceLattice pentagonal_pyramid() {
    return FaceLattice::from_facets(6, {{0, 1, 2, 3, 4}, {0, 1, 5}, {1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {4, 0, 5}});
}

FaceLattice polygon(int sides) {
    if (sides < 3) throw InputError("polygon needs at least 3 sides");
    std::vector<std::vector<int>> facets;
    for (int v = 0; v < sides; ++v) facets.push_back({v, (v + 1) % sides});
    return FaceLattice::from_facets(sides, facets);
}

FaceLattice segment() {
    return FaceLattice::from_faces(2, {0, bit(0), bit(1), bit(0) | bit(1)});
}

FaceLattice hexagonal_roof() {
    return FaceLattice::from_facets(8, {{0, 1, 2, 3, 4, 5},
                                        {0, 1, 6},
                                        {1, 2, 6},
                                        {2, 3, 7, 6},
                                        {3, 4, 7},
                                        {4, 5, 7},
                                        {0, 5, 7, 6}});
}

FaceLattice tetragonal_trapezohedron() {
    return FaceLattice::from_facets(10, {{8, 0, 1, 2},
                                         {8, 2, 3, 4},
                                         {8, 4, 5, 6},
                                         {8, 6, 7, 0},
                                         {9, 1, 2, 3},
                                         {9, 3, 4, 5},
                                         {9, 5, 6, 7},
                                         {9, 7, 0, 1}});
}

}  // namespace polyrec::fixtures
