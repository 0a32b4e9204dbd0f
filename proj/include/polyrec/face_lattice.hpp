#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "polyrec/graph.hpp"

namespace polyrec {

// Correspondence between the new facet created by truncation and the cut
// edges of the original polytope; enough data to invert the surgery.
struct TruncationRecord {
    int original_vertex_count = 0;
    VertexSet truncated_face = 0;        // original ids
    VertexSet new_facet_vertices = 0;    // result ids
    // result new-vertex id (offset by survivors.size()) -> (cut-face
    // endpoint, outside neighbor), both original ids, sorted lexicographically
    std::vector<std::pair<int, int>> crossings;
    std::vector<int> survivors;          // result id -> original id, ascending
};

// Face lattice of a polytope stored as an intersection-closed family of
// vertex subsets, including the empty set and the full set. Faces are kept
// sorted by (cardinality, numeric value); ranks are longest-chain heights
// from the empty face. Immutable after construction.
class FaceLattice {
  public:
    // Closure of {full set} + facets under pairwise intersection, plus the
    // empty set. Facets must be an antichain covering every vertex twice.
    static FaceLattice from_facets(int vertex_count, const std::vector<std::vector<int>>& facets);

    // Validate an explicit face family (must already contain the empty and
    // full sets and be intersection-closed).
    static FaceLattice from_faces(int vertex_count, std::vector<VertexSet> faces);

    int vertex_count() const { return n_; }
    const std::vector<VertexSet>& faces() const { return faces_; }
    int rank_of(VertexSet face) const;  // -1 when absent
    bool has_face(VertexSet face) const { return rank_of(face) >= 0; }

    int dimension() const { return dim_; }
    std::vector<int> f_vector() const;
    std::int64_t f_sum() const;  // sum_{i=0..d} f_i
    std::vector<VertexSet> faces_of_rank(int rank) const;
    std::vector<VertexSet> facets() const { return faces_of_rank(dim_); }

    Graph graph_of() const;
    bool is_simple_at(int v) const;
    int nearly_simple_index() const;
    std::vector<int> non_simple_vertices() const;

    // All 2-faces (rank-3 faces) whose vertex set contains v.
    std::vector<VertexSet> two_faces_containing(int v) const;

    bool operator==(const FaceLattice& other) const {
        return n_ == other.n_ && faces_ == other.faces_;
    }

  private:
    FaceLattice() = default;
    void compute_ranks_and_validate();

    int n_ = 0;
    int dim_ = -1;
    std::vector<VertexSet> faces_;  // sorted by (popcount, value)
    std::vector<int> ranks_;        // parallel to faces_
};

// The lattice surgery for truncating P at face T (any face, empty < T < top).
// Vertices of the result are relabeled densely: survivors first in ascending
// original order, then one new vertex per cut edge in (cut endpoint, outside
// endpoint) lexicographic order.
std::pair<FaceLattice, TruncationRecord> truncate(const FaceLattice& l, VertexSet t);

// Inverse surgery. `restored` is the face family of the cut face T in
// original ids ({x} for a vertex cut; {x},{y},{x,y} for an edge cut).
FaceLattice untruncate(const FaceLattice& lp, const TruncationRecord& rec,
                       const std::vector<VertexSet>& restored);

// True iff a vertex bijection carries the face family of l1 onto that of l2;
// decided by canonicalizing the two-colored vertex-facet incidence graph.
bool lattice_isomorphic(const FaceLattice& l1, const FaceLattice& l2);

}  // namespace polyrec
