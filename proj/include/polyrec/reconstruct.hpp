#pragma once

#include <optional>
#include <vector>

#include "polyrec/face_lattice.hpp"
#include "polyrec/graph.hpp"

namespace polyrec {

struct Reconstruction {
    FaceLattice lattice;
    int dimension = 0;
    bool dimension_assumed = false;  // claimed_dimension was absent
};

// claimed if provided, otherwise the minimum vertex degree (flagged as an
// assumption by the caller). claimed above the minimum degree is an error.
int infer_dimension(const Graph& g, std::optional<int> claimed);

// Simple reconstruction: faces are the initial k-rics (0 <= k <= d-1) of
// f^O-minimizing acyclic orientations, pooled over every minimizing witness,
// plus the empty and full sets. The assembled family must validate as a face
// lattice of dimension d with graph g.
FaceLattice reconstruct_simple(const Graph& g, int d);

enum class CandidateMode { kGlobalMin, kSinkMin };

// Union over all orientations of the selected minimizing class of initial
// 2-rics that contain `anchors` and contain no non-simple vertex (degree > d)
// outside `anchors`. For kSinkMin the class is the sink-constrained one.
std::vector<VertexSet> two_face_candidates(const Graph& g, int d, VertexSet anchors,
                                           CandidateMode mode, int sink = -1);

// Graph surgery mirroring the lattice truncation at vertex x, driven by the
// 2-faces through x. Ids follow the lattice convention: survivors compacted
// ascending, one new vertex per neighbor of x in ascending neighbor order.
std::pair<Graph, TruncationRecord> truncated_graph_at_vertex(const Graph& g, int x,
                                                             const std::vector<VertexSet>& two_faces_at_x);

// Same at the edge {x, y}; two_faces may contain faces through x only,
// y only, or both (the partition is inferred from membership).
std::pair<Graph, TruncationRecord> truncated_graph_at_edge(const Graph& g, int x, int y,
                                                           const std::vector<VertexSet>& two_faces);

// Case-1 facet completion: a simple (d-1)-regular facet graph may be missing
// exactly one edge (the 2-face through both non-simple vertices); the two
// degree-(d-2) vertices, when present, must be joined.
Graph complete_new_facet(const Graph& facet_graph, int d);

FaceLattice reconstruct_1_nearly_simple(const Graph& g, int d);
FaceLattice reconstruct_2_nearly_simple(const Graph& g, int d);

// Front door: infer d, count h = #{v : deg(v) > d}, dispatch h = 0, 1, 2;
// h >= 3 raises UnsupportedClassError (counterexamples exist at h = 3).
Reconstruction reconstruct(const Graph& g, std::optional<int> claimed_dimension);

}  // namespace polyrec
