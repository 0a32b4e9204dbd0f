#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "polyrec/errors.hpp"

namespace polyrec {

// Vertex subsets are bitmasks; everything in this artifact is tiny.
using VertexSet = std::uint64_t;

constexpr int kMaxVertices = 64;

inline VertexSet bit(int v) { return VertexSet{1} << v; }
inline VertexSet full_set(int n) {
    return n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}
int popcount(VertexSet s);
// Lowest set bit index; s must be nonzero.
int first_vertex(VertexSet s);
std::vector<int> set_to_vector(VertexSet s);
VertexSet vector_to_set(const std::vector<int>& ids, int n);

// Undirected simple graph on dense vertex ids [0, n). Immutable after
// construction; edges are stored sorted lexicographically with a < b.
class Graph {
  public:
    Graph() = default;
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(int i) const { return edges_[i]; }

    int degree(int v) const { return popcount(adj_[v]); }
    int min_degree() const;
    VertexSet neighbors(int v) const { return adj_[v]; }
    bool has_edge(int a, int b) const;
    // Index into edges() of {min(a,b), max(a,b)}, or -1.
    int edge_index(int a, int b) const;

    bool connected() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<VertexSet> adj_;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_ids;  // new id -> original id, ascending
};

// Subgraph induced by s; vertices relabeled densely in ascending id order.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

// True iff every vertex has degree exactly k and g is connected. A
// single-vertex graph is 0-regular connected; the empty graph is not
// connected.
bool is_k_regular_connected(const Graph& g, int k);

}  // namespace polyrec
