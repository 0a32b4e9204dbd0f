#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "polyrec/face_lattice.hpp"
#include "polyrec/graph.hpp"

namespace polyrec {

// Edge-direction assignments are searched over at most this many edges.
constexpr int kMaxEnumerationEdges = 30;

// An acyclic orientation of a graph. Directions are stored per edge index of
// the underlying graph (bit set = edge points a -> b for the stored pair
// (a, b) with a < b). Construction rejects cyclic assignments.
class Orientation {
  public:
    Orientation(std::shared_ptr<const Graph> g, std::uint64_t dirs);
    Orientation(const Graph& g, std::uint64_t dirs)
        : Orientation(std::make_shared<Graph>(g), dirs) {}

    const Graph& graph() const { return *graph_; }
    std::uint64_t dirs() const { return dirs_; }
    int head(int edge_index) const {
        auto [a, b] = graph_->edge(edge_index);
        return (dirs_ >> edge_index) & 1 ? b : a;
    }
    int tail(int edge_index) const {
        auto [a, b] = graph_->edge(edge_index);
        return (dirs_ >> edge_index) & 1 ? a : b;
    }
    int indegree(int v) const { return indeg_[v]; }
    bool is_sink(int v) const { return indeg_[v] == graph_->degree(v); }

    bool operator==(const Orientation& o) const {
        return graph() == o.graph() && dirs_ == o.dirs_;
    }

  private:
    std::shared_ptr<const Graph> graph_;
    std::uint64_t dirs_ = 0;
    std::vector<std::uint8_t> indeg_;
};

// f^O = sum over vertices of 2^indegree, exact; overflow raises CapacityError.
std::uint64_t f_O(const Orientation& o);

// Visit every acyclic orientation exactly once in lexicographic direction
// order (edge 0 most significant, bit 0 before bit 1), pruning assignments as
// soon as they close a directed cycle. Return false from the visitor to stop.
void enumerate_acyclic(const Graph& g, const std::function<bool(const Orientation&)>& visit);
std::vector<Orientation> enumerate_acyclic(const Graph& g);

struct MinFOResult {
    std::uint64_t value = 0;
    std::vector<Orientation> witnesses;  // all attaining orientations, dirs ascending
};

// Minimum of f^O over all acyclic orientations (branch and bound; equals the
// exhaustive minimum) together with every witness.
MinFOResult min_f_O(const Graph& g);

// Same restricted to orientations in which every edge at y points toward y.
MinFOResult min_f_O_with_sink(const Graph& g, int y);

// True iff every edge with exactly one endpoint in s has its head outside s.
bool is_initial(const Orientation& o, VertexSet s);

// All initial vertex sets whose induced subgraph is k-regular and connected.
// Initial sets of an acyclic orientation are exactly the predecessor-closed
// sets, enumerated by growing ideals along a topological order.
std::vector<VertexSet> initial_krics(const Orientation& o, int k);

// Exact rational, for linear functional orientations only.
struct Rational {
    long long num = 0;
    long long den = 1;
    Rational() = default;
    Rational(long long n);  // NOLINT(google-explicit-constructor)
    Rational(long long n, long long d);
};

// Orient every edge toward the endpoint with the larger <coords[v], w>;
// tied dot products raise DegeneracyError.
Orientation linear_functional_orientation(const Graph& g,
                                          const std::vector<std::vector<Rational>>& coords,
                                          const std::vector<Rational>& w);

struct GoodConditions {
    bool unique_sink = false;     // every face has exactly one sink
    bool simple_at_sink = false;  // sink degree inside each face = face dim
    bool full_star_face = false;  // every vertex: some face with sink v holds all in-edges
    bool all() const { return unique_sink && simple_at_sink && full_star_face; }
};

// The three conditions that hold exactly when f^O equals the face-count sum.
GoodConditions good_conditions(const FaceLattice& l, const Orientation& o);

}  // namespace polyrec
