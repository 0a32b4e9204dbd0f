#include "polyrec/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace polyrec {

int popcount(VertexSet s) { return std::popcount(s); }

int first_vertex(VertexSet s) { return std::countr_zero(s); }

std::vector<int> set_to_vector(VertexSet s) {
    std::vector<int> out;
    while (s) {
        int v = std::countr_zero(s);
        out.push_back(v);
        s &= s - 1;
    }
    return out;
}

VertexSet vector_to_set(const std::vector<int>& ids, int n) {
    VertexSet s = 0;
    for (int v : ids) {
        if (v < 0 || v >= n) throw InputError("vertex id " + std::to_string(v) + " out of range [0," + std::to_string(n) + ")");
        s |= bit(v);
    }
    return s;
}

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0 || n_ > kMaxVertices)
        throw CapacityError("graph vertex count " + std::to_string(n_) + " outside [0," + std::to_string(kMaxVertices) + "]");
    for (auto& [a, b] : edges_) {
        if (a > b) std::swap(a, b);
        if (a == b) throw InputError("self-loop at vertex " + std::to_string(a));
        if (a < 0 || b >= n_) throw InputError("edge endpoint out of range: (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw InputError("duplicate edge");
    adj_.assign(n_, 0);
    for (auto [a, b] : edges_) {
        adj_[a] |= bit(b);
        adj_[b] |= bit(a);
    }
}

int Graph::min_degree() const {
    int m = n_ == 0 ? 0 : kMaxVertices;
    for (int v = 0; v < n_; ++v) m = std::min(m, degree(v));
    return m;
}

bool Graph::has_edge(int a, int b) const {
    if (a < 0 || a >= n_ || b < 0 || b >= n_ || a == b) return false;
    return (adj_[a] & bit(b)) != 0;
}

int Graph::edge_index(int a, int b) const {
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{a, b});
    if (it == edges_.end() || *it != std::pair{a, b}) return -1;
    return static_cast<int>(it - edges_.begin());
}

bool Graph::connected() const {
    if (n_ == 0) return false;
    VertexSet seen = bit(0);
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for (VertexSet f = frontier; f;) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= adj_[v];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == full_set(n_);
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
    if ((s & ~full_set(g.vertex_count())) != 0)
        throw InputError("induced_subgraph: vertex set not contained in the graph");
    std::vector<int> ids = set_to_vector(s);
    std::vector<int> newid(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(ids.size()); ++i) newid[ids[i]] = i;
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges())
        if (newid[a] >= 0 && newid[b] >= 0) edges.emplace_back(newid[a], newid[b]);
    return {Graph(static_cast<int>(ids.size()), std::move(edges)), std::move(ids)};
}

bool is_k_regular_connected(const Graph& g, int k) {
    if (g.vertex_count() == 0) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != k) return false;
    return g.connected();
}

}  // namespace polyrec
