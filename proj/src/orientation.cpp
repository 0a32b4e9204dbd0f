#include "polyrec/orientation.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace polyrec {

namespace {

// Directed reachability: can `from` reach `to` over out-neighbor masks?
bool reaches(const std::vector<VertexSet>& out, int from, int to) {
    VertexSet seen = bit(from), frontier = out[from];
    while (frontier) {
        if (frontier & bit(to)) return true;
        seen |= frontier;
        VertexSet next = 0;
        for (VertexSet f = frontier; f;) {
            int v = first_vertex(f);
            f &= f - 1;
            next |= out[v];
        }
        frontier = next & ~seen;
    }
    return false;
}

std::vector<std::uint8_t> indegrees_of(const Graph& g, std::uint64_t dirs) {
    std::vector<std::uint8_t> indeg(g.vertex_count(), 0);
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [a, b] = g.edge(i);
        ++indeg[(dirs >> i) & 1 ? b : a];
    }
    return indeg;
}

bool acyclic(const Graph& g, std::uint64_t dirs) {
    int n = g.vertex_count();
    std::vector<int> indeg(n, 0);
    std::vector<VertexSet> out(n, 0);
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [a, b] = g.edge(i);
        int h = (dirs >> i) & 1 ? b : a;
        int t = a + b - h;
        ++indeg[h];
        out[t] |= bit(h);
    }
    std::vector<int> q;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) q.push_back(v);
    int seen = 0;
    while (!q.empty()) {
        int v = q.back();
        q.pop_back();
        ++seen;
        for (int w : set_to_vector(out[v]))
            if (--indeg[w] == 0) q.push_back(w);
    }
    return seen == n;
}

void check_edge_cap(const Graph& g, const char* who) {
    if (g.edge_count() > kMaxEnumerationEdges)
        throw CapacityError(std::string(who) + ": " + std::to_string(g.edge_count()) +
                            " edges exceeds cap " + std::to_string(kMaxEnumerationEdges));
}

// DFS over edge directions with incremental cycle pruning. Edges are settled
// in `order`; bits of `fixed_mask` are forced to `fixed_dirs` (sink
// constraint). leaf(dirs) fires for every acyclic completion.
struct DirectionSearch {
    const Graph& g;
    std::vector<int> order;
    std::uint64_t fixed_mask = 0, fixed_dirs = 0;
    std::vector<VertexSet> out;
    std::function<void(std::uint64_t)> leaf;
    std::function<bool()> prune;  // true => cut this subtree
    std::function<void(int edge, int head)> apply;
    std::function<void(int edge, int head)> undo;

    explicit DirectionSearch(const Graph& g_) : g(g_), out(g_.vertex_count(), 0) {
        order.resize(g.edge_count());
        std::iota(order.begin(), order.end(), 0);
    }

    void run() { rec(0, 0); }

    void rec(size_t depth, std::uint64_t dirs) {
        if (prune && prune()) return;
        if (depth == order.size()) {
            leaf(dirs);
            return;
        }
        int e = order[depth];
        auto [a, b] = g.edge(e);
        for (int d = 0; d < 2; ++d) {
            if (((fixed_mask >> e) & 1) && static_cast<int>((fixed_dirs >> e) & 1) != d) continue;
            int head = d ? b : a, tail = a + b - head;
            if (reaches(out, head, tail)) continue;  // would close a directed cycle
            out[tail] |= bit(head);
            if (apply) apply(e, head);
            rec(depth + 1, dirs | (static_cast<std::uint64_t>(d) << e));
            if (undo) undo(e, head);
            out[tail] &= ~bit(head);
        }
    }
};

}  // namespace

Orientation::Orientation(std::shared_ptr<const Graph> g, std::uint64_t dirs)
    : graph_(std::move(g)), dirs_(dirs) {
    if (graph_->edge_count() > 64) throw CapacityError("orientation: too many edges");
    if (graph_->edge_count() < 64 && (dirs_ >> graph_->edge_count()) != 0)
        throw InputError("orientation: direction bits beyond the edge count");
    if (!acyclic(*graph_, dirs_)) throw InputError("orientation is cyclic");
    indeg_ = indegrees_of(*graph_, dirs_);
}

std::uint64_t f_O(const Orientation& o) {
    std::uint64_t sum = 0;
    for (int v = 0; v < o.graph().vertex_count(); ++v) {
        int d = o.indegree(v);
        if (d >= 63) throw CapacityError("f_O: indegree too large for exact arithmetic");
        std::uint64_t term = std::uint64_t{1} << d;
        if (sum > ~std::uint64_t{0} - term) throw CapacityError("f_O overflow");
        sum += term;
    }
    return sum;
}

void enumerate_acyclic(const Graph& g, const std::function<bool(const Orientation&)>& visit) {
    check_edge_cap(g, "enumerate_acyclic");
    auto shared = std::make_shared<Graph>(g);
    bool stop = false;
    DirectionSearch s(g);
    s.leaf = [&](std::uint64_t dirs) {
        if (stop) return;
        if (!visit(Orientation(shared, dirs))) stop = true;
    };
    s.prune = [&] { return stop; };
    s.run();
}

std::vector<Orientation> enumerate_acyclic(const Graph& g) {
    std::vector<Orientation> out;
    enumerate_acyclic(g, [&](const Orientation& o) {
        out.push_back(o);
        return true;
    });
    return out;
}

namespace {

MinFOResult min_f_O_impl(const Graph& g, int sink) {
    check_edge_cap(g, "min_f_O");
    const int n = g.vertex_count();
    if (n == 0) return {0, {}};

    DirectionSearch s(g);
    // Settle edges grouped by their larger endpoint so indegrees accumulate
    // early and the bound bites sooner; witnesses get re-sorted at the end.
    std::sort(s.order.begin(), s.order.end(), [&](int i, int j) {
        auto [ai, bi] = g.edge(i);
        auto [aj, bj] = g.edge(j);
        return std::pair{bi, ai} < std::pair{bj, aj};
    });
    if (sink >= 0) {
        for (int i = 0; i < g.edge_count(); ++i) {
            auto [a, b] = g.edge(i);
            if (a == sink || b == sink) {
                s.fixed_mask |= std::uint64_t{1} << i;
                if (b == sink) s.fixed_dirs |= std::uint64_t{1} << i;  // head must be y
            }
        }
    }

    std::vector<int> indeg(n, 0);
    std::vector<bool> assigned(g.edge_count(), false);
    std::uint64_t current = n;  // sum of 2^indeg over all vertices
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<std::uint64_t> wits;

    auto floor_of = [&](int v) { return std::uint64_t{1} << indeg[v]; };
    // Lower bound: current f^O plus, per unassigned edge, the cheaper of its
    // endpoints' 2^indeg (admissible: 2^(k+x) - 2^k >= x * 2^k).
    s.prune = [&] {
        std::uint64_t lb = current;
        for (int i = 0; i < g.edge_count(); ++i)
            if (!assigned[i]) {
                auto [a, b] = g.edge(i);
                lb += std::min(floor_of(a), floor_of(b));
            }
        return lb > best;
    };
    s.apply = [&](int e, int head) {
        current += floor_of(head);
        ++indeg[head];
        assigned[e] = true;
    };
    s.undo = [&](int e, int head) {
        assigned[e] = false;
        --indeg[head];
        current -= floor_of(head);
    };
    s.leaf = [&](std::uint64_t dirs) {
        if (current < best) {
            best = current;
            wits.clear();
        }
        if (current == best) wits.push_back(dirs);
    };
    s.run();

    if (wits.empty()) throw InputError("min_f_O: no acyclic orientation satisfies the constraints");
    std::sort(wits.begin(), wits.end());
    MinFOResult res;
    res.value = best;
    auto shared = std::make_shared<Graph>(g);
    res.witnesses.reserve(wits.size());
    for (std::uint64_t d : wits) res.witnesses.emplace_back(shared, d);
    return res;
}

}  // namespace

MinFOResult min_f_O(const Graph& g) { return min_f_O_impl(g, -1); }

MinFOResult min_f_O_with_sink(const Graph& g, int y) {
    if (y < 0 || y >= g.vertex_count()) throw InputError("min_f_O_with_sink: sink out of range");
    return min_f_O_impl(g, y);
}

bool is_initial(const Orientation& o, VertexSet s) {
    const Graph& g = o.graph();
    if ((s & ~full_set(g.vertex_count())) != 0) throw InputError("is_initial: set out of range");
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [a, b] = g.edge(i);
        bool ain = (s >> a) & 1, bin = (s >> b) & 1;
        if (ain == bin) continue;
        if ((s >> o.head(i)) & 1) return false;  // crossing edge points into s
    }
    return true;
}

std::vector<VertexSet> initial_krics(const Orientation& o, int k) {
    const Graph& g = o.graph();
    const int n = g.vertex_count();
    std::vector<VertexSet> preds(n, 0);  // tails of in-edges
    for (int i = 0; i < g.edge_count(); ++i) preds[o.head(i)] |= bit(o.tail(i));
    // topological order: smallest vertex whose predecessors are all placed
    std::vector<int> topo;
    VertexSet placed = 0;
    while (static_cast<int>(topo.size()) < n) {
        for (int v = 0; v < n; ++v)
            if (!(placed & bit(v)) && (preds[v] & ~placed) == 0) {
                topo.push_back(v);
                placed |= bit(v);
                break;
            }
    }
    std::vector<VertexSet> found;
    // initial sets = predecessor-closed sets; grow them one topo position at
    // a time (include topo[i] only when its predecessors are already in)
    std::function<void(size_t, VertexSet)> grow = [&](size_t i, VertexSet cur) {
        if (i == topo.size()) {
            if (cur && is_k_regular_connected(induced_subgraph(g, cur).graph, k))
                found.push_back(cur);
            return;
        }
        grow(i + 1, cur);
        int v = topo[i];
        if ((preds[v] & ~cur) == 0) grow(i + 1, cur | bit(v));
    };
    grow(0, 0);
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

Rational::Rational(long long n) : num(n), den(1) {}

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (d == 0) throw InputError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
}

namespace {
int rat_cmp(const Rational& a, const Rational& b) {
    // denominators are kept positive
    __int128 lhs = static_cast<__int128>(a.num) * b.den;
    __int128 rhs = static_cast<__int128>(b.num) * a.den;
    return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}
}  // namespace

Orientation linear_functional_orientation(const Graph& g,
                                          const std::vector<std::vector<Rational>>& coords,
                                          const std::vector<Rational>& w) {
    const int n = g.vertex_count();
    if (static_cast<int>(coords.size()) != n)
        throw InputError("linear_functional_orientation: one coordinate vector per vertex");
    std::vector<Rational> dot(n);
    for (int v = 0; v < n; ++v) {
        if (coords[v].size() != w.size())
            throw InputError("linear_functional_orientation: dimension mismatch");
        __int128 num = 0, den = 1;
        for (size_t i = 0; i < w.size(); ++i) {
            __int128 tn = static_cast<__int128>(coords[v][i].num) * w[i].num;
            __int128 td = static_cast<__int128>(coords[v][i].den) * w[i].den;
            num = num * td + tn * den;
            den = den * td;
            __int128 x = num < 0 ? -num : num, y = den;
            while (x && y) {
                __int128 t = y % x;
                y = x;
                x = t;
            }
            __int128 gg = x ? x : y;
            if (gg > 1) {
                num /= gg;
                den /= gg;
            }
        }
        if (num > std::numeric_limits<long long>::max() || num < std::numeric_limits<long long>::min() ||
            den > std::numeric_limits<long long>::max())
            throw CapacityError("linear_functional_orientation: rational overflow");
        dot[v] = Rational(static_cast<long long>(num), static_cast<long long>(den));
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rat_cmp(dot[u], dot[v]) == 0)
                throw DegeneracyError("tied dot products at vertices " + std::to_string(u) + " and " +
                                      std::to_string(v) + "; perturb w");
    std::uint64_t dirs = 0;
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [a, b] = g.edge(i);
        if (rat_cmp(dot[a], dot[b]) < 0) dirs |= std::uint64_t{1} << i;  // head = b
    }
    return Orientation(g, dirs);
}

GoodConditions good_conditions(const FaceLattice& l, const Orientation& o) {
    if (!(l.graph_of() == o.graph()))
        throw InputError("good_conditions: orientation graph differs from graph_of(L)");
    const Graph& g = o.graph();
    const int n = g.vertex_count();

    GoodConditions r;
    r.unique_sink = true;
    r.simple_at_sink = true;
    r.full_star_face = true;

    std::vector<VertexSet> in_edges(n, 0);   // tails of in-edges per vertex
    std::vector<VertexSet> out_edges(n, 0);  // heads of out-edges per vertex
    for (int i = 0; i < g.edge_count(); ++i) {
        in_edges[o.head(i)] |= bit(o.tail(i));
        out_edges[o.tail(i)] |= bit(o.head(i));
    }

    std::vector<bool> star_found(n, false);
    for (VertexSet f : l.faces()) {
        if (f == 0) continue;
        int rank = l.rank_of(f);
        int sink_count = 0;
        for (int v : set_to_vector(f)) {
            if ((out_edges[v] & f) != 0) continue;  // has an out-edge inside f
            ++sink_count;
            if ((in_edges[v] & ~f) == 0) star_found[v] = true;
            int deg_in_f = popcount((in_edges[v] | out_edges[v]) & f);
            if (deg_in_f != rank - 1) r.simple_at_sink = false;
        }
        if (sink_count != 1) r.unique_sink = false;
    }
    for (int v = 0; v < n; ++v)
        if (!star_found[v]) r.full_star_face = false;
    return r;
}

}  // namespace polyrec
