#include "polyrec/reconstruct.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "polyrec/orientation.hpp"

namespace polyrec {

namespace {

std::string set_str(VertexSet f) {
    std::string s = "{";
    bool first = true;
    for (int v : set_to_vector(f)) {
        if (!first) s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

VertexSet non_simple_set(const Graph& g, int d) {
    VertexSet ns = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > d) ns |= bit(v);
    return ns;
}

// Structural candidates: every vertex set inducing a k-regular connected
// subgraph, k in [0, d-1], with a precomputed boundary-direction pattern so
// initiality per witness is one mask compare.
struct KricsCandidate {
    VertexSet verts;
    int k;
    std::uint64_t boundary_mask = 0;  // edge bits crossing the set
    std::uint64_t required_dirs = 0;  // direction bits pointing outward
};

std::vector<KricsCandidate> krics_candidates(const Graph& g, int kmax) {
    const int n = g.vertex_count();
    std::vector<KricsCandidate> out;
    auto consider = [&](VertexSet s) {
        int k = -1;
        for (int v : set_to_vector(s)) {
            int dv = popcount(g.neighbors(v) & s);
            if (k == -1) k = dv;
            if (dv != k) return;
        }
        KricsCandidate c{s, k, 0, 0};
        for (int i = 0; i < g.edge_count(); ++i) {
            auto [a, b] = g.edge(i);
            bool ain = (s >> a) & 1, bin = (s >> b) & 1;
            if (ain == bin) continue;
            c.boundary_mask |= std::uint64_t{1} << i;
            // crossing edges must point outward: head = the endpoint not in s;
            // dirs bit set means head = b
            if (ain) c.required_dirs |= std::uint64_t{1} << i;
        }
        out.push_back(c);
    };
    // Connected induced subgraphs with all internal degrees <= kmax,
    // enumerated once each: sets with minimum vertex r grow by pulling the
    // smallest vertex from an ordered extension pool; a vertex whose branch
    // finished is banned below this level. Internal degrees only grow, so
    // the cap prunes whole subtrees.
    std::function<void(VertexSet, VertexSet, VertexSet)> grow = [&](VertexSet s, VertexSet pool,
                                                                    VertexSet banned) {
        consider(s);
        while (pool) {
            int u = first_vertex(pool);
            pool &= pool - 1;
            VertexSet su = s | bit(u);
            bool ok = popcount(g.neighbors(u) & su) <= kmax;
            for (VertexSet m = g.neighbors(u) & s; ok && m;) {
                int v = first_vertex(m);
                m &= m - 1;
                ok = popcount(g.neighbors(v) & su) <= kmax;
            }
            if (ok) {
                VertexSet fresh = g.neighbors(u) & ~su & ~pool & ~banned;
                grow(su, pool | fresh, banned);
            }
            banned |= bit(u);
        }
    };
    for (int r = 0; r < n; ++r)
        grow(bit(r), g.neighbors(r) & ~full_set(r + 1), full_set(r + 1));
    std::sort(out.begin(), out.end(), [](const KricsCandidate& a, const KricsCandidate& b) {
        return a.verts < b.verts;
    });
    return out;
}

bool initial_in_witness(const KricsCandidate& c, std::uint64_t dirs) {
    return (dirs & c.boundary_mask) == (c.required_dirs & c.boundary_mask);
}

// Pool of faces detected across every minimizing witness.
std::vector<VertexSet> pooled_initial_krics(const Graph& g, int kmax,
                                            const std::vector<Orientation>& witnesses) {
    std::vector<VertexSet> faces;
    for (const KricsCandidate& c : krics_candidates(g, kmax))
        for (const Orientation& o : witnesses)
            if (initial_in_witness(c, o.dirs())) {
                faces.push_back(c.verts);
                break;
            }
    return faces;
}

}  // namespace

int infer_dimension(const Graph& g, std::optional<int> claimed) {
    if (!g.connected()) throw InputError("graph is not connected");
    int mindeg = g.min_degree();
    if (claimed) {
        if (*claimed <= 0) throw InputError("claimed dimension must be positive");
        if (*claimed > mindeg)
            throw InputError("claimed dimension " + std::to_string(*claimed) +
                             " exceeds the minimum degree " + std::to_string(mindeg));
        return *claimed;
    }
    return mindeg;
}

FaceLattice reconstruct_simple(const Graph& g, int d) {
    if (!is_k_regular_connected(g, d))
        throw InputError("reconstruct_simple: graph is not " + std::to_string(d) + "-regular connected");
    MinFOResult min = min_f_O(g);

    std::set<VertexSet> family;
    family.insert(0);
    family.insert(full_set(g.vertex_count()));
    for (VertexSet f : pooled_initial_krics(g, d - 1, min.witnesses)) family.insert(f);

    FaceLattice l = [&] {
        try {
            return FaceLattice::from_faces(g.vertex_count(),
                                           std::vector<VertexSet>(family.begin(), family.end()));
        } catch (const NotPolytopalError& e) {
            throw ReconstructionError(std::string("not a simple polytope graph: ") + e.what());
        }
    }();
    if (l.dimension() != d)
        throw ReconstructionError("not a simple polytope graph: assembled lattice has dimension " +
                                  std::to_string(l.dimension()) + ", expected " + std::to_string(d));
    if (!(l.graph_of() == g))
        throw ReconstructionError("not a simple polytope graph: assembled lattice graph differs from input");
    return l;
}

std::vector<VertexSet> two_face_candidates(const Graph& g, int d, VertexSet anchors,
                                           CandidateMode mode, int sink) {
    if (anchors == 0) throw InputError("two_face_candidates: anchors must be nonempty");
    MinFOResult min = mode == CandidateMode::kSinkMin ? min_f_O_with_sink(g, sink) : min_f_O(g);
    VertexSet ns = non_simple_set(g, d);
    std::vector<VertexSet> out;
    for (const KricsCandidate& c : krics_candidates(g, 2)) {
        if (c.k != 2) continue;
        if ((c.verts & anchors) != anchors) continue;
        if ((c.verts & ns) != (anchors & ns)) continue;  // exactly the requested anchors
        for (const Orientation& o : min.witnesses)
            if (initial_in_witness(c, o.dirs())) {
                out.push_back(c.verts);
                break;
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<Graph, TruncationRecord> truncated_graph_at_vertex(const Graph& g, int x,
                                                             const std::vector<VertexSet>& two_faces_at_x) {
    if (x < 0 || x >= g.vertex_count()) throw InputError("truncated_graph_at_vertex: x out of range");
    const int n = g.vertex_count();

    TruncationRecord rec;
    rec.original_vertex_count = n;
    rec.truncated_face = bit(x);
    for (int v = 0; v < n; ++v)
        if (v != x) rec.survivors.push_back(v);
    std::vector<int> new_id(n, -1);
    for (int i = 0; i < static_cast<int>(rec.survivors.size()); ++i) new_id[rec.survivors[i]] = i;
    const int ns = static_cast<int>(rec.survivors.size());

    std::vector<int> nbrs = set_to_vector(g.neighbors(x));
    std::map<int, int> cut_id;  // neighbor -> new vertex id
    for (int j = 0; j < static_cast<int>(nbrs.size()); ++j) {
        rec.crossings.emplace_back(x, nbrs[j]);
        cut_id[nbrs[j]] = ns + j;
        rec.new_facet_vertices |= bit(ns + j);
    }

    std::set<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges()) {
        if (a == x || b == x) continue;
        edges.emplace(new_id[a], new_id[b]);
    }
    for (int w : nbrs) edges.emplace(std::min(cut_id[w], new_id[w]), std::max(cut_id[w], new_id[w]));
    for (VertexSet f : two_faces_at_x) {
        if (!(f & bit(x)))
            throw InputError("truncated_graph_at_vertex: 2-face " + set_str(f) + " does not contain x");
        std::vector<int> at_x = set_to_vector(g.neighbors(x) & f);
        if (at_x.size() != 2)
            throw InputError("truncated_graph_at_vertex: 2-face " + set_str(f) + " has " +
                             std::to_string(at_x.size()) + " edges at x (need 2)");
        edges.emplace(std::min(cut_id[at_x[0]], cut_id[at_x[1]]), std::max(cut_id[at_x[0]], cut_id[at_x[1]]));
    }
    return {Graph(ns + static_cast<int>(nbrs.size()),
                  std::vector<std::pair<int, int>>(edges.begin(), edges.end())),
            std::move(rec)};
}

std::pair<Graph, TruncationRecord> truncated_graph_at_edge(const Graph& g, int x, int y,
                                                           const std::vector<VertexSet>& two_faces) {
    if (!g.has_edge(x, y)) throw InputError("truncated_graph_at_edge: {x,y} is not an edge");
    if (x > y) std::swap(x, y);
    const int n = g.vertex_count();
    const VertexSet t = bit(x) | bit(y);

    TruncationRecord rec;
    rec.original_vertex_count = n;
    rec.truncated_face = t;
    for (int v = 0; v < n; ++v)
        if (v != x && v != y) rec.survivors.push_back(v);
    std::vector<int> new_id(n, -1);
    for (int i = 0; i < static_cast<int>(rec.survivors.size()); ++i) new_id[rec.survivors[i]] = i;
    const int ns = static_cast<int>(rec.survivors.size());

    std::map<std::pair<int, int>, int> cut_id;  // (cut endpoint, outside) -> new id
    for (int c : {x, y})
        for (int w : set_to_vector(g.neighbors(c) & ~t)) rec.crossings.emplace_back(c, w);
    std::sort(rec.crossings.begin(), rec.crossings.end());
    for (int j = 0; j < static_cast<int>(rec.crossings.size()); ++j) {
        cut_id[rec.crossings[j]] = ns + j;
        rec.new_facet_vertices |= bit(ns + j);
    }

    std::set<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges()) {
        if (t & (bit(a) | bit(b))) continue;
        edges.emplace(new_id[a], new_id[b]);
    }
    for (auto& [c, w] : rec.crossings) {
        int nv = cut_id[{c, w}];
        edges.emplace(std::min(nv, new_id[w]), std::max(nv, new_id[w]));
    }
    for (VertexSet f : two_faces) {
        VertexSet in = f & t;
        if (in == 0)
            throw InputError("truncated_graph_at_edge: 2-face " + set_str(f) + " misses the cut edge");
        std::vector<int> new_pair;
        for (int c : {x, y}) {
            if (!(in & bit(c))) continue;
            std::vector<int> at_c = set_to_vector(g.neighbors(c) & f & ~t);
            // a face through both x and y crosses once at each; through one
            // of them it crosses twice there
            size_t need = in == t ? 1 : 2;
            if (at_c.size() != need)
                throw InputError("truncated_graph_at_edge: 2-face " + set_str(f) + " has " +
                                 std::to_string(at_c.size()) + " crossing edges at vertex " +
                                 std::to_string(c) + " (need " + std::to_string(need) + ")");
            for (int w : at_c) new_pair.push_back(cut_id[{c, w}]);
        }
        if (new_pair.size() != 2)
            throw InputError("truncated_graph_at_edge: 2-face " + set_str(f) + " has " +
                             std::to_string(new_pair.size()) + " crossing edges (need 2)");
        edges.emplace(std::min(new_pair[0], new_pair[1]), std::max(new_pair[0], new_pair[1]));
    }
    return {Graph(ns + static_cast<int>(rec.crossings.size()),
                  std::vector<std::pair<int, int>>(edges.begin(), edges.end())),
            std::move(rec)};
}

Graph complete_new_facet(const Graph& facet_graph, int d) {
    std::vector<int> deficient;
    for (int v = 0; v < facet_graph.vertex_count(); ++v) {
        int deg = facet_graph.degree(v);
        if (deg == d - 2)
            deficient.push_back(v);
        else if (deg != d - 1)
            throw ReconstructionError("facet completion impossible: vertex " + std::to_string(v) +
                                      " has degree " + std::to_string(deg) + ", expected " +
                                      std::to_string(d - 2) + " or " + std::to_string(d - 1));
    }
    if (deficient.empty()) return facet_graph;
    if (deficient.size() != 2)
        throw ReconstructionError("facet completion impossible: " + std::to_string(deficient.size()) +
                                  " vertices of degree d-2");
    if (facet_graph.has_edge(deficient[0], deficient[1]))
        throw ReconstructionError("facet completion impossible: deficient vertices already adjacent");
    auto edges = facet_graph.edges();
    edges.emplace_back(deficient[0], deficient[1]);
    return Graph(facet_graph.vertex_count(), std::move(edges));
}

FaceLattice reconstruct_1_nearly_simple(const Graph& g, int d) {
    std::vector<int> over;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > d) over.push_back(v);
    if (over.size() != 1 || g.min_degree() != d)
        throw InputError("reconstruct_1_nearly_simple: graph is not 1-nearly simple of dimension " +
                         std::to_string(d));
    int x = over[0];

    std::vector<VertexSet> faces_at_x = two_face_candidates(g, d, bit(x), CandidateMode::kGlobalMin);
    auto [gp, rec] = truncated_graph_at_vertex(g, x, faces_at_x);
    if (!is_k_regular_connected(gp, d))
        throw ReconstructionError("1-nearly-simple stage: truncated graph at vertex " + std::to_string(x) +
                                  " is not " + std::to_string(d) + "-regular connected");
    FaceLattice lp = reconstruct_simple(gp, d);
    FaceLattice l = [&] {
        try {
            return untruncate(lp, rec, {bit(x)});
        } catch (const NotPolytopalError& e) {
            throw ReconstructionError(std::string("1-nearly-simple stage: ") + e.what());
        }
    }();
    if (!(l.graph_of() == g))
        throw ReconstructionError("1-nearly-simple stage: reconstructed lattice graph differs from input");
    return l;
}

FaceLattice reconstruct_2_nearly_simple(const Graph& g, int d) {
    std::vector<int> over;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > d) over.push_back(v);
    if (over.size() != 2 || g.min_degree() != d)
        throw InputError("reconstruct_2_nearly_simple: graph is not 2-nearly simple of dimension " +
                         std::to_string(d));
    int x = over[0], y = over[1];  // ascending ids

    std::vector<VertexSet> faces_x = two_face_candidates(g, d, bit(x), CandidateMode::kSinkMin, y);
    std::vector<VertexSet> faces_y = two_face_candidates(g, d, bit(y), CandidateMode::kSinkMin, x);

    FaceLattice l = [&] {
        if (g.has_edge(x, y)) {
            // adjacent: truncate the edge xy, reconstruct simple, undo
            std::vector<VertexSet> faces_xy =
                two_face_candidates(g, d, bit(x) | bit(y), CandidateMode::kGlobalMin);
            std::vector<VertexSet> all = faces_x;
            all.insert(all.end(), faces_y.begin(), faces_y.end());
            all.insert(all.end(), faces_xy.begin(), faces_xy.end());
            auto [gp, rec] = truncated_graph_at_edge(g, x, y, all);
            if (!is_k_regular_connected(gp, d))
                throw ReconstructionError("2-nearly-simple stage: edge-truncated graph is not simple");
            FaceLattice lp = reconstruct_simple(gp, d);
            try {
                return untruncate(lp, rec, {bit(x), bit(y), bit(x) | bit(y)});
            } catch (const NotPolytopalError& e) {
                throw ReconstructionError(std::string("2-nearly-simple stage (adjacent): ") + e.what());
            }
        }
        // non-adjacent: truncate at x; the facet may miss the one 2-face
        // through x and y, recovered by degree completion
        auto [gp, rec] = truncated_graph_at_vertex(g, x, faces_x);
        InducedSubgraph facet = induced_subgraph(gp, rec.new_facet_vertices);
        Graph completed = complete_new_facet(facet.graph, d);
        if (completed.edge_count() != facet.graph.edge_count()) {
            auto edges = gp.edges();
            for (auto [a, b] : completed.edges())
                if (!facet.graph.has_edge(a, b))
                    edges.emplace_back(facet.vertex_ids[a], facet.vertex_ids[b]);
            gp = Graph(gp.vertex_count(), std::move(edges));
        }
        FaceLattice lp = reconstruct_1_nearly_simple(gp, d);
        try {
            return untruncate(lp, rec, {bit(x)});
        } catch (const NotPolytopalError& e) {
            throw ReconstructionError(std::string("2-nearly-simple stage (non-adjacent): ") + e.what());
        }
    }();
    if (!(l.graph_of() == g))
        throw ReconstructionError("2-nearly-simple stage: reconstructed lattice graph differs from input");
    return l;
}

Reconstruction reconstruct(const Graph& g, std::optional<int> claimed_dimension) {
    int d = infer_dimension(g, claimed_dimension);
    int h = popcount(non_simple_set(g, d));
    if (h >= 3)
        throw UnsupportedClassError(
            h, "not supported: " + std::to_string(h) +
                   " non-simple vertices; counterexamples exist at h=3 (reconstruction from the "
                   "graph alone is impossible in general)");
    Reconstruction r{h == 0   ? reconstruct_simple(g, d)
                     : h == 1 ? reconstruct_1_nearly_simple(g, d)
                              : reconstruct_2_nearly_simple(g, d),
                     d, !claimed_dimension.has_value()};
    return r;
}

}  // namespace polyrec
