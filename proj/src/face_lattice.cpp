#include "polyrec/face_lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "polyrec/canonical.hpp"

namespace polyrec {

namespace {

std::string face_str(VertexSet f) {
    std::string s = "{";
    bool first = true;
    for (int v : set_to_vector(f)) {
        if (!first) s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

bool face_order(VertexSet a, VertexSet b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
}

}  // namespace

FaceLattice FaceLattice::from_facets(int vertex_count, const std::vector<std::vector<int>>& facets) {
    if (vertex_count < 0 || vertex_count > kMaxVertices)
        throw CapacityError("lattice vertex count over cap");
    std::vector<VertexSet> fs;
    for (const auto& f : facets) fs.push_back(vector_to_set(f, vertex_count));
    for (size_t i = 0; i < fs.size(); ++i)
        for (size_t j = 0; j < fs.size(); ++j)
            if (i != j && (fs[i] & fs[j]) == fs[i])
                throw InputError("facet " + face_str(fs[i]) + " contained in facet " + face_str(fs[j]));
    for (int v = 0; v < vertex_count; ++v) {
        int cnt = 0;
        for (VertexSet f : fs)
            if (f & bit(v)) ++cnt;
        if (cnt < 2)
            throw InputError("vertex " + std::to_string(v) + " appears in " + std::to_string(cnt) + " facets (need >= 2)");
    }

    std::set<VertexSet> family(fs.begin(), fs.end());
    family.insert(full_set(vertex_count));
    // closure under pairwise intersection
    std::vector<VertexSet> work(family.begin(), family.end());
    for (size_t i = 0; i < work.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
            VertexSet c = work[i] & work[j];
            if (family.insert(c).second) work.push_back(c);
        }
    family.insert(0);
    return from_faces(vertex_count, std::vector<VertexSet>(family.begin(), family.end()));
}

FaceLattice FaceLattice::from_faces(int vertex_count, std::vector<VertexSet> faces) {
    if (vertex_count < 0 || vertex_count > kMaxVertices)
        throw CapacityError("lattice vertex count over cap");
    FaceLattice l;
    l.n_ = vertex_count;
    std::sort(faces.begin(), faces.end(), face_order);
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    l.faces_ = std::move(faces);
    l.compute_ranks_and_validate();
    return l;
}

void FaceLattice::compute_ranks_and_validate() {
    const size_t nf = faces_.size();
    VertexSet top = full_set(n_);
    if (nf == 0 || faces_.front() != 0)
        throw NotPolytopalError("face family must contain the empty face");
    if (faces_.back() != top)
        throw NotPolytopalError("face family must contain the full vertex set");
    for (VertexSet f : faces_)
        if ((f & ~top) != 0) throw NotPolytopalError("face " + face_str(f) + " has out-of-range vertices");

    // intersection closure
    for (size_t i = 0; i < nf; ++i)
        for (size_t j = 0; j < i; ++j) {
            VertexSet c = faces_[i] & faces_[j];
            if (!std::binary_search(faces_.begin(), faces_.end(), c, face_order))
                throw NotPolytopalError("family not intersection-closed: " + face_str(faces_[i]) +
                                        " and " + face_str(faces_[j]) + " miss " + face_str(c));
        }

    // ranks: longest chain from the empty face (faces_ is sorted by size)
    ranks_.assign(nf, 0);
    for (size_t i = 1; i < nf; ++i) {
        int r = 0;
        for (size_t j = 0; j < i; ++j)
            if ((faces_[j] & faces_[i]) == faces_[j] && faces_[j] != faces_[i])
                r = std::max(r, ranks_[j]);
        ranks_[i] = r + 1;
    }
    dim_ = ranks_.back() - 1;

    // gradedness: every cover relation steps rank by exactly 1
    for (size_t i = 0; i < nf; ++i)
        for (size_t j = 0; j < i; ++j) {
            if ((faces_[j] & faces_[i]) != faces_[j] || faces_[j] == faces_[i]) continue;
            if (ranks_[i] == ranks_[j] + 1) continue;
            bool covered = false;
            for (size_t k = 0; k < nf && !covered; ++k)
                covered = k != i && k != j && (faces_[j] & faces_[k]) == faces_[j] &&
                          (faces_[k] & faces_[i]) == faces_[k] && faces_[k] != faces_[j] &&
                          faces_[k] != faces_[i];
            if (!covered)
                throw NotPolytopalError("not graded: " + face_str(faces_[i]) + " covers " +
                                        face_str(faces_[j]) + " with rank gap " +
                                        std::to_string(ranks_[i] - ranks_[j]));
        }

    // atoms are exactly the singletons
    for (int v = 0; v < n_; ++v)
        if (rank_of(bit(v)) != 1)
            throw NotPolytopalError("vertex " + std::to_string(v) + " is not an atom");
    for (size_t i = 0; i < nf; ++i) {
        if (ranks_[i] == 1 && popcount(faces_[i]) != 1)
            throw NotPolytopalError("rank-1 face " + face_str(faces_[i]) + " is not a singleton");
        if (ranks_[i] == 2 && popcount(faces_[i]) != 2)
            throw NotPolytopalError("rank-2 face " + face_str(faces_[i]) + " does not have exactly 2 vertices");
    }

    // unique top
    for (size_t i = 0; i + 1 < nf; ++i)
        if (ranks_[i] > dim_)
            throw NotPolytopalError("multiple maximal faces");

    // 2-faces induce single cycles
    for (size_t i = 0; i < nf; ++i) {
        if (ranks_[i] != 3) continue;
        VertexSet f = faces_[i];
        int nv = popcount(f);
        if (nv < 3)
            throw NotPolytopalError("2-face " + face_str(f) + " has fewer than 3 vertices");
        int ne = 0;
        std::map<int, int> deg;
        for (size_t j = 0; j < nf; ++j)
            if (ranks_[j] == 2 && (faces_[j] & f) == faces_[j]) {
                ++ne;
                for (int v : set_to_vector(faces_[j])) ++deg[v];
            }
        bool cyc = ne == nv && static_cast<int>(deg.size()) == nv;
        for (auto [v, d] : deg) cyc = cyc && d == 2;
        if (cyc) {
            // connectivity of the 2-regular graph: one cycle, not several
            std::vector<std::pair<int, int>> es;
            for (size_t j = 0; j < nf; ++j)
                if (ranks_[j] == 2 && (faces_[j] & f) == faces_[j]) {
                    auto vs = set_to_vector(faces_[j]);
                    es.emplace_back(vs[0], vs[1]);
                }
            cyc = induced_subgraph(Graph(n_, es), f).graph.connected();
        }
        if (!cyc)
            throw NotPolytopalError("2-face " + face_str(f) + " does not induce a single cycle");
    }
}

int FaceLattice::rank_of(VertexSet face) const {
    auto it = std::lower_bound(faces_.begin(), faces_.end(), face, face_order);
    if (it == faces_.end() || *it != face) return -1;
    return ranks_[it - faces_.begin()];
}

std::vector<int> FaceLattice::f_vector() const {
    std::vector<int> fv(dim_ + 1, 0);
    for (size_t i = 0; i < faces_.size(); ++i)
        if (ranks_[i] >= 1) ++fv[ranks_[i] - 1];
    return fv;
}

std::int64_t FaceLattice::f_sum() const {
    std::int64_t s = 0;
    for (int fi : f_vector()) s += fi;
    return s;
}

std::vector<VertexSet> FaceLattice::faces_of_rank(int rank) const {
    std::vector<VertexSet> out;
    for (size_t i = 0; i < faces_.size(); ++i)
        if (ranks_[i] == rank) out.push_back(faces_[i]);
    return out;
}

Graph FaceLattice::graph_of() const {
    std::vector<std::pair<int, int>> edges;
    for (VertexSet e : faces_of_rank(2)) {
        auto vs = set_to_vector(e);
        edges.emplace_back(vs[0], vs[1]);
    }
    return Graph(n_, std::move(edges));
}

bool FaceLattice::is_simple_at(int v) const {
    if (v < 0 || v >= n_) throw InputError("is_simple_at: vertex out of range");
    int deg = 0;
    for (size_t i = 0; i < faces_.size(); ++i)
        if (ranks_[i] == 2 && (faces_[i] & bit(v))) ++deg;
    return deg == dim_;
}

int FaceLattice::nearly_simple_index() const {
    int h = 0;
    for (int v = 0; v < n_; ++v)
        if (!is_simple_at(v)) ++h;
    return h;
}

std::vector<int> FaceLattice::non_simple_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (!is_simple_at(v)) out.push_back(v);
    return out;
}

std::vector<VertexSet> FaceLattice::two_faces_containing(int v) const {
    if (v < 0 || v >= n_) throw InputError("two_faces_containing: vertex out of range");
    std::vector<VertexSet> out;
    for (size_t i = 0; i < faces_.size(); ++i)
        if (ranks_[i] == 3 && (faces_[i] & bit(v))) out.push_back(faces_[i]);
    return out;
}

std::pair<FaceLattice, TruncationRecord> truncate(const FaceLattice& l, VertexSet t) {
    if (!l.has_face(t) || t == 0 || t == full_set(l.vertex_count()))
        throw InputError("truncate: T must be a proper nonempty face");
    const int n = l.vertex_count();

    TruncationRecord rec;
    rec.original_vertex_count = n;
    rec.truncated_face = t;
    for (int v = 0; v < n; ++v)
        if (!(t & bit(v))) rec.survivors.push_back(v);
    const int ns = static_cast<int>(rec.survivors.size());
    std::vector<int> new_id(n, -1);
    for (int i = 0; i < ns; ++i) new_id[rec.survivors[i]] = i;

    // cut edges: rank-2 faces crossing T, ordered (cut endpoint, outside)
    for (VertexSet e : l.faces_of_rank(2)) {
        VertexSet in = e & t, out = e & ~t;
        if (in && out) rec.crossings.emplace_back(first_vertex(in), first_vertex(out));
    }
    std::sort(rec.crossings.begin(), rec.crossings.end());
    const int nc = static_cast<int>(rec.crossings.size());
    std::map<std::pair<int, int>, int> cross_id;
    for (int j = 0; j < nc; ++j) cross_id[rec.crossings[j]] = ns + j;
    rec.new_facet_vertices = 0;
    for (int j = 0; j < nc; ++j) rec.new_facet_vertices |= bit(ns + j);

    std::set<VertexSet> out_faces;
    out_faces.insert(0);
    for (VertexSet k : l.faces()) {
        if ((k & t) == 0) {
            VertexSet m = 0;
            for (int v : set_to_vector(k)) m |= bit(new_id[v]);
            out_faces.insert(m);
        } else if ((k & ~t) == 0) {
            continue;  // interval (empty, T] is deleted
        } else {
            VertexSet kept = 0;
            for (int v : set_to_vector(k & ~t)) kept |= bit(new_id[v]);
            VertexSet news = 0;
            for (auto& [a, b] : rec.crossings)
                if ((k & bit(a)) && (k & bit(b))) news |= bit(cross_id[{a, b}]);
            out_faces.insert(kept | news);  // K keeps its identity
            out_faces.insert(news);         // K' one rank lower
        }
    }

    FaceLattice lp = FaceLattice::from_faces(ns + nc, std::vector<VertexSet>(out_faces.begin(), out_faces.end()));
    return {std::move(lp), std::move(rec)};
}

FaceLattice untruncate(const FaceLattice& lp, const TruncationRecord& rec,
                       const std::vector<VertexSet>& restored) {
    const int ns = static_cast<int>(rec.survivors.size());
    if (lp.vertex_count() != ns + static_cast<int>(rec.crossings.size()))
        throw InputError("untruncate: lattice does not match the record");
    if (lp.rank_of(rec.new_facet_vertices) != lp.dimension())
        throw InputError("untruncate: no facet with the recorded new-facet vertex set");

    std::set<VertexSet> out;
    for (VertexSet k : lp.faces()) {
        if (k != 0 && (k & ~rec.new_facet_vertices) == 0) continue;
        VertexSet m = 0;
        for (int v : set_to_vector(k))
            m |= bit(v < ns ? rec.survivors[v] : rec.crossings[v - ns].first);
        out.insert(m);
    }
    for (VertexSet f : restored) {
        if (f == 0 || (f & ~rec.truncated_face) != 0)
            throw InputError("untruncate: restored face " + face_str(f) + " not within the cut face");
        out.insert(f);
    }
    try {
        return FaceLattice::from_faces(rec.original_vertex_count,
                                       std::vector<VertexSet>(out.begin(), out.end()));
    } catch (const NotPolytopalError& e) {
        throw NotPolytopalError(std::string("untruncate surgery produced an invalid lattice: ") + e.what());
    }
}

bool lattice_isomorphic(const FaceLattice& l1, const FaceLattice& l2) {
    if (l1.vertex_count() != l2.vertex_count() || l1.dimension() != l2.dimension()) return false;
    if (l1.f_vector() != l2.f_vector()) return false;
    // two-colored vertex-facet incidence graph: vertices 0..n-1, facets after
    auto incidence = [](const FaceLattice& l) {
        auto fac = l.facets();
        int n = l.vertex_count();
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < static_cast<int>(fac.size()); ++i)
            for (int v : set_to_vector(fac[i])) edges.emplace_back(v, n + i);
        Graph g(n + static_cast<int>(fac.size()), std::move(edges));
        std::vector<int> colors(g.vertex_count(), 0);
        for (int i = n; i < g.vertex_count(); ++i) colors[i] = 1;
        return canonical_form_colored(g, colors);
    };
    return incidence(l1) == incidence(l2);
}

}  // namespace polyrec
