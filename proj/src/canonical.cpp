#include "polyrec/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace polyrec {

namespace {

// Certificate layout: [n] [color of label 0..n-1] [upper-triangular adjacency
// bits of the canonical labeling, row-major, packed MSB-first]. Colors are
// normalized to their sorted ranks so the layout is label-permutation free.
Certificate pack_certificate(int n, const std::vector<int>& colors_by_label,
                             const std::vector<std::uint8_t>& tri_bits) {
    Certificate cert;
    cert.push_back(static_cast<std::uint8_t>(n));
    for (int c : colors_by_label) cert.push_back(static_cast<std::uint8_t>(c));
    std::uint8_t acc = 0;
    int nb = 0;
    for (std::uint8_t b : tri_bits) {
        acc = static_cast<std::uint8_t>((acc << 1) | b);
        if (++nb == 8) {
            cert.push_back(acc);
            acc = 0;
            nb = 0;
        }
    }
    if (nb) cert.push_back(static_cast<std::uint8_t>(acc << (8 - nb)));
    return cert;
}

// Adjacency bits (upper triangle) of g relabeled by perm: label i = perm[i].
std::vector<std::uint8_t> tri_bits_for(const Graph& g, const std::vector<int>& perm) {
    int n = g.vertex_count();
    std::vector<std::uint8_t> bits;
    bits.reserve(n * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            bits.push_back(g.has_edge(perm[i], perm[j]) ? 1 : 0);
    return bits;
}

std::vector<int> normalize_colors(const std::vector<int>& colors) {
    std::vector<int> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out(colors.size());
    for (size_t i = 0; i < colors.size(); ++i)
        out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), colors[i]) - sorted.begin());
    return out;
}

// Equitable refinement of an ordered partition: cells are split by the
// multiset of neighbor counts per cell until stable. Cell order is kept
// deterministic so the search tree (and the certificate) is reproducible.
struct Refiner {
    const Graph& g;
    int n;

    explicit Refiner(const Graph& g_) : g(g_), n(g_.vertex_count()) {}

    void refine(std::vector<std::vector<int>>& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t ci = 0; ci < cells.size(); ++ci) {
                if (cells[ci].size() <= 1) continue;
                // signature of v: counts of neighbors in each current cell
                std::map<std::vector<int>, std::vector<int>> split;
                for (int v : cells[ci]) {
                    std::vector<int> sig(cells.size());
                    for (size_t cj = 0; cj < cells.size(); ++cj) {
                        int cnt = 0;
                        for (int w : cells[cj])
                            if (g.has_edge(v, w)) ++cnt;
                        sig[cj] = cnt;
                    }
                    split[sig].push_back(v);
                }
                if (split.size() > 1) {
                    std::vector<std::vector<int>> pieces;
                    for (auto& [sig, verts] : split) pieces.push_back(verts);
                    cells.erase(cells.begin() + ci);
                    cells.insert(cells.begin() + ci, pieces.begin(), pieces.end());
                    changed = true;
                    break;
                }
            }
        }
    }

    void search(std::vector<std::vector<int>> cells, const std::vector<int>& colors,
                Certificate& best, bool& have_best) const {
        refine(cells);
        size_t target = cells.size();
        for (size_t ci = 0; ci < cells.size(); ++ci)
            if (cells[ci].size() > 1) {
                target = ci;
                break;
            }
        if (target == cells.size()) {
            std::vector<int> perm;
            perm.reserve(n);
            for (auto& cell : cells) perm.push_back(cell[0]);
            std::vector<int> colors_by_label(n);
            for (int i = 0; i < n; ++i) colors_by_label[i] = colors[perm[i]];
            Certificate cand = pack_certificate(n, colors_by_label, tri_bits_for(g, perm));
            if (!have_best || cand < best) {
                best = std::move(cand);
                have_best = true;
            }
            return;
        }
        for (int v : cells[target]) {
            std::vector<std::vector<int>> next = cells;
            std::vector<int> rest;
            for (int w : cells[target])
                if (w != v) rest.push_back(w);
            next[target] = {v};
            next.insert(next.begin() + target + 1, rest);
            search(std::move(next), colors, best, have_best);
        }
    }
};

Certificate canonical_refinement_colored(const Graph& g, const std::vector<int>& colors) {
    int n = g.vertex_count();
    std::vector<int> norm = normalize_colors(colors);
    int ncolors = n ? *std::max_element(norm.begin(), norm.end()) + 1 : 0;
    std::vector<std::vector<int>> cells(ncolors);
    for (int v = 0; v < n; ++v) cells[norm[v]].push_back(v);
    cells.erase(std::remove_if(cells.begin(), cells.end(),
                               [](const std::vector<int>& c) { return c.empty(); }),
                cells.end());
    Certificate best;
    bool have_best = false;
    Refiner r(g);
    if (n == 0) return pack_certificate(0, {}, {});
    r.search(std::move(cells), norm, best, have_best);
    return best;
}

Certificate canonical_brute(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Certificate best;
    bool have_best = false;
    std::vector<int> zeros(n, 0);
    do {
        Certificate cand = pack_certificate(n, zeros, tri_bits_for(g, perm));
        if (!have_best || cand < best) {
            best = cand;
            have_best = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!have_best) return pack_certificate(0, {}, {});
    return best;
}

}  // namespace

Certificate canonical_form(const Graph& g) {
    if (g.vertex_count() > kCanonicalCap)
        throw CapacityError("canonical_form: " + std::to_string(g.vertex_count()) +
                            " vertices exceeds cap " + std::to_string(kCanonicalCap));
    if (g.vertex_count() <= 8) return canonical_brute(g);
    return canonical_refinement_colored(g, std::vector<int>(g.vertex_count(), 0));
}

Certificate canonical_form_refinement(const Graph& g) {
    if (g.vertex_count() > kColoredCanonicalCap)
        throw CapacityError("canonical_form_refinement: vertex count over cap");
    return canonical_refinement_colored(g, std::vector<int>(g.vertex_count(), 0));
}

Certificate canonical_form_colored(const Graph& g, const std::vector<int>& colors) {
    if (g.vertex_count() > kColoredCanonicalCap)
        throw CapacityError("canonical_form_colored: " + std::to_string(g.vertex_count()) +
                            " vertices exceeds cap " + std::to_string(kColoredCanonicalCap));
    if (static_cast<int>(colors.size()) != g.vertex_count())
        throw InputError("canonical_form_colored: one color per vertex required");
    return canonical_refinement_colored(g, colors);
}

bool graphs_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace polyrec
