#include "flagsphere/complex.hpp"

#include <algorithm>
#include <unordered_set>

#include "flagsphere/errors.hpp"

namespace flagsphere {

namespace {

// Dedup and drop faces contained in another (larger-cardinality-first scan).
std::vector<Face> inclusion_maxima(std::vector<Face> fs) {
    std::sort(fs.begin(), fs.end(), [](Face a, Face b) { return a.card() > b.card(); });
    std::vector<Face> keep;
    for (Face f : fs) {
        bool dominated = false;
        for (Face g : keep)
            if (f.subset_of(g)) { dominated = true; break; }
        if (!dominated) keep.push_back(f);
    }
    return keep;
}

Face support_of(const std::vector<Face>& fs) {
    Face s;
    for (Face f : fs) s = s.unite(f);
    return s;
}

Face compress_face(Face f, const std::vector<int>& old_to_new) {
    Face out;
    for_each_vertex(f, [&](int v) { out = out.with(old_to_new[static_cast<std::size_t>(v)]); });
    return out;
}

// Build a densely re-indexed complex from facets in a parent's labels;
// the vertex set is exactly the union of the facets.
MappedComplex reindex(int old_n, const std::vector<Face>& facets) {
    Face supp = support_of(facets);
    std::vector<int> to_old = supp.vertices();
    std::vector<int> old_to_new(static_cast<std::size_t>(old_n), -1);
    for (std::size_t i = 0; i < to_old.size(); ++i) old_to_new[static_cast<std::size_t>(to_old[i])] = static_cast<int>(i);
    std::vector<Face> compressed;
    compressed.reserve(facets.size());
    for (Face f : facets) compressed.push_back(compress_face(f, old_to_new));
    return {SimplicialComplex::from_facets(static_cast<int>(to_old.size()), std::move(compressed)), std::move(to_old)};
}

}  // namespace

SimplicialComplex::SimplicialComplex() {
    auto d = std::make_shared<Data>();
    d->n = 0;
    d->dim = -1;
    d->pure = true;
    d->facets = {Face()};
    d_ = std::move(d);
}

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<Face> facets) {
    if (n < 0 || n > kMaxVertices) throw InvalidParameter("vertex count out of range");
    const Face full = Face::full(n);
    for (Face f : facets)
        if (!f.subset_of(full)) throw InvalidVertex("facet " + f.str() + " not contained in [0," + std::to_string(n) + ")");

    facets = inclusion_maxima(std::move(facets));
    Face covered = support_of(facets);
    for (int v = 0; v < n; ++v)
        if (!covered.contains(v)) facets.push_back(Face().with(v));
    facets = inclusion_maxima(std::move(facets));
    if (facets.empty()) facets.push_back(Face());
    std::sort(facets.begin(), facets.end(), FaceLexLess{});

    auto d = std::make_shared<Data>();
    d->n = n;
    d->dim = -1;
    for (Face f : facets) d->dim = std::max(d->dim, f.dim());
    d->pure = std::all_of(facets.begin(), facets.end(), [&](Face f) { return f.dim() == d->dim; });
    d->facets = std::move(facets);
    return SimplicialComplex(std::move(d));
}

bool SimplicialComplex::is_face(Face f) const {
    for (Face g : d_->facets)
        if (f.subset_of(g)) return true;
    return false;
}

const std::vector<std::vector<Face>>& SimplicialComplex::faces_by_card() const {
    std::call_once(d_->faces_once, [this] {
        std::unordered_set<std::uint64_t> seen;
        for (Face f : d_->facets)
            for_each_subset(f, [&](Face s) { seen.insert(s.bits); });
        auto& buckets = d_->faces_by_card;
        buckets.assign(static_cast<std::size_t>(d_->dim) + 2, {});
        for (std::uint64_t bits : seen) buckets[static_cast<std::size_t>(std::popcount(bits))].push_back(Face(bits));
        for (auto& b : buckets) std::sort(b.begin(), b.end(), FaceLexLess{});
    });
    return d_->faces_by_card;
}

std::vector<std::int64_t> SimplicialComplex::f_vector() const {
    const auto& buckets = faces_by_card();
    std::vector<std::int64_t> f(buckets.size());
    for (std::size_t i = 0; i < buckets.size(); ++i) f[i] = static_cast<std::int64_t>(buckets[i].size());
    return f;
}

std::uint64_t SimplicialComplex::neighbors(int v) const {
    if (v < 0 || v >= d_->n) throw InvalidVertex("vertex out of range");
    std::call_once(d_->adj_once, [this] {
        d_->adjacency.assign(static_cast<std::size_t>(d_->n), 0);
        for (Face f : d_->facets)
            for_each_vertex(f, [&](int u) { d_->adjacency[static_cast<std::size_t>(u)] |= f.bits & ~(std::uint64_t{1} << u); });
    });
    return d_->adjacency[static_cast<std::size_t>(v)];
}

Graph SimplicialComplex::one_skeleton() const {
    Graph g(d_->n);
    for (int v = 0; v < d_->n; ++v)
        for (std::uint64_t m = neighbors(v); m; m &= m - 1) {
            int u = std::countr_zero(m);
            if (u > v) g.add_edge(v, u);
        }
    return g;
}

std::uint64_t SimplicialComplex::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<std::uint64_t>(d_->n));
    for (Face f : d_->facets) mix(f.bits);
    return h;
}

std::vector<int> MappedComplex::old_to_new(int old_n) const {
    std::vector<int> inv(static_cast<std::size_t>(old_n), -1);
    for (std::size_t i = 0; i < to_old.size(); ++i) inv[static_cast<std::size_t>(to_old[i])] = static_cast<int>(i);
    return inv;
}

Face MappedComplex::pull(Face old_face) const {
    Face out;
    for (std::size_t i = 0; i < to_old.size(); ++i)
        if (old_face.contains(to_old[i])) out = out.with(static_cast<int>(i));
    return out;
}

Face MappedComplex::push(Face new_face) const {
    Face out;
    for_each_vertex(new_face, [&](int v) { out = out.with(to_old[static_cast<std::size_t>(v)]); });
    return out;
}

// -- constructors ------------------------------------------------------------

SimplicialComplex clique_complex(const Graph& g) {
    return SimplicialComplex::from_facets(g.vertex_count(), g.maximal_cliques());
}

SimplicialComplex cycle_complex(int k) {
    if (k < 3) throw InvalidParameter("cycle needs k >= 3");
    std::vector<Face> facets;
    for (int i = 0; i < k; ++i) facets.push_back(Face::of({i, (i + 1) % k}));
    return SimplicialComplex::from_facets(k, std::move(facets));
}

SimplicialComplex octahedral_sphere(int d) {
    if (d < 0) throw InvalidParameter("octahedral sphere needs d >= 0");
    return suspend_k(SimplicialComplex(), d);
}

SimplicialComplex simplex_complex(int k) {
    if (k < 0) throw InvalidParameter("simplex needs k >= 0");
    if (k == 0) return SimplicialComplex();
    return SimplicialComplex::from_facets(k, {Face::full(k)});
}

SimplicialComplex s0_complex() { return SimplicialComplex::from_facets(2, {}); }

SimplicialComplex point_complex() { return SimplicialComplex::from_facets(1, {}); }

// -- queries -----------------------------------------------------------------

MappedComplex link(const SimplicialComplex& c, Face f) {
    if (!c.is_face(f)) throw NotAFace("link of a non-face " + f.str());
    std::vector<Face> facets;
    for (Face g : c.facets())
        if (f.subset_of(g)) facets.push_back(g.minus(f));
    return reindex(c.vertex_count(), facets);
}

MappedComplex star(const SimplicialComplex& c, Face f) {
    if (!c.is_face(f)) throw NotAFace("star of a non-face " + f.str());
    std::vector<Face> facets;
    for (Face g : c.facets())
        if (f.subset_of(g)) facets.push_back(g);
    return reindex(c.vertex_count(), facets);
}

MappedComplex delete_face(const SimplicialComplex& c, Face f) {
    if (f.is_empty()) throw InvalidParameter("deleting the empty face would leave the void complex");
    std::vector<Face> facets;
    for (Face g : c.facets()) {
        if (!f.subset_of(g)) {
            facets.push_back(g);
        } else {
            for_each_vertex(f, [&](int v) { facets.push_back(g.without(v)); });
        }
    }
    return reindex(c.vertex_count(), facets);
}

MappedComplex delete_subcomplex(const SimplicialComplex& c, Face vertex_set) {
    std::vector<Face> facets;
    for (Face g : c.facets()) facets.push_back(g.minus(vertex_set));
    return reindex(c.vertex_count(), facets);
}

MappedComplex induced_subcomplex(const SimplicialComplex& c, Face vertex_set) {
    if (!vertex_set.subset_of(Face::full(c.vertex_count()))) throw InvalidVertex("vertex set not within [0,n)");
    std::vector<Face> facets;
    for (Face g : c.facets()) facets.push_back(g.intersect(vertex_set));
    return reindex(c.vertex_count(), facets);
}

std::vector<Face> missing_faces(const SimplicialComplex& c) {
    const int n = c.vertex_count();
    std::vector<Face> out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!c.has_edge(u, v)) out.push_back(Face::of({u, v}));

    // Larger missing faces are skeleton cliques whose proper subsets are all
    // faces; grow face-cliques vertex by vertex and report the first failures.
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = c.neighbors(v);

    auto all_ridges_are_faces = [&](Face f) {
        bool ok = true;
        for_each_vertex(f, [&](int v) { ok = ok && c.is_face(f.without(v)); });
        return ok;
    };

    auto at_or_above = [](int from) -> std::uint64_t {
        return from >= kMaxVertices ? 0 : (~std::uint64_t{0} << from);
    };

    // K is a face and a clique; extend by vertices above max(K).
    auto dfs = [&](auto&& self, Face k, std::uint64_t common, int from) -> void {
        for (std::uint64_t m = common & at_or_above(from); m; m &= m - 1) {
            int v = std::countr_zero(m);
            Face ext = k.with(v);
            if (c.is_face(ext)) {
                self(self, ext, common & adj[static_cast<std::size_t>(v)], v + 1);
            } else if (all_ridges_are_faces(ext)) {
                out.push_back(ext);
            }
        }
    };
    for (int u = 0; u < n; ++u)
        for (std::uint64_t m = adj[static_cast<std::size_t>(u)]; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (v <= u) continue;
            Face e = Face::of({u, v});
            dfs(dfs, e, adj[static_cast<std::size_t>(u)] & adj[static_cast<std::size_t>(v)], v + 1);
        }

    std::sort(out.begin(), out.end(), FaceLexLess{});
    return out;
}

bool is_flag(const SimplicialComplex& c) {
    return clique_complex(c.one_skeleton()) == c;
}

// -- transformations ----------------------------------------------------------

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    const int n = a.vertex_count() + b.vertex_count();
    if (n > kMaxVertices) throw CapExceeded("join exceeds 64 vertices");
    std::vector<Face> facets;
    facets.reserve(a.facets().size() * b.facets().size());
    for (Face fa : a.facets())
        for (Face fb : b.facets())
            facets.push_back(Face(fa.bits | (fb.bits << a.vertex_count())));
    return SimplicialComplex::from_facets(n, std::move(facets));
}

SimplicialComplex suspension(const SimplicialComplex& c) { return join(c, s0_complex()); }

SimplicialComplex suspend_k(const SimplicialComplex& c, int k) {
    if (k < 0) throw InvalidParameter("suspension count must be >= 0");
    SimplicialComplex out = c;
    for (int i = 0; i < k; ++i) out = suspension(out);
    return out;
}

namespace {

void require_edge(const SimplicialComplex& c, Face e) {
    if (e.card() != 2 || !c.is_face(e)) throw NotAnEdge("not an edge: " + e.str());
}

}  // namespace

bool edge_in_induced_4cycle(const SimplicialComplex& c, Face e) {
    require_edge(c, e);
    const int a = e.lowest();
    const int b = e.without(a).lowest();
    const std::uint64_t na = c.neighbors(a), nb = c.neighbors(b);
    const std::uint64_t s_candidates = nb & ~na & ~e.bits;
    const std::uint64_t t_candidates = na & ~nb & ~e.bits;
    for (std::uint64_t m = s_candidates; m; m &= m - 1)
        if (c.neighbors(std::countr_zero(m)) & t_candidates) return true;
    return false;
}

SimplicialComplex contract_edge(const SimplicialComplex& c, Face e) {
    require_edge(c, e);
    const int a = e.lowest();
    const int b = e.without(a).lowest();
    std::vector<Face> facets;
    for (Face f : c.facets())
        facets.push_back(f.contains(b) ? f.without(b).with(a) : f);
    // b's slot disappears; indices above b shift down by one.
    return reindex(c.vertex_count(), facets).complex;
}

SimplicialComplex edge_subdivision(const SimplicialComplex& c, Face e) {
    require_edge(c, e);
    const int n = c.vertex_count();
    if (n + 1 > kMaxVertices) throw CapExceeded("subdivision exceeds 64 vertices");
    const int a = e.lowest();
    const int b = e.without(a).lowest();
    const int x = n;
    std::vector<Face> facets;
    for (Face f : c.facets()) {
        if (e.subset_of(f)) {
            facets.push_back(f.without(a).with(x));
            facets.push_back(f.without(b).with(x));
        } else {
            facets.push_back(f);
        }
    }
    return SimplicialComplex::from_facets(n + 1, std::move(facets));
}

SimplicialComplex k_skeleton(const SimplicialComplex& c, int k) {
    if (k < 0) throw InvalidParameter("skeleton index must be >= 0");
    std::vector<Face> facets;
    for (Face f : c.facets()) {
        if (f.card() <= k + 1) {
            facets.push_back(f);
        } else {
            for_each_subset(f, [&](Face s) {
                if (s.card() == k + 1) facets.push_back(s);
            });
        }
    }
    return SimplicialComplex::from_facets(c.vertex_count(), std::move(facets));
}

SimplicialComplex relabel(const SimplicialComplex& c, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != c.vertex_count()) throw InvalidParameter("permutation size mismatch");
    std::vector<Face> facets;
    for (Face f : c.facets()) facets.push_back(compress_face(f, perm));
    return SimplicialComplex::from_facets(c.vertex_count(), std::move(facets));
}

}  // namespace flagsphere
