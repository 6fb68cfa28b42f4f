#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "flagsphere/face.hpp"
#include "flagsphere/graph.hpp"

namespace flagsphere {

/// Immutable simplicial complex on the dense vertex set [0, n), given by its
/// inclusion-maximal faces. Every vertex of [0, n) is a face (isolated input
/// vertices are promoted to singleton facets), and the empty complex (n = 0)
/// has the empty face as its unique facet. Membership resolves against the
/// facet list; the face-by-cardinality and 1-skeleton caches are built lazily
/// with single-assignment semantics, so values are safe to share across threads.
class SimplicialComplex {
public:
    /// The empty complex {∅}.
    SimplicialComplex();

    /// Dominated input faces are dropped, duplicates merged, uncovered
    /// vertices promoted to singleton facets. Throws InvalidVertex if a
    /// facet mentions a vertex outside [0, n).
    static SimplicialComplex from_facets(int n, std::vector<Face> facets);

    int vertex_count() const { return d_->n; }
    const std::vector<Face>& facets() const { return d_->facets; }
    int facet_count() const { return static_cast<int>(d_->facets.size()); }
    /// -1 for the empty complex.
    int dim() const { return d_->dim; }
    bool pure() const { return d_->pure; }

    /// Membership: f is a face iff it is a subset of some facet.
    bool is_face(Face f) const;

    /// Faces grouped by cardinality; index k holds the k-element faces,
    /// each group sorted lexicographically. Index 0 is always {∅}.
    const std::vector<std::vector<Face>>& faces_by_card() const;

    /// (f_0, ..., f_d), f_i = number of faces of cardinality i, f_0 = 1.
    std::vector<std::int64_t> f_vector() const;

    /// 1-skeleton adjacency.
    std::uint64_t neighbors(int v) const;
    int degree(int v) const { return std::popcount(neighbors(v)); }
    bool has_edge(int u, int v) const { return (neighbors(u) >> v) & 1u; }
    Graph one_skeleton() const;

    /// FNV-1a over (n, facet bits); stable across runs.
    std::uint64_t hash() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.d_->n == b.d_->n && a.d_->facets == b.d_->facets;
    }

private:
    struct Data {
        int n = 0;
        int dim = -1;
        bool pure = true;
        std::vector<Face> facets;
        mutable std::once_flag faces_once;
        mutable std::vector<std::vector<Face>> faces_by_card;
        mutable std::once_flag adj_once;
        mutable std::vector<std::uint64_t> adjacency;
    };
    explicit SimplicialComplex(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

/// A complex produced on a subset of another complex's vertices, re-indexed
/// densely; to_old[new_index] = index in the parent complex.
struct MappedComplex {
    SimplicialComplex complex;
    std::vector<int> to_old;

    /// Inverse map as a vector over the parent's vertices, -1 where dropped.
    std::vector<int> old_to_new(int old_n) const;
    /// Translate a face of the parent into this complex's labels.
    Face pull(Face old_face) const;
    /// Translate a face of this complex into parent labels.
    Face push(Face new_face) const;
};

// -- constructors ------------------------------------------------------------

/// Faces are exactly the cliques of g; the result is flag by construction.
SimplicialComplex clique_complex(const Graph& g);

/// The k-cycle C_k as a 1-dimensional complex, i adjacent to i±1 mod k; k >= 3.
SimplicialComplex cycle_complex(int k);
/// Boundary of the d-dimensional cross-polytope; antipodal pairs (2i, 2i+1).
/// octahedral_sphere(0) is the empty complex.
SimplicialComplex octahedral_sphere(int d);
/// Solid simplex on k vertices, <{0..k-1}>; simplex_complex(0) is the empty complex.
SimplicialComplex simplex_complex(int k);
/// Two isolated vertices.
SimplicialComplex s0_complex();
/// One vertex.
SimplicialComplex point_complex();

// -- queries -----------------------------------------------------------------

/// lk(f) = {f' : f ⊔ f' ∈ c}, densely re-indexed. Throws NotAFace.
MappedComplex link(const SimplicialComplex& c, Face f);
/// st(f) = {f' : f ∪ f' ∈ c}, densely re-indexed. Throws NotAFace.
MappedComplex star(const SimplicialComplex& c, Face f);
/// del(f) = {f' : f ⊄ f'}; keeps proper subsets of f. f need not be a face.
MappedComplex delete_face(const SimplicialComplex& c, Face f);
/// Faces supported outside the vertex set: del(Γ) for Γ spanned by vertex_set.
MappedComplex delete_subcomplex(const SimplicialComplex& c, Face vertex_set);
/// Faces supported inside the vertex set.
MappedComplex induced_subcomplex(const SimplicialComplex& c, Face vertex_set);

/// Minimal non-faces, in lexicographic order. All vertices being faces,
/// every missing face has at least two vertices.
std::vector<Face> missing_faces(const SimplicialComplex& c);

/// True iff every missing face is an edge, i.e. c is the clique complex of
/// its 1-skeleton.
bool is_flag(const SimplicialComplex& c);

// -- transformations ----------------------------------------------------------

/// Disjoint-union join; b's vertices are shifted up by a.vertex_count().
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
/// S⁰ ∗ c, with the two suspension vertices receiving the two highest indices.
SimplicialComplex suspension(const SimplicialComplex& c);
SimplicialComplex suspend_k(const SimplicialComplex& c, int k);

/// True iff e lies in an induced 4-cycle of the 1-skeleton (the four vertices
/// span exactly the four cycle edges). Throws NotAnEdge.
bool edge_in_induced_4cycle(const SimplicialComplex& c, Face e);

/// Image under κ_e identifying both endpoints of e = {a, b} with min(a, b);
/// the higher index is removed and labels above it shift down by one.
SimplicialComplex contract_edge(const SimplicialComplex& c, Face e);

/// Stellar subdivision of the edge e; the new vertex gets index n.
SimplicialComplex edge_subdivision(const SimplicialComplex& c, Face e);

/// Split v along an equator J of lk(v), given by J's vertex set (a subset of
/// v's neighbors). v⁻ keeps index v, v⁺ is appended as index n; v⁺ is joined
/// with the plus hemisphere of lk(v) along J (the one holding the smallest
/// non-J vertex of the link). Validates J via homology certification and
/// throws JNotEquator. Round trip: contracting {v, n} in the result gives c.
SimplicialComplex vertex_split(const SimplicialComplex& c, int v, Face j_vertices);

/// All faces of cardinality <= k+1.
SimplicialComplex k_skeleton(const SimplicialComplex& c, int k);

/// Apply a vertex permutation; perm[old] = new.
SimplicialComplex relabel(const SimplicialComplex& c, const std::vector<int>& perm);

}  // namespace flagsphere
