// Test-side oracles, kept independent of the library paths they check.
#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "flagsphere/complex.hpp"
#include "flagsphere/graph.hpp"
#include "flagsphere/polynomial.hpp"

namespace oracles {

using flagsphere::Face;
using flagsphere::Graph;
using flagsphere::IntPolynomial;
using flagsphere::SimplicialComplex;

// Every face, by direct downward closure of the facet list.
inline std::set<std::uint64_t> all_faces(const SimplicialComplex& c) {
    std::set<std::uint64_t> out;
    for (Face f : c.facets()) {
        std::uint64_t s = f.bits;
        while (true) {
            out.insert(s);
            if (s == 0) break;
            s = (s - 1) & f.bits;
        }
    }
    return out;
}

// f-vector by counting the closure directly.
inline std::vector<std::int64_t> f_vector(const SimplicialComplex& c) {
    std::vector<std::int64_t> f(static_cast<std::size_t>(c.dim()) + 2, 0);
    for (std::uint64_t bits : all_faces(c)) ++f[static_cast<std::size_t>(std::popcount(bits))];
    return f;
}

// All cliques of a graph by testing every vertex subset pairwise.
inline std::set<std::uint64_t> all_cliques(const Graph& g, int n) {
    std::set<std::uint64_t> out;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        bool clique = true;
        for (int u = 0; u < n && clique; ++u) {
            if (!((s >> u) & 1)) continue;
            for (int v = u + 1; v < n && clique; ++v)
                if (((s >> v) & 1) && !g.adjacent(u, v)) clique = false;
        }
        if (clique) out.insert(s);
    }
    return out;
}

// h-polynomial by the generating identity h(z) = Σ f_i z^i (1-z)^(d-i),
// which matches the coefficient formula; the reciprocal-substitution form
// is its reverse and coincides exactly when h is palindromic.
inline IntPolynomial h_by_substitution(const IntPolynomial& f, int d) {
    IntPolynomial h;
    const IntPolynomial one_minus_z{1, -1};
    for (int i = 0; i <= f.degree(); ++i) {
        IntPolynomial pow{1};
        for (int j = 0; j < d - i; ++j) pow = pow.times(one_minus_z);
        h = h.plus(pow.shifted(i).times_scalar(f[i]));
    }
    return h;
}

// Induced 4-cycles containing an edge, by scanning all 4-subsets.
inline bool edge_in_induced_4cycle(const SimplicialComplex& c, Face e) {
    const int n = c.vertex_count();
    const int a = e.vertices()[0], b = e.vertices()[1];
    for (int s = 0; s < n; ++s) {
        for (int t = 0; t < n; ++t) {
            if (s == t || e.contains(s) || e.contains(t)) continue;
            // cycle a-b-s-t: edges ab, bs, st, ta; non-edges as, bt
            if (c.has_edge(b, s) && c.has_edge(s, t) && c.has_edge(t, a) && !c.has_edge(a, s) && !c.has_edge(b, t))
                return true;
        }
    }
    return false;
}

}  // namespace oracles
