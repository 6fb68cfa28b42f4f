#pragma once

#include <cstdint>
#include <vector>

#include "flagsphere/complex.hpp"
#include "flagsphere/graph.hpp"

namespace flagsphere {

/// Vertex-colored graph for canonical labeling; colors are 0-based ranks and
/// any isomorphism must preserve them.
struct ColoredGraph {
    int n = 0;
    std::vector<std::uint64_t> adj;
    std::vector<int> color;
};

/// Canonical byte encoding of a colored graph: equal bytes iff the graphs are
/// color-preservingly isomorphic. Iterative refinement plus full backtracking
/// over the first non-singleton cell, taking the lexicographically smallest
/// leaf encoding.
std::vector<std::uint8_t> canonical_graph_bytes(const ColoredGraph& g);

/// Canonical form of a complex. Flag complexes canonicalize their 1-skeleton
/// (missing faces all have two vertices, so the skeleton determines them);
/// other complexes canonicalize the vertex-facet incidence graph, with facet
/// nodes colored by cardinality. The two encodings are tagged and never
/// collide. Non-flag complexes require n + facet_count <= 64.
std::vector<std::uint8_t> canonical_form(const SimplicialComplex& c);

/// True iff some vertex bijection carries facets to facets.
bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace flagsphere
