#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "flagsphere/face.hpp"

namespace flagsphere {

/// Simple undirected graph on [0, n), adjacency kept as per-vertex bitmasks.
/// No self-loops; the relation is kept symmetric by construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph complete(int n);
    static Graph cycle(int n);
    /// Decode C(n,2) upper-triangle bits, pair (i,j), i<j, at index i*n - i*(i+1)/2 + (j-i-1).
    static Graph from_edge_bits(int n, std::uint64_t bits);

    int vertex_count() const { return n_; }
    bool adjacent(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1u; }
    std::uint64_t neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return std::popcount(adj_[static_cast<std::size_t>(v)]); }
    int edge_count() const;

    void add_edge(int u, int v);

    Graph complement() const;
    /// Connected components as vertex masks, each listed by its smallest vertex.
    std::vector<Face> components() const;
    bool connected() const;

    /// All maximal cliques (Bron–Kerbosch with pivoting). Isolated vertices
    /// come back as singletons; the empty graph on 0 vertices yields {∅}.
    std::vector<Face> maximal_cliques() const;

    /// Is the vertex set a clique?
    bool is_clique(Face f) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

}  // namespace flagsphere
