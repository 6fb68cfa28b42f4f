#include "flagsphere/graph.hpp"

#include "flagsphere/errors.hpp"

namespace flagsphere {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > kMaxVertices) throw InvalidParameter("graph vertex count out of range");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    const std::uint64_t all = Face::full(n).bits;
    for (int v = 0; v < n; ++v) g.adj_[static_cast<std::size_t>(v)] = all & ~(std::uint64_t{1} << v);
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw InvalidParameter("cycle graph needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph Graph::from_edge_bits(int n, std::uint64_t bits) {
    Graph g(n);
    int idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++idx)
            if ((bits >> idx) & 1u) g.add_edge(i, j);
    return g;
}

int Graph::edge_count() const {
    int twice = 0;
    for (auto m : adj_) twice += std::popcount(m);
    return twice / 2;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw InvalidVertex("edge endpoint out of range");
    if (u == v) throw InvalidParameter("self-loop");
    adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

Graph Graph::complement() const {
    Graph g(n_);
    const std::uint64_t all = Face::full(n_).bits;
    for (int v = 0; v < n_; ++v)
        g.adj_[static_cast<std::size_t>(v)] = all & ~adj_[static_cast<std::size_t>(v)] & ~(std::uint64_t{1} << v);
    return g;
}

std::vector<Face> Graph::components() const {
    std::vector<Face> out;
    std::uint64_t seen = 0;
    const std::uint64_t all = Face::full(n_).bits;
    while (seen != all) {
        std::uint64_t frontier = std::uint64_t{1} << std::countr_zero(~seen & all);
        std::uint64_t comp = 0;
        while (frontier) {
            comp |= frontier;
            std::uint64_t next = 0;
            for (std::uint64_t m = frontier; m; m &= m - 1) next |= adj_[static_cast<std::size_t>(std::countr_zero(m))];
            frontier = next & ~comp;
        }
        out.push_back(Face(comp));
        seen |= comp;
    }
    return out;
}

bool Graph::connected() const {
    return n_ <= 1 || components().size() == 1;
}

namespace {

void bron_kerbosch(const Graph& g, std::uint64_t r, std::uint64_t p, std::uint64_t x, std::vector<Face>& out) {
    if (p == 0 && x == 0) {
        out.push_back(Face(r));
        return;
    }
    // pivot: vertex of p|x with the most neighbors in p
    int pivot = -1, best = -1;
    for (std::uint64_t m = p | x; m; m &= m - 1) {
        int v = std::countr_zero(m);
        int count = std::popcount(p & g.neighbors(v));
        if (count > best) { best = count; pivot = v; }
    }
    std::uint64_t candidates = p & ~g.neighbors(pivot);
    for (std::uint64_t m = candidates; m; m &= m - 1) {
        int v = std::countr_zero(m);
        const std::uint64_t vb = std::uint64_t{1} << v;
        bron_kerbosch(g, r | vb, p & g.neighbors(v), x & g.neighbors(v), out);
        p &= ~vb;
        x |= vb;
    }
}

}  // namespace

std::vector<Face> Graph::maximal_cliques() const {
    std::vector<Face> out;
    bron_kerbosch(*this, 0, Face::full(n_).bits, 0, out);
    std::sort(out.begin(), out.end(), FaceLexLess{});
    return out;
}

bool Graph::is_clique(Face f) const {
    for (std::uint64_t m = f.bits; m; m &= m - 1) {
        int v = std::countr_zero(m);
        std::uint64_t rest = f.bits & ~(std::uint64_t{1} << v);
        if ((rest & ~adj_[static_cast<std::size_t>(v)]) != 0) return false;
    }
    return true;
}

}  // namespace flagsphere
