#include "flagsphere/canonical.hpp"

#include <algorithm>
#include <optional>

#include "flagsphere/errors.hpp"

namespace flagsphere {

namespace {

// 1-WL refinement: split classes by neighbor-color counts until stable.
// Class ranks are reassigned deterministically by (old rank, signature), so
// the result is invariant under color-preserving isomorphism.
std::vector<int> refine(const ColoredGraph& g, std::vector<int> color) {
    const int n = g.n;
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    while (true) {
        const int k = *std::max_element(color.begin(), color.end()) + 1;
        for (int v = 0; v < n; ++v) {
            auto& s = sig[static_cast<std::size_t>(v)];
            s.assign(static_cast<std::size_t>(k) + 1, 0);
            s[0] = color[static_cast<std::size_t>(v)];
            for (std::uint64_t m = g.adj[static_cast<std::size_t>(v)]; m; m &= m - 1)
                ++s[static_cast<std::size_t>(color[static_cast<std::size_t>(std::countr_zero(m))]) + 1];
        }
        std::vector<int> order(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
        std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)]; });
        std::vector<int> next(static_cast<std::size_t>(n));
        int rank = 0;
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (i > 0 && sig[static_cast<std::size_t>(order[i])] != sig[static_cast<std::size_t>(order[i - 1])]) ++rank;
            next[static_cast<std::size_t>(order[i])] = rank;
        }
        if (next == color) return color;
        color = std::move(next);
    }
}

void encode_leaf(const ColoredGraph& g, const std::vector<int>& color, std::vector<std::uint8_t>& out) {
    const int n = g.n;
    std::vector<int> at(static_cast<std::size_t>(n));  // at[position] = vertex
    for (int v = 0; v < n; ++v) at[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])] = v;
    out.clear();
    out.push_back(static_cast<std::uint8_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(static_cast<std::uint8_t>(g.color[static_cast<std::size_t>(at[static_cast<std::size_t>(i)])]));
    std::uint8_t acc = 0;
    int nbits = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            acc = static_cast<std::uint8_t>((acc << 1) | ((g.adj[static_cast<std::size_t>(at[static_cast<std::size_t>(i)])] >> at[static_cast<std::size_t>(j)]) & 1u));
            if (++nbits == 8) {
                out.push_back(acc);
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits) out.push_back(static_cast<std::uint8_t>(acc << (8 - nbits)));
}

struct Searcher {
    const ColoredGraph& g;
    std::optional<std::vector<std::uint8_t>> best;
    std::vector<std::uint8_t> scratch;

    void search(std::vector<int> color) {
        color = refine(g, color);
        // first class with two or more members, by rank
        int target = -1;
        {
            std::vector<int> count(static_cast<std::size_t>(g.n), 0);
            for (int v = 0; v < g.n; ++v) ++count[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])];
            for (int r = 0; r < g.n; ++r)
                if (count[static_cast<std::size_t>(r)] >= 2) { target = r; break; }
        }
        if (target < 0) {
            encode_leaf(g, color, scratch);
            if (!best || scratch < *best) best = scratch;
            return;
        }
        for (int v = 0; v < g.n; ++v) {
            if (color[static_cast<std::size_t>(v)] != target) continue;
            std::vector<int> branched(color);
            for (int u = 0; u < g.n; ++u)
                if (branched[static_cast<std::size_t>(u)] >= target && u != v) ++branched[static_cast<std::size_t>(u)];
            search(std::move(branched));
        }
    }
};

}  // namespace

std::vector<std::uint8_t> canonical_graph_bytes(const ColoredGraph& g) {
    if (g.n == 0) return {0};
    if (g.n > kMaxVertices) throw CapExceeded("canonical labeling limited to 64 nodes");
    Searcher s{g, std::nullopt, {}};
    s.search(g.color);
    return *s.best;
}

std::vector<std::uint8_t> canonical_form(const SimplicialComplex& c) {
    const int n = c.vertex_count();
    if (is_flag(c)) {
        ColoredGraph g;
        g.n = n;
        g.adj.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) g.adj[static_cast<std::size_t>(v)] = c.neighbors(v);
        g.color.assign(static_cast<std::size_t>(n), 0);
        auto bytes = canonical_graph_bytes(g);
        bytes.insert(bytes.begin(), static_cast<std::uint8_t>('F'));
        return bytes;
    }

    const auto& facets = c.facets();
    const int m = static_cast<int>(facets.size());
    if (n + m > kMaxVertices) throw CapExceeded("incidence canonicalization limited to 64 nodes");

    // facet colors: 1 + rank of cardinality among the cardinalities present
    std::vector<int> cards;
    for (Face f : facets) cards.push_back(f.card());
    std::vector<int> distinct(cards);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    ColoredGraph g;
    g.n = n + m;
    g.adj.assign(static_cast<std::size_t>(g.n), 0);
    g.color.assign(static_cast<std::size_t>(g.n), 0);
    for (int i = 0; i < m; ++i) {
        const int node = n + i;
        g.color[static_cast<std::size_t>(node)] =
            1 + static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), cards[static_cast<std::size_t>(i)]) - distinct.begin());
        for_each_vertex(facets[static_cast<std::size_t>(i)], [&](int v) {
            g.adj[static_cast<std::size_t>(node)] |= std::uint64_t{1} << v;
            g.adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << node;
        });
    }
    auto bytes = canonical_graph_bytes(g);
    bytes.insert(bytes.begin(), static_cast<std::uint8_t>(m));
    bytes.insert(bytes.begin(), static_cast<std::uint8_t>('G'));
    return bytes;
}

bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.vertex_count() != b.vertex_count() || a.facet_count() != b.facet_count()) return false;
    auto card_multiset = [](const SimplicialComplex& c) {
        std::vector<int> cs;
        for (Face f : c.facets()) cs.push_back(f.card());
        std::sort(cs.begin(), cs.end());
        return cs;
    };
    if (card_multiset(a) != card_multiset(b)) return false;
    auto degrees = [](const SimplicialComplex& c) {
        std::vector<int> ds;
        for (int v = 0; v < c.vertex_count(); ++v) ds.push_back(c.degree(v));
        std::sort(ds.begin(), ds.end());
        return ds;
    };
    if (degrees(a) != degrees(b)) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace flagsphere
