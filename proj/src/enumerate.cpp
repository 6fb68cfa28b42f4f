#include "flagsphere/enumerate.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include <json.hpp>

#include "flagsphere/errors.hpp"
#include "flagsphere/io.hpp"

namespace flagsphere {

const std::vector<Graph>& graph_classes_up_to_iso(int n) {
    if (n < 0 || n > 9) throw CapExceeded("graph class enumeration supported for n <= 9");
    static std::mutex mu;
    static std::vector<std::vector<Graph>> levels{{Graph(0)}};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(levels.size()) <= n) {
        const int k = static_cast<int>(levels.size()) - 1;
        std::set<std::vector<std::uint8_t>> seen;
        std::vector<Graph> next;
        for (const Graph& parent : levels.back()) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
                Graph g(k + 1);
                for (int u = 0; u < k; ++u)
                    for (std::uint64_t m = parent.neighbors(u); m; m &= m - 1) {
                        const int v = std::countr_zero(m);
                        if (v > u) g.add_edge(u, v);
                    }
                for (std::uint64_t m = mask; m; m &= m - 1) g.add_edge(std::countr_zero(m), k);
                ColoredGraph cg{g.vertex_count(), {}, std::vector<int>(static_cast<std::size_t>(k) + 1, 0)};
                cg.adj.resize(static_cast<std::size_t>(k) + 1);
                for (int v = 0; v <= k; ++v) cg.adj[static_cast<std::size_t>(v)] = g.neighbors(v);
                if (seen.insert(canonical_graph_bytes(cg)).second) next.push_back(std::move(g));
            }
        }
        levels.push_back(std::move(next));
    }
    return levels[static_cast<std::size_t>(n)];
}

std::optional<CensusEntry> certify_graph_candidate(const Graph& g, Field field, std::optional<int> dim_filter) {
    const int n = g.vertex_count();
    if (n == 1) return std::nullopt;  // a point is not a homology sphere
    if (n >= 3) {
        // flag homology spheres on 3+ vertices have dimension >= 1: links of
        // vertices are spheres on >= 2 vertices and the skeleton is connected
        for (int v = 0; v < n; ++v)
            if (g.degree(v) < 2) return std::nullopt;
        if (!g.connected()) return std::nullopt;
    }

    const auto cliques = g.maximal_cliques();
    const int d = cliques.front().card();
    for (Face f : cliques)
        if (f.card() != d) return std::nullopt;
    if (dim_filter && *dim_filter != d - 1) return std::nullopt;

    // vertex links of a flag (d-1)-sphere are flag (d-2)-spheres on >= 2(d-1) vertices
    for (int v = 0; v < n; ++v)
        if (g.degree(v) < 2 * (d - 1)) return std::nullopt;

    auto complex = SimplicialComplex::from_facets(n, cliques);
    if (!is_closed_pseudomanifold(complex)) return std::nullopt;

    const auto f = complex.f_vector();
    std::int64_t euler = 0;  // reduced: Σ (-1)^(k-1) f_k including the empty face
    for (std::size_t k = 0; k < f.size(); ++k) euler += (k % 2 == 1) ? f[k] : -f[k];
    if (euler != ((d % 2 == 0) ? -1 : 1)) return std::nullopt;

    if (!is_homology_sphere(complex, field)) return std::nullopt;

    CensusEntry e;
    e.canonical_form = canonical_form(complex);
    e.n = n;
    e.d = d;
    e.gamma = gamma_of(complex);
    e.polar_size = antipode_profile(complex).polar_size;
    e.family = recognize_family(complex);
    e.complex = std::move(complex);
    return e;
}

std::vector<CensusEntry> merge_census(std::vector<CensusEntry> entries) {
    std::sort(entries.begin(), entries.end(), [](const CensusEntry& a, const CensusEntry& b) {
        if (a.n != b.n) return a.n < b.n;
        if (a.d != b.d) return a.d < b.d;
        return a.canonical_form < b.canonical_form;
    });
    entries.erase(std::unique(entries.begin(), entries.end(),
                              [](const CensusEntry& a, const CensusEntry& b) {
                                  return a.canonical_form == b.canonical_form && a.n == b.n;
                              }),
                  entries.end());
    return entries;
}

std::vector<CensusEntry> enumerate_flag_spheres(const EnumerationTask& task) {
    if (task.n > task.cap) throw CapExceeded("enumeration cap exceeded");
    if (task.n < 0) throw InvalidParameter("negative vertex count");
    if (task.shard_count < 1 || task.shard_index < 0 || task.shard_index >= task.shard_count)
        throw InvalidParameter("bad shard spec");

    std::vector<CensusEntry> out;
    if (task.n == 0) {
        if (task.shard_index == 0)
            if (auto e = certify_graph_candidate(Graph(0), task.field, task.dim_filter)) out.push_back(std::move(*e));
        return merge_census(std::move(out));
    }

    const int k = task.n - 1;
    const auto& parents = graph_classes_up_to_iso(k);
    const std::uint64_t space = static_cast<std::uint64_t>(parents.size()) << k;

    // candidates are pure work items; only the merged result is shared
    auto sweep = [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<CensusEntry> local;
        for (std::uint64_t index = begin; index < end; ++index) {
            if (static_cast<int>(index % static_cast<std::uint64_t>(task.shard_count)) != task.shard_index) continue;
            const Graph& parent = parents[static_cast<std::size_t>(index >> k)];
            const std::uint64_t mask = index & ((std::uint64_t{1} << k) - 1);
            Graph g(task.n);
            for (int u = 0; u < k; ++u)
                for (std::uint64_t m = parent.neighbors(u); m; m &= m - 1) {
                    const int v = std::countr_zero(m);
                    if (v > u) g.add_edge(u, v);
                }
            for (std::uint64_t m = mask; m; m &= m - 1) g.add_edge(std::countr_zero(m), k);
            if (auto e = certify_graph_candidate(g, task.field, task.dim_filter)) local.push_back(std::move(*e));
        }
        return local;
    };

    const unsigned workers =
        space < 4096 ? 1 : std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    if (workers == 1) {
        out = sweep(0, space);
    } else {
        std::vector<std::future<std::vector<CensusEntry>>> futures;
        const std::uint64_t chunk = (space + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w)
            futures.push_back(std::async(std::launch::async, sweep, w * chunk, std::min(space, (w + 1) * chunk)));
        for (auto& f : futures)
            for (auto& e : f.get()) out.push_back(std::move(e));
    }
    return merge_census(std::move(out));
}

std::vector<CensusEntry> enumerate_flag_spheres_naive(const EnumerationTask& task) {
    if (task.n > 8) throw CapExceeded("naive sweep supported for n <= 8");
    if (task.n < 0) throw InvalidParameter("negative vertex count");
    std::vector<CensusEntry> out;
    const int pairs = task.n * (task.n - 1) / 2;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
        if (static_cast<int>(bits % static_cast<std::uint64_t>(task.shard_count)) != task.shard_index) continue;
        if (auto e = certify_graph_candidate(Graph::from_edge_bits(task.n, bits), task.field, task.dim_filter))
            out.push_back(std::move(*e));
    }
    return merge_census(std::move(out));
}

std::string census_entry_to_ndjson(const CensusEntry& e) {
    nlohmann::ordered_json j;
    j["canonical_form"] = hex_encode(e.canonical_form);
    j["n"] = e.n;
    j["d"] = e.d;
    j["gamma"] = to_json(e.gamma);
    j["polar_size"] = e.polar_size;
    j["family"] = to_json(e.family);
    std::vector<std::vector<int>> facets;
    for (Face f : e.complex.facets()) facets.push_back(f.vertices());
    j["facets"] = facets;
    return j.dump();
}

CensusEntry census_entry_from_ndjson(const std::string& line) {
    const auto j = nlohmann::json::parse(line);
    CensusEntry e;
    e.n = j.at("n").get<int>();
    e.d = j.at("d").get<int>();
    e.gamma = IntPolynomial(j.at("gamma").get<std::vector<std::int64_t>>());
    e.polar_size = j.at("polar_size").get<int>();
    std::vector<Face> facets;
    for (const auto& fl : j.at("facets")) facets.push_back(Face::from_vertices(fl.get<std::vector<int>>()));
    e.complex = SimplicialComplex::from_facets(e.n, std::move(facets));
    e.canonical_form = canonical_form(e.complex);
    e.family = recognize_family(e.complex);
    return e;
}

}  // namespace flagsphere
