#include "flagsphere/structure.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "flagsphere/canonical.hpp"
#include "flagsphere/errors.hpp"
#include "flagsphere/gamma.hpp"

namespace flagsphere {

std::vector<int> antipodes(const SimplicialComplex& c, int v) {
    const std::uint64_t mask = Face::full(c.vertex_count()).bits & ~c.neighbors(v) & ~(std::uint64_t{1} << v);
    return Face(mask).vertices();
}

AntipodeProfile antipode_profile(const SimplicialComplex& c) {
    AntipodeProfile p;
    const int n = c.vertex_count();
    p.iota.resize(static_cast<std::size_t>(n));
    p.polar_size = 0;
    for (int v = 0; v < n; ++v) {
        p.iota[static_cast<std::size_t>(v)] = n - 1 - c.degree(v);
        p.polar_size = (v == 0) ? p.iota[0] : std::min(p.polar_size, p.iota[static_cast<std::size_t>(v)]);
    }
    return p;
}

bool polar_size_bounds_check(const SimplicialComplex& c) {
    const int d = c.dim() + 1;
    const int ell = c.vertex_count() - 2 * d;
    if (ell < 0) return false;
    const auto prof = antipode_profile(c);
    if (prof.polar_size < 1 || prof.polar_size > ell + 1) return false;
    for (int v = 0; v < c.vertex_count(); ++v) {
        const auto lk = link(c, Face().with(v)).complex;
        if (gamma_closed_forms(lk).gamma1 != ell - prof.iota[static_cast<std::size_t>(v)] + 1) return false;
    }
    return true;
}

std::vector<std::array<int, 2>> suspension_pairs(const SimplicialComplex& c) {
    std::vector<std::array<int, 2>> out;
    const auto prof = antipode_profile(c);
    for (int v = 0; v < c.vertex_count(); ++v) {
        if (prof.iota[static_cast<std::size_t>(v)] != 1) continue;
        const int w = antipodes(c, v)[0];
        if (w > v && prof.iota[static_cast<std::size_t>(w)] == 1) out.push_back({v, w});
    }
    return out;
}

bool is_suspension(const SimplicialComplex& c) { return !suspension_pairs(c).empty(); }

DesuspensionResult desuspend_core(const SimplicialComplex& c) {
    DesuspensionResult res{c, 0};
    while (true) {
        const auto pairs = suspension_pairs(res.core);
        if (pairs.empty()) return res;
        res.core = delete_subcomplex(res.core, Face::of({pairs[0][0], pairs[0][1]})).complex;
        ++res.m;
    }
}

bool is_equator(const SimplicialComplex& c, Face vertex_set, Field field) {
    const auto sub = induced_subcomplex(c, vertex_set).complex;
    return sub.dim() == c.dim() - 1 && is_homology_sphere(sub, field);
}

std::vector<Face> find_equators(const SimplicialComplex& c, Field field) {
    const int n = c.vertex_count();
    if (n > 20) throw CapExceeded("equator scan beyond 20 vertices");
    const int d = c.dim() + 1;

    auto scan = [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<Face> local;
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            const Face s(mask);
            if (s.card() < 2 * (d - 1) || n - s.card() < 2) continue;
            const auto sub = induced_subcomplex(c, s).complex;
            if (sub.dim() != d - 2 || !sub.pure()) continue;
            if (is_homology_sphere(sub, field)) local.push_back(s);
        }
        return local;
    };

    const std::uint64_t space = std::uint64_t{1} << n;
    std::vector<Face> out;
    const unsigned workers =
        space < 4096 ? 1 : std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    if (workers == 1) {
        out = scan(0, space);
    } else {
        std::vector<std::future<std::vector<Face>>> futures;
        const std::uint64_t chunk = (space + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w)
            futures.push_back(std::async(std::launch::async, scan, w * chunk, std::min(space, (w + 1) * chunk)));
        for (auto& f : futures)
            for (Face s : f.get()) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](Face a, Face b) {
        if (a.card() != b.card()) return a.card() < b.card();
        return lex_less(a, b);
    });
    return out;
}

HemispherePair hemispheres(const SimplicialComplex& c, Face equator, Field field) {
    if (!is_equator(c, equator, field)) throw JNotEquator("vertex set " + equator.str() + " is not an equator");
    const auto rest = delete_subcomplex(c, equator);
    const auto comps = rest.complex.one_skeleton().components();
    if (comps.size() != 2) throw ComponentCountNotTwo("deleting an equator left " + std::to_string(comps.size()) + " components");
    const Face side_a = rest.push(comps[0]);  // holds the smallest non-equator vertex
    const Face side_b = rest.push(comps[1]);
    return {delete_subcomplex(c, side_b), delete_subcomplex(c, side_a)};
}

std::vector<MappedComplex> join_factorization(const SimplicialComplex& c) {
    std::vector<MappedComplex> out;
    if (c.vertex_count() == 0) return out;
    for (Face comp : c.one_skeleton().complement().components()) out.push_back(induced_subcomplex(c, comp));
    return out;
}

const char* family_kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::OctahedralJoinC5Power: return "octahedral_join_c5_power";
        case FamilyKind::Upsilon1: return "upsilon1";
        case FamilyKind::Upsilon2: return "upsilon2";
        case FamilyKind::Other: return "other";
    }
    return "other";
}

namespace {

// Walk a k-cycle from its smallest vertex toward its smaller neighbor.
std::vector<int> cycle_order(const SimplicialComplex& c) {
    const int n = c.vertex_count();
    std::vector<int> order{0};
    int prev = -1, cur = 0;
    while (static_cast<int>(order.size()) < n) {
        const auto nb = Face(c.neighbors(cur)).vertices();
        const int next = (nb[0] != prev) ? nb[0] : nb[1];
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

bool is_k_cycle(const SimplicialComplex& c, int k) {
    if (c.vertex_count() != k || c.dim() != 1 || !c.pure()) return false;
    for (int v = 0; v < k; ++v)
        if (c.degree(v) != 2) return false;
    return c.one_skeleton().connected();
}

bool is_s0(const SimplicialComplex& c) { return c.vertex_count() == 2 && c.dim() == 0; }

// Classify join factors as S⁰ / C5 / C6 blocks in the parent's labels.
// Returns false if any factor is something else.
bool classify_factors(const std::vector<MappedComplex>& factors, FamilyWitness& w, int& c6_count) {
    c6_count = 0;
    for (const auto& f : factors) {
        if (is_s0(f.complex)) {
            w.suspension_pairs.push_back({f.to_old[0], f.to_old[1]});
        } else if (is_k_cycle(f.complex, 5)) {
            std::array<int, 5> block{};
            const auto order = cycle_order(f.complex);
            for (int i = 0; i < 5; ++i) block[static_cast<std::size_t>(i)] = f.to_old[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
            w.c5_blocks.push_back(block);
        } else if (is_k_cycle(f.complex, 6)) {
            if (++c6_count > 1) return false;
            std::array<int, 6> block{};
            const auto order = cycle_order(f.complex);
            for (int i = 0; i < 6; ++i) block[static_cast<std::size_t>(i)] = f.to_old[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
            w.c6_block = block;
        } else {
            return false;
        }
    }
    return true;
}

// Facet-level re-assembly of a join of S⁰/C5/C6 blocks in given labels.
SimplicialComplex assemble_join(int n, const FamilyWitness& w) {
    std::vector<std::vector<Face>> factor_facets;
    for (const auto& p : w.suspension_pairs)
        factor_facets.push_back({Face().with(p[0]), Face().with(p[1])});
    for (const auto& b : w.c5_blocks) {
        std::vector<Face> fs;
        for (int i = 0; i < 5; ++i) fs.push_back(Face::of({b[static_cast<std::size_t>(i)], b[static_cast<std::size_t>((i + 1) % 5)]}));
        factor_facets.push_back(std::move(fs));
    }
    if (w.c6_block) {
        std::vector<Face> fs;
        for (int i = 0; i < 6; ++i) fs.push_back(Face::of({(*w.c6_block)[static_cast<std::size_t>(i)], (*w.c6_block)[static_cast<std::size_t>((i + 1) % 6)]}));
        factor_facets.push_back(std::move(fs));
    }
    std::vector<Face> facets{Face()};
    for (const auto& fs : factor_facets) {
        std::vector<Face> next;
        next.reserve(facets.size() * fs.size());
        for (Face a : facets)
            for (Face b : fs) next.push_back(a.unite(b));
        facets = std::move(next);
    }
    return SimplicialComplex::from_facets(n, std::move(facets));
}

}  // namespace

FamilyDescriptor recognize_family(const SimplicialComplex& c) {
    FamilyDescriptor desc;

    {
        FamilyWitness w;
        int c6 = 0;
        if (classify_factors(join_factorization(c), w, c6)) {
            desc.witness = std::move(w);
            desc.m = static_cast<int>(desc.witness.suspension_pairs.size());
            if (c6 == 0) {
                desc.kind = FamilyKind::OctahedralJoinC5Power;
                desc.ell = static_cast<int>(desc.witness.c5_blocks.size());
            } else {
                desc.kind = FamilyKind::Upsilon1;
                desc.ell = static_cast<int>(desc.witness.c5_blocks.size()) + 2;
            }
            return desc;
        }
    }

    // Υ2: find a contractible edge whose contraction is Σ^m ⋆^{ℓ-1} C5 (m >= 1)
    // and a witnessing subdivision at a suspension-vertex edge.
    const auto& edges = c.faces_by_card().size() > 2 ? c.faces_by_card()[2] : std::vector<Face>{};
    for (Face e : edges) {
        if (edge_in_induced_4cycle(c, e)) continue;
        const auto contracted = contract_edge(c, e);
        FamilyWitness w;
        int c6 = 0;
        if (!classify_factors(join_factorization(contracted), w, c6) || c6 != 0) continue;
        if (w.suspension_pairs.empty() || w.c5_blocks.empty()) continue;
        for (const auto& pair : w.suspension_pairs) {
            for (int s : pair) {
                bool found = false;
                for_each_vertex(Face(contracted.neighbors(s)), [&](int z) {
                    if (found) return;
                    if (is_isomorphic(c, edge_subdivision(contracted, Face::of({s, z})))) {
                        const int p = e.lowest();
                        desc.kind = FamilyKind::Upsilon2;
                        desc.m = static_cast<int>(w.suspension_pairs.size());
                        desc.ell = static_cast<int>(w.c5_blocks.size()) + 1;
                        desc.witness = w;
                        desc.witness.subdivision = FamilyWitness::Subdivision{p, e.without(p).lowest(), s, z};
                        found = true;
                    }
                });
                if (found) return desc;
            }
        }
    }

    desc = FamilyDescriptor{};
    desc.kind = FamilyKind::Other;
    return desc;
}

SimplicialComplex construct_family(FamilyKind kind, int m, int ell) {
    switch (kind) {
        case FamilyKind::OctahedralJoinC5Power: {
            if (m < 0 || ell < 0) throw InvalidParameter("octahedral family needs m, ell >= 0");
            SimplicialComplex out;
            for (int i = 0; i < ell; ++i) out = join(out, cycle_complex(5));
            return suspend_k(out, m);
        }
        case FamilyKind::Upsilon1: {
            if (m < 0 || ell < 2) throw InvalidParameter("upsilon1 needs m >= 0, ell >= 2");
            SimplicialComplex out;
            for (int i = 0; i < ell - 2; ++i) out = join(out, cycle_complex(5));
            return suspend_k(join(out, cycle_complex(6)), m);
        }
        case FamilyKind::Upsilon2: {
            if (m < 1 || ell < 2) throw InvalidParameter("upsilon2 needs m >= 1, ell >= 2");
            const auto base = construct_family(FamilyKind::OctahedralJoinC5Power, m, ell - 1);
            const int s = 5 * (ell - 1);  // first suspension vertex
            return edge_subdivision(base, Face::of({s, 0}));
        }
        case FamilyKind::Other: break;
    }
    throw InvalidParameter("cannot construct the Other family");
}

bool verify_family(const SimplicialComplex& c, const FamilyDescriptor& d) {
    switch (d.kind) {
        case FamilyKind::OctahedralJoinC5Power:
        case FamilyKind::Upsilon1:
            return assemble_join(c.vertex_count(), d.witness) == c;
        case FamilyKind::Upsilon2: {
            if (!d.witness.subdivision) return false;
            const auto& s = *d.witness.subdivision;
            const Face e = Face::of({s.p, s.q});
            if (e.card() != 2 || !c.is_face(e) || edge_in_induced_4cycle(c, e)) return false;
            const auto contracted = contract_edge(c, e);
            if (assemble_join(contracted.vertex_count(), d.witness) != contracted) return false;
            return is_isomorphic(c, edge_subdivision(contracted, Face::of({s.s, s.z})));
        }
        case FamilyKind::Other: break;
    }
    return false;
}

std::optional<std::pair<MappedComplex, int>> extract_join_cycle(const SimplicialComplex& c) {
    const auto prof = antipode_profile(c);
    if (prof.polar_size <= 1) return std::nullopt;
    for (int v = 0; v < c.vertex_count(); ++v) {
        if (prof.iota[static_cast<std::size_t>(v)] != prof.polar_size) continue;
        const auto lk = link(c, Face().with(v));
        const auto pairs = suspension_pairs(lk.complex);
        if (pairs.empty()) continue;
        auto gamma = delete_subcomplex(lk.complex, Face::of({pairs[0][0], pairs[0][1]}));
        // compose the maps back into c's labels
        for (auto& old : gamma.to_old) old = lk.to_old[static_cast<std::size_t>(old)];
        const int cycle_len = prof.polar_size + 3;
        if (!is_isomorphic(c, join(gamma.complex, cycle_complex(cycle_len))))
            throw Error("suspension-link vertex failed the join-cycle factorization");
        return std::make_pair(std::move(gamma), cycle_len);
    }
    return std::nullopt;
}

SimplicialComplex vertex_split(const SimplicialComplex& c, int v, Face j_vertices) {
    const int n = c.vertex_count();
    if (v < 0 || v >= n) throw InvalidVertex("split vertex out of range");
    if (n + 1 > kMaxVertices) throw CapExceeded("split exceeds 64 vertices");
    if (!j_vertices.subset_of(Face(c.neighbors(v)))) throw JNotEquator("J must lie in the link of the split vertex");

    const auto lk_v = link(c, Face().with(v));
    const Face j_local = lk_v.pull(j_vertices);
    if (!is_equator(lk_v.complex, j_local)) throw JNotEquator("J is not an equator of the link");
    const auto hemi = hemispheres(lk_v.complex, j_local);

    const int v_minus = v;  // keeps the split vertex's slot
    const int v_plus = n;
    std::vector<Face> facets;
    // del(v)
    for (Face f : c.facets()) {
        if (f.contains(v)) facets.push_back(f.without(v));
        else facets.push_back(f);
    }
    // <v+ v-> * J
    {
        const auto j_sub = induced_subcomplex(lk_v.complex, j_local);
        for (Face f : j_sub.complex.facets())
            facets.push_back(lk_v.push(j_sub.push(f)).with(v_minus).with(v_plus));
    }
    // v+ * plus hemisphere, v- * minus hemisphere
    for (Face f : hemi.plus.complex.facets())
        facets.push_back(lk_v.push(hemi.plus.push(f)).with(v_plus));
    for (Face f : hemi.minus.complex.facets())
        facets.push_back(lk_v.push(hemi.minus.push(f)).with(v_minus));

    return SimplicialComplex::from_facets(n + 1, std::move(facets));
}

std::optional<std::pair<Face, Face>> disjoint_facets(const SimplicialComplex& c, std::optional<int> avoid) {
    if (avoid && is_suspension(c)) throw HypothesisViolated("disjoint facets avoiding a vertex need a non-suspension");
    const auto& fs = c.facets();
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (avoid && fs[i].contains(*avoid)) continue;
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
            if (avoid && fs[j].contains(*avoid)) continue;
            if (!fs[i].intersects(fs[j])) return std::make_pair(fs[i], fs[j]);
        }
    }
    return std::nullopt;
}

}  // namespace flagsphere
