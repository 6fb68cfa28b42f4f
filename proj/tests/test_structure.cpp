#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <future>
#include <random>

#include "flagsphere/canonical.hpp"
#include "flagsphere/gamma.hpp"
#include "flagsphere/enumerate.hpp"
#include "flagsphere/structure.hpp"

using namespace flagsphere;

namespace {

const SimplicialComplex kC5 = cycle_complex(5);
const SimplicialComplex kOct = octahedral_sphere(3);
const SimplicialComplex kSuspC5 = suspension(cycle_complex(5));
const SimplicialComplex kJ55 = join(cycle_complex(5), cycle_complex(5));

}  // namespace

TEST_CASE("antipode profiles") {
    auto p = antipode_profile(kOct);
    CHECK(p.polar_size == 1);
    for (int v = 0; v < 6; ++v) CHECK(p.iota[static_cast<std::size_t>(v)] == 1);

    p = antipode_profile(kC5);
    CHECK(p.polar_size == 2);
    for (int v = 0; v < 5; ++v) CHECK(p.iota[static_cast<std::size_t>(v)] == 2);

    p = antipode_profile(kJ55);
    CHECK(p.polar_size == 2);
    CHECK(antipodes(kJ55, 0) == std::vector<int>{2, 3});  // antipodes stay in the factor

    // sum of antipode numbers is twice the missing-edge count
    std::mt19937 rng(515);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const int pairs = n * (n - 1) / 2;
        const auto c = clique_complex(Graph::from_edge_bits(n, rng() & ((std::uint64_t{1} << pairs) - 1)));
        const auto prof = antipode_profile(c);
        std::int64_t total = 0;
        for (int i : prof.iota) total += i;
        std::int64_t missing = 0;
        for (Face f : missing_faces(c))
            if (f.card() == 2) ++missing;
        CHECK(total == 2 * missing);
    }
}

TEST_CASE("polar size bounds on certified spheres") {
    CHECK(polar_size_bounds_check(kSuspC5));
    CHECK(polar_size_bounds_check(kJ55));
    for (int d = 1; d <= 5; ++d) {
        CHECK(polar_size_bounds_check(octahedral_sphere(d)));
        CHECK(antipode_profile(octahedral_sphere(d)).polar_size == 1);  // ell = 0: pi = ell + 1
    }
}

TEST_CASE("suspension pairs and desuspension") {
    CHECK(suspension_pairs(kSuspC5) == std::vector<std::array<int, 2>>{{5, 6}});
    CHECK(suspension_pairs(octahedral_sphere(4)).size() == 4);
    CHECK(suspension_pairs(kJ55).empty());
    CHECK(is_suspension(kSuspC5));
    CHECK(!is_suspension(kJ55));

    auto res = desuspend_core(suspend_k(kC5, 2));
    CHECK(res.m == 2);
    CHECK(res.core == kC5);

    res = desuspend_core(octahedral_sphere(5));
    CHECK(res.m == 5);
    CHECK(res.core == SimplicialComplex());

    // stripping order does not matter, and gamma is untouched
    std::mt19937 rng(77);
    for (const auto& c : {suspend_k(kC5, 3), suspend_k(kJ55, 2), octahedral_sphere(4)}) {
        const auto reference = desuspend_core(c);
        CHECK(gamma_of(reference.core) == gamma_of(c));
        for (int trial = 0; trial < 20; ++trial) {
            SimplicialComplex cur = c;
            int stripped = 0;
            while (true) {
                auto pairs = suspension_pairs(cur);
                if (pairs.empty()) break;
                const auto& p = pairs[static_cast<std::size_t>(rng() % pairs.size())];
                cur = delete_subcomplex(cur, Face::of({p[0], p[1]})).complex;
                ++stripped;
            }
            CHECK(stripped == reference.m);
            CHECK(is_isomorphic(cur, reference.core));
        }
    }
}

TEST_CASE("equators of small spheres") {
    // octahedron: exactly the three induced 4-cycles
    const auto oct_eqs = find_equators(kOct);
    CHECK(oct_eqs == std::vector<Face>{Face::of({0, 1, 2, 3}), Face::of({0, 1, 4, 5}), Face::of({2, 3, 4, 5})});
    for (Face s : oct_eqs) CHECK(is_isomorphic(induced_subcomplex(kOct, s).complex, cycle_complex(4)));

    // suspension of C5: the C5 itself plus the five vertex-link 4-cycles
    const auto sc5_eqs = find_equators(kSuspC5);
    CHECK(sc5_eqs.size() == 6);
    int c4s = 0, c5s = 0;
    for (Face s : sc5_eqs) {
        const auto eq = induced_subcomplex(kSuspC5, s).complex;
        if (is_isomorphic(eq, cycle_complex(4))) ++c4s;
        if (is_isomorphic(eq, kC5)) ++c5s;
        bool link_of_vertex = false;
        for (int v = 0; v < kSuspC5.vertex_count(); ++v)
            if (Face(kSuspC5.neighbors(v)) == s) link_of_vertex = true;
        CHECK(link_of_vertex);
    }
    CHECK(c4s == 5);
    CHECK(c5s == 1);

    // C5 * C5: the ten vertex links, all suspensions of C5
    const auto j55_eqs = find_equators(kJ55);
    CHECK(j55_eqs.size() == 10);
    for (Face s : j55_eqs) CHECK(is_isomorphic(induced_subcomplex(kJ55, s).complex, kSuspC5));

    CHECK(is_equator(kOct, Face::of({2, 3, 4, 5})));
    CHECK(!is_equator(kOct, Face::of({0, 2, 3})));
}

TEST_CASE("hemispheres") {
    const auto halves = hemispheres(kOct, Face::of({2, 3, 4, 5}));
    CHECK(halves.plus.to_old == std::vector<int>{0, 2, 3, 4, 5});
    CHECK(halves.minus.to_old == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(halves.plus.complex.facet_count() == 4);
    CHECK(is_homology_ball(halves.plus.complex, Field::GF2));
    CHECK(is_homology_ball(halves.minus.complex, Field::GF2));
    // the two hemispheres cover the sphere
    {
        std::vector<Face> cover;
        for (Face f : halves.plus.complex.facets()) cover.push_back(halves.plus.push(f));
        for (Face f : halves.minus.complex.facets()) cover.push_back(halves.minus.push(f));
        CHECK(SimplicialComplex::from_facets(6, cover) == kOct);
    }

    // suspension split along its base: two cones
    const auto cones = hemispheres(kSuspC5, Face::full(5));
    CHECK(is_isomorphic(cones.plus.complex, join(kC5, point_complex())));
    CHECK(is_isomorphic(cones.minus.complex, join(kC5, point_complex())));

    // join split along a vertex link: the star of that vertex is a hemisphere
    const Face lk0 = Face(kJ55.neighbors(0));
    const auto j_halves = hemispheres(kJ55, lk0);
    const auto st0 = star(kJ55, Face::of({0}));
    CHECK(j_halves.plus.complex == st0.complex);
    CHECK(j_halves.plus.to_old == st0.to_old);

    CHECK_THROWS_AS(hemispheres(kOct, Face::of({0, 1, 2})), JNotEquator);

    // deletion of an equator is homologically S⁰, split into two parts
    for (const auto& [sphere, eq] : std::vector<std::pair<SimplicialComplex, Face>>{
             {kOct, Face::of({2, 3, 4, 5})}, {kSuspC5, Face::full(5)}, {kJ55, Face(kJ55.neighbors(0))}}) {
        const auto rest = delete_subcomplex(sphere, eq).complex;
        CHECK(has_sphere_profile(betti_numbers(rest, Field::GF2), 0));
        CHECK(rest.one_skeleton().components().size() == 2);
    }
}

TEST_CASE("join factorization") {
    auto factors = join_factorization(kJ55);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].complex == kC5);
    CHECK(factors[1].complex == kC5);
    CHECK(factors[0].to_old == std::vector<int>{0, 1, 2, 3, 4});

    CHECK(join_factorization(octahedral_sphere(4)).size() == 4);
    CHECK(join_factorization(cycle_complex(6)).size() == 1);
    CHECK(join_factorization(SimplicialComplex()).empty());
}

TEST_CASE("family recognition and construction") {
    const auto family_a = construct_family(FamilyKind::OctahedralJoinC5Power, 2, 2);
    auto desc = recognize_family(family_a);
    CHECK(desc.kind == FamilyKind::OctahedralJoinC5Power);
    CHECK(desc.m == 2);
    CHECK(desc.ell == 2);
    CHECK(verify_family(family_a, desc));
    CHECK(is_isomorphic(construct_family(desc.kind, desc.m, desc.ell), family_a));

    const auto c5c6 = join(cycle_complex(5), cycle_complex(6));
    desc = recognize_family(c5c6);
    CHECK(desc.kind == FamilyKind::Upsilon1);
    CHECK(desc.m == 0);
    CHECK(desc.ell == 3);  // gamma_1, per the paper's Σ^m ⋆^(ℓ-2) C5 ⋆ C6 indexing
    CHECK(verify_family(c5c6, desc));
    CHECK(gamma_of(c5c6) == IntPolynomial{1, 3, 2});

    CHECK(recognize_family(cycle_complex(6)).kind == FamilyKind::Upsilon1);
    CHECK(recognize_family(cycle_complex(7)).kind == FamilyKind::Other);
    CHECK(recognize_family(SimplicialComplex()).kind == FamilyKind::OctahedralJoinC5Power);

    // gamma values of constructed families
    CHECK(gamma_of(construct_family(FamilyKind::OctahedralJoinC5Power, 0, 3)) == IntPolynomial{1, 3, 3, 1});
    CHECK(gamma_of(construct_family(FamilyKind::Upsilon1, 1, 2)) == IntPolynomial{1, 2});

    CHECK_THROWS_AS(construct_family(FamilyKind::Upsilon1, 0, 1), InvalidParameter);
    CHECK_THROWS_AS(construct_family(FamilyKind::Upsilon2, 0, 2), InvalidParameter);
    CHECK_THROWS_AS(construct_family(FamilyKind::Other, 0, 0), InvalidParameter);
}

TEST_CASE("upsilon2: construction, recognition, desuspension") {
    const auto u2 = construct_family(FamilyKind::Upsilon2, 1, 2);
    CHECK(u2.vertex_count() == 8);
    CHECK(u2.dim() == 2);
    REQUIRE(is_flag(u2));
    REQUIRE(is_homology_sphere(u2, Field::GF2));
    CHECK(gamma_of(u2) == IntPolynomial{1, 2});

    const auto desc = recognize_family(u2);
    CHECK(desc.kind == FamilyKind::Upsilon2);
    CHECK(desc.m == 1);
    CHECK(desc.ell == 2);
    CHECK(verify_family(u2, desc));

    // the subdivision at a suspension-adjacent edge kills the suspension pair
    CHECK(suspension_pairs(u2).empty());
    CHECK(desuspend_core(u2).m == 0);

    // gamma_{ell-1} = 2 for the bigger instances too
    for (auto [m, ell] : {std::pair{2, 2}, std::pair{1, 3}}) {
        const auto c = construct_family(FamilyKind::Upsilon2, m, ell);
        REQUIRE(is_homology_sphere(c, Field::GF2));
        const auto g = gamma_of(c);
        CHECK(g[ell] == 0);
        CHECK(g[ell - 1] == 2);
        CHECK(recognize_family(c).kind == FamilyKind::Upsilon2);
    }
}

TEST_CASE("vertex split") {
    // splitting a suspension vertex of ΣC5 along the link of a C5 vertex
    // gives the 8-vertex second-type sphere
    const Face j = Face::of({1, 4});  // link of vertex 0 inside the C5
    const auto split = vertex_split(kSuspC5, 5, j);
    CHECK(split.vertex_count() == 8);
    REQUIRE(is_homology_sphere(split, Field::GF2));
    CHECK(gamma_of(split) == IntPolynomial{1, 2});
    CHECK(recognize_family(split).kind == FamilyKind::Upsilon2);

    // contracting the fresh pair {v, n} undoes the split
    CHECK(contract_edge(split, Face::of({5, 7})) == kSuspC5);

    // J must be a codimension-1 equator of the link
    CHECK_THROWS_AS(vertex_split(kSuspC5, 5, Face::full(5)), JNotEquator);
    CHECK_THROWS_AS(vertex_split(kSuspC5, 5, Face::of({1, 2})), JNotEquator);

    // subdivision is the vertex split along an edge link, up to isomorphism
    for (Face e : kOct.faces_by_card()[2]) {
        const int a = e.vertices()[0];
        const auto by_subdivision = edge_subdivision(kOct, e);
        const auto by_split = vertex_split(kOct, a, Face(kOct.neighbors(a) & kOct.neighbors(e.vertices()[1])));
        CHECK(is_isomorphic(by_subdivision, by_split));
    }
}

TEST_CASE("extract_join_cycle") {
    const auto res = extract_join_cycle(kJ55);
    REQUIRE(res.has_value());
    CHECK(res->second == 5);
    CHECK(is_isomorphic(res->first.complex, kC5));

    const auto res2 = extract_join_cycle(join(cycle_complex(5), cycle_complex(6)));
    REQUIRE(res2.has_value());
    const bool c5_factor = is_isomorphic(res2->first.complex, kC5) && res2->second == 6;
    const bool c6_factor = is_isomorphic(res2->first.complex, cycle_complex(6)) && res2->second == 5;
    CHECK((c5_factor || c6_factor));

    CHECK(!extract_join_cycle(kOct).has_value());  // polar size 1
}

TEST_CASE("disjoint facets") {
    const auto pair = disjoint_facets(kC5);
    REQUIRE(pair.has_value());
    CHECK(!pair->first.intersects(pair->second));

    for (int v = 0; v < 5; ++v) {
        const auto avoided = disjoint_facets(kC5, v);
        REQUIRE(avoided.has_value());
        CHECK(!avoided->first.contains(v));
        CHECK(!avoided->second.contains(v));
    }

    const auto oct_pair = disjoint_facets(kOct);
    REQUIRE(oct_pair.has_value());
    CHECK(oct_pair->first.unite(oct_pair->second).card() == 6);  // opposite triangles

    CHECK_THROWS_AS(disjoint_facets(kSuspC5, 0), HypothesisViolated);
}

TEST_CASE("vertex splits along link equators round-trip over the census") {
    int splits = 0;
    for (int n = 4; n <= 7; ++n) {
        EnumerationTask t;
        t.n = n;
        for (const auto& entry : enumerate_flag_spheres(t)) {
            const auto& c = entry.complex;
            for (int v = 0; v < c.vertex_count(); ++v) {
                const auto lk = link(c, Face().with(v));
                for (Face j_local : find_equators(lk.complex)) {
                    const auto split = vertex_split(c, v, lk.push(j_local));
                    CHECK(contract_edge(split, Face::of({v, c.vertex_count()})) == c);
                    CHECK(is_homology_sphere(split, Field::GF2));
                    ++splits;
                }
            }
        }
    }
    CHECK(splits > 30);
}

TEST_CASE("shared complexes are safe to certify across threads") {
    const auto c = join(cycle_complex(5), cycle_complex(5));
    auto run = [&c] { return find_equators(c); };
    std::vector<std::future<std::vector<Face>>> futures;
    for (int i = 0; i < 4; ++i) futures.push_back(std::async(std::launch::async, run));
    const auto reference = find_equators(c);
    for (auto& f : futures) CHECK(f.get() == reference);
}

TEST_CASE("corollary 4.3 window at constructed scale") {
    // polar size >= 3 needs every join factor to contribute 3+ antipodes
    for (const auto& c : {join(cycle_complex(6), cycle_complex(6)), join(cycle_complex(7), cycle_complex(7)),
                          join(cycle_complex(6), cycle_complex(7))}) {
        const int pi = antipode_profile(c).polar_size;
        const int d = c.dim() + 1;
        const int ell = c.vertex_count() - 2 * d;
        REQUIRE(pi >= 3);
        REQUIRE(d >= 3);
        const auto g = gamma_of(c);
        for (int jdx = ell - pi + 2; jdx <= g.degree(); ++jdx) CHECK(g[jdx] == 0);
    }
}
