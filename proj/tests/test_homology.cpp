#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "flagsphere/homology.hpp"
#include "flagsphere/canonical.hpp"
#include "flagsphere/structure.hpp"
#include "oracles.hpp"

using namespace flagsphere;

namespace {

SimplicialComplex random_complex(std::mt19937& rng, int max_n = 7) {
    const int n = 1 + static_cast<int>(rng() % max_n);
    std::vector<Face> facets;
    const int count = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < count; ++i) facets.push_back(Face(rng() & ((std::uint64_t{1} << n) - 1)));
    return SimplicialComplex::from_facets(n, std::move(facets));
}

std::int64_t reduced_euler_from_f(const SimplicialComplex& c) {
    std::int64_t chi = 0;
    const auto f = c.f_vector();
    for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 == 1) ? f[k] : -f[k];
    return chi;
}

std::int64_t reduced_euler_from_betti(const HomologyProfile& p) {
    std::int64_t chi = 0;
    for (std::size_t i = 0; i < p.reduced_betti.size(); ++i)
        chi += (i % 2 == 1) ? p.reduced_betti[i] : -p.reduced_betti[i];
    return chi;
}

}  // namespace

TEST_CASE("betti numbers of named complexes") {
    for (int d = 1; d <= 6; ++d) {
        const auto p = betti_numbers(octahedral_sphere(d), Field::GF2);
        CHECK(has_sphere_profile(p, d - 1));
    }
    const auto s0 = betti_numbers(s0_complex(), Field::GF2);
    CHECK(s0.betti(0) == 1);
    CHECK(s0.betti(-1) == 0);

    CHECK(is_acyclic(simplex_complex(3), Field::GF2));
    CHECK(betti_numbers(SimplicialComplex(), Field::GF2).betti(-1) == 1);
    CHECK(!is_acyclic(SimplicialComplex(), Field::GF2));
    CHECK(!is_acyclic(s0_complex(), Field::GF2));
    CHECK(is_acyclic(join(point_complex(), cycle_complex(6)), Field::GF2));  // cone
}

TEST_CASE("euler-poincare holds on random complexes, both fields") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 60; ++trial) {
        const auto c = random_complex(rng);
        for (Field f : {Field::GF2, Field::Rational})
            CHECK(reduced_euler_from_f(c) == reduced_euler_from_betti(betti_numbers(c, f)));
    }
}

TEST_CASE("is_homology_sphere") {
    CHECK(is_homology_sphere(cycle_complex(5), Field::GF2));
    CHECK(is_homology_sphere(octahedral_sphere(3), Field::GF2));
    CHECK(is_homology_sphere(suspension(cycle_complex(5)), Field::GF2));
    CHECK(is_homology_sphere(join(cycle_complex(5), cycle_complex(5)), Field::GF2));
    CHECK(is_homology_sphere(SimplicialComplex(), Field::GF2));  // the (-1)-sphere
    CHECK(is_homology_sphere(s0_complex(), Field::GF2));

    CHECK(!is_homology_sphere(simplex_complex(3), Field::GF2));
    CHECK(!is_homology_sphere(point_complex(), Field::GF2));

    // disjoint union of two octahedra: betti_{d-1} = 2
    const auto oct = octahedral_sphere(3);
    std::vector<Face> facets;
    for (Face f : oct.facets()) {
        facets.push_back(f);
        facets.push_back(Face(f.bits << 6));
    }
    CHECK(!is_homology_sphere(SimplicialComplex::from_facets(12, facets), Field::GF2));

    for (int d = 1; d <= 6; ++d) CHECK(is_homology_sphere(octahedral_sphere(d), Field::GF2));
}

TEST_CASE("pseudomanifolds") {
    CHECK(is_pseudomanifold(cycle_complex(5)));
    CHECK(is_closed_pseudomanifold(cycle_complex(5)));
    const auto path = SimplicialComplex::from_facets(3, {Face::of({0, 1}), Face::of({1, 2})});
    CHECK(is_pseudomanifold(path));
    CHECK(!is_closed_pseudomanifold(path));
    // three triangles sharing an edge
    const auto fan = SimplicialComplex::from_facets(
        5, {Face::of({0, 1, 2}), Face::of({0, 1, 3}), Face::of({0, 1, 4})});
    CHECK(!is_pseudomanifold(fan));
}

TEST_CASE("homology balls") {
    const auto path = SimplicialComplex::from_facets(3, {Face::of({0, 1}), Face::of({1, 2})});
    const auto boundary = homology_ball_boundary(path, Field::GF2);
    REQUIRE(boundary.has_value());
    CHECK(boundary->complex == s0_complex());
    CHECK(boundary->to_old == std::vector<int>{0, 2});

    CHECK(is_homology_ball(point_complex(), Field::GF2));
    CHECK(is_homology_ball(simplex_complex(4), Field::GF2));
    CHECK(!is_homology_ball(cycle_complex(5), Field::GF2));
    CHECK(!is_homology_ball(SimplicialComplex(), Field::GF2));

    // hemisphere of the octahedron along an equatorial 4-cycle
    const auto oct = octahedral_sphere(3);
    const Face equator = Face::of({2, 3, 4, 5});
    REQUIRE(is_equator(oct, equator));
    const auto halves = hemispheres(oct, equator);
    for (const auto& h : {halves.plus, halves.minus}) {
        const auto b = homology_ball_boundary(h.complex, Field::GF2);
        REQUIRE(b.has_value());
        CHECK(is_isomorphic(b->complex, cycle_complex(4)));
    }
}

TEST_CASE("suspension shifts homology") {
    std::mt19937 rng(6021);
    for (int trial = 0; trial < 25; ++trial) {
        const auto c = random_complex(rng, 6);
        const auto pc = betti_numbers(c, Field::GF2);
        const auto ps = betti_numbers(suspension(c), Field::GF2);
        for (int dim = -1; dim <= ps.reduced_betti.size() + 1; ++dim)
            CHECK(ps.betti(dim) == pc.betti(dim - 1));
    }
}

TEST_CASE("rational-mode elimination carries correct boundary signs") {
    for (int k = 2; k <= 5; ++k) CHECK(is_acyclic(simplex_complex(k), Field::Rational));
    for (int d = 1; d <= 5; ++d)
        CHECK(has_sphere_profile(betti_numbers(octahedral_sphere(d), Field::Rational), d - 1));
    CHECK(is_homology_sphere(join(cycle_complex(5), cycle_complex(6)), Field::Rational));
}

TEST_CASE("the projective plane separates the two fields") {
    // minimal 6-vertex triangulation of RP²
    const auto rp2 = SimplicialComplex::from_facets(
        6, {Face::of({0, 1, 2}), Face::of({0, 1, 3}), Face::of({0, 2, 4}), Face::of({0, 3, 5}),
            Face::of({0, 4, 5}), Face::of({1, 2, 5}), Face::of({1, 3, 4}), Face::of({1, 4, 5}),
            Face::of({2, 3, 4}), Face::of({2, 3, 5})});
    CHECK(is_closed_pseudomanifold(rp2));
    const auto gf2 = betti_numbers(rp2, Field::GF2);
    CHECK(gf2.betti(1) == 1);
    CHECK(gf2.betti(2) == 1);
    CHECK(is_acyclic(rp2, Field::Rational));  // H₁ is pure 2-torsion
    CHECK(!is_homology_sphere(rp2, Field::GF2));
    CHECK(!is_homology_sphere(rp2, Field::Rational));
}

TEST_CASE("GF(2) and rational certifications compared (logged, not asserted)") {
    std::mt19937 rng(8080);
    int divergences = 0, compared = 0;
    std::vector<SimplicialComplex> pool{cycle_complex(5), octahedral_sphere(3), suspension(cycle_complex(6)),
                                        simplex_complex(4), s0_complex()};
    for (int trial = 0; trial < 40; ++trial) pool.push_back(random_complex(rng, 7));
    for (const auto& c : pool) {
        ++compared;
        if (is_homology_sphere(c, Field::GF2) != is_homology_sphere(c, Field::Rational)) {
            ++divergences;
            MESSAGE("field divergence on a complex with " << c.vertex_count() << " vertices");
        }
    }
    CHECK(compared > 40);
    MESSAGE("gf2-vs-rational certification divergences: " << divergences);
}
