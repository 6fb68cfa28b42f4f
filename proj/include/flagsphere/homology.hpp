#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flagsphere/complex.hpp"

namespace flagsphere {

enum class Field { GF2, Rational };

const char* field_name(Field f);

/// Reduced Betti numbers; index i holds the Betti number of dimension i-1,
/// so index 0 is the empty-face (augmentation) slot and the empty complex
/// has profile (1).
struct HomologyProfile {
    Field field = Field::GF2;
    std::vector<std::int64_t> reduced_betti;

    std::int64_t betti(int dim) const {
        const int i = dim + 1;
        return (i >= 0 && i < static_cast<int>(reduced_betti.size())) ? reduced_betti[static_cast<std::size_t>(i)] : 0;
    }
    bool all_zero() const {
        for (auto b : reduced_betti)
            if (b != 0) return false;
        return true;
    }
    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

/// Boundary-matrix ranks on the augmented chain complex, faces ordered
/// lexicographically per cardinality.
HomologyProfile betti_numbers(const SimplicialComplex& c, Field field);

/// True iff the profile is that of a sphere of the given dimension
/// (sphere_dim = -1 means the empty complex's profile).
bool has_sphere_profile(const HomologyProfile& p, int sphere_dim);

/// All reduced Betti numbers vanish. The empty complex is not acyclic.
bool is_acyclic(const SimplicialComplex& c, Field field);

/// Pure and every (d-1)-element face lies in 1 or 2 facets.
bool is_pseudomanifold(const SimplicialComplex& c);
/// Pure and every (d-1)-element face lies in exactly 2 facets.
bool is_closed_pseudomanifold(const SimplicialComplex& c);

/// Pure, and every face link (the empty face included) has the reduced
/// homology of a sphere of the complementary dimension. The empty complex
/// certifies as the (-1)-sphere. Link certifications are memoized within the
/// call tree, by exact facet list and (for flag links) by canonical form.
bool is_homology_sphere(const SimplicialComplex& c, Field field);

/// Homology-ball certification; on success returns the boundary subcomplex
/// (the faces with acyclic link), densely re-indexed with its vertex map
/// into c. nullopt when c is not a homology ball.
std::optional<MappedComplex> homology_ball_boundary(const SimplicialComplex& c, Field field);

bool is_homology_ball(const SimplicialComplex& c, Field field);

}  // namespace flagsphere
