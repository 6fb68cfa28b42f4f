#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "flagsphere/complex.hpp"
#include "flagsphere/homology.hpp"
#include "flagsphere/polynomial.hpp"

namespace flagsphere {

/// Vertices w with {v, w} a missing edge, in increasing order.
std::vector<int> antipodes(const SimplicialComplex& c, int v);

struct AntipodeProfile {
    std::vector<int> iota;  // antipode count per vertex
    int polar_size = 0;     // min over vertices; 0 for the empty complex
};
AntipodeProfile antipode_profile(const SimplicialComplex& c);

/// For a certified flag homology sphere on 2d + ℓ vertices: checks
/// 1 <= π <= ℓ+1 and γ1(lk(v)) == ℓ - ι(v) + 1 for every vertex.
bool polar_size_bounds_check(const SimplicialComplex& c);

/// Pairs {u, w} where each is the unique antipode of the other.
std::vector<std::array<int, 2>> suspension_pairs(const SimplicialComplex& c);
bool is_suspension(const SimplicialComplex& c);

struct DesuspensionResult {
    SimplicialComplex core;
    int m = 0;  // suspension pairs stripped
};
/// Strip suspension pairs until none remain; the core is independent of the
/// stripping order (the pairs are pairwise disjoint).
DesuspensionResult desuspend_core(const SimplicialComplex& c);

/// vertex_set spans an induced codimension-1 homology sphere of c.
bool is_equator(const SimplicialComplex& c, Face vertex_set, Field field = Field::GF2);

/// All equator vertex sets, smallest-first then lexicographic. Exhaustive
/// subset scan with pruning: |S| >= 2(d-1), induced complex pure of
/// dimension d-2, complement of size >= 2; survivors are fully certified.
std::vector<Face> find_equators(const SimplicialComplex& c, Field field = Field::GF2);

struct HemispherePair {
    MappedComplex plus;   // holds the smallest vertex outside the equator
    MappedComplex minus;
};
/// Split c along an equator: deleting the equator leaves exactly two
/// connected components (ComponentCountNotTwo signals a certification bug);
/// each hemisphere deletes the opposite component. Throws JNotEquator when
/// the vertex set is not an equator.
HemispherePair hemispheres(const SimplicialComplex& c, Face equator, Field field = Field::GF2);

/// Maximal join factorization of a flag complex via the connected components
/// of its missing-edge graph, ordered by smallest vertex. The empty complex
/// factors into nothing; a single factor means join-irreducible.
std::vector<MappedComplex> join_factorization(const SimplicialComplex& c);

enum class FamilyKind { OctahedralJoinC5Power, Upsilon1, Upsilon2, Other };
const char* family_kind_name(FamilyKind k);

struct FamilyWitness {
    std::vector<std::array<int, 2>> suspension_pairs;  // S⁰ join factors
    std::vector<std::array<int, 5>> c5_blocks;         // in cyclic order
    std::optional<std::array<int, 6>> c6_block;        // in cyclic order
    /// For Upsilon2: contracting {p, q} in the input yields Σ^m ⋆^{ℓ-1} C5,
    /// and subdividing that base at {s, z} (labels of the contracted complex,
    /// s a suspension vertex) rebuilds the input up to isomorphism. Block
    /// data above then refers to the contracted complex.
    struct Subdivision {
        int p = 0, q = 0, s = 0, z = 0;
    };
    std::optional<Subdivision> subdivision;
};

struct FamilyDescriptor {
    FamilyKind kind = FamilyKind::Other;
    int m = 0, ell = 0;
    FamilyWitness witness;
};

/// Recognize Σ^m ⋆^ℓ C5 (join factors all S⁰ or C5), Υ1 (factors S⁰/C5 plus
/// exactly one C6) or Υ2 (an edge-subdivision of Σ^m ⋆^{ℓ-1} C5 at an edge
/// adjacent to a suspension vertex, found by exhausting contractible edges).
/// Priority on overlap: octahedral family, then Υ1, then Υ2. Every claim is
/// re-checkable from the witness; see verify_family.
FamilyDescriptor recognize_family(const SimplicialComplex& c);

/// Canonically labeled instances: C5 blocks first (0..4, 5..9, ...), then a
/// C6 block for Υ1, then suspension pairs; Υ2 subdivides Σ^m ⋆^{ℓ-1} C5 at
/// the edge {first suspension vertex, vertex 0}. Υ1 needs ell >= 2;
/// Υ2 needs m >= 1 and ell >= 2.
SimplicialComplex construct_family(FamilyKind kind, int m, int ell);

/// Re-assemble the complex the descriptor claims and compare against c:
/// exact facet-level equality from the witness blocks for the join families,
/// contraction + subdivision + isomorphism for Υ2. Other never verifies.
bool verify_family(const SimplicialComplex& c, const FamilyDescriptor& d);

/// If a minimal-antipode vertex of c (π > 1) has a suspension link ΣΓ,
/// return Γ (with its vertex map into c) and the cycle length π + 3, after
/// verifying c ≅ Γ ⋆ C_{π+3}. nullopt when π <= 1 or no such vertex exists.
std::optional<std::pair<MappedComplex, int>> extract_join_cycle(const SimplicialComplex& c);

/// Two disjoint facets, neither containing `avoid` when given; facet pairs
/// scanned in canonical order. Throws HypothesisViolated if avoid is given
/// and c is a suspension.
std::optional<std::pair<Face, Face>> disjoint_facets(const SimplicialComplex& c,
                                                     std::optional<int> avoid = std::nullopt);

}  // namespace flagsphere
