#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagsphere/canonical.hpp"
#include "flagsphere/complex.hpp"
#include "flagsphere/gamma.hpp"
#include "flagsphere/graph.hpp"
#include "flagsphere/homology.hpp"
#include "flagsphere/structure.hpp"

namespace flagsphere {

struct EnumerationTask {
    int n = 0;
    std::optional<int> dim_filter;  // sphere dimension d-1
    Field field = Field::GF2;
    int shard_index = 0;
    int shard_count = 1;
    int cap = 12;  // hard cap on n; candidates grow as 2^C(n,2)
};

struct CensusEntry {
    std::vector<std::uint8_t> canonical_form;
    int n = 0;
    int d = 0;  // dim + 1
    IntPolynomial gamma;
    int polar_size = 0;
    FamilyDescriptor family;
    SimplicialComplex complex;  // reconstruction data
};

/// All n-vertex graphs up to isomorphism, grown one vertex at a time with
/// canonical-form dedup per level. Levels are cached; n <= 9.
const std::vector<Graph>& graph_classes_up_to_iso(int n);

/// Run a graph through the census pipeline: cheap screens (degree,
/// connectivity), clique complex, purity, closed pseudomanifold, Euler
/// characteristic, then full homology certification. Returns the entry iff
/// the clique complex is a flag homology sphere (of the filtered dimension,
/// when given).
std::optional<CensusEntry> certify_graph_candidate(const Graph& g, Field field,
                                                   std::optional<int> dim_filter = std::nullopt);

/// Orderly generation: extend every (n-1)-vertex graph class by one vertex
/// with every neighborhood, certify, dedup by canonical form. Each flag
/// homology sphere on exactly n vertices appears exactly once up to
/// isomorphism. Shards partition the (parent, neighborhood) space.
std::vector<CensusEntry> enumerate_flag_spheres(const EnumerationTask& task);

/// Independent oracle: sweep all 2^C(n,2) graphs; n <= 8.
std::vector<CensusEntry> enumerate_flag_spheres_naive(const EnumerationTask& task);

/// Dedup by canonical form and order by (n, d, canonical form); shard merge
/// is associative and order-independent.
std::vector<CensusEntry> merge_census(std::vector<CensusEntry> entries);

std::string census_entry_to_ndjson(const CensusEntry& e);
CensusEntry census_entry_from_ndjson(const std::string& line);

}  // namespace flagsphere
