#pragma once

#include <string>
#include <vector>

#include "flagsphere/complex.hpp"
#include "flagsphere/enumerate.hpp"
#include "flagsphere/homology.hpp"

namespace flagsphere {

struct CorpusItem {
    std::string name;
    SimplicialComplex complex;
};

struct SuiteResult {
    std::string suite;
    int checked = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;  // observational, never failing
    bool report_only = false;
    bool pass() const { return failures.empty(); }
};

/// Every flag homology sphere with 2..max_n vertices, named by census order.
std::vector<CorpusItem> census_corpus(int max_n, Field field = Field::GF2);

/// Constructed families: cycles, octahedral spheres, Σ^m ⋆^ℓ C5, Υ1, Υ2 and
/// assorted joins, up to the given vertex count (default 14; a couple of
/// 15-vertex joins are included when allowed by the bound).
std::vector<CorpusItem> constructed_corpus(int max_vertices = 14);

/// Suites mirror the paper-statement checks; every item of the corpus must
/// be a certified flag homology sphere. Known ids:
///   lem2.4  contraction recursion and contraction flagness/sphereness
///   lem3.2  polar size bounds, suspension iff pi=1, pi=ell+1 iff octahedral
///   lem3.5  iota=2 vertices: antipodes span a contractible edge
///   lem3.9  disjoint facet pairs, with and without an avoided vertex
///   lem4.1  d >= 2*ell+1 forces a suspension
///   lem5.1  equator classification on the four stated families (self-contained)
///   thm3.8  gamma_2 <= C(ell,2), equality iff Σ^m ⋆^ℓ C5
///   thm4.2  gamma_j = 0 for j > ell, gamma_ell in {0,1}, =1 iff that family
///   cor4.3  pi >= 3, d >= 3: gamma_j = 0 for j >= ell-pi+2
///   thm5.2  gamma_{ell-1} in {0,1,2,ell}; =2 under gamma_ell=0 iff Υ1/Υ2
///   thm5.3  no corpus gamma-polynomial is in the forbidden family
///   dehn-sommerville  palindromicity and the h-from-gamma round trip
///   gamma-nonneg      report-only window 0 <= gamma_i <= C(ell, i)
SuiteResult run_suite(const std::string& id, const std::vector<CorpusItem>& corpus, Field field = Field::GF2);

const std::vector<std::string>& suite_ids();

}  // namespace flagsphere
