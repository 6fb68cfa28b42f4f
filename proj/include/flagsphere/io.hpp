#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "flagsphere/complex.hpp"
#include "flagsphere/gamma.hpp"
#include "flagsphere/structure.hpp"

namespace flagsphere {

/// Facet file: optional first line `#n=<count>`, then one facet per non-empty
/// line as whitespace-separated non-negative integer labels. Without the
/// header, labels are densified on load; original_labels[new] = input label.
/// With the header, labels must already lie in [0, n) and isolated vertices
/// become singleton facets.
struct LoadedComplex {
    SimplicialComplex complex;
    std::vector<long long> original_labels;
};

LoadedComplex read_facet_file(std::istream& in);
LoadedComplex read_facet_file(const std::string& path);

/// Canonical output: `#n=<count>` then facets in lexicographic order.
void write_facet_file(std::ostream& out, const SimplicialComplex& c);
void write_facet_file(const std::string& path, const SimplicialComplex& c);

nlohmann::ordered_json to_json(const IntPolynomial& p);
nlohmann::ordered_json to_json(const GammaReport& rep);
nlohmann::ordered_json to_json(const FamilyDescriptor& d);

std::string hex_encode(const std::vector<std::uint8_t>& bytes);

}  // namespace flagsphere
