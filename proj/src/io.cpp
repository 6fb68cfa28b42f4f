#include "flagsphere/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "flagsphere/errors.hpp"

namespace flagsphere {

LoadedComplex read_facet_file(std::istream& in) {
    std::vector<std::vector<long long>> raw;
    std::string line;
    long long declared_n = -1;
    bool first = true;
    while (std::getline(in, line)) {
        if (first && line.rfind("#n=", 0) == 0) {
            declared_n = std::stoll(line.substr(3));
            first = false;
            continue;
        }
        first = false;
        if (!line.empty() && line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<long long> labels;
        long long v;
        while (ls >> v) {
            if (v < 0) throw InvalidVertex("negative vertex label in facet file");
            labels.push_back(v);
        }
        std::string rest;
        if (ls.clear(), ls >> rest) throw Error("non-numeric token in facet file: " + rest);
        if (!labels.empty()) raw.push_back(std::move(labels));
    }

    LoadedComplex out;
    if (declared_n >= 0) {
        if (declared_n > kMaxVertices) throw CapExceeded("facet file declares more than 64 vertices");
        std::vector<Face> facets;
        for (const auto& labels : raw) {
            Face f;
            for (long long v : labels) {
                if (v >= declared_n) throw InvalidVertex("label " + std::to_string(v) + " exceeds declared #n");
                f = f.with(static_cast<int>(v));
            }
            facets.push_back(f);
        }
        out.complex = SimplicialComplex::from_facets(static_cast<int>(declared_n), std::move(facets));
        out.original_labels.resize(static_cast<std::size_t>(declared_n));
        for (long long v = 0; v < declared_n; ++v) out.original_labels[static_cast<std::size_t>(v)] = v;
        return out;
    }

    std::map<long long, int> dense;
    for (const auto& labels : raw)
        for (long long v : labels) dense.emplace(v, 0);
    if (static_cast<int>(dense.size()) > kMaxVertices) throw CapExceeded("facet file uses more than 64 vertices");
    int next = 0;
    for (auto& [label, idx] : dense) {
        idx = next++;
        out.original_labels.push_back(label);
    }
    std::vector<Face> facets;
    for (const auto& labels : raw) {
        Face f;
        for (long long v : labels) f = f.with(dense[v]);
        facets.push_back(f);
    }
    out.complex = SimplicialComplex::from_facets(next, std::move(facets));
    return out;
}

LoadedComplex read_facet_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open facet file: " + path);
    return read_facet_file(in);
}

void write_facet_file(std::ostream& out, const SimplicialComplex& c) {
    out << "#n=" << c.vertex_count() << "\n";
    for (Face f : c.facets()) {
        bool first = true;
        for_each_vertex(f, [&](int v) {
            if (!first) out << ' ';
            out << v;
            first = false;
        });
        out << "\n";
    }
}

void write_facet_file(const std::string& path, const SimplicialComplex& c) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file: " + path);
    write_facet_file(out, c);
}

nlohmann::ordered_json to_json(const IntPolynomial& p) {
    return nlohmann::ordered_json(p.coeffs());
}

nlohmann::ordered_json to_json(const GammaReport& rep) {
    nlohmann::ordered_json j;
    j["d"] = rep.d;
    j["f"] = to_json(rep.f);
    j["h"] = to_json(rep.h);
    j["gamma"] = to_json(rep.gamma);
    j["alpha"] = rep.alpha;
    j["palindromic"] = rep.palindromic;
    return j;
}

nlohmann::ordered_json to_json(const FamilyDescriptor& d) {
    nlohmann::ordered_json j;
    j["kind"] = family_kind_name(d.kind);
    j["m"] = d.m;
    j["ell"] = d.ell;
    nlohmann::ordered_json w;
    w["suspension_pairs"] = d.witness.suspension_pairs;
    w["c5_blocks"] = d.witness.c5_blocks;
    if (d.witness.c6_block) w["c6_block"] = *d.witness.c6_block;
    if (d.witness.subdivision) {
        const auto& s = *d.witness.subdivision;
        w["subdivision"] = {{"contract", {s.p, s.q}}, {"subdivide", {s.s, s.z}}};
    }
    j["witness"] = std::move(w);
    return j;
}

std::string hex_encode(const std::vector<std::uint8_t>& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out += digits[b >> 4];
        out += digits[b & 0xf];
    }
    return out;
}

}  // namespace flagsphere
