#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "flagsphere/errors.hpp"

namespace flagsphere {

inline constexpr int kMaxVertices = 64;

/// A face: a set of vertex indices packed into a 64-bit mask.
/// Vertex i is a member iff bit i is set, so faces are capped at 64 vertices.
struct Face {
    std::uint64_t bits = 0;

    constexpr Face() = default;
    constexpr explicit Face(std::uint64_t mask) : bits(mask) {}

    static Face of(std::initializer_list<int> vs) {
        Face f;
        for (int v : vs) f = f.with(v);
        return f;
    }
    static Face from_vertices(const std::vector<int>& vs) {
        Face f;
        for (int v : vs) f = f.with(v);
        return f;
    }
    /// {0, 1, ..., n-1}
    static Face full(int n) {
        return n == 0 ? Face() : Face(~std::uint64_t{0} >> (kMaxVertices - n));
    }

    int card() const { return std::popcount(bits); }
    int dim() const { return card() - 1; }
    bool is_empty() const { return bits == 0; }
    bool contains(int v) const { return (bits >> v) & 1u; }
    bool subset_of(Face g) const { return (bits & ~g.bits) == 0; }
    bool intersects(Face g) const { return (bits & g.bits) != 0; }

    Face with(int v) const {
        if (v < 0 || v >= kMaxVertices) throw InvalidVertex("vertex index out of range: " + std::to_string(v));
        return Face(bits | (std::uint64_t{1} << v));
    }
    Face without(int v) const { return Face(bits & ~(std::uint64_t{1} << v)); }
    Face unite(Face g) const { return Face(bits | g.bits); }
    Face intersect(Face g) const { return Face(bits & g.bits); }
    Face minus(Face g) const { return Face(bits & ~g.bits); }

    /// Lowest vertex index; only valid on non-empty faces.
    int lowest() const { return std::countr_zero(bits); }

    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(card()));
        for (std::uint64_t m = bits; m; m &= m - 1) out.push_back(std::countr_zero(m));
        return out;
    }

    std::string str() const;

    friend bool operator==(Face, Face) = default;
};

/// Lexicographic order on the sorted vertex sequences ({} < {0} < {0,1} < {0,2} < {1}).
bool lex_less(Face a, Face b);

struct FaceLexLess {
    bool operator()(Face a, Face b) const { return lex_less(a, b); }
};

/// Calls fn(v) for every vertex of f in increasing order.
template <typename F>
void for_each_vertex(Face f, F&& fn) {
    for (std::uint64_t m = f.bits; m; m &= m - 1) fn(std::countr_zero(m));
}

/// Calls fn(Face) for every subset of f, the empty face and f included.
template <typename F>
void for_each_subset(Face f, F&& fn) {
    std::uint64_t s = f.bits;
    while (true) {
        fn(Face(s));
        if (s == 0) break;
        s = (s - 1) & f.bits;
    }
}

}  // namespace flagsphere
