#include "flagsphere/homology.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#include "flagsphere/canonical.hpp"
#include "flagsphere/errors.hpp"

namespace flagsphere {

using boost::multiprecision::cpp_int;

const char* field_name(Field f) { return f == Field::GF2 ? "gf2" : "q"; }

namespace {

int gf2_rank(std::vector<std::vector<std::uint64_t>> rows) {
    std::vector<std::pair<int, std::size_t>> pivots;  // (bit position, row index into `rows`)
    int rank = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto& row = rows[r];
        while (true) {
            int lead = -1;
            for (std::size_t w = 0; w < row.size(); ++w)
                if (row[w]) { lead = static_cast<int>(w * 64) + std::countr_zero(row[w]); break; }
            if (lead < 0) break;
            auto it = std::find_if(pivots.begin(), pivots.end(), [&](auto& p) { return p.first == lead; });
            if (it == pivots.end()) {
                pivots.emplace_back(lead, r);
                ++rank;
                break;
            }
            const auto& prow = rows[it->second];
            for (std::size_t w = 0; w < row.size(); ++w) row[w] ^= prow[w];
        }
    }
    return rank;
}

// Fraction-free (Bareiss) elimination; divisions are exact and checked.
int integer_rank(std::vector<std::vector<cpp_int>> m) {
    if (m.empty()) return 0;
    const std::size_t nrows = m.size(), ncols = m[0].size();
    cpp_int prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t piv = rank;
        while (piv < nrows && m[piv][col] == 0) ++piv;
        if (piv == nrows) continue;
        std::swap(m[rank], m[piv]);
        const cpp_int p = m[rank][col];
        for (std::size_t i = rank + 1; i < nrows; ++i) {
            for (std::size_t j = col + 1; j < ncols; ++j) {
                cpp_int num = m[i][j] * p - m[i][col] * m[rank][j];
                cpp_int q, r;
                boost::multiprecision::divide_qr(num, prev, q, r);
                if (r != 0) throw Error("fraction-free elimination: inexact division");
                m[i][j] = q;
            }
            m[i][col] = 0;
        }
        prev = p;
        ++rank;
    }
    return static_cast<int>(rank);
}

int boundary_rank(const std::vector<Face>& rows, const std::vector<Face>& cols, Field field) {
    if (rows.empty() || cols.empty()) return 0;
    std::unordered_map<std::uint64_t, std::size_t> col_index;
    col_index.reserve(cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) col_index.emplace(cols[i].bits, i);

    if (field == Field::GF2) {
        const std::size_t words = (cols.size() + 63) / 64;
        std::vector<std::vector<std::uint64_t>> mat;
        mat.reserve(rows.size());
        for (Face f : rows) {
            std::vector<std::uint64_t> row(words, 0);
            for_each_vertex(f, [&](int v) {
                const std::size_t i = col_index.at(f.without(v).bits);
                row[i / 64] ^= std::uint64_t{1} << (i % 64);
            });
            mat.push_back(std::move(row));
        }
        return gf2_rank(std::move(mat));
    }

    std::vector<std::vector<cpp_int>> mat(rows.size(), std::vector<cpp_int>(cols.size(), 0));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        int pos = 0;
        for_each_vertex(rows[r], [&](int v) {
            const std::size_t i = col_index.at(rows[r].without(v).bits);
            mat[r][i] = (pos % 2 == 0) ? 1 : -1;
            ++pos;
        });
    }
    return integer_rank(std::move(mat));
}

}  // namespace

HomologyProfile betti_numbers(const SimplicialComplex& c, Field field) {
    const auto& buckets = c.faces_by_card();
    const int top = static_cast<int>(buckets.size()) - 1;  // = dim + 1
    std::vector<int> rank(static_cast<std::size_t>(top) + 2, 0);
    for (int k = 1; k <= top; ++k)
        rank[static_cast<std::size_t>(k)] =
            boundary_rank(buckets[static_cast<std::size_t>(k)], buckets[static_cast<std::size_t>(k - 1)], field);

    HomologyProfile p;
    p.field = field;
    p.reduced_betti.resize(static_cast<std::size_t>(top) + 1);
    for (int k = 0; k <= top; ++k)
        p.reduced_betti[static_cast<std::size_t>(k)] =
            static_cast<std::int64_t>(buckets[static_cast<std::size_t>(k)].size()) - rank[static_cast<std::size_t>(k)] -
            rank[static_cast<std::size_t>(k) + 1];
    return p;
}

bool has_sphere_profile(const HomologyProfile& p, int sphere_dim) {
    for (int i = 0; i < static_cast<int>(p.reduced_betti.size()); ++i) {
        const int dim = i - 1;
        const std::int64_t want = (dim == sphere_dim) ? 1 : 0;
        if (p.reduced_betti[static_cast<std::size_t>(i)] != want) return false;
    }
    // a profile too short to reach sphere_dim has betti(sphere_dim) = 0
    return sphere_dim + 1 < static_cast<int>(p.reduced_betti.size());
}

bool is_acyclic(const SimplicialComplex& c, Field field) {
    return betti_numbers(c, field).all_zero();
}

namespace {

bool pseudomanifold_with(const SimplicialComplex& c, bool closed) {
    if (!c.pure()) return false;
    const int d = c.dim() + 1;
    if (d == 0) return true;
    const auto& ridges = c.faces_by_card()[static_cast<std::size_t>(d) - 1];
    for (Face r : ridges) {
        int count = 0;
        for (Face f : c.facets())
            if (r.subset_of(f)) ++count;
        if (count != 2 && (closed || count != 1)) return false;
    }
    return true;
}

}  // namespace

bool is_pseudomanifold(const SimplicialComplex& c) { return pseudomanifold_with(c, false); }
bool is_closed_pseudomanifold(const SimplicialComplex& c) { return pseudomanifold_with(c, true); }

namespace {

struct SphereMemo {
    // exact facet-list key: n followed by facet bitmasks
    std::map<std::vector<std::uint64_t>, bool> exact;
    std::map<std::vector<std::uint8_t>, bool> canon;
};

std::vector<std::uint64_t> exact_key(const SimplicialComplex& c) {
    std::vector<std::uint64_t> key;
    key.reserve(c.facets().size() + 1);
    key.push_back(static_cast<std::uint64_t>(c.vertex_count()));
    for (Face f : c.facets()) key.push_back(f.bits);
    return key;
}

bool sphere_rec(const SimplicialComplex& c, Field field, SphereMemo& memo) {
    if (c.dim() < 0) return true;  // the empty complex is the (-1)-sphere
    if (!c.pure()) return false;

    const auto key = exact_key(c);
    if (auto it = memo.exact.find(key); it != memo.exact.end()) return it->second;

    std::vector<std::uint8_t> canon;
    const bool flag = is_flag(c);
    if (flag) {
        canon = canonical_form(c);
        if (auto it = memo.canon.find(canon); it != memo.canon.end()) {
            memo.exact.emplace(key, it->second);
            return it->second;
        }
    }

    bool ok = has_sphere_profile(betti_numbers(c, field), c.dim());
    if (ok) {
        for (int v = 0; v < c.vertex_count() && ok; ++v)
            ok = sphere_rec(link(c, Face().with(v)).complex, field, memo);
    }
    memo.exact.emplace(std::move(key), ok);
    if (flag) memo.canon.emplace(std::move(canon), ok);
    return ok;
}

}  // namespace

bool is_homology_sphere(const SimplicialComplex& c, Field field) {
    SphereMemo memo;
    return sphere_rec(c, field, memo);
}

std::optional<MappedComplex> homology_ball_boundary(const SimplicialComplex& c, Field field) {
    if (c.dim() < 0 || !c.pure()) return std::nullopt;
    const int d = c.dim() + 1;

    std::unordered_set<std::uint64_t> boundary;
    bool empty_face_on_boundary = false;
    for (const auto& bucket : c.faces_by_card()) {
        for (Face f : bucket) {
            const auto profile = betti_numbers(link(c, f).complex, field);
            if (has_sphere_profile(profile, d - 1 - f.card())) continue;
            if (!profile.all_zero()) return std::nullopt;
            if (f.is_empty()) empty_face_on_boundary = true;
            else boundary.insert(f.bits);
        }
    }
    if (!empty_face_on_boundary) return std::nullopt;  // links of a ball's interior faces cannot cover ∅

    // the acyclic-link faces must form a subcomplex
    for (std::uint64_t bits : boundary) {
        Face f(bits);
        bool closed = true;
        for_each_vertex(f, [&](int v) {
            Face sub = f.without(v);
            closed = closed && (sub.is_empty() || boundary.count(sub.bits) > 0);
        });
        if (!closed) return std::nullopt;
    }

    std::vector<Face> boundary_faces;
    boundary_faces.reserve(boundary.size());
    for (std::uint64_t bits : boundary) boundary_faces.emplace_back(bits);
    std::vector<Face> tmp(boundary_faces);
    MappedComplex b = [&] {
        // reuse induced-style re-indexing by building from the face list
        Face supp;
        for (Face f : tmp) supp = supp.unite(f);
        std::vector<int> to_old = supp.vertices();
        std::vector<int> old_to_new(static_cast<std::size_t>(c.vertex_count()), -1);
        for (std::size_t i = 0; i < to_old.size(); ++i) old_to_new[static_cast<std::size_t>(to_old[i])] = static_cast<int>(i);
        std::vector<Face> compressed;
        for (Face f : tmp) {
            Face g;
            for_each_vertex(f, [&](int v) { g = g.with(old_to_new[static_cast<std::size_t>(v)]); });
            compressed.push_back(g);
        }
        return MappedComplex{SimplicialComplex::from_facets(static_cast<int>(to_old.size()), std::move(compressed)),
                             std::move(to_old)};
    }();

    if (b.complex.dim() != d - 2) return std::nullopt;
    if (!is_homology_sphere(b.complex, field)) return std::nullopt;
    return b;
}

bool is_homology_ball(const SimplicialComplex& c, Field field) {
    return homology_ball_boundary(c, field).has_value();
}

}  // namespace flagsphere
