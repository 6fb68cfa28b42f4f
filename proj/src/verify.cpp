#include "flagsphere/verify.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "flagsphere/canonical.hpp"
#include "flagsphere/errors.hpp"
#include "flagsphere/gamma.hpp"
#include "flagsphere/structure.hpp"

namespace flagsphere {

std::vector<CorpusItem> census_corpus(int max_n, Field field) {
    std::vector<CorpusItem> out;
    for (int n = 2; n <= max_n; ++n) {
        EnumerationTask task;
        task.n = n;
        task.field = field;
        auto entries = enumerate_flag_spheres(task);
        int idx = 0;
        for (auto& e : entries)
            out.push_back({"census/n" + std::to_string(n) + "/" + std::to_string(idx++), std::move(e.complex)});
    }
    return out;
}

std::vector<CorpusItem> constructed_corpus(int max_vertices) {
    std::vector<CorpusItem> out;
    auto add = [&](const std::string& name, const SimplicialComplex& c) {
        if (c.vertex_count() > max_vertices) return;
        if (!is_flag(c) || !is_homology_sphere(c, Field::GF2))
            throw Error("constructed corpus item failed certification: " + name);
        out.push_back({name, c});
    };

    for (int k = 4; k <= 9; ++k) add("C" + std::to_string(k), cycle_complex(k));
    for (int d = 1; d <= 7; ++d) add("oct" + std::to_string(d), octahedral_sphere(d));
    for (int ell = 1; ell <= 3; ++ell)
        for (int m = 0; 2 * m + 5 * ell <= max_vertices; ++m)
            add("susp^" + std::to_string(m) + "(C5^*" + std::to_string(ell) + ")",
                construct_family(FamilyKind::OctahedralJoinC5Power, m, ell));
    for (int ell = 2; ell <= 3; ++ell)
        for (int m = 0; 2 * m + 5 * (ell - 2) + 6 <= max_vertices; ++m)
            add("upsilon1(" + std::to_string(m) + "," + std::to_string(ell) + ")",
                construct_family(FamilyKind::Upsilon1, m, ell));
    for (int ell = 2; ell <= 3; ++ell)
        for (int m = 1; 2 * m + 5 * (ell - 1) + 1 <= max_vertices; ++m)
            add("upsilon2(" + std::to_string(m) + "," + std::to_string(ell) + ")",
                construct_family(FamilyKind::Upsilon2, m, ell));
    add("C6*C6", join(cycle_complex(6), cycle_complex(6)));
    add("C5*C7", join(cycle_complex(5), cycle_complex(7)));
    add("C6*C7", join(cycle_complex(6), cycle_complex(7)));
    add("subdiv(oct3,{0,2})", edge_subdivision(octahedral_sphere(3), Face::of({0, 2})));
    add("subdiv(C5*C5,{0,1})", edge_subdivision(join(cycle_complex(5), cycle_complex(5)), Face::of({0, 1})));
    return out;
}

namespace {

std::int64_t gamma_at(const IntPolynomial& g, int i) { return i >= 0 ? g[i] : 0; }

std::string poly_str(const IntPolynomial& p) { return p.str(); }

struct ItemView {
    const CorpusItem& item;
    int n, d, ell;
    IntPolynomial gamma;
};

ItemView view_of(const CorpusItem& item) {
    const int d = item.complex.dim() + 1;
    return {item, item.complex.vertex_count(), d, item.complex.vertex_count() - 2 * d, gamma_of(item.complex)};
}

using SuiteFn = std::function<void(SuiteResult&, const std::vector<CorpusItem>&, Field)>;

void suite_lem24(SuiteResult& r, const std::vector<CorpusItem>& corpus, Field field) {
    for (const auto& item : corpus) {
        const auto v = view_of(item);
        const auto& edges = item.complex.faces_by_card().size() > 2 ? item.complex.faces_by_card()[2] : std::vector<Face>{};
        for (Face e : edges) {
            if (edge_in_induced_4cycle(item.complex, e)) continue;
            ++r.checked;
            const auto contracted = contract_edge(item.complex, e);
            const auto link_gamma = gamma_of(link(item.complex, e).complex);
            if (v.gamma != gamma_of(contracted).plus(link_gamma.shifted(1)))
                r.failures.push_back(item.name + ": contraction recursion failed at edge " + e.str());
            else if (!is_flag(contracted) || !is_homology_sphere(contracted, field))
                r.failures.push_back(item.name + ": contraction at " + e.str() + " is not a flag homology sphere");
        }
    }
}

void suite_lem32(SuiteResult& r, const std::vector<CorpusItem>& corpus, Field) {
    for (const auto& item : corpus) {
        const auto v = view_of(item);
        ++r.checked;
        const auto prof = antipode_profile(item.complex);
        if (!polar_size_bounds_check(item.complex)) {
            r.failures.push_back(item.name + ": polar size bounds or link-gamma1 identity failed");
            continue;
        }
        if (is_suspension(item.complex) != (prof.polar_size == 1))
            r.failures.push_back(item.name + ": suspension iff polar size 1 failed");
        if (v.d >= 3 && ((prof.polar_size == v.ell + 1) != (v.ell == 0)))
            r.failures.push_back(item.name + ": polar size = ell+1 iff octahedral failed");
    }
}

void suite_lem35(SuiteResult& r, const std::vector<CorpusItem>& corpus, Field) {
    for (const auto& item : corpus) {
        const auto v = view_of(item);
        const auto prof = antipode_profile(item.complex);
        for (int u = 0; u < v.n; ++u) {
            if (prof.iota[static_cast<std::size_t>(u)] != 2) continue;
            ++r.checked;
            const auto anti = antipodes(item.complex, u);
            const Face e = Face::of({anti[0], anti[1]});
            if (!item.complex.is_face(e)) {
                r.failures.push_back(item.name + ": antipodes of vertex " + std::to_string(u) + " span no edge");
                continue;
            }
            if (edge_in_induced_4cycle(item.complex, e)) {
                r.failures.push_back(item.name + ": antipode edge of vertex " + std::to_string(u) + " lies in an induced 4-cycle");
                continue;
            }
            const auto link_v = gamma_of(link(item.complex, Face().with(u)).complex);
            const auto link_e = gamma_of(link(item.complex, e).complex);
            if (v.gamma != link_v.plus(link_e.shifted(1)))
                r.failures.push_back(item.name + ": gamma = gamma(link v) + t gamma(link e) failed at vertex " + std::to_string(u));
        }
    }
}

void suite_lem39(SuiteResult& r, const std::vector<CorpusItem>& corpus, Field) {
    for (const auto& item : corpus) {
        const auto& fs = item.complex.facets();
        for (Face t1 : fs) {
            ++r.checked;
            bool found = false;
            for (Face t2 : fs)
                if (!t1.intersects(t2)) { found = true; break; }
            if (!found && item.complex.dim() >= 0)
                r.failures.push_back(item.name + ": facet " + t1.str() + " has no disjoint partner");
        }
        if (!is_suspension(item.complex)) {
            for (int s = 0; s < item.complex.vertex_count(); ++s) {
                ++r.checked;
                if (!disjoint_facets(item.complex, s))
                    r.failures.push_back(item.name + ": no disjoint facet pair avoiding vertex " + std::to_string(s));
            }
        }
    }
}

void suite_lem41(SuiteResult& r, const std::vector<CorpusItem>& corpus, Field) {
    for (const auto& item : corpus) {
        const auto v = view_of(item);
        ++r.checked;
        if (v.d >= 2 * v.ell + 1 && !is_suspension(item.complex))
            r.failures.push_back(item.name + ": d >= 2 ell + 1 but not a suspension");
    }
}

void suite_lem51(SuiteResult& r, const std::vector<CorpusItem>&, Field field) {
    const std::pair<int, int> params[] = {{1, 1}, {0, 2}, {2, 1}, {1, 2}};
    for (auto [m, k] : params) {
        const auto z = construct_family(FamilyKind::OctahedralJoinC5Power, m, k);
        for (Face s : find_equators(z, field)) {
            ++r.checked;
            const auto eq = induced_subcomplex(z, s).complex;
            const bool form_a = m >= 1 && is_isomorphic(eq, construct_family(FamilyKind::OctahedralJoinC5Power, m - 1, k));
            const bool form_b = k >= 1 && is_isomorphic(eq, construct_family(FamilyKind::OctahedralJoinC5Power, m + 1, k - 1));
            if (!form_a && !form_b)
                r.failures.push_back("sigma^" + std::to_string(m) + " C5^*" + std::to_string(k) + ": equator " + s.str() +
                                     " matches neither stated form");
            bool is_link = false;
            for (int u = 0; u < z.vertex_count() && !is_link; ++u)
                if (Face(z.neighbors(u)) == s) is_link = true;
            if (!is_link)
                r.failures.push_back("sigma^" + std::to_string(m) + " C5^*" + std::to_string(k) + ": equator " + s.str() +
                                     " is not a vertex link");
        }
    }
}

void suite_thm38(SuiteResult& r, const std::vector<CorpusItem>& corpus, Field) {
    for (const auto& item : corpus) {
        const auto v = view_of(item);
        ++r.checked;
        const std::int64_t bound = binomial(v.ell, 2);
        const std::int64_t g2 = gamma_at(v.gamma, 2);
        if (g2 > bound) {
            r.failures.push_back(item.name + ": gamma_2 = " + std::to_string(g2) + " exceeds C(ell,2) = " + std::to_string(bound));
            continue;
        }
        const auto fam = recognize_family(item.complex);
        if (fam.kind != FamilyKind::Other && !verify_family(item.complex, fam)) {
            r.failures.push_back(item.name + ": family witness failed re-assembly");
            continue;
        }
        if ((g2 == bound) != (fam.kind == FamilyKind::OctahedralJoinC5Power))
            r.failures.push_back(item.name + ": gamma_2 extremal iff suspended C5-join failed (gamma_2 = " + std::to_string(g2) +
                                 ", family " + family_kind_name(fam.kind) + ")");
    }
}

void suite_thm42(SuiteResult& r, const std::vector<CorpusItem>& corpus, Field) {
    for (const auto& item : corpus) {
        const auto v = view_of(item);
        ++r.checked;
        for (int j = v.ell + 1; j <= v.gamma.degree(); ++j)
            if (v.gamma[j] != 0) {
                r.failures.push_back(item.name + ": gamma_" + std::to_string(j) + " nonzero beyond ell = " + std::to_string(v.ell));
                break;
            }
        const std::int64_t top = gamma_at(v.gamma, v.ell);
        if (top != 0 && top != 1) {
            r.failures.push_back(item.name + ": gamma_ell = " + std::to_string(top) + " outside {0,1}");
            continue;
        }
        const auto fam = recognize_family(item.complex);
        if ((top == 1) != (fam.kind == FamilyKind::OctahedralJoinC5Power))
            r.failures.push_back(item.name + ": gamma_ell = 1 iff suspended C5-join failed");
    }
}

void suite_cor43(SuiteResult& r, const std::vector<CorpusItem>& corpus, Field) {
    for (const auto& item : corpus) {
        const auto v = view_of(item);
        const int pi = antipode_profile(item.complex).polar_size;
        if (pi < 3 || v.d < 3) continue;
        ++r.checked;
        for (int j = v.ell - pi + 2; j <= v.gamma.degree(); ++j)
            if (v.gamma[j] != 0) {
                r.failures.push_back(item.name + ": gamma_" + std::to_string(j) + " nonzero despite pi = " + std::to_string(pi));
                break;
            }
    }
}

void suite_thm52(SuiteResult& r, const std::vector<CorpusItem>& corpus, Field) {
    for (const auto& item : corpus) {
        const auto v = view_of(item);
        if (v.ell < 2) continue;
        ++r.checked;
        const std::int64_t g_top = gamma_at(v.gamma, v.ell);
        const std::int64_t g_sub = gamma_at(v.gamma, v.ell - 1);
        if (g_sub != 0 && g_sub != 1 && g_sub != 2 && g_sub != v.ell) {
            r.failures.push_back(item.name + ": gamma_{ell-1} = " + std::to_string(g_sub) + " outside {0,1,2,ell}");
            continue;
        }
        if (g_top == 0) {
            if (g_sub > 2) {
                r.failures.push_back(item.name + ": gamma_ell = 0 but gamma_{ell-1} = " + std::to_string(g_sub));
                continue;
            }
            const auto fam = recognize_family(item.complex);
            const bool upsilon = fam.kind == FamilyKind::Upsilon1 || fam.kind == FamilyKind::Upsilon2;
            if ((g_sub == 2) != upsilon)
                r.failures.push_back(item.name + ": gamma_{ell-1} = 2 iff upsilon type failed (family " +
                                     std::string(family_kind_name(fam.kind)) + ", gamma " + poly_str(v.gamma) + ")");
            else if (upsilon && !verify_family(item.complex, fam))
                r.failures.push_back(item.name + ": upsilon witness failed re-assembly");
        }
    }
}

void suite_thm53(SuiteResult& r, const std::vector<CorpusItem>& corpus, Field) {
    for (int k = 3; k <= 5; ++k) {
        ++r.checked;
        if (forbidden_gamma_check(IntPolynomial::one_plus_z_pow(k).plus(IntPolynomial{0, 1})) != ForbiddenVerdict::ForbiddenByThm53)
            r.failures.push_back("(1+t)^" + std::to_string(k) + " + t not flagged forbidden");
    }
    for (const auto& item : corpus) {
        const auto v = view_of(item);
        ++r.checked;
        if (forbidden_gamma_check(v.gamma) == ForbiddenVerdict::ForbiddenByThm53)
            r.failures.push_back(item.name + ": realized gamma " + poly_str(v.gamma) + " flagged forbidden");
    }
}

void suite_dehn_sommerville(SuiteResult& r, const std::vector<CorpusItem>& corpus, Field) {
    for (const auto& item : corpus) {
        ++r.checked;
        const auto rep = gamma_report(item.complex);
        if (!rep.palindromic) {
            r.failures.push_back(item.name + ": h-polynomial is not palindromic");
            continue;
        }
        if (h_from_gamma(rep.gamma, rep.d) != rep.h) {
            r.failures.push_back(item.name + ": h rebuilt from gamma differs");
            continue;
        }
        const auto cf = gamma_closed_forms(item.complex);
        if (cf.gamma1 != rep.gamma[1] || cf.gamma2 != rep.gamma[2])
            r.failures.push_back(item.name + ": closed forms disagree with gamma entries");
        else if (!missing_edge_identity(item.complex))
            r.failures.push_back(item.name + ": missing-edge identity failed");
    }
}

void suite_gamma_nonneg(SuiteResult& r, const std::vector<CorpusItem>& corpus, Field) {
    r.report_only = true;
    for (const auto& item : corpus) {
        const auto v = view_of(item);
        ++r.checked;
        for (int i = 0; i <= v.gamma.degree(); ++i) {
            if (v.gamma[i] < 0)
                r.notes.push_back(item.name + ": gamma_" + std::to_string(i) + " = " + std::to_string(v.gamma[i]) +
                                  " negative (Gal window)");
            else if (v.gamma[i] > binomial(v.ell, i))
                r.notes.push_back(item.name + ": gamma_" + std::to_string(i) + " = " + std::to_string(v.gamma[i]) +
                                  " above C(ell," + std::to_string(i) + ") (conjectural window)");
        }
    }
}

const std::map<std::string, SuiteFn>& suite_table() {
    static const std::map<std::string, SuiteFn> table = {
        {"lem2.4", suite_lem24},   {"lem3.2", suite_lem32},
        {"lem3.5", suite_lem35},   {"lem3.9", suite_lem39},
        {"lem4.1", suite_lem41},   {"lem5.1", suite_lem51},
        {"thm3.8", suite_thm38},   {"thm4.2", suite_thm42},
        {"cor4.3", suite_cor43},   {"thm5.2", suite_thm52},
        {"thm5.3", suite_thm53},   {"dehn-sommerville", suite_dehn_sommerville},
        {"gamma-nonneg", suite_gamma_nonneg},
    };
    return table;
}

}  // namespace

SuiteResult run_suite(const std::string& id, const std::vector<CorpusItem>& corpus, Field field) {
    const auto& table = suite_table();
    const auto it = table.find(id);
    if (it == table.end()) throw InvalidParameter("unknown suite id: " + id);
    SuiteResult r;
    r.suite = id;
    it->second(r, corpus, field);
    return r;
}

const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& [id, fn] : suite_table()) out.push_back(id);
        return out;
    }();
    return ids;
}

}  // namespace flagsphere
