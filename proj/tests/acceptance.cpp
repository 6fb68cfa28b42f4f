// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion. Exit code = number of failed criteria.
#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "flagsphere/canonical.hpp"
#include "flagsphere/enumerate.hpp"
#include "flagsphere/expr.hpp"
#include "flagsphere/gamma.hpp"
#include "flagsphere/homology.hpp"
#include "flagsphere/structure.hpp"
#include "flagsphere/verify.hpp"

using namespace flagsphere;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int num, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << "criterion " << num << " [" << what << "]: " << (ok ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string first_failures(const SuiteResult& r, std::size_t cap = 3) {
    std::ostringstream os;
    os << "checked " << r.checked;
    for (std::size_t i = 0; i < r.failures.size() && i < cap; ++i) os << "; " << r.failures[i];
    return os.str();
}

}  // namespace

int main() {
    const auto t_total = Clock::now();

    // -- 1: exact gamma of named instances, under a second -------------------
    {
        const auto t0 = Clock::now();
        bool ok = gamma_of(cycle_complex(5)) == IntPolynomial{1, 1} &&
                  gamma_of(cycle_complex(6)) == IntPolynomial{1, 2} &&
                  gamma_of(join(cycle_complex(5), cycle_complex(5))) == IntPolynomial{1, 2, 1} &&
                  gamma_of(join(join(cycle_complex(5), cycle_complex(5)), cycle_complex(5))) ==
                      IntPolynomial{1, 3, 3, 1} &&
                  gamma_of(join(cycle_complex(5), cycle_complex(6))) == IntPolynomial{1, 3, 2};
        for (int d = 1; d <= 6; ++d) ok = ok && gamma_of(octahedral_sphere(d)) == IntPolynomial{1};
        const double elapsed = seconds_since(t0);
        ok = ok && elapsed < 1.0;
        criterion(1, "exact gamma of named instances", ok, std::to_string(elapsed) + " s");
    }

    // shared corpora: the full census to 9 vertices and constructed families to 14
    const auto t_corpus = Clock::now();
    const auto census = census_corpus(9);
    const auto constructed = constructed_corpus(14);
    std::vector<CorpusItem> corpus = census;
    corpus.insert(corpus.end(), constructed.begin(), constructed.end());
    const double corpus_seconds = seconds_since(t_corpus);

    // -- 2: Dehn-Sommerville and the h-from-gamma round trip ------------------
    {
        const auto t0 = Clock::now();
        const auto r = run_suite("dehn-sommerville", corpus);
        const double elapsed = seconds_since(t0) + corpus_seconds;
        criterion(2, "round-trip suite on census n<=9 plus constructed to 14", r.pass() && elapsed < 600.0,
                  first_failures(r) + ", " + std::to_string(elapsed) + " s incl. census");
    }

    // -- 3: Theorem 3.8 -------------------------------------------------------
    {
        const auto r = run_suite("thm3.8", corpus);
        criterion(3, "gamma_2 <= C(ell,2), equality iff suspended C5-joins", r.pass(), first_failures(r));
    }

    // -- 4: Theorem 4.2 -------------------------------------------------------
    {
        const auto r = run_suite("thm4.2", corpus);
        criterion(4, "gamma_j = 0 beyond ell, gamma_ell in {0,1} iff family", r.pass(), first_failures(r));
    }

    // -- 5: Theorem 5.2 plus the upsilon constructors -------------------------
    {
        auto r = run_suite("thm5.2", corpus);
        bool constructors_ok = true;
        std::string detail;
        for (int m = 0; m <= 4 && constructors_ok; ++m)
            for (int ell = 2; ell <= 3; ++ell) {
                if (2 * m + 5 * (ell - 2) + 6 <= 14) {
                    const auto u1 = construct_family(FamilyKind::Upsilon1, m, ell);
                    const auto g = gamma_of(u1);
                    constructors_ok = constructors_ok && is_flag(u1) && is_homology_sphere(u1, Field::GF2) &&
                                      g[ell] == 0 && g[ell - 1] == 2;
                    if (!constructors_ok) detail = "upsilon1(" + std::to_string(m) + "," + std::to_string(ell) + ")";
                }
                if (m >= 1 && 2 * m + 5 * (ell - 1) + 1 <= 14) {
                    const auto u2 = construct_family(FamilyKind::Upsilon2, m, ell);
                    const auto g = gamma_of(u2);
                    constructors_ok = constructors_ok && is_flag(u2) && is_homology_sphere(u2, Field::GF2) &&
                                      g[ell] == 0 && g[ell - 1] == 2;
                    if (!constructors_ok) detail = "upsilon2(" + std::to_string(m) + "," + std::to_string(ell) + ")";
                }
            }
        criterion(5, "gamma_{ell-1} classification and upsilon constructors", r.pass() && constructors_ok,
                  first_failures(r) + (detail.empty() ? "" : "; constructor failed at " + detail));
    }

    // -- 6: contraction recursion on the census -------------------------------
    {
        const auto r = run_suite("lem2.4", census);
        criterion(6, "contraction recursion and flagness on the census", r.pass(), first_failures(r));
    }

    // -- 7: equator classification, under five minutes ------------------------
    {
        const auto t0 = Clock::now();
        const auto r = run_suite("lem5.1", corpus);
        const double elapsed = seconds_since(t0);
        criterion(7, "equators of the four stated families", r.pass() && elapsed < 300.0,
                  first_failures(r) + ", " + std::to_string(elapsed) + " s");
    }

    // -- 8: forbidden gamma polynomials ---------------------------------------
    {
        bool fixed_ok = true;
        for (int k = 3; k <= 5; ++k)
            fixed_ok = fixed_ok && forbidden_gamma_check(IntPolynomial::one_plus_z_pow(k).plus(IntPolynomial{0, 1})) ==
                                       ForbiddenVerdict::ForbiddenByThm53;
        const auto r = run_suite("thm5.3", corpus);
        criterion(8, "forbidden family flagged, no realized gamma flagged", fixed_ok && r.pass(), first_failures(r));
    }

    // -- 9: suspension forcing and desuspension -------------------------------
    {
        const auto r = run_suite("lem4.1", corpus);
        bool desusp_ok = true;
        std::string detail;
        std::mt19937 rng(20240809);
        for (const auto& item : corpus) {
            if (!is_suspension(item.complex)) continue;
            const auto reference = desuspend_core(item.complex);
            if (gamma_of(reference.core) != gamma_of(item.complex)) {
                desusp_ok = false;
                detail = item.name + ": gamma changed under desuspension";
                break;
            }
            for (int trial = 0; trial < 100 && desusp_ok; ++trial) {
                SimplicialComplex cur = item.complex;
                int stripped = 0;
                while (true) {
                    const auto pairs = suspension_pairs(cur);
                    if (pairs.empty()) break;
                    const auto& p = pairs[static_cast<std::size_t>(rng() % pairs.size())];
                    cur = delete_subcomplex(cur, Face::of({p[0], p[1]})).complex;
                    ++stripped;
                }
                if (stripped != reference.m || !is_isomorphic(cur, reference.core)) {
                    desusp_ok = false;
                    detail = item.name + ": stripping order changed the core";
                }
            }
            if (!desusp_ok) break;
        }
        criterion(9, "d >= 2 ell + 1 forces suspension; desuspension order-free", r.pass() && desusp_ok,
                  first_failures(r) + (detail.empty() ? "" : "; " + detail));
    }

    // -- 10: enumerator against the naive oracle ------------------------------
    {
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= 7 && ok; ++n) {
            EnumerationTask t;
            t.n = n;
            std::set<std::vector<std::uint8_t>> orderly, naive;
            for (const auto& e : enumerate_flag_spheres(t)) orderly.insert(e.canonical_form);
            for (const auto& e : enumerate_flag_spheres_naive(t)) naive.insert(e.canonical_form);
            if (orderly != naive) {
                ok = false;
                detail = "mismatch at n=" + std::to_string(n);
            }
        }
        const std::size_t frozen[] = {1, 2, 2};  // all-dims counts for n = 5, 6, 7 (naive-sweep oracle)
        for (int n = 5; n <= 7 && ok; ++n) {
            EnumerationTask t;
            t.n = n;
            const auto entries = enumerate_flag_spheres(t);
            if (entries.size() != frozen[n - 5]) {
                ok = false;
                detail = "count at n=" + std::to_string(n);
            }
            std::size_t two_spheres = 0;
            for (const auto& e : entries) two_spheres += (e.d == 3);
            if (n >= 6 && two_spheres != 1) {
                ok = false;
                detail = "2-sphere count at n=" + std::to_string(n);
            }
        }
        criterion(10, "orderly generation equals the naive sweep, frozen counts", ok, detail);
    }

    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria pass" : "ACCEPTANCE: FAILURES = " + std::to_string(failures))
              << " (total " << seconds_since(t_total) << " s)" << std::endl;
    return failures == 0 ? 0 : 1;
}
