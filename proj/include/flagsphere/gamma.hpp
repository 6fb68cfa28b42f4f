#pragma once

#include <cstdint>

#include "flagsphere/complex.hpp"
#include "flagsphere/polynomial.hpp"

namespace flagsphere {

/// f^Δ(z) = Σ f_i z^i.
IntPolynomial f_polynomial(const SimplicialComplex& c);

/// h_k = Σ_{i<=k} (-1)^{k-i} C(d-i, d-k) f_i for 0 <= k <= d.
/// Requires f_0 = 1 and deg f <= d (DimensionMismatch otherwise).
IntPolynomial h_polynomial(const IntPolynomial& f, int d);

/// h_k == h_{d-k} for all k.
bool is_dehn_sommerville(const IntPolynomial& h, int d);

/// Coordinates of h in the basis z^i(1+z)^{d-2i}, extracted by successive
/// leading-coefficient elimination (the basis is triangular in that order).
/// Refuses non-palindromic input with NotPalindromic: γ is only meaningful
/// under Dehn–Sommerville.
IntPolynomial gamma_vector(const IntPolynomial& h, int d);

/// Inverse of gamma_vector: Σ γ_i z^i (1+z)^{d-2i}.
IntPolynomial h_from_gamma(const IntPolynomial& gamma, int d);

/// f → h → γ with d = dim + 1.
IntPolynomial gamma_of(const SimplicialComplex& c);

struct GammaClosedForms {
    std::int64_t gamma0 = 1, gamma1 = 0, gamma2 = 0;
};

/// γ1 = f1 - 2d, γ2 = f2 - (2d-3) f1 + 2d(d-2); meaningful when the caller
/// has certified c as a homology sphere of dimension d-1.
GammaClosedForms gamma_closed_forms(const SimplicialComplex& c);

/// α + γ2 == γ1(γ1+5)/2 + d, α the number of missing edges.
bool missing_edge_identity(const SimplicialComplex& c);

/// γ of a join of homology spheres is the product of the factors' γ.
IntPolynomial gamma_join_product(const IntPolynomial& a, const IntPolynomial& b);

enum class ForbiddenVerdict { ForbiddenByThm53, NotApplicable };

/// Decides membership in the forbidden family p = (1+t)^k + t r(t) with
/// k >= 3, deg r <= k-2, r(0) = 1 and (1+t) ∤ r; such p is realized by no
/// flag homology sphere. k is forced to be deg p. Not a general
/// γ-realizability test: anything outside the family is NotApplicable.
ForbiddenVerdict forbidden_gamma_check(const IntPolynomial& p);

struct GammaReport {
    int d = 0;  // dim + 1
    IntPolynomial f, h, gamma;
    bool palindromic = false;
    std::int64_t alpha = 0;  // missing-edge count
};

/// gamma stays empty when h is not palindromic.
GammaReport gamma_report(const SimplicialComplex& c);

}  // namespace flagsphere
