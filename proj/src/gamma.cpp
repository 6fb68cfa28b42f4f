#include "flagsphere/gamma.hpp"

#include "flagsphere/errors.hpp"

namespace flagsphere {

IntPolynomial f_polynomial(const SimplicialComplex& c) {
    return IntPolynomial(c.f_vector());
}

IntPolynomial h_polynomial(const IntPolynomial& f, int d) {
    if (d < 0) throw InvalidParameter("h_polynomial: negative d");
    if (f[0] != 1) throw InvalidParameter("h_polynomial: f_0 must be 1");
    if (f.degree() > d) throw DimensionMismatch("h_polynomial: deg f exceeds d");
    std::vector<std::int64_t> h(static_cast<std::size_t>(d) + 1, 0);
    for (int k = 0; k <= d; ++k) {
        std::int64_t acc = 0;
        for (int i = 0; i <= k; ++i) {
            const std::int64_t term = checked_mul(binomial(d - i, d - k), f[i]);
            acc = ((k - i) % 2 == 0) ? checked_add(acc, term) : checked_sub(acc, term);
        }
        h[static_cast<std::size_t>(k)] = acc;
    }
    return IntPolynomial(std::move(h));
}

bool is_dehn_sommerville(const IntPolynomial& h, int d) {
    if (h.degree() > d) return false;
    for (int k = 0; 2 * k <= d; ++k)
        if (h[k] != h[d - k]) return false;
    return true;
}

IntPolynomial gamma_vector(const IntPolynomial& h, int d) {
    if (!is_dehn_sommerville(h, d)) throw NotPalindromic("gamma basis requires a palindromic h-polynomial");
    IntPolynomial residue = h;
    std::vector<std::int64_t> gamma;
    for (int i = 0; 2 * i <= d; ++i) {
        const std::int64_t gi = residue[i];
        gamma.push_back(gi);
        if (gi != 0) residue = residue.minus(IntPolynomial::shifted_binomial(i, d - 2 * i).times_scalar(gi));
    }
    if (!residue.is_zero()) throw Error("gamma extraction left a nonzero residue");  // unreachable for palindromic input
    return IntPolynomial(std::move(gamma));
}

IntPolynomial h_from_gamma(const IntPolynomial& gamma, int d) {
    IntPolynomial h;
    for (int i = 0; i <= gamma.degree(); ++i) {
        if (2 * i > d) throw DimensionMismatch("gamma degree exceeds floor(d/2)");
        if (gamma[i] != 0) h = h.plus(IntPolynomial::shifted_binomial(i, d - 2 * i).times_scalar(gamma[i]));
    }
    return h;
}

IntPolynomial gamma_of(const SimplicialComplex& c) {
    const int d = c.dim() + 1;
    return gamma_vector(h_polynomial(f_polynomial(c), d), d);
}

GammaClosedForms gamma_closed_forms(const SimplicialComplex& c) {
    const std::int64_t d = c.dim() + 1;
    const auto f = c.f_vector();
    const std::int64_t f1 = f.size() > 1 ? f[1] : 0;
    const std::int64_t f2 = f.size() > 2 ? f[2] : 0;
    GammaClosedForms out;
    out.gamma1 = checked_sub(f1, 2 * d);
    out.gamma2 = checked_add(checked_sub(f2, checked_mul(2 * d - 3, f1)), checked_mul(2 * d, d - 2));
    return out;
}

bool missing_edge_identity(const SimplicialComplex& c) {
    const std::int64_t d = c.dim() + 1;
    const std::int64_t n = c.vertex_count();
    const auto f = c.f_vector();
    const std::int64_t edges = f.size() > 2 ? f[2] : 0;
    const std::int64_t alpha = n * (n - 1) / 2 - edges;
    const auto cf = gamma_closed_forms(c);
    return checked_add(alpha, cf.gamma2) == checked_add(cf.gamma1 * (cf.gamma1 + 5) / 2, d);
}

IntPolynomial gamma_join_product(const IntPolynomial& a, const IntPolynomial& b) {
    return a.times(b);
}

ForbiddenVerdict forbidden_gamma_check(const IntPolynomial& p) {
    const int k = p.degree();
    if (k < 3 || p[k] != 1 || p[0] != 1) return ForbiddenVerdict::NotApplicable;
    const IntPolynomial diff = p.minus(IntPolynomial::one_plus_z_pow(k));
    if (diff.is_zero() || diff[0] != 0) return ForbiddenVerdict::NotApplicable;
    std::vector<std::int64_t> r_coeffs(diff.coeffs().begin() + 1, diff.coeffs().end());
    const IntPolynomial r{std::move(r_coeffs)};
    if (r[0] != 1) return ForbiddenVerdict::NotApplicable;  // constant term of r must be 1
    if (r.eval(-1) == 0) return ForbiddenVerdict::NotApplicable;  // (1+t) | r
    return ForbiddenVerdict::ForbiddenByThm53;
}

GammaReport gamma_report(const SimplicialComplex& c) {
    GammaReport rep;
    rep.d = c.dim() + 1;
    rep.f = f_polynomial(c);
    rep.h = h_polynomial(rep.f, rep.d);
    rep.palindromic = is_dehn_sommerville(rep.h, rep.d);
    if (rep.palindromic) rep.gamma = gamma_vector(rep.h, rep.d);
    const std::int64_t n = c.vertex_count();
    const auto f = c.f_vector();
    rep.alpha = n * (n - 1) / 2 - (f.size() > 2 ? f[2] : 0);
    return rep;
}

}  // namespace flagsphere
