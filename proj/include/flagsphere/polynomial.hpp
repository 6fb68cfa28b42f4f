#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "flagsphere/errors.hpp"

namespace flagsphere {

/// Overflow-checked 64-bit integer helpers. Exactness is the whole point:
/// any overflow is an error, never a silent wrap.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in addition");
    return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in subtraction");
    return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in multiplication");
    return r;
}

/// C(n, k) computed from Pascal rows, overflow-checked.
std::int64_t binomial(int n, int k);

/// Integer polynomial, coefficient of degree i at index i, trailing zeros trimmed.
/// The zero polynomial is the empty coefficient sequence (degree -1).
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<std::int64_t> cs) : coeffs_(cs) { trim(); }
    explicit IntPolynomial(std::vector<std::int64_t> cs) : coeffs_(std::move(cs)) { trim(); }

    /// (1 + z)^k
    static IntPolynomial one_plus_z_pow(int k);
    /// z^i (1 + z)^j — the gimel basis elements used for gamma extraction.
    static IntPolynomial shifted_binomial(int i, int j);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::int64_t operator[](int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<std::size_t>(i)] : 0;
    }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    std::int64_t eval(std::int64_t x) const;

    IntPolynomial plus(const IntPolynomial& o) const;
    IntPolynomial minus(const IntPolynomial& o) const;
    IntPolynomial times(const IntPolynomial& o) const;
    IntPolynomial times_scalar(std::int64_t s) const;
    /// Multiply by z^k.
    IntPolynomial shifted(int k) const;

    std::string str() const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<std::int64_t> coeffs_;
};

inline IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) { return a.plus(b); }
inline IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a.minus(b); }
inline IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) { return a.times(b); }

}  // namespace flagsphere
