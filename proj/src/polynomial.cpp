#include "flagsphere/polynomial.hpp"

#include <algorithm>

namespace flagsphere {

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (n < 0) throw InvalidParameter("binomial: negative n");
    // Pascal rows, grown on demand; values are overflow-checked as they are built.
    static thread_local std::vector<std::vector<std::int64_t>> rows{{1}};
    while (static_cast<int>(rows.size()) <= n) {
        const auto& prev = rows.back();
        std::vector<std::int64_t> row(prev.size() + 1, 1);
        for (std::size_t i = 1; i < prev.size(); ++i) row[i] = checked_add(prev[i - 1], prev[i]);
        rows.push_back(std::move(row));
    }
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

IntPolynomial IntPolynomial::one_plus_z_pow(int k) {
    if (k < 0) throw InvalidParameter("one_plus_z_pow: negative exponent");
    std::vector<std::int64_t> cs(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) cs[static_cast<std::size_t>(i)] = binomial(k, i);
    return IntPolynomial(std::move(cs));
}

IntPolynomial IntPolynomial::shifted_binomial(int i, int j) {
    return one_plus_z_pow(j).shifted(i);
}

std::int64_t IntPolynomial::eval(std::int64_t x) const {
    std::int64_t acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = checked_add(checked_mul(acc, x), *it);
    return acc;
}

IntPolynomial IntPolynomial::plus(const IntPolynomial& o) const {
    std::vector<std::int64_t> cs(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < cs.size(); ++i)
        cs[i] = checked_add((*this)[static_cast<int>(i)], o[static_cast<int>(i)]);
    return IntPolynomial(std::move(cs));
}

IntPolynomial IntPolynomial::minus(const IntPolynomial& o) const {
    std::vector<std::int64_t> cs(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < cs.size(); ++i)
        cs[i] = checked_sub((*this)[static_cast<int>(i)], o[static_cast<int>(i)]);
    return IntPolynomial(std::move(cs));
}

IntPolynomial IntPolynomial::times(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<std::int64_t> cs(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            cs[i + j] = checked_add(cs[i + j], checked_mul(coeffs_[i], o.coeffs_[j]));
    return IntPolynomial(std::move(cs));
}

IntPolynomial IntPolynomial::times_scalar(std::int64_t s) const {
    std::vector<std::int64_t> cs(coeffs_);
    for (auto& c : cs) c = checked_mul(c, s);
    return IntPolynomial(std::move(cs));
}

IntPolynomial IntPolynomial::shifted(int k) const {
    if (k < 0) throw InvalidParameter("shifted: negative shift");
    if (is_zero()) return {};
    std::vector<std::int64_t> cs(static_cast<std::size_t>(k), 0);
    cs.insert(cs.end(), coeffs_.begin(), coeffs_.end());
    return IntPolynomial(std::move(cs));
}

std::string IntPolynomial::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(coeffs_[i]);
    }
    return out + ")";
}

}  // namespace flagsphere
