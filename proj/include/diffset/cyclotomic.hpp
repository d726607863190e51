#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace diffset {

/// Coefficients of the m-th cyclotomic polynomial Phi_m, low degree first.
/// Computed by exact division of x^m - 1 by all Phi_d with d | m, d < m.
std::vector<std::int64_t> cyclotomic_poly(std::int64_t m);

/// An exact element of Z[zeta_m], stored as an integer coefficient vector of
/// length m in Z[x]/(x^m - 1) with x standing for zeta_m. Arithmetic stays in
/// that ring; equality with 0 is decided by divisibility of the canonical
/// representative by Phi_m.
class CyclotomicElement {
public:
    explicit CyclotomicElement(std::int64_t m);

    static CyclotomicElement integer(std::int64_t m, std::int64_t n);

    /// c * zeta_m^j (j taken mod m, may be negative).
    static CyclotomicElement root_power(std::int64_t m, std::int64_t j, std::int64_t c = 1);

    std::int64_t modulus() const { return m_; }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    /// Add c * zeta_m^j in place.
    void add_root_power(std::int64_t j, std::int64_t c = 1);

    CyclotomicElement& operator+=(const CyclotomicElement& o);
    CyclotomicElement& operator-=(const CyclotomicElement& o);
    friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
    friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }

    /// Cyclic convolution mod x^m - 1.
    friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);

    /// Complex conjugate: zeta^j -> zeta^{-j}.
    CyclotomicElement conj() const;

    /// True iff the represented algebraic number is 0, i.e. Phi_m divides the
    /// representative in Z[x].
    bool is_zero() const;

    /// Remainder of the representative modulo Phi_m: the canonical reduced
    /// form, degree < phi(m), low degree first. Zero iff is_zero().
    std::vector<std::int64_t> reduced() const;

    /// True iff the element equals the rational integer n.
    bool equals_integer(std::int64_t n) const;

    std::complex<double> to_complex() const;

    /// Reduced form rendered as a polynomial in z, e.g. "-2" or "1 - z^2".
    std::string to_string() const;

private:
    std::int64_t m_;
    std::vector<std::int64_t> coeffs_;
};

}  // namespace diffset
