#include "diffset/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace diffset {

namespace {

// Exact quotient a / b in Z[x] for monic b; throws if the division is not exact.
std::vector<std::int64_t> exact_div(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
    if (b.empty() || b.back() != 1) throw std::logic_error("divisor must be monic");
    if (a.size() < b.size()) throw std::logic_error("degree underflow in exact division");
    std::vector<std::int64_t> q(a.size() - b.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
        std::int64_t c = a[i + b.size() - 1];
        q[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
    }
    for (std::int64_t c : a)
        if (c != 0) throw std::logic_error("division not exact");
    return q;
}

// Remainder of a modulo monic b.
std::vector<std::int64_t> poly_mod(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
    while (a.size() >= b.size()) {
        std::int64_t c = a.back();
        if (c != 0) {
            std::size_t off = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) a[off + j] -= c * b[j];
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_poly(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("cyclotomic index must be >= 1");
    // x^m - 1
    std::vector<std::int64_t> num(static_cast<std::size_t>(m) + 1, 0);
    num[0] = -1;
    num.back() = 1;
    for (std::int64_t d = 1; d < m; ++d) {
        if (m % d == 0) num = exact_div(std::move(num), cyclotomic_poly(d));
    }
    return num;
}

CyclotomicElement::CyclotomicElement(std::int64_t m) : m_(m) {
    if (m < 1) throw std::invalid_argument("cyclotomic modulus must be >= 1");
    coeffs_.assign(static_cast<std::size_t>(m), 0);
}

CyclotomicElement CyclotomicElement::integer(std::int64_t m, std::int64_t n) {
    CyclotomicElement e(m);
    e.coeffs_[0] = n;
    return e;
}

CyclotomicElement CyclotomicElement::root_power(std::int64_t m, std::int64_t j, std::int64_t c) {
    CyclotomicElement e(m);
    e.add_root_power(j, c);
    return e;
}

void CyclotomicElement::add_root_power(std::int64_t j, std::int64_t c) {
    j %= m_;
    if (j < 0) j += m_;
    coeffs_[static_cast<std::size_t>(j)] += c;
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& o) {
    if (o.m_ != m_) throw std::invalid_argument("cyclotomic modulus mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& o) {
    if (o.m_ != m_) throw std::invalid_argument("cyclotomic modulus mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
    if (a.m_ != b.m_) throw std::invalid_argument("cyclotomic modulus mismatch");
    CyclotomicElement c(a.m_);
    const std::size_t m = static_cast<std::size_t>(a.m_);
    for (std::size_t i = 0; i < m; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < m; ++j) {
            if (b.coeffs_[j] == 0) continue;
            std::size_t k = i + j;
            if (k >= m) k -= m;
            c.coeffs_[k] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return c;
}

CyclotomicElement CyclotomicElement::conj() const {
    CyclotomicElement c(m_);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        std::size_t k = j == 0 ? 0 : static_cast<std::size_t>(m_) - j;
        c.coeffs_[k] = coeffs_[j];
    }
    return c;
}

std::vector<std::int64_t> CyclotomicElement::reduced() const {
    return poly_mod(coeffs_, cyclotomic_poly(m_));
}

bool CyclotomicElement::is_zero() const {
    return reduced().empty();
}

bool CyclotomicElement::equals_integer(std::int64_t n) const {
    CyclotomicElement d = *this;
    d.coeffs_[0] -= n;
    return d.is_zero();
}

std::complex<double> CyclotomicElement::to_complex() const {
    std::complex<double> s = 0.0;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        double ang = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m_);
        s += static_cast<double>(coeffs_[j]) * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return s;
}

std::string CyclotomicElement::to_string() const {
    std::vector<std::int64_t> r = reduced();
    if (r.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t j = 0; j < r.size(); ++j) {
        std::int64_t c = r[j];
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::int64_t a = std::llabs(c);
        if (j == 0) {
            out << a;
        } else {
            if (a != 1) out << a << '*';
            out << 'z';
            if (j > 1) out << '^' << j;
        }
        first = false;
    }
    return out.str();
}

}  // namespace diffset
