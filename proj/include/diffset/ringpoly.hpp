#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "diffset/group.hpp"

namespace diffset {

/// A subset of G as a bit vector over the rank order: the point
/// representation of the set.
class SubsetD {
public:
    explicit SubsetD(GroupSpec g);
    SubsetD(GroupSpec g, std::vector<std::uint8_t> bits);

    static SubsetD from_elements(const GroupSpec& g, const std::vector<GroupElement>& members);

    /// Semicolon-separated tuples, e.g. "(0,1);(0,2)". Duplicates rejected.
    static SubsetD parse(const GroupSpec& g, std::string_view text);

    const GroupSpec& group() const { return group_; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }
    bool contains(std::int64_t rank) const { return bits_[static_cast<std::size_t>(rank)] != 0; }
    bool contains(const GroupElement& x) const { return contains(group_.rank(x)); }

    /// |D| (popcount).
    std::int64_t size() const { return k_; }

    void insert(std::int64_t rank);
    void erase(std::int64_t rank);

    std::vector<GroupElement> members() const;
    std::vector<std::int64_t> member_ranks() const;

    SubsetD complement() const;

    /// Shift the support by g: x in result iff x - g in this.
    SubsetD translate(const GroupElement& g) const;

    std::string to_string() const;

    bool operator==(const SubsetD&) const = default;

private:
    GroupSpec group_;
    std::vector<std::uint8_t> bits_;
    std::int64_t k_ = 0;
};

/// An element of the group ring ZG = R/I restricted to integer coefficients:
/// an exact coefficient vector of length v in rank order. Every value is its
/// own normal form modulo I = (X_l^{n_l} - 1); exponents are always reduced.
class RingElement {
public:
    explicit RingElement(GroupSpec g);
    RingElement(GroupSpec g, std::vector<std::int64_t> coeffs);

    static RingElement zero(const GroupSpec& g) { return RingElement(g); }
    static RingElement unit(const GroupSpec& g);
    static RingElement delta(const GroupSpec& g, const GroupElement& x, std::int64_t c = 1);
    static RingElement all_ones(const GroupSpec& g);
    static RingElement from_subset(const SubsetD& d);

    const GroupSpec& group() const { return group_; }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
    std::int64_t coeff(std::int64_t rank) const { return coeffs_[static_cast<std::size_t>(rank)]; }

    bool is_zero() const;

    RingElement& operator+=(const RingElement& o);
    RingElement& operator-=(const RingElement& o);
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(std::int64_t c, RingElement a);

    bool operator==(const RingElement&) const = default;

private:
    GroupSpec group_;
    std::vector<std::int64_t> coeffs_;
};

/// Coefficient reflection through negation: the image of D^(-1).
RingElement reflect(const RingElement& e);

/// Exact multi-dimensional cyclic convolution (the group-ring product).
RingElement multiply(const RingElement& a, const RingElement& b);

/// Normal form of kappa_D modulo I:
///   rho(D) * reflect(rho(D)) - lambda * rho(G) - (k - lambda) * delta_e.
/// Zero iff D is a (v,k,lambda) difference set.
RingElement kappa(const SubsetD& d, std::int64_t k, std::int64_t lambda);

/// Ideal membership for elements already in normal form: all coefficients 0.
bool is_in_ideal(const RingElement& e);

/// One raw polynomial term: nonnegative exponent tuple and integer coefficient.
struct RawTerm {
    std::vector<std::int64_t> exps;
    std::int64_t coeff;
};

/// Fold raw exponents coordinatewise mod n_l and accumulate: the image of an
/// arbitrary polynomial under the quotient map onto R/I.
RingElement fold_polynomial(const std::vector<RawTerm>& terms, const GroupSpec& g);

/// Parse "3*x1^2*x2 + x1 - 4" style text (variables x1..xt, integer
/// coefficients, whitespace-insensitive) and fold it into normal form.
RingElement parse_polynomial(std::string_view text, const GroupSpec& g);

}  // namespace diffset
