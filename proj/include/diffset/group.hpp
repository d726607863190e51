#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace diffset {

/// Element of a finite abelian group Z/n1 x ... x Z/nt, coordinates stored
/// reduced modulo the respective orders.
struct GroupElement {
    std::vector<std::int64_t> coords;

    bool operator==(const GroupElement&) const = default;
};

/// A finite abelian group given as an ordered tuple of cyclic orders
/// (n1,...,nt). The index set S = {(i1,...,it) : 0 <= il < nl} is linearly
/// ordered lexicographically with i1 MOST significant; that rank order is
/// used everywhere (coefficient vectors, bit vectors, file formats).
class GroupSpec {
public:
    explicit GroupSpec(std::vector<std::int64_t> orders);

    /// Parse comma-separated orders, e.g. "4,4".
    static GroupSpec parse(std::string_view text);

    const std::vector<std::int64_t>& orders() const { return orders_; }
    std::size_t arity() const { return orders_.size(); }

    /// Group order v = n1 * ... * nt.
    std::int64_t order() const { return v_; }

    /// Group exponent m = lcm(n1,...,nt).
    std::int64_t exponent() const { return m_; }

    bool valid(const GroupElement& a) const;

    /// Lexicographic rank in [0, v), i1 most significant.
    std::int64_t rank(const GroupElement& a) const;
    GroupElement unrank(std::int64_t r) const;

    /// All v elements in rank order.
    std::vector<GroupElement> elements() const;

    GroupElement identity() const;

    bool operator==(const GroupSpec&) const = default;

private:
    std::vector<std::int64_t> orders_;
    std::int64_t v_ = 1;
    std::int64_t m_ = 1;
};

GroupElement add(const GroupElement& a, const GroupElement& b, const GroupSpec& g);
GroupElement neg(const GroupElement& a, const GroupSpec& g);

/// "(0,1)" style tuple, coordinates reduced-range checked against g.
GroupElement parse_element(std::string_view text, const GroupSpec& g);
std::string to_string(const GroupElement& a);
std::string to_string(const GroupSpec& g);

}  // namespace diffset
