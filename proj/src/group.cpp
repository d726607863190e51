#include "diffset/group.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace diffset {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    if (a != 0 && b > std::numeric_limits<std::int64_t>::max() / a)
        throw std::overflow_error("group order overflows 64-bit range");
    return a * b;
}

std::int64_t parse_int(std::string_view s) {
    std::int64_t value = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw std::invalid_argument("invalid integer: '" + std::string(s) + "'");
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

GroupSpec::GroupSpec(std::vector<std::int64_t> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) throw std::invalid_argument("group needs at least one cyclic factor");
    for (std::int64_t n : orders_) {
        if (n < 1) throw std::invalid_argument("cyclic order must be >= 1");
        v_ = checked_mul(v_, n);
        m_ = std::lcm(m_, n);
    }
}

GroupSpec GroupSpec::parse(std::string_view text) {
    std::vector<std::int64_t> orders;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view part = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        orders.push_back(parse_int(part));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return GroupSpec(std::move(orders));
}

bool GroupSpec::valid(const GroupElement& a) const {
    if (a.coords.size() != orders_.size()) return false;
    for (std::size_t l = 0; l < orders_.size(); ++l)
        if (a.coords[l] < 0 || a.coords[l] >= orders_[l]) return false;
    return true;
}

std::int64_t GroupSpec::rank(const GroupElement& a) const {
    if (a.coords.size() != orders_.size())
        throw std::invalid_argument("element arity does not match group");
    std::int64_t r = 0;
    for (std::size_t l = 0; l < orders_.size(); ++l) {
        if (a.coords[l] < 0 || a.coords[l] >= orders_[l])
            throw std::invalid_argument("element coordinate out of range");
        r = r * orders_[l] + a.coords[l];
    }
    return r;
}

GroupElement GroupSpec::unrank(std::int64_t r) const {
    if (r < 0 || r >= v_) throw std::out_of_range("rank out of range");
    GroupElement a;
    a.coords.resize(orders_.size());
    for (std::size_t l = orders_.size(); l-- > 0;) {
        a.coords[l] = r % orders_[l];
        r /= orders_[l];
    }
    return a;
}

std::vector<GroupElement> GroupSpec::elements() const {
    std::vector<GroupElement> all;
    all.reserve(static_cast<std::size_t>(v_));
    for (std::int64_t r = 0; r < v_; ++r) all.push_back(unrank(r));
    return all;
}

GroupElement GroupSpec::identity() const {
    GroupElement e;
    e.coords.assign(orders_.size(), 0);
    return e;
}

GroupElement add(const GroupElement& a, const GroupElement& b, const GroupSpec& g) {
    if (a.coords.size() != g.arity() || b.coords.size() != g.arity())
        throw std::invalid_argument("element arity does not match group");
    GroupElement c;
    c.coords.resize(g.arity());
    for (std::size_t l = 0; l < g.arity(); ++l)
        c.coords[l] = (a.coords[l] + b.coords[l]) % g.orders()[l];
    return c;
}

GroupElement neg(const GroupElement& a, const GroupSpec& g) {
    if (a.coords.size() != g.arity())
        throw std::invalid_argument("element arity does not match group");
    GroupElement c;
    c.coords.resize(g.arity());
    for (std::size_t l = 0; l < g.arity(); ++l)
        c.coords[l] = (g.orders()[l] - a.coords[l]) % g.orders()[l];
    return c;
}

GroupElement parse_element(std::string_view text, const GroupSpec& g) {
    std::string_view s = trim(text);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw std::invalid_argument("element must be a parenthesized tuple: '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
    GroupElement a;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string_view part = trim(s.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        a.coords.push_back(parse_int(part));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (a.coords.size() != g.arity())
        throw std::invalid_argument("element arity does not match group: '" + std::string(text) + "'");
    for (std::size_t l = 0; l < g.arity(); ++l)
        if (a.coords[l] < 0 || a.coords[l] >= g.orders()[l])
            throw std::invalid_argument("coordinate out of range in '" + std::string(text) + "'");
    return a;
}

std::string to_string(const GroupElement& a) {
    std::ostringstream out;
    out << '(';
    for (std::size_t l = 0; l < a.coords.size(); ++l) {
        if (l) out << ',';
        out << a.coords[l];
    }
    out << ')';
    return out.str();
}

std::string to_string(const GroupSpec& g) {
    std::ostringstream out;
    for (std::size_t l = 0; l < g.arity(); ++l) {
        if (l) out << ',';
        out << g.orders()[l];
    }
    return out.str();
}

}  // namespace diffset
