#include "diffset/ringpoly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace diffset {

SubsetD::SubsetD(GroupSpec g) : group_(std::move(g)) {
    bits_.assign(static_cast<std::size_t>(group_.order()), 0);
}

SubsetD::SubsetD(GroupSpec g, std::vector<std::uint8_t> bits)
    : group_(std::move(g)), bits_(std::move(bits)) {
    if (bits_.size() != static_cast<std::size_t>(group_.order()))
        throw std::invalid_argument("bit vector length must equal group order");
    for (std::uint8_t b : bits_) {
        if (b > 1) throw std::invalid_argument("bit vector entries must be 0 or 1");
        k_ += b;
    }
}

SubsetD SubsetD::from_elements(const GroupSpec& g, const std::vector<GroupElement>& members) {
    SubsetD d(g);
    for (const GroupElement& x : members) {
        std::int64_t r = g.rank(x);
        if (d.contains(r)) throw std::invalid_argument("duplicate element " + diffset::to_string(x));
        d.insert(r);
    }
    return d;
}

SubsetD SubsetD::parse(const GroupSpec& g, std::string_view text) {
    std::vector<GroupElement> members;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ';')) ++pos;
        if (pos >= text.size()) break;
        std::size_t end = text.find(';', pos);
        std::string_view part = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        members.push_back(parse_element(part, g));
        if (end == std::string_view::npos) break;
        pos = end + 1;
    }
    return from_elements(g, members);
}

void SubsetD::insert(std::int64_t rank) {
    auto& b = bits_.at(static_cast<std::size_t>(rank));
    if (!b) {
        b = 1;
        ++k_;
    }
}

void SubsetD::erase(std::int64_t rank) {
    auto& b = bits_.at(static_cast<std::size_t>(rank));
    if (b) {
        b = 0;
        --k_;
    }
}

std::vector<GroupElement> SubsetD::members() const {
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(k_));
    for (std::size_t r = 0; r < bits_.size(); ++r)
        if (bits_[r]) out.push_back(group_.unrank(static_cast<std::int64_t>(r)));
    return out;
}

std::vector<std::int64_t> SubsetD::member_ranks() const {
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(k_));
    for (std::size_t r = 0; r < bits_.size(); ++r)
        if (bits_[r]) out.push_back(static_cast<std::int64_t>(r));
    return out;
}

SubsetD SubsetD::complement() const {
    SubsetD c(group_);
    for (std::size_t r = 0; r < bits_.size(); ++r)
        if (!bits_[r]) c.insert(static_cast<std::int64_t>(r));
    return c;
}

SubsetD SubsetD::translate(const GroupElement& g) const {
    SubsetD out(group_);
    for (std::int64_t r : member_ranks())
        out.insert(group_.rank(add(group_.unrank(r), g, group_)));
    return out;
}

std::string SubsetD::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (const GroupElement& x : members()) {
        if (!first) out << ';';
        out << diffset::to_string(x);
        first = false;
    }
    return out.str();
}

RingElement::RingElement(GroupSpec g) : group_(std::move(g)) {
    coeffs_.assign(static_cast<std::size_t>(group_.order()), 0);
}

RingElement::RingElement(GroupSpec g, std::vector<std::int64_t> coeffs)
    : group_(std::move(g)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != static_cast<std::size_t>(group_.order()))
        throw std::invalid_argument("coefficient vector length must equal group order");
}

RingElement RingElement::unit(const GroupSpec& g) {
    RingElement e(g);
    e.coeffs_[0] = 1;
    return e;
}

RingElement RingElement::delta(const GroupSpec& g, const GroupElement& x, std::int64_t c) {
    RingElement e(g);
    e.coeffs_[static_cast<std::size_t>(g.rank(x))] = c;
    return e;
}

RingElement RingElement::all_ones(const GroupSpec& g) {
    RingElement e(g);
    for (auto& c : e.coeffs_) c = 1;
    return e;
}

RingElement RingElement::from_subset(const SubsetD& d) {
    RingElement e(d.group());
    for (std::size_t r = 0; r < d.bits().size(); ++r) e.coeffs_[r] = d.bits()[r];
    return e;
}

bool RingElement::is_zero() const {
    for (std::int64_t c : coeffs_)
        if (c != 0) return false;
    return true;
}

RingElement& RingElement::operator+=(const RingElement& o) {
    if (o.group_ != group_) throw std::invalid_argument("group mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
    if (o.group_ != group_) throw std::invalid_argument("group mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

RingElement operator*(std::int64_t c, RingElement a) {
    for (auto& x : a.coeffs_) x *= c;
    return a;
}

RingElement reflect(const RingElement& e) {
    const GroupSpec& g = e.group();
    std::vector<std::int64_t> coeffs(e.coeffs().size());
    for (std::size_t r = 0; r < coeffs.size(); ++r) {
        std::int64_t nr = g.rank(neg(g.unrank(static_cast<std::int64_t>(r)), g));
        coeffs[static_cast<std::size_t>(nr)] = e.coeffs()[r];
    }
    return RingElement(g, std::move(coeffs));
}

RingElement multiply(const RingElement& a, const RingElement& b) {
    if (a.group() != b.group()) throw std::invalid_argument("group mismatch");
    const GroupSpec& g = a.group();
    const std::int64_t v = g.order();
    std::vector<std::int64_t> out(static_cast<std::size_t>(v), 0);

    // Naive O(v^2) cyclic convolution with precomputed per-axis strides; an
    // element's rank decomposes as mixed-radix digits, so the rank of x + y
    // is computed digitwise without materializing coordinate vectors.
    const auto& orders = g.orders();
    std::vector<std::int64_t> strides(orders.size());
    std::int64_t s = 1;
    for (std::size_t l = orders.size(); l-- > 0;) {
        strides[l] = s;
        s *= orders[l];
    }
    for (std::int64_t x = 0; x < v; ++x) {
        if (a.coeff(x) == 0) continue;
        for (std::int64_t y = 0; y < v; ++y) {
            if (b.coeff(y) == 0) continue;
            std::int64_t rx = x, ry = y, r = 0;
            for (std::size_t l = 0; l < orders.size(); ++l) {
                std::int64_t dx = rx / strides[l], dy = ry / strides[l];
                rx %= strides[l];
                ry %= strides[l];
                std::int64_t d = dx + dy;
                if (d >= orders[l]) d -= orders[l];
                r += d * strides[l];
            }
            out[static_cast<std::size_t>(r)] += a.coeff(x) * b.coeff(y);
        }
    }
    return RingElement(g, std::move(out));
}

RingElement kappa(const SubsetD& d, std::int64_t k, std::int64_t lambda) {
    const GroupSpec& g = d.group();
    if (k < 0 || k > g.order() || lambda < 0)
        throw std::invalid_argument("parameters out of range: need 0 <= k <= v and lambda >= 0");
    RingElement rho = RingElement::from_subset(d);
    RingElement prod = multiply(rho, reflect(rho));
    RingElement result = prod - lambda * RingElement::all_ones(g);
    return result - (k - lambda) * RingElement::unit(g);
}

bool is_in_ideal(const RingElement& e) { return e.is_zero(); }

RingElement fold_polynomial(const std::vector<RawTerm>& terms, const GroupSpec& g) {
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(g.order()), 0);
    for (const RawTerm& t : terms) {
        if (t.exps.size() != g.arity())
            throw std::invalid_argument("term arity does not match group");
        GroupElement x;
        x.coords.resize(g.arity());
        for (std::size_t l = 0; l < g.arity(); ++l) {
            if (t.exps[l] < 0) throw std::invalid_argument("exponents must be nonnegative");
            x.coords[l] = t.exps[l] % g.orders()[l];
        }
        coeffs[static_cast<std::size_t>(g.rank(x))] += t.coeff;
    }
    return RingElement(g, std::move(coeffs));
}

namespace {

struct PolyParser {
    std::string_view s;
    std::size_t pos = 0;
    const GroupSpec& g;

    explicit PolyParser(std::string_view text, const GroupSpec& grp) : s(text), g(grp) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos) + ": " + what);
    }

    std::int64_t parse_number() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected number");
        return std::stoll(std::string(s.substr(start, pos - start)));
    }

    // One term: [coefficient] ['*'] factors, factors = xN['^'E] joined by '*'.
    RawTerm parse_term(std::int64_t sign) {
        RawTerm t;
        t.exps.assign(g.arity(), 0);
        t.coeff = sign;
        bool any = false;
        skip_ws();
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            t.coeff *= parse_number();
            any = true;
            skip_ws();
        }
        while (true) {
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                skip_ws();
            }
            if (pos >= s.size() || (s[pos] != 'x' && s[pos] != 'X')) break;
            ++pos;
            std::int64_t idx = parse_number();
            if (idx < 1 || static_cast<std::size_t>(idx) > g.arity())
                fail("variable index out of range (expected x1..x" + std::to_string(g.arity()) + ")");
            std::int64_t e = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                e = parse_number();
            }
            t.exps[static_cast<std::size_t>(idx - 1)] += e;
            any = true;
            skip_ws();
        }
        if (!any) fail("expected term");
        return t;
    }

    std::vector<RawTerm> parse() {
        std::vector<RawTerm> terms;
        skip_ws();
        if (pos >= s.size()) return terms;
        std::int64_t sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        terms.push_back(parse_term(sign));
        skip_ws();
        while (pos < s.size()) {
            if (s[pos] == '+') sign = 1;
            else if (s[pos] == '-') sign = -1;
            else fail("expected '+' or '-'");
            ++pos;
            terms.push_back(parse_term(sign));
            skip_ws();
        }
        return terms;
    }
};

}  // namespace

RingElement parse_polynomial(std::string_view text, const GroupSpec& g) {
    PolyParser p(text, g);
    return fold_polynomial(p.parse(), g);
}

}  // namespace diffset
