#include "diffset/bent.hpp"

#include <stdexcept>

namespace diffset {

namespace {

GroupSpec boolean_group(int t) {
    return GroupSpec(std::vector<std::int64_t>(static_cast<std::size_t>(t), 2));
}

}  // namespace

BooleanFunction::BooleanFunction(int t, std::vector<std::uint8_t> truth_table)
    : t_(t), tt_(std::move(truth_table)) {
    if (t < 1 || t > 30) throw std::invalid_argument("variable count out of range");
    if (tt_.size() != (std::size_t{1} << t))
        throw std::invalid_argument("truth table length must be 2^t");
    for (std::uint8_t b : tt_)
        if (b > 1) throw std::invalid_argument("truth table entries must be 0 or 1");
}

BooleanFunction BooleanFunction::parse(int t, std::string_view text) {
    std::size_t n = std::size_t{1} << t;
    std::vector<std::uint8_t> tt(n, 0);
    if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        std::string_view hex = text.substr(2);
        if (hex.size() * 4 != n)
            throw std::invalid_argument("hex truth table must have exactly 2^t bits");
        for (std::size_t i = 0; i < hex.size(); ++i) {
            char c = hex[i];
            int d;
            if (c >= '0' && c <= '9') d = c - '0';
            else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
            else throw std::invalid_argument("invalid hex digit in truth table");
            for (int b = 0; b < 4; ++b)
                tt[i * 4 + static_cast<std::size_t>(b)] = static_cast<std::uint8_t>((d >> (3 - b)) & 1);
        }
    } else {
        if (text.size() != n)
            throw std::invalid_argument("binary truth table must have length 2^t");
        for (std::size_t i = 0; i < n; ++i) {
            if (text[i] == '0') tt[i] = 0;
            else if (text[i] == '1') tt[i] = 1;
            else throw std::invalid_argument("truth table must be 0/1");
        }
    }
    return BooleanFunction(t, std::move(tt));
}

BooleanFunction BooleanFunction::inner_product(int m) {
    if (m < 1) throw std::invalid_argument("inner product needs m >= 1");
    int t = 2 * m;
    std::size_t n = std::size_t{1} << t;
    std::vector<std::uint8_t> tt(n);
    for (std::size_t idx = 0; idx < n; ++idx) {
        // First m bits (most significant) are x, last m are y.
        unsigned x = static_cast<unsigned>(idx >> m);
        unsigned y = static_cast<unsigned>(idx & ((1u << m) - 1));
        unsigned acc = x & y;
        unsigned parity = 0;
        while (acc) {
            parity ^= acc & 1;
            acc >>= 1;
        }
        tt[idx] = static_cast<std::uint8_t>(parity);
    }
    return BooleanFunction(t, std::move(tt));
}

BooleanFunction BooleanFunction::constant(int t, bool value) {
    return BooleanFunction(t, std::vector<std::uint8_t>(std::size_t{1} << t, value ? 1 : 0));
}

std::string BooleanFunction::to_bit_string() const {
    std::string s(tt_.size(), '0');
    for (std::size_t i = 0; i < tt_.size(); ++i)
        if (tt_[i]) s[i] = '1';
    return s;
}

SubsetD support(const BooleanFunction& f) {
    SubsetD d(boolean_group(f.vars()));
    for (std::size_t i = 0; i < f.truth_table().size(); ++i)
        if (f(i)) d.insert(static_cast<std::int64_t>(i));
    return d;
}

BooleanFunction direct_sum(const BooleanFunction& f1, const BooleanFunction& f2) {
    int t = f1.vars() + f2.vars();
    std::size_t n2 = std::size_t{1} << f2.vars();
    std::vector<std::uint8_t> tt;
    tt.reserve(std::size_t{1} << t);
    for (std::uint8_t b1 : f1.truth_table())
        for (std::size_t i2 = 0; i2 < n2; ++i2) tt.push_back(b1 ^ f2.truth_table()[i2]);
    return BooleanFunction(t, std::move(tt));
}

BentReport is_bent_ds(const BooleanFunction& f, Method method) {
    BentReport rep;
    const int t = f.vars();
    SubsetD d = support(f);
    rep.support_size = d.size();
    if (t % 2 != 0) {
        rep.note = "t is odd; bent functions exist only for even t";
        return rep;
    }
    if (t == 2) {
        rep.outside_standard_range = true;
        rep.note = "t = 2 is outside the stated range of the characterization; "
                   "verdict cross-checked against the Walsh oracle in tests";
    }
    std::int64_t v = std::int64_t{1} << t;
    std::int64_t half = std::int64_t{1} << (t - 1);
    std::int64_t quarter = std::int64_t{1} << (t - 2);
    std::int64_t root = std::int64_t{1} << ((t - 2) / 2);

    if (d.size() == half - root) {
        rep.sign = -1;
        rep.k = half - root;
        rep.lambda = quarter - root;
    } else if (d.size() == half + root) {
        rep.sign = +1;
        rep.k = half + root;
        rep.lambda = quarter + root;
    } else {
        rep.note = "support size matches neither admissible k";
        return rep;
    }
    rep.certificate = verify(d, DesignParams{v, rep.k, rep.lambda}, method);
    rep.bent = rep.certificate.verdict;
    return rep;
}

WalshReport walsh_oracle(const BooleanFunction& f) {
    const int t = f.vars();
    std::size_t n = std::size_t{1} << t;
    WalshReport rep;
    rep.spectrum.resize(n);
    for (std::size_t i = 0; i < n; ++i) rep.spectrum[i] = f(i) ? -1 : 1;
    // In-place fast Walsh-Hadamard transform.
    for (std::size_t len = 1; len < n; len <<= 1) {
        for (std::size_t i = 0; i < n; i += len << 1) {
            for (std::size_t j = i; j < i + len; ++j) {
                std::int64_t a = rep.spectrum[j];
                std::int64_t b = rep.spectrum[j + len];
                rep.spectrum[j] = a + b;
                rep.spectrum[j + len] = a - b;
            }
        }
    }
    if (t % 2 != 0) {
        rep.bent = false;  // 2^{t/2} is not an integer
        return rep;
    }
    std::int64_t flat = std::int64_t{1} << (t / 2);
    rep.bent = true;
    for (std::int64_t w : rep.spectrum) {
        if (w != flat && w != -flat) {
            rep.bent = false;
            break;
        }
    }
    return rep;
}

}  // namespace diffset
