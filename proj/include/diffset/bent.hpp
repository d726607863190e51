#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "diffset/designs.hpp"
#include "diffset/group.hpp"
#include "diffset/ringpoly.hpp"

namespace diffset {

/// A Boolean function of t variables as a truth table of length 2^t, indexed
/// by the rank order of (Z/2Z)^t with the first variable most significant
/// (same convention as GroupSpec), so supports flow directly into designs.
class BooleanFunction {
public:
    BooleanFunction(int t, std::vector<std::uint8_t> truth_table);

    /// Binary string of length 2^t in rank order, or hex with "0x" prefix
    /// (big-endian over the rank order).
    static BooleanFunction parse(int t, std::string_view text);

    /// Maiorana-McFarland inner product sum x_i*y_i on 2m variables, laid out
    /// (x_1..x_m, y_1..y_m).
    static BooleanFunction inner_product(int m);

    static BooleanFunction constant(int t, bool value);

    int vars() const { return t_; }
    const std::vector<std::uint8_t>& truth_table() const { return tt_; }
    std::uint8_t operator()(std::size_t index) const { return tt_[index]; }

    std::string to_bit_string() const;

    bool operator==(const BooleanFunction&) const = default;

private:
    int t_;
    std::vector<std::uint8_t> tt_;
};

/// Subset of (Z/2Z)^t where f = 1.
SubsetD support(const BooleanFunction& f);

/// g = (g1, g2) |-> f1(g1) xor f2(g2), g1 block most significant.
BooleanFunction direct_sum(const BooleanFunction& f1, const BooleanFunction& f2);

struct BentReport {
    bool bent = false;
    bool outside_standard_range = false;  // t = 2 extension
    std::int64_t support_size = 0;
    std::int64_t k = 0;       // matched difference-set parameters, when bent-sized
    std::int64_t lambda = 0;
    int sign = 0;             // -1 or +1 for the k = 2^{t-1} -/+ 2^{(t-2)/2} case
    std::string note;
    Certificate certificate;  // from designs.verify, when the size check passes
};

/// Bentness via the difference-set characterization: the support must be a
/// (2^t, 2^{t-1} +- 2^{(t-2)/2}, 2^{t-2} +- 2^{(t-2)/2}) difference set with
/// consistent signs. Odd t rejects with an explanation.
BentReport is_bent_ds(const BooleanFunction& f, Method method = Method::Definition);

struct WalshReport {
    bool bent = false;
    std::vector<std::int64_t> spectrum;  // W(a) over rank order of a
};

/// Independent oracle: f is bent iff |W(a)| = 2^{t/2} for every a, where
/// W(a) = sum_x (-1)^{f(x) + a.x}. Fast Walsh-Hadamard transform, integers.
WalshReport walsh_oracle(const BooleanFunction& f);

}  // namespace diffset
