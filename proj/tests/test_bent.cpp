#include <doctest.h>

#include <random>

#include "diffset/bent.hpp"

using namespace diffset;

TEST_CASE("inner product functions") {
    BooleanFunction and2 = BooleanFunction::inner_product(1);
    CHECK(and2.vars() == 2);
    CHECK(and2.to_bit_string() == "0001");

    CHECK(support(BooleanFunction::inner_product(2)).size() == 6);
    CHECK(support(BooleanFunction::inner_product(3)).size() == 28);  // 2^5 - 2^2
}

TEST_CASE("support") {
    CHECK(support(BooleanFunction::constant(3, false)).size() == 0);
    BooleanFunction and2 = BooleanFunction::parse(2, "0001");
    SubsetD d = support(and2);
    CHECK(d.size() == 1);
    CHECK(d.contains(GroupElement{{1, 1}}));
}

TEST_CASE("truth table parsing") {
    CHECK(BooleanFunction::parse(2, "0001") == BooleanFunction::parse(2, "0x1"));
    CHECK(BooleanFunction::parse(4, "0x0123").to_bit_string() == "0000000100100011");
    CHECK_THROWS(BooleanFunction::parse(2, "001"));
    CHECK_THROWS(BooleanFunction::parse(2, "00012"));
    CHECK_THROWS(BooleanFunction::parse(2, "0xgg"));
    CHECK_THROWS(BooleanFunction::parse(3, "0x1"));  // 4 bits for 8 needed
}

TEST_CASE("direct sum") {
    BooleanFunction f1 = BooleanFunction::inner_product(1);
    BooleanFunction f2 = BooleanFunction::inner_product(1);
    BooleanFunction s = direct_sum(f1, f2);
    CHECK(s.vars() == 4);
    CHECK(support(s).size() == 6);  // same size as inner_product(2)

    // f + 0 has support D_f x (Z/2Z)^{t2}.
    BooleanFunction padded = direct_sum(f1, BooleanFunction::constant(3, false));
    CHECK(support(padded).size() == 1 * 8);

    // |D| = |D1|(2^{t2}-|D2|) + (2^{t1}-|D1|)|D2|
    for (int m1 : {1, 2})
        for (int m2 : {1, 2}) {
            BooleanFunction a = BooleanFunction::inner_product(m1);
            BooleanFunction b = BooleanFunction::inner_product(m2);
            std::int64_t d1 = support(a).size(), d2 = support(b).size();
            std::int64_t n1 = std::int64_t{1} << a.vars(), n2 = std::int64_t{1} << b.vars();
            CHECK(support(direct_sum(a, b)).size() == d1 * (n2 - d2) + (n1 - d1) * d2);
        }
}

TEST_CASE("walsh oracle basics") {
    WalshReport w = walsh_oracle(BooleanFunction::inner_product(2));
    CHECK(w.bent);
    for (std::int64_t x : w.spectrum) CHECK(std::abs(x) == 4);

    WalshReport c = walsh_oracle(BooleanFunction::constant(4, false));
    CHECK_FALSE(c.bent);
    CHECK(c.spectrum[0] == 16);

    // Odd t is never bent.
    CHECK_FALSE(walsh_oracle(BooleanFunction::parse(3, "00010110")).bent);
}

TEST_CASE("is_bent_ds on the worked examples") {
    BentReport ip2 = is_bent_ds(BooleanFunction::inner_product(2));
    CHECK(ip2.bent);
    CHECK(ip2.k == 6);
    CHECK(ip2.lambda == 2);
    CHECK(ip2.sign == -1);

    BentReport zero = is_bent_ds(BooleanFunction::constant(4, false));
    CHECK_FALSE(zero.bent);

    BentReport ip1 = is_bent_ds(BooleanFunction::inner_product(1));
    CHECK(ip1.bent);  // (4,1,0), flagged as the t = 2 extension
    CHECK(ip1.k == 1);
    CHECK(ip1.lambda == 0);
    CHECK(ip1.outside_standard_range);

    BentReport odd = is_bent_ds(BooleanFunction::parse(3, "00010110"));
    CHECK_FALSE(odd.bent);
    CHECK_FALSE(odd.note.empty());
}

TEST_CASE("oracle agreement on random functions, t = 6") {
    std::mt19937_64 rng(97);
    int bent_found = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        std::vector<std::uint8_t> tt(64);
        for (auto& b : tt) b = static_cast<std::uint8_t>(rng() & 1);
        BooleanFunction f(6, std::move(tt));
        bool ds = is_bent_ds(f).bent;
        bool walsh = walsh_oracle(f).bent;
        CHECK(ds == walsh);
        if (ds) ++bent_found;
    }
    // Random functions are almost never bent; the check is the agreement.
    (void)bent_found;
}

TEST_CASE("oracle agreement at t = 2, the extension case") {
    for (std::uint32_t mask = 0; mask < 16; ++mask) {
        std::vector<std::uint8_t> tt(4);
        for (int i = 0; i < 4; ++i) tt[static_cast<std::size_t>(i)] = (mask >> i) & 1;
        BooleanFunction f(2, std::move(tt));
        CHECK(is_bent_ds(f).bent == walsh_oracle(f).bent);
    }
}

TEST_CASE("direct sums of inner products stay bent") {
    for (int m1 : {1, 2, 3})
        for (int m2 : {1, 2, 3}) {
            if (m1 + m2 > 4) continue;  // keep the truth tables small here
            BooleanFunction f = direct_sum(BooleanFunction::inner_product(m1),
                                           BooleanFunction::inner_product(m2));
            CAPTURE(m1);
            CAPTURE(m2);
            CHECK(is_bent_ds(f).bent);
            CHECK(walsh_oracle(f).bent);
        }
}

TEST_CASE("complement duality") {
    BooleanFunction f = BooleanFunction::inner_product(2);
    std::vector<std::uint8_t> tt = f.truth_table();
    for (auto& b : tt) b ^= 1;
    BooleanFunction fc(4, std::move(tt));
    BentReport r = is_bent_ds(fc);
    CHECK(r.bent);
    CHECK(r.sign == +1);
    CHECK(r.k == 10);
    CHECK(r.lambda == 6);
    CHECK(support(fc) == support(f).complement());
}
