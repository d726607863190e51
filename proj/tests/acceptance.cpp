// Acceptance suite: runs each top-level criterion and prints one PASS/FAIL
// line per criterion, with its runtime. Exit status 0 iff all pass.

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <future>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "diffset/bent.hpp"
#include "diffset/characters.hpp"
#include "diffset/designs.hpp"
#include "diffset/group.hpp"
#include "diffset/ringpoly.hpp"
#include "diffset/search.hpp"

using namespace diffset;
using Clock = std::chrono::steady_clock;

namespace {

const char* kExampleD = "(0,1);(0,2);(0,3);(1,0);(2,0);(3,0)";
const char* kExampleDPrime = "(0,1);(0,2);(0,3);(1,0);(2,0);(1,1)";

int failures = 0;

void report(int id, const std::string& name, bool ok, double seconds, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << name << " ("
              << seconds << " s)";
    if (!detail.empty()) std::cout << " - " << detail;
    std::cout << '\n';
    if (!ok) ++failures;
}

void run(int id, const std::string& name, double budget_seconds,
         const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto t0 = Clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (ok && budget_seconds > 0 && secs > budget_seconds) {
        ok = false;
        detail = "runtime budget " + std::to_string(budget_seconds) + " s exceeded";
    }
    report(id, name, ok, secs, detail);
}

// All ordered tuples of cyclic orders (each >= 2, at most 3 factors) with
// product in [2, max_v].
std::vector<std::vector<std::int64_t>> order_tuples(std::int64_t max_v) {
    std::vector<std::vector<std::int64_t>> out;
    for (std::int64_t a = 2; a <= max_v; ++a) {
        out.push_back({a});
        for (std::int64_t b = 2; a * b <= max_v; ++b) {
            out.push_back({a, b});
            for (std::int64_t c = 2; a * b * c <= max_v; ++c) out.push_back({a, b, c});
        }
    }
    return out;
}

SubsetD subset_from_mask(const GroupSpec& g, std::uint64_t mask) {
    SubsetD d(g);
    for (std::int64_t r = 0; r < g.order(); ++r)
        if (mask & (std::uint64_t{1} << r)) d.insert(r);
    return d;
}

// Ryser-feasible (k, lambda) pairs for order v: lambda(v-1) = k(k-1).
std::vector<DesignParams> ryser_pairs(std::int64_t v) {
    std::vector<DesignParams> out;
    for (std::int64_t k = 0; k <= v; ++k) {
        if (v > 1) {
            if ((k * (k - 1)) % (v - 1) != 0) continue;
            out.push_back({v, k, k * (k - 1) / (v - 1)});
        } else {
            out.push_back({v, k, 0});
        }
    }
    return out;
}

bool criterion1(std::string& detail) {
    GroupSpec g = GroupSpec::parse("4,4");
    SubsetD d = SubsetD::parse(g, kExampleD);
    DesignParams p{16, 6, 2};
    for (Method m : {Method::Definition, Method::GroupRing, Method::CharactersExact}) {
        if (!verify(d, p, m).verdict) {
            detail = "method " + method_name(m) + " rejected the example set";
            return false;
        }
    }
    if (!kappa(d, 6, 2).is_zero()) {
        detail = "kappa normal form is not zero";
        return false;
    }
    auto reports = psi_all(d, 6, 2);
    if (reports.size() != 16 || !all_zero(reports)) {
        detail = "some Psi(xi, alpha) is nonzero";
        return false;
    }
    // The worked evaluation at xi = (i, -i), exponents (1,3).
    if (!psi_eval(d, 6, 2, CharacterPoint{g, {1, 3}}).value.is_zero()) {
        detail = "Psi(i,-i,alpha) != 0";
        return false;
    }
    return true;
}

bool criterion2(std::string& detail) {
    GroupSpec g = GroupSpec::parse("4,4");
    SubsetD dp = SubsetD::parse(g, kExampleDPrime);
    Certificate c = verify(dp, DesignParams{16, 6, 2}, Method::CharactersExact);
    if (c.verdict) {
        detail = "the near-miss set was accepted";
        return false;
    }
    if (!c.witness_character) {
        detail = "no character witness on rejection";
        return false;
    }
    PsiReport r = psi_eval(dp, 6, 2, CharacterPoint{g, {0, 2}});
    if (!r.value.equals_integer(-4)) {
        detail = "Psi(1,-1,alpha') != -4 exactly (got " + r.value.to_string() + ")";
        return false;
    }
    return true;
}

bool criterion3(std::string& detail) {
    auto tuples = order_tuples(16);
    std::int64_t cases = 0;
    for (const auto& orders : tuples) {
        GroupSpec g(orders);
        const std::int64_t v = g.order();
        auto params = ryser_pairs(v);
        const std::uint64_t masks = std::uint64_t{1} << v;

        unsigned workers = thread_count();
        std::vector<std::future<std::pair<std::int64_t, std::string>>> futs;
        std::uint64_t chunk = (masks + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::uint64_t lo = w * chunk;
            std::uint64_t hi = std::min(lo + chunk, masks);
            if (lo >= hi) break;
            futs.push_back(std::async(std::launch::async, [&, lo, hi] {
                std::int64_t n = 0;
                std::string err;
                for (std::uint64_t mask = lo; mask < hi; ++mask) {
                    SubsetD d = subset_from_mask(g, mask);
                    for (const DesignParams& p : params) {
                        bool def = verify(d, p, Method::Definition).verdict;
                        bool ring = verify(d, p, Method::GroupRing).verdict;
                        bool ideal = is_in_ideal(kappa(d, p.k, p.lambda));
                        bool chars = verify(d, p, Method::CharactersExact).verdict;
                        ++n;
                        if (def != ring || def != ideal || def != chars) {
                            std::ostringstream os;
                            os << "verdicts differ on group " << to_string(g) << ", set "
                               << d.to_string() << ", (k,lambda)=(" << p.k << ',' << p.lambda
                               << "): def=" << def << " ring=" << ring << " ideal=" << ideal
                               << " chars=" << chars;
                            if (err.empty()) err = os.str();
                        }
                    }
                }
                return std::make_pair(n, err);
            }));
        }
        for (auto& f : futs) {
            auto [n, err] = f.get();
            cases += n;
            if (!err.empty()) {
                detail = err;
                return false;
            }
        }
    }
    detail = std::to_string(cases) + " (subset, params) cases over " +
             std::to_string(tuples.size()) + " groups";
    return true;
}

bool criterion4(std::string& detail) {
    // Z7, (7,3,1) against brute force.
    GroupSpec g7 = GroupSpec::parse("7");
    SearchConfig c7;
    c7.params = DesignParams{7, 3, 1};
    SearchResult r7 = search(g7, c7);
    std::vector<SubsetD> brute;
    for (std::uint64_t mask = 0; mask < 128; ++mask) {
        if (std::popcount(mask) != 3) continue;
        SubsetD d = subset_from_mask(g7, mask);
        if (verify(d, c7.params, Method::Definition).verdict) brute.push_back(d);
    }
    std::sort(brute.begin(), brute.end(),
              [](const SubsetD& a, const SubsetD& b) { return a.bits() < b.bits(); });
    if (r7.sets != brute) {
        detail = "Z7 search does not equal brute-force enumeration";
        return false;
    }
    SubsetD quad = SubsetD::parse(g7, "(1);(2);(4)");
    if (std::find(r7.sets.begin(), r7.sets.end(), quad) == r7.sets.end()) {
        detail = "Z7 search misses {1,2,4}";
        return false;
    }

    // Z4xZ4, (16,6,2), dedup none.
    GroupSpec g44 = GroupSpec::parse("4,4");
    SearchConfig c44;
    c44.params = DesignParams{16, 6, 2};
    SearchResult r44 = search(g44, c44);
    SubsetD ill1 = SubsetD::parse(g44, kExampleD);
    if (std::find(r44.sets.begin(), r44.sets.end(), ill1) == r44.sets.end()) {
        detail = "Z4xZ4 search misses the example set D";
        return false;
    }
    std::set<std::vector<std::uint8_t>> found;
    for (const SubsetD& d : r44.sets) {
        if (!verify(d, c44.params, Method::Definition).verdict) {
            detail = "a Z4xZ4 result fails the definition oracle";
            return false;
        }
        found.insert(d.bits());
    }
    for (const SubsetD& d : r44.sets)
        for (const GroupElement& t : g44.elements())
            if (!found.count(d.translate(t).bits())) {
                detail = "Z4xZ4 result set is not translation-closed";
                return false;
            }
    detail = std::to_string(r7.sets.size()) + " sets in Z7, " + std::to_string(r44.sets.size()) +
             " sets in Z4xZ4";
    return true;
}

bool criterion5(std::string& detail) {
    unsigned workers = thread_count();
    const std::uint32_t total = 1u << 16;
    std::uint32_t chunk = (total + workers - 1) / workers;
    std::vector<std::future<std::array<std::int64_t, 3>>> futs;
    for (unsigned w = 0; w < workers; ++w) {
        std::uint32_t lo = w * chunk;
        std::uint32_t hi = std::min<std::uint64_t>(std::uint64_t{lo} + chunk, total);
        if (lo >= hi) break;
        futs.push_back(std::async(std::launch::async, [lo, hi] {
            std::array<std::int64_t, 3> counts{0, 0, 0};  // ds-bent, walsh-bent, disagreements
            for (std::uint32_t fcode = lo; fcode < hi; ++fcode) {
                std::vector<std::uint8_t> tt(16);
                for (int i = 0; i < 16; ++i) tt[static_cast<std::size_t>(i)] = (fcode >> i) & 1;
                BooleanFunction f(4, std::move(tt));
                bool ds = is_bent_ds(f).bent;
                bool walsh = walsh_oracle(f).bent;
                if (ds) ++counts[0];
                if (walsh) ++counts[1];
                if (ds != walsh) ++counts[2];
            }
            return counts;
        }));
    }
    std::int64_t ds_total = 0, walsh_total = 0, disagreements = 0;
    for (auto& f : futs) {
        auto c = f.get();
        ds_total += c[0];
        walsh_total += c[1];
        disagreements += c[2];
    }
    if (disagreements != 0) {
        detail = std::to_string(disagreements) + " of 65536 functions disagree";
        return false;
    }
    if (ds_total != walsh_total) {
        detail = "bent counts differ";
        return false;
    }
    detail = "both oracles count " + std::to_string(ds_total) + " bent functions at t=4";
    return true;
}

bool criterion6(std::string& detail) {
    const std::int64_t want_sizes[] = {1, 6, 28};
    for (int m : {1, 2, 3}) {
        BooleanFunction f = BooleanFunction::inner_product(m);
        BentReport r = is_bent_ds(f);
        std::int64_t t = 2 * m;
        std::int64_t want = (std::int64_t{1} << (t - 1)) - (std::int64_t{1} << ((t - 2) / 2));
        if (want != want_sizes[m - 1] || r.support_size != want || !r.bent) {
            detail = "inner_product(" + std::to_string(m) + ") not certified with size " +
                     std::to_string(want);
            return false;
        }
    }
    BooleanFunction big = direct_sum(BooleanFunction::inner_product(2),
                                     BooleanFunction::inner_product(2));
    BentReport r = is_bent_ds(big, Method::CharactersExact);
    if (!r.bent) {
        detail = "direct_sum(ip(2), ip(2)) not certified bent by the character method";
        return false;
    }
    detail = "t=8 direct sum certified with k=" + std::to_string(r.k);
    return true;
}

bool criterion7(std::string& detail) {
    auto pw = [](std::int64_t e) { return std::int64_t{1} << e; };
    for (std::int64_t t1 : {4, 6, 8, 10}) {
        for (std::int64_t t2 : {4, 6, 8, 10}) {
            std::int64_t a_plus = pw(t2 - 1) + pw((t2 - 2) / 2);
            std::int64_t a_minus = pw(t1 - 1) - pw((t1 - 2) / 2);
            std::int64_t b_plus = pw(t1 - 1) + pw((t1 - 2) / 2);
            std::int64_t b_minus = pw(t2 - 1) - pw((t2 - 2) / 2);
            std::int64_t lhs = a_plus * a_plus * a_minus * a_minus +
                               b_plus * b_plus * b_minus * b_minus +
                               2 * (pw(2 * t1 - 2) - pw(t1 - 2)) * (pw(2 * t2 - 2) - pw(t2 - 2));
            std::int64_t rhs = pw(t1 + t2) * (pw(t1 + t2 - 2) - pw((t1 + t2 - 2) / 2)) +
                               (pw(t1 + t2 - 1) - pw(t1 + t2 - 2));
            if (lhs != rhs) {
                detail = "identity fails at t1=" + std::to_string(t1) + ", t2=" + std::to_string(t2);
                return false;
            }
        }
    }
    return true;
}

bool criterion8(std::string& detail) {
    std::int64_t cases = 0;
    for (const auto& orders : order_tuples(12)) {
        GroupSpec g(orders);
        const std::int64_t v = g.order();
        SubsetD m_id(g);
        m_id.insert(0);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << v); ++mask) {
            SubsetD d = subset_from_mask(g, mask);
            std::int64_t k = d.size();
            if (k < 2) continue;  // generalized sets require k > 1
            for (std::int64_t lambda2 = 0; lambda2 <= k; ++lambda2) {
                GeneralizedParams gp{m_id, 0, lambda2};
                bool gen = verify_generalized(d, gp, k, Method::All).verdict;
                bool plain = verify(d, DesignParams{v, k, lambda2}, Method::All).verdict;
                ++cases;
                if (gen != plain) {
                    detail = "mismatch on group " + to_string(g) + ", set " + d.to_string() +
                             ", lambda2=" + std::to_string(lambda2);
                    return false;
                }
            }
        }
    }
    detail = std::to_string(cases) + " cases";
    return true;
}

bool criterion9(std::string& detail) {
    struct Job {
        const char* group;
        DesignParams params;
    };
    for (const Job& job : {Job{"7", {7, 3, 1}}, Job{"4,4", {16, 6, 2}}}) {
        GroupSpec g = GroupSpec::parse(job.group);
        SearchConfig cfg;
        cfg.params = job.params;
        SearchResult res = search(g, cfg);
        IdealSystem sys = export_system(g, job.params);
        for (const SubsetD& d : res.sets) {
            std::vector<std::int64_t> alpha(static_cast<std::size_t>(g.order()), 0);
            for (std::int64_t r : d.member_ranks()) alpha[static_cast<std::size_t>(r)] = 1;
            for (std::size_t i = 0; i < sys.generator_count(); ++i) {
                if (!sys.eval_generator(i, alpha).is_zero()) {
                    detail = "generator " + std::to_string(i) + " nonzero on a search result in " +
                             std::string(job.group);
                    return false;
                }
            }
        }
    }
    GroupSpec g44 = GroupSpec::parse("4,4");
    IdealSystem sys = export_system(g44, DesignParams{16, 6, 2});
    std::vector<std::int64_t> alpha2(16, 0);
    for (std::int64_t r : SubsetD::parse(g44, kExampleDPrime).member_ranks())
        alpha2[static_cast<std::size_t>(r)] = 1;
    for (std::size_t i = 0; i < sys.generator_count(); ++i)
        if (sys.eval_generator(i, alpha2).equals_integer(-4)) return true;
    detail = "no generator evaluates to -4 on the near-miss point";
    return false;
}

}  // namespace

int main() {
    run(1, "worked example D acceptance", 1.0, criterion1);
    run(2, "near-miss D' rejection", 1.0, criterion2);
    run(3, "criterion equivalence, v <= 16 exhaustive", 300.0, criterion3);
    run(4, "search correctness", 120.0, criterion4);
    run(5, "bent oracle agreement, t = 4 exhaustive", 300.0, criterion5);
    run(6, "inner-product bentness at desk scale", 120.0, criterion6);
    run(7, "direct-sum parameter identity", 0.0, criterion7);
    run(8, "generalized reduction, v <= 12 exhaustive", 0.0, criterion8);
    run(9, "exported system soundness", 0.0, criterion9);

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
