#include "diffset/search.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace diffset {

namespace {

struct Backtracker {
    const GroupSpec& g;
    const DesignParams& p;
    std::int64_t v;
    std::vector<std::int64_t> chosen;          // ranks, increasing
    std::vector<std::int64_t> counts;          // partial difference counts
    std::vector<std::vector<std::int64_t>> diff_rank;  // diff_rank[x][y] = rank(x - y)
    std::vector<SubsetD>& out;

    Backtracker(const GroupSpec& grp, const DesignParams& params, std::vector<SubsetD>& results)
        : g(grp), p(params), v(grp.order()), out(results) {
        counts.assign(static_cast<std::size_t>(v), 0);
        diff_rank.assign(static_cast<std::size_t>(v), std::vector<std::int64_t>(static_cast<std::size_t>(v)));
        for (std::int64_t x = 0; x < v; ++x) {
            GroupElement ex = g.unrank(x);
            for (std::int64_t y = 0; y < v; ++y)
                diff_rank[x][y] = g.rank(add(ex, neg(g.unrank(y), g), g));
        }
    }

    bool place(std::int64_t x) {
        bool ok = true;
        for (std::int64_t y : chosen) {
            if (++counts[static_cast<std::size_t>(diff_rank[x][y])] > p.lambda) ok = false;
            if (++counts[static_cast<std::size_t>(diff_rank[y][x])] > p.lambda) ok = false;
        }
        chosen.push_back(x);
        return ok;
    }

    void unplace() {
        std::int64_t x = chosen.back();
        chosen.pop_back();
        for (std::int64_t y : chosen) {
            --counts[static_cast<std::size_t>(diff_rank[x][y])];
            --counts[static_cast<std::size_t>(diff_rank[y][x])];
        }
    }

    void emit() {
        SubsetD d(g);
        for (std::int64_t r : chosen) d.insert(r);
        // Final gate: the definition oracle, independent of the pruning.
        if (verify(d, p, Method::Definition).verdict) out.push_back(d);
    }

    void dfs(std::int64_t next) {
        if (static_cast<std::int64_t>(chosen.size()) == p.k) {
            emit();
            return;
        }
        std::int64_t needed = p.k - static_cast<std::int64_t>(chosen.size());
        for (std::int64_t x = next; x + needed <= v; ++x) {
            bool ok = place(x);
            if (ok) dfs(x + 1);
            unplace();
        }
    }
};

bool lex_min_translate(const SubsetD& d) {
    const GroupSpec& g = d.group();
    for (const GroupElement& t : g.elements()) {
        if (d.translate(t).bits() < d.bits()) return false;
    }
    return true;
}

}  // namespace

SearchResult search(const GroupSpec& g, const SearchConfig& cfg) {
    if (cfg.limit && *cfg.limit < 1) throw std::invalid_argument("limit must be >= 1");
    if (g.order() != cfg.params.v)
        throw std::invalid_argument("params.v does not match group order");
    SearchResult result;
    if (!cfg.params.ryser_ok()) {
        result.ryser_failed = true;
        return result;
    }
    Backtracker bt(g, cfg.params, result.sets);
    bt.dfs(0);

    if (cfg.dedup == Dedup::Translation) {
        std::erase_if(result.sets, [](const SubsetD& d) { return !lex_min_translate(d); });
    }
    std::sort(result.sets.begin(), result.sets.end(),
              [](const SubsetD& a, const SubsetD& b) { return a.bits() < b.bits(); });
    if (cfg.limit && static_cast<std::int64_t>(result.sets.size()) > *cfg.limit) {
        result.sets.erase(result.sets.begin() + static_cast<std::ptrdiff_t>(*cfg.limit),
                          result.sets.end());
        result.truncated = true;
    }
    return result;
}

IdealSystem::IdealSystem(GroupSpec g, DesignParams p)
    : group_(std::move(g)), params_(p), characters_(enumerate_characters(group_)) {
    if (group_.order() != params_.v)
        throw std::invalid_argument("params.v does not match group order");
}

CyclotomicElement IdealSystem::eval_generator(std::size_t idx,
                                              const std::vector<std::int64_t>& point) const {
    const std::int64_t v = group_.order();
    const std::int64_t m = group_.exponent();
    if (point.size() != static_cast<std::size_t>(v))
        throw std::invalid_argument("point length must equal group order");
    if (idx < static_cast<std::size_t>(v)) {
        std::int64_t a = point[idx];
        return CyclotomicElement::integer(m, a * a - a);
    }
    idx -= static_cast<std::size_t>(v);
    if (idx >= characters_.size()) throw std::out_of_range("generator index out of range");
    const CharacterPoint& chi = characters_[idx];

    CyclotomicElement value(m);
    std::vector<std::int64_t> exps(static_cast<std::size_t>(v));
    for (std::int64_t r = 0; r < v; ++r) exps[static_cast<std::size_t>(r)] = chi.pairing_exponent(r);
    for (std::int64_t pr = 0; pr < v; ++pr) {
        if (point[static_cast<std::size_t>(pr)] == 0) continue;
        for (std::int64_t q = 0; q < v; ++q) {
            if (point[static_cast<std::size_t>(q)] == 0) continue;
            value.add_root_power(exps[static_cast<std::size_t>(pr)] - exps[static_cast<std::size_t>(q)],
                                 point[static_cast<std::size_t>(pr)] * point[static_cast<std::size_t>(q)]);
        }
    }
    std::int64_t chi_g = chi.is_trivial() ? v : 0;
    value -= CyclotomicElement::integer(m, params_.lambda * chi_g + (params_.k - params_.lambda));
    return value;
}

namespace {

// z^d with d already reduced mod m, rendered as a monomial factor or "1".
std::string zpow(std::int64_t d) {
    if (d == 0) return "";
    if (d == 1) return "z*";
    return "z^" + std::to_string(d) + "*";
}

}  // namespace

std::string IdealSystem::render() const {
    const std::int64_t v = group_.order();
    const std::int64_t m = group_.exponent();
    std::ostringstream out;
    out << "ring: A_0..A_" << (v - 1) << "\n";
    out << "root-of-unity: z, order " << m << ", minpoly ";
    {
        std::vector<std::int64_t> c = cyclotomic_poly(m);
        bool first = true;
        for (std::size_t j = c.size(); j-- > 0;) {
            if (c[j] == 0) continue;
            if (!first) out << (c[j] < 0 ? " - " : " + ");
            else if (c[j] < 0) out << '-';
            std::int64_t a = std::llabs(c[j]);
            if (j == 0) out << a;
            else {
                if (a != 1) out << a << '*';
                out << 'z';
                if (j > 1) out << '^' << j;
            }
            first = false;
        }
        out << "\n";
    }
    for (std::int64_t r = 0; r < v; ++r)
        out << "A_" << r << "^2 - A_" << r << "\n";
    for (const CharacterPoint& chi : characters_) {
        std::vector<std::int64_t> exps(static_cast<std::size_t>(v));
        for (std::int64_t r = 0; r < v; ++r) exps[static_cast<std::size_t>(r)] = chi.pairing_exponent(r);
        bool first = true;
        for (std::int64_t p = 0; p < v; ++p) {
            for (std::int64_t q = 0; q < v; ++q) {
                std::int64_t d = ((exps[static_cast<std::size_t>(p)] - exps[static_cast<std::size_t>(q)]) % m + m) % m;
                if (!first) out << " + ";
                out << zpow(d) << "A_" << p << "*A_" << q;
                first = false;
            }
        }
        std::int64_t chi_g = chi.is_trivial() ? v : 0;
        std::int64_t c = params_.lambda * chi_g + (params_.k - params_.lambda);
        if (c >= 0) out << " - " << c;
        else out << " + " << -c;
        out << "\n";
    }
    return out.str();
}

IdealSystem export_system(const GroupSpec& g, const DesignParams& p) { return IdealSystem(g, p); }

bool existence(const GroupSpec& g, const DesignParams& p) {
    SearchConfig cfg;
    cfg.params = p;
    cfg.limit = 1;
    return !search(g, cfg).sets.empty();
}

}  // namespace diffset
