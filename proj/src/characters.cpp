#include "diffset/characters.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <stdexcept>
#include <thread>

namespace diffset {

bool CharacterPoint::is_trivial() const {
    return std::all_of(exps.begin(), exps.end(), [](std::int64_t a) { return a == 0; });
}

std::int64_t CharacterPoint::pairing_exponent(std::int64_t rank) const {
    const std::int64_t m = group.exponent();
    GroupElement x = group.unrank(rank);
    std::int64_t e = 0;
    for (std::size_t l = 0; l < group.arity(); ++l)
        e = (e + (m / group.orders()[l]) * exps[l] % m * x.coords[l]) % m;
    return e;
}

std::vector<CharacterPoint> enumerate_characters(const GroupSpec& g) {
    std::vector<CharacterPoint> out;
    out.reserve(static_cast<std::size_t>(g.order()));
    for (std::int64_t r = 0; r < g.order(); ++r)
        out.push_back(CharacterPoint{g, g.unrank(r).coords});
    return out;
}

CyclotomicElement char_sum(const SubsetD& d, const CharacterPoint& chi) {
    if (d.group() != chi.group) throw std::invalid_argument("group mismatch");
    const std::int64_t m = d.group().exponent();
    CyclotomicElement s(m);
    for (std::int64_t r : d.member_ranks()) s.add_root_power(chi.pairing_exponent(r));
    return s;
}

PsiReport psi_eval(const SubsetD& d, std::int64_t k, std::int64_t lambda, const CharacterPoint& chi) {
    const GroupSpec& g = d.group();
    if (g != chi.group) throw std::invalid_argument("group mismatch");
    if (k < 0 || k > g.order() || lambda < 0)
        throw std::invalid_argument("parameters out of range: need 0 <= k <= v and lambda >= 0");
    const std::int64_t m = g.exponent();

    CyclotomicElement s = char_sum(d, chi);
    CyclotomicElement value = s * s.conj();
    // Geometric-sum shortcut: chi(G) = v for the trivial character, 0 else.
    std::int64_t chi_g = chi.is_trivial() ? g.order() : 0;
    value -= CyclotomicElement::integer(m, lambda * chi_g + (k - lambda));

    PsiReport rep{chi, value, value.to_complex(), value.is_zero(), false};
    double tol = 1e-6 * (1.0 + static_cast<double>(k) * static_cast<double>(k));
    rep.float_is_zero = std::abs(rep.approx) < tol;
    return rep;
}

unsigned thread_count() {
    if (const char* env = std::getenv("DIFFSET_THREADS")) {
        char* end = nullptr;
        long n = std::strtol(env, &end, 10);
        if (end && *end == '\0' && n > 0) return static_cast<unsigned>(n);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

std::vector<PsiReport> psi_all(const SubsetD& d, std::int64_t k, std::int64_t lambda) {
    std::vector<CharacterPoint> chars = enumerate_characters(d.group());
    std::vector<PsiReport> out;
    out.reserve(chars.size());

    unsigned workers = thread_count();
    if (workers <= 1 || chars.size() < 64) {
        for (const CharacterPoint& chi : chars) out.push_back(psi_eval(d, k, lambda, chi));
        return out;
    }

    // Shard by character index; output order stays the enumeration order.
    std::vector<std::future<std::vector<PsiReport>>> futures;
    std::size_t chunk = (chars.size() + workers - 1) / workers;
    for (std::size_t start = 0; start < chars.size(); start += chunk) {
        std::size_t end = std::min(start + chunk, chars.size());
        futures.push_back(std::async(std::launch::async, [&, start, end] {
            std::vector<PsiReport> part;
            part.reserve(end - start);
            for (std::size_t i = start; i < end; ++i) part.push_back(psi_eval(d, k, lambda, chars[i]));
            return part;
        }));
    }
    for (auto& f : futures) {
        std::vector<PsiReport> part = f.get();
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

bool all_zero(const std::vector<PsiReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const PsiReport& r) { return r.is_zero; });
}

}  // namespace diffset
