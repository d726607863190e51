#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "diffset/cyclotomic.hpp"
#include "diffset/group.hpp"
#include "diffset/ringpoly.hpp"

namespace diffset {

/// A tuple xi = (xi_1,...,xi_t) of n_l-th roots of unity, stored as exponents
/// (a_1,...,a_t) with xi_l = exp(2*pi*i*a_l/n_l). Exponents (0,...,0) is the
/// trivial character.
struct CharacterPoint {
    GroupSpec group;
    std::vector<std::int64_t> exps;

    bool is_trivial() const;

    /// Exponent of zeta_m picked up by the group element of the given rank:
    /// sum_l (m/n_l) * a_l * i_l  (mod m).
    std::int64_t pairing_exponent(std::int64_t rank) const;

    bool operator==(const CharacterPoint&) const = default;
};

/// All v characters in rank order over the exponent tuples; the trivial
/// character comes first.
std::vector<CharacterPoint> enumerate_characters(const GroupSpec& g);

/// Character sum over the subset: sum_{x in D} zeta_m^{<chi,x>}, exact.
CyclotomicElement char_sum(const SubsetD& d, const CharacterPoint& chi);

/// One evaluation of Psi(xi, alpha).
struct PsiReport {
    CharacterPoint character;
    CyclotomicElement value;
    std::complex<double> approx;
    bool is_zero;        // exact verdict
    bool float_is_zero;  // |approx| < 1e-6 * (1 + k^2)
};

/// Psi(xi, alpha) = chi(D) * conj(chi(D)) - lambda * chi(G) - (k - lambda),
/// computed exactly in Z[zeta_m]. chi(G) is v for the trivial character and 0
/// otherwise.
PsiReport psi_eval(const SubsetD& d, std::int64_t k, std::int64_t lambda, const CharacterPoint& chi);

/// One report per character, in enumeration order. D is a (v,k,lambda)
/// difference set iff every report is zero. Honors DIFFSET_THREADS.
std::vector<PsiReport> psi_all(const SubsetD& d, std::int64_t k, std::int64_t lambda);

/// True iff every report is exactly zero.
bool all_zero(const std::vector<PsiReport>& reports);

/// Worker count: DIFFSET_THREADS env var, 0 or unset = hardware concurrency.
unsigned thread_count();

}  // namespace diffset
