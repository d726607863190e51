#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diffset/cyclotomic.hpp"
#include "diffset/designs.hpp"
#include "diffset/group.hpp"
#include "diffset/ringpoly.hpp"

namespace diffset {

enum class Dedup { None, Translation };

struct SearchConfig {
    DesignParams params;
    Dedup dedup = Dedup::None;
    std::optional<std::int64_t> limit;
};

struct SearchResult {
    std::vector<SubsetD> sets;  // canonical order: lexicographically smallest bit vector first
    bool truncated = false;     // limit cut results off
    bool ryser_failed = false;  // pre-check rejected the parameters outright
};

/// Enumerate all (v,k,lambda) difference sets in g by depth-first search over
/// ranks with running partial difference counts. Every emitted set has been
/// re-checked against the definition oracle. With Dedup::Translation only the
/// lexicographically smallest translate of each class is kept.
SearchResult search(const GroupSpec& g, const SearchConfig& cfg);

/// The defining polynomial system over the point variables A_0..A_{v-1}:
/// v Booleanity generators A_r^2 - A_r and one generator per character,
///   sum_{p,q} z^{<chi,p> - <chi,q>} A_p A_q - lambda*chi(G) - (k - lambda),
/// with z a primitive m-th root of unity. Substituting the point
/// representation of a set annihilates every generator iff the set is a
/// (v,k,lambda) difference set.
class IdealSystem {
public:
    IdealSystem(GroupSpec g, DesignParams p);

    const GroupSpec& group() const { return group_; }
    const DesignParams& params() const { return params_; }

    std::size_t generator_count() const { return 2 * static_cast<std::size_t>(group_.order()); }

    /// Evaluate generator idx at an integer point (length v). Generators
    /// 0..v-1 are the Booleanity constraints, v..2v-1 the character ones in
    /// enumeration order.
    CyclotomicElement eval_generator(std::size_t idx, const std::vector<std::int64_t>& point) const;

    /// Plain-text rendering: header lines then one generator per line.
    std::string render() const;

private:
    GroupSpec group_;
    DesignParams params_;
    std::vector<CharacterPoint> characters_;
};

IdealSystem export_system(const GroupSpec& g, const DesignParams& p);

/// Existence decided by search with limit 1 (the exported system is for
/// external solvers only).
bool existence(const GroupSpec& g, const DesignParams& p);

}  // namespace diffset
