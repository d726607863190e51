#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diffset/characters.hpp"
#include "diffset/group.hpp"
#include "diffset/ringpoly.hpp"

#include <json.hpp>

namespace diffset {

struct DesignParams {
    std::int64_t v = 0;
    std::int64_t k = 0;
    std::int64_t lambda = 0;

    /// Ryser necessary condition lambda*(v-1) == k*(k-1).
    bool ryser_ok() const { return lambda * (v - 1) == k * (k - 1); }

    bool operator==(const DesignParams&) const = default;
};

/// counts[rank(g)] = lambda_g = |{(d1,d2) in D x D : g = d1 - d2}|.
/// The brute-force oracle every other method is checked against.
struct DifferenceTable {
    std::vector<std::int64_t> counts;
};

DifferenceTable difference_table(const SubsetD& d);

enum class Method {
    Definition,
    GroupRing,
    CharactersExact,
    CharactersFloat,
    All,
};

Method parse_method(const std::string& name);
std::string method_name(Method m);

/// Verification outcome. A rejecting certificate carries a witness that
/// re-checks to a violation: a group element whose pair count is off, a
/// character with a nonzero Psi value, or a popcount mismatch.
struct Certificate {
    bool verdict = false;
    Method method = Method::Definition;
    DesignParams params;

    std::optional<GroupElement> witness_element;
    std::optional<std::int64_t> witness_count;  // lambda_g at witness_element
    std::optional<CharacterPoint> witness_character;
    std::string witness_value;  // Psi value at witness_character, printed
    std::optional<std::int64_t> witness_popcount;  // |D| when k mismatches

    std::string note;

    nlohmann::json to_json() const;
};

/// Verify that D is a (v,k,lambda) difference set by the requested method.
/// |D| = k is checked, not assumed; a mismatch rejects with the popcount as
/// witness. Method::All runs definition, group ring and exact characters and
/// requires agreement.
Certificate verify(const SubsetD& d, const DesignParams& p, Method method = Method::All);

/// Generalized difference set parameters: lambda_g = lambda1 on M \ {e} and
/// lambda2 off M (with the constant-term case split on
/// whether the identity lies in M).
struct GeneralizedParams {
    SubsetD m_set;
    std::int64_t lambda1 = 0;
    std::int64_t lambda2 = 0;

    bool contains_identity() const { return m_set.contains(std::int64_t{0}); }
};

Certificate verify_generalized(const SubsetD& d, const GeneralizedParams& gp, std::int64_t k,
                               Method method = Method::All);

/// Read (k, lambda) off the difference table when it is flat off the
/// identity; nullopt otherwise.
std::optional<DesignParams> infer_params(const SubsetD& d);

}  // namespace diffset
