#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hqg/families.hpp"
#include "hqg/pgu.hpp"

namespace hqg {

inline constexpr std::int64_t kDefaultClosureCap = 20000;
/// Largest q^2 at which the oracle is run; classification scans the whole field per element.
inline constexpr std::int64_t kOracleMaxQ2 = 1024;

/// A finite subgroup of PGU(3,q), fully listed.
struct GroupClosure {
    /// Canonical matrices in ascending order; the identity is among them.
    std::vector<ProjMatrix> elements;
    /// classes[i] describes elements[i]; empty for the identity.
    std::vector<std::optional<ElementClass>> classes;
    std::map<ElementType, std::int64_t> census;
    /// Homology centre -> number of homologies in the group with that centre.
    std::map<Vec3, std::int64_t> homology_centers;

    std::int64_t order() const { return static_cast<std::int64_t>(elements.size()); }
};

/// Breadth-first closure of the generated group. Throws DomainError if a generator is not
/// unitary under gram and CapacityError once more than cap elements appear.
GroupClosure close_group(const FieldCtx& ctx, const GramForm& gram, const std::vector<ProjMatrix>& generators,
                         std::int64_t cap = kDefaultClosureCap);

/// Sum of the different contributions over the census.
std::int64_t different_degree(std::int64_t q, const std::map<ElementType, std::int64_t>& census);

/// Riemann-Hurwitz: ((q^2 - q - 2) - Delta) / (2 |G|) + 1; ConsistencyError unless an exact
/// integer in [0, q(q-1)/2].
std::int64_t genus_from_census(std::int64_t q, const std::map<ElementType, std::int64_t>& census,
                               std::int64_t order);
std::int64_t genus_from_census(std::int64_t q, const GroupClosure& closure);

/// Elements of a closure whose curve fixed-point count disagrees with their contribution.
/// Wild elements are skipped.
std::vector<std::size_t> fixed_point_mismatches(const FieldCtx& ctx, const GramForm& gram,
                                                const GroupClosure& closure);

struct VerifyReport {
    FamilyParams params;
    bool skipped = false;
    std::string skip_reason;
    std::int64_t expected_order = 0;
    std::int64_t closure_order = 0;
    std::int64_t formula_genus = 0;
    std::int64_t oracle_genus = -1;
    bool order_ok = false;
    bool census_ok = false;
    bool genus_ok = false;
    std::map<ElementType, std::int64_t> census;
    std::vector<std::string> problems;

    bool ok() const { return skipped || (order_ok && census_ok && genus_ok); }
};

/// Closes the family's generators and checks group order, the predicted census and the genus.
/// Tuples whose group order exceeds budget are reported as skipped.
VerifyReport verify_family(const FieldCtx& ctx, const FamilyParams& params,
                           std::int64_t budget = kDefaultClosureCap);

}  // namespace hqg
