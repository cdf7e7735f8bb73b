#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hqg/gf.hpp"
#include "hqg/pgu.hpp"

namespace hqg {

struct SubgroupSummary {
    std::int64_t order;
    std::map<ElementType, std::int64_t> census;
    std::int64_t genus;
};

/// Largest group for which exhaustive subgroup search is attempted.
inline constexpr std::int64_t kSubgroupSearchCap = 512;

/// Every subgroup (not up to conjugacy) of the full stabilizer of the coordinate triangle in
/// the Fermat model, order 6(q+1)^2, with its census and quotient genus. Throws CapacityError
/// if the stabilizer exceeds kSubgroupSearchCap.
std::vector<SubgroupSummary> triangle_stabilizer_subgroups(const FieldCtx& ctx);

}  // namespace hqg
