#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hqg/numthy.hpp"
#include "hqg/pgu.hpp"

namespace hqg {

/// Construction families. The first six live in the stabilizer of a self-polar triangle
/// (Fermat model); the M2_* families live in the stabilizer of a pole-polar pair, q even.
enum class FamilyId {
    T31,   // pointwise stabilizer of the triangle
    P32,   // index 2, q even
    P33,   // index 2, q odd
    P34,   // index 3, 3 does not divide q+1
    P35,   // index 3, 3 divides q+1
    P36,   // index 6
    M2_PSL22_EVEN_N,
    M2_PSL22_SPLIT,
    M2_PSL22_NONSPLIT,
    M2_CYC_QM,
    M2_EAB,
    M2_DIH_QM,
    M2_A4,
    M2_A5,
    M2_EABSD,
    M2_PSL2F,
    M2_OMEGA,   // reduces to T31
    M2_CYC_QP,  // reduces to T31
    M2_DIH_QP,  // reduces to P32
};

inline constexpr std::array<FamilyId, 19> kAllFamilies{
    FamilyId::T31,         FamilyId::P32,    FamilyId::P33,       FamilyId::P34,
    FamilyId::P35,         FamilyId::P36,    FamilyId::M2_PSL22_EVEN_N, FamilyId::M2_PSL22_SPLIT,
    FamilyId::M2_PSL22_NONSPLIT, FamilyId::M2_CYC_QM, FamilyId::M2_EAB, FamilyId::M2_DIH_QM,
    FamilyId::M2_A4,       FamilyId::M2_A5,  FamilyId::M2_EABSD,  FamilyId::M2_PSL2F,
    FamilyId::M2_OMEGA,    FamilyId::M2_CYC_QP, FamilyId::M2_DIH_QP};

std::string to_string(FamilyId f);
FamilyId parse_family(std::string_view s);

/// True for the triangle-stabilizer families T31..P36.
bool is_triangle_family(FamilyId f);
/// Curve model the family's generators are written in.
Model model_of(FamilyId f);
/// Parameter names, in canonical print order ("v" is the T31 exponent vector).
const std::vector<std::string>& param_names(FamilyId f);

/// Whether the family can occur at all for this q (parity and 3 | q+1 splits).
bool applicable(FamilyId f, std::int64_t q);

/// One parameter tuple. Integer parameters are keyed by name: a, b, c, e, l, m, d, f, w.
/// w is the order of the homology subgroup with center the pole (omega).
struct FamilyParams {
    FamilyId family = FamilyId::T31;
    std::map<std::string, std::int64_t> values;
    /// T31 only: exponents v_i indexed by the primes of q+1 in ascending order.
    std::vector<int> v;

    bool has(const std::string& name) const { return values.count(name) != 0; }
    /// Throws DomainError if the parameter is missing.
    std::int64_t get(const std::string& name) const;

    friend auto operator<=>(const FamilyParams&, const FamilyParams&) = default;
};

struct Validity {
    bool ok = true;
    std::string reason;
};

/// Pure-integer validity test. Throws DomainError if q is not a prime power or the family
/// does not apply to q.
Validity validate(std::int64_t q, const FamilyParams& params);

struct GenusRecord {
    std::int64_t genus;
    std::int64_t group_order;
    FamilyParams params;
};

/// Closed-form genus. Throws DomainError on invalid parameters and ConsistencyError if the
/// formula does not produce an integer in [0, q(q-1)/2].
GenusRecord genus(std::int64_t q, const FamilyParams& params);

/// Order of the constructed group; requires valid parameters.
std::int64_t group_order(std::int64_t q, const FamilyParams& params);

/// Largest number of tuples enumerate() will produce for one (q, family).
inline constexpr std::int64_t kEnumerationCap = 10'000'000;

/// Every valid tuple of the family at q; empty if the family does not apply to q.
/// T31 keeps a <= b; P34/P35 carry the smallest valid m.
std::vector<FamilyParams> enumerate(std::int64_t q, FamilyId family);

/// Element-type counts the constructions predict, and homology counts per triangle vertex
/// (Fermat-model families only; vertex i is the i-th coordinate point).
struct ExpectedCensus {
    std::map<ElementType, std::int64_t> types;
    std::array<std::optional<std::int64_t>, 3> vertex_homologies;
};

ExpectedCensus expected_census(std::int64_t q, const FamilyParams& params);

/// Generators of the constructed group together with the model they act on.
struct FamilyGroup {
    GramForm gram;
    std::vector<ProjMatrix> generators;
};

/// Requires ctx.q() == q and valid parameters.
FamilyGroup generators(const FieldCtx& ctx, const FamilyParams& params);

/// "a=2,b=2,c=2,e=12,v=0:1". Unknown or missing names throw DomainError; T31 accepts a
/// missing e (derived) and a missing v (all zero), P34/P35 a missing m (smallest witness).
FamilyParams parse_params(std::int64_t q, FamilyId family, std::string_view text);
std::string format_params(const FamilyParams& params);

}  // namespace hqg
