#include "doctest.h"
#include "hqg/errors.hpp"
#include "hqg/families.hpp"
#include "hqg/oracle.hpp"
#include "hqg/subgroups.hpp"
#include "support.hpp"

using namespace hqg;
using hqg::testing::make_ctx;

namespace {

using Census = std::map<ElementType, std::int64_t>;

ProjMatrix diag_pm(const FieldCtx& ctx, FieldElement a, FieldElement b) {
    return ProjMatrix::normalize(ctx, diag(a, b, FieldElement::one()));
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("closures of small groups") {
    const FieldCtx ctx = make_ctx(7);
    const GramForm gram = make_gram(ctx, Model::Fermat);
    const GroupClosure trivial = close_group(ctx, gram, {ProjMatrix()});
    CHECK(trivial.order() == 1);
    CHECK(trivial.census.empty());

    const FieldElement l = ctx.root_of_unity(8);
    const GroupClosure cyc = close_group(ctx, gram, {diag_pm(ctx, l, l)});
    CHECK(cyc.order() == 8);
    CHECK(cyc.census == Census{{ElementType::A, 7}});
    CHECK(cyc.homology_centers.size() == 1);
    CHECK(genus_from_census(7, cyc) == 0);

    const GroupClosure torus = close_group(ctx, gram, {diag_pm(ctx, l, FieldElement::one()), diag_pm(ctx, FieldElement::one(), l)});
    CHECK(torus.order() == 64);
    CHECK(torus.census == Census{{ElementType::A, 21}, {ElementType::B1, 42}});
    CHECK(genus_from_census(7, torus) == 0);
}

TEST_CASE("closure errors") {
    const FieldCtx ctx = make_ctx(5);
    const GramForm gram = make_gram(ctx, Model::Fermat);
    CHECK_THROWS_AS(close_group(ctx, gram, {diag_pm(ctx, ctx.gen(), FieldElement::one())}), DomainError);
    const FieldElement l = ctx.root_of_unity(6);
    CHECK_THROWS_AS(close_group(ctx, gram, {diag_pm(ctx, l, FieldElement::one()), diag_pm(ctx, FieldElement::one(), l)}, 10),
                    CapacityError);
}

TEST_CASE("Riemann-Hurwitz from a census") {
    CHECK(genus_from_census(9, Census{}, 1) == 36);
    CHECK(different_degree(13, Census{{ElementType::A, 3}, {ElementType::B1, 24}, {ElementType::B2, 56}}) == 154);
    CHECK(genus_from_census(13, Census{{ElementType::A, 3}, {ElementType::B1, 24}, {ElementType::B2, 56}}, 84) == 1);
    CHECK(genus_from_census(8, Census{{ElementType::A, 2}, {ElementType::C, 1}, {ElementType::E, 2}}, 6) == 3);
    CHECK_THROWS_AS(genus_from_census(4, Census{}, 7), ConsistencyError);
    CHECK_THROWS_AS(genus_from_census(4, Census{{ElementType::C, 20}}, 2), ConsistencyError);
}

TEST_CASE("family verification") {
    {
        const VerifyReport r = verify_family(make_ctx(8), parse_params(8, FamilyId::P32, "a=1,c=3,e=3"));
        CHECK(r.ok());
        CHECK(r.census == Census{{ElementType::A, 2}, {ElementType::C, 1}, {ElementType::E, 2}});
        CHECK(r.oracle_genus == 3);
    }
    {
        const VerifyReport r = verify_family(make_ctx(5), parse_params(5, FamilyId::T31, "a=2,b=2,c=2,v=0:1"));
        CHECK(r.ok());
        CHECK(r.census == Census{{ElementType::A, 3}, {ElementType::B1, 8}});
    }
    {
        const VerifyReport r = verify_family(make_ctx(4), parse_params(4, FamilyId::M2_A5, "w=1"));
        CHECK(r.ok());
        CHECK(r.closure_order == 60);
        CHECK(r.census == Census{{ElementType::B1, 24}, {ElementType::B2, 20}, {ElementType::C, 15}});
    }
    {
        const VerifyReport r = verify_family(make_ctx(13), parse_params(13, FamilyId::P34, "a=2,e=28,m=3"));
        CHECK(r.ok());
        CHECK(r.census == Census{{ElementType::A, 3}, {ElementType::B1, 24}, {ElementType::B2, 56}});
    }
    {
        const VerifyReport r = verify_family(make_ctx(16), parse_params(16, FamilyId::M2_PSL2F, "f=4,w=17"), 1000);
        CHECK(r.skipped);
        CHECK(r.ok());
    }
}

TEST_CASE("every small tuple agrees with its closure") {
    for (const std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        const FieldCtx ctx = make_ctx(q);
        for (const FamilyId f : kAllFamilies)
            for (const FamilyParams& p : enumerate(q, f)) {
                CAPTURE(q);
                CAPTURE(format_params(p));
                const VerifyReport r = verify_family(ctx, p);
                CHECK(r.ok());
                if (r.skipped) continue;
                const FamilyGroup g = generators(ctx, p);
                CHECK(fixed_point_mismatches(ctx, g.gram, close_group(ctx, g.gram, g.generators)).empty());
            }
    }
}

}

TEST_SUITE("subgroups") {

TEST_CASE("subgroup lattice of the triangle stabilizer") {
    // counts from an independent brute force over monomial matrices
    for (const auto& [q, count] : std::vector<std::pair<std::int64_t, std::size_t>>{{3, 114}, {4, 96}}) {
        CAPTURE(q);
        const auto subs = triangle_stabilizer_subgroups(make_ctx(q));
        CHECK(subs.size() == count);
        std::size_t full = 0, trivial = 0;
        for (const SubgroupSummary& s : subs) {
            CHECK(6 * (q + 1) * (q + 1) % s.order == 0);
            if (s.order == 1) {
                ++trivial;
                CHECK(s.genus == q * (q - 1) / 2);
            }
            if (s.order == 6 * (q + 1) * (q + 1)) {
                ++full;
                CHECK(s.genus == 0);
            }
        }
        CHECK(full == 1);
        CHECK(trivial == 1);
    }
    CHECK_THROWS_AS(triangle_stabilizer_subgroups(make_ctx(9)), CapacityError);
}

}
