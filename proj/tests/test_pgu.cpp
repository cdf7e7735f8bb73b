#include <random>

#include "doctest.h"
#include "hqg/errors.hpp"
#include "hqg/oracle.hpp"
#include "hqg/pgu.hpp"
#include "support.hpp"

using namespace hqg;
using hqg::testing::make_ctx;

namespace {

const FieldElement kZero = FieldElement::zero();
const FieldElement kOne = FieldElement::one();

ProjMatrix pm(const FieldCtx& ctx, const Mat3& m) { return ProjMatrix::normalize(ctx, m); }

}  // namespace

TEST_SUITE("pgu") {

TEST_CASE("normalize") {
    const FieldCtx ctx = make_ctx(5);
    CHECK(ProjMatrix().is_identity());
    CHECK(pm(ctx, identity_mat()).is_identity());
    const FieldElement two = ctx.from_int(2), g = ctx.gen();
    CHECK(pm(ctx, diag(two, two, two)).is_identity());
    CHECK(pm(ctx, diag(g, g, ctx.mul(g, g))) == pm(ctx, diag(kOne, kOne, g)));
    CHECK_THROWS_AS(pm(ctx, diag(kOne, kZero, kOne)), DomainError);
}

TEST_CASE("unitarity") {
    const FieldCtx ctx = make_ctx(7);
    const GramForm fermat = make_gram(ctx, Model::Fermat);
    const FieldElement l = ctx.root_of_unity(8), m = ctx.root_of_unity(4);
    CHECK(is_unitary(ctx, fermat, ProjMatrix()));
    CHECK(is_unitary(ctx, fermat, pm(ctx, diag(l, m, kOne))));
    CHECK_FALSE(is_unitary(ctx, fermat, pm(ctx, diag(ctx.gen(), kOne, kOne))));
}

TEST_CASE("projective order") {
    const FieldCtx ctx = make_ctx(8);
    CHECK(proj_order(ctx, ProjMatrix()) == 1);
    CHECK(proj_order(ctx, pm(ctx, diag(ctx.root_of_unity(9), kOne, kOne))) == 9);
    CHECK(proj_order(ctx, pm(ctx, {kZero, kOne, kZero, kZero, kZero, kOne, kOne, kZero, kZero})) == 3);
}

TEST_CASE("contribution table") {
    const std::int64_t q = 11;
    CHECK(contribution(ElementType::A, q) == 12);
    CHECK(contribution(ElementType::B1, q) == 0);
    CHECK(contribution(ElementType::B2, q) == 2);
    CHECK(contribution(ElementType::B3, q) == 3);
    CHECK(contribution(ElementType::C, q) == 13);
    CHECK(contribution(ElementType::D, q) == 2);
    CHECK(contribution(ElementType::E, q) == 1);
    for (const ElementType t : kAllTypes) CHECK(parse_element_type(to_string(t)) == t);
}

TEST_CASE("classify diagonal elements") {
    const FieldCtx ctx = make_ctx(13);
    const GramForm fermat = make_gram(ctx, Model::Fermat);
    const FieldElement l = ctx.root_of_unity(7), m = ctx.root_of_unity(14);

    const ProjMatrix hom = pm(ctx, diag(l, l, kOne));
    const ElementClass a = classify(ctx, hom);
    CHECK(a.type == ElementType::A);
    CHECK(a.contribution == 14);
    CHECK(a.order == 7);
    CHECK(fixed_points_on_curve(ctx, hom, fermat) == 14);
    const auto centre = homology_center(ctx, hom);
    REQUIRE(centre);
    CHECK(*centre == Vec3{kZero, kZero, kOne});

    const ProjMatrix b1 = pm(ctx, diag(l, m, kOne));
    CHECK(classify(ctx, b1).type == ElementType::B1);
    CHECK(classify(ctx, b1).contribution == 0);
    CHECK(fixed_points_on_curve(ctx, b1, fermat) == 0);
    CHECK_FALSE(homology_center(ctx, b1));

    CHECK_THROWS_AS(classify(ctx, ProjMatrix()), DomainError);
}

TEST_CASE("classify in the second model") {
    const FieldCtx ctx = make_ctx(4);
    const GramForm m3 = make_gram(ctx, Model::Model3);
    const FieldElement c = ctx.pow(ctx.gen(), 5);  // in F_4
    REQUIRE(ctx.in_subfield(c));
    const ProjMatrix elation = pm(ctx, {kOne, kZero, kZero, c, kOne, kZero, kZero, kZero, kOne});
    CHECK(is_unitary(ctx, m3, elation));
    const ElementClass e = classify(ctx, elation);
    CHECK(e.type == ElementType::C);
    CHECK(e.contribution == 6);
    CHECK(e.max_eigenspace_dim == 2);
    CHECK_THROWS_AS(fixed_points_on_curve(ctx, elation, m3), DomainError);

    // diag(l, l^-q, 1) preserves the hyperbolic pair; order 3 divides q-1, not q+1
    const FieldElement l = ctx.root_of_unity(3);
    const ProjMatrix b2 = pm(ctx, diag(l, ctx.inv(ctx.conj(l)), kOne));
    CHECK(is_unitary(ctx, m3, b2));
    CHECK(classify(ctx, b2).type == ElementType::B2);
    CHECK(fixed_points_on_curve(ctx, b2, m3) == 2);
}

TEST_CASE("cubic roots") {
    const FieldCtx ctx = make_ctx(4);
    const FieldElement one = kOne;
    // x^3 - 1 splits: 3 | q^2 - 1
    CHECK(cubic_roots(ctx, kZero, kZero, one).size() == 3);
    // (x - 1)^3 = x^3 + x^2 + x + 1 in characteristic 2
    CHECK(cubic_roots(ctx, one, one, one).size() == 1);
}

TEST_CASE("matrix literals") {
    const FieldCtx ctx = make_ctx(9);
    const Mat3 m = parse_matrix(ctx, "1,0,g^3;0,g,0;g^79,0,1");
    CHECK(m[2] == ctx.pow(ctx.gen(), 3));
    CHECK(m[6] == ctx.pow(ctx.gen(), 79));
    CHECK(parse_matrix(ctx, format_matrix(ctx, m)) == m);
    CHECK_THROWS_AS(parse_matrix(ctx, "1,0;0,1"), DomainError);
    CHECK(parse_model("MODEL3") == Model::Model3);
    CHECK(parse_model("1") == Model::Fermat);
}

TEST_CASE("group laws on random unitaries") {
    std::mt19937_64 rng(11);
    for (const std::int64_t q : {3, 4, 5, 8, 9}) {
        CAPTURE(q);
        const FieldCtx ctx = make_ctx(q);
        for (const Model model : {Model::Fermat, Model::Model3}) {
            if (model == Model::Model3 && q % 2) continue;
            const GramForm gram = make_gram(ctx, model);
            for (int t = 0; t < 40; ++t) {
                const ProjMatrix a = pm(ctx, hqg::testing::random_unitary(ctx, model, rng));
                const ProjMatrix b = pm(ctx, hqg::testing::random_unitary(ctx, model, rng));
                REQUIRE(is_unitary(ctx, gram, a));
                CHECK(is_unitary(ctx, gram, multiply(ctx, a, b)));
                CHECK(multiply(ctx, a, inverse(ctx, a)).is_identity());
                const std::int64_t o = proj_order(ctx, a);
                CHECK(power(ctx, a, o).is_identity());
                CHECK(det(ctx, mat_mul(ctx, a.entries(), b.entries())) ==
                      ctx.mul(det(ctx, a.entries()), det(ctx, b.entries())));
            }
        }
    }
}

TEST_CASE("classification is a conjugacy invariant") {
    std::mt19937_64 rng(12);
    for (const std::int64_t q : {3, 4, 5, 7, 8}) {
        CAPTURE(q);
        const FieldCtx ctx = make_ctx(q);
        for (const Model model : {Model::Fermat, Model::Model3}) {
            if (model == Model::Model3 && q % 2) continue;
            const GramForm gram = make_gram(ctx, model);
            for (int t = 0; t < 60; ++t) {
                const ProjMatrix m = pm(ctx, hqg::testing::random_unitary(ctx, model, rng));
                if (m.is_identity()) continue;
                const ProjMatrix n = pm(ctx, hqg::testing::random_unitary(ctx, model, rng));
                const ElementClass x = classify(ctx, m), y = classify(ctx, hqg::testing::conjugate(ctx, m, n));
                CHECK(x.type == y.type);
                CHECK(x.order == y.order);
                if (x.order % ctx.p() != 0) CHECK(fixed_points_on_curve(ctx, m, gram) == x.contribution);
            }
        }
    }
}

TEST_CASE("census of the full unitary group") {
    std::mt19937_64 rng(13);
    for (const std::int64_t q : {2, 3}) {
        CAPTURE(q);
        const FieldCtx ctx = make_ctx(q);
        const GramForm gram = make_gram(ctx, Model::Fermat);
        std::vector<ProjMatrix> gens;
        for (int t = 0; t < 4; ++t) gens.push_back(pm(ctx, hqg::testing::random_unitary(ctx, Model::Fermat, rng)));
        const GroupClosure g = close_group(ctx, gram, gens);
        REQUIRE(g.order() == q * q * q * (q * q * q + 1) * (q * q - 1));
        // homologies: q per point off the curve; elations: q-1 per point on it
        CHECK(g.census.at(ElementType::A) == q * (q * q * q * q - q * q * q + q * q));
        CHECK(g.census.at(ElementType::C) == (q * q * q + 1) * (q - 1));
        CHECK(genus_from_census(q, g) == 0);
        CHECK(fixed_point_mismatches(ctx, gram, g).empty());
        std::int64_t total = 0;
        for (const auto& [type, count] : g.census) total += count;
        CHECK(total == g.order() - 1);
    }
}

}
