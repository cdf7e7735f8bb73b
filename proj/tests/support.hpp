#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "hqg/gf.hpp"
#include "hqg/numthy.hpp"
#include "hqg/pgu.hpp"

namespace hqg::testing {

inline FieldCtx make_ctx(std::int64_t q) {
    const auto pp = as_prime_power(q);
    if (!pp) throw std::invalid_argument("not a prime power");
    return FieldCtx(pp->p, pp->n);
}

inline FieldElement random_element(const FieldCtx& ctx, std::mt19937_64& rng, bool nonzero = false) {
    std::uniform_int_distribution<std::int64_t> d(nonzero ? 0 : -1, ctx.group_order() - 1);
    const std::int64_t k = d(rng);
    return k < 0 ? FieldElement::zero() : FieldElement::from_log(k);
}

inline FieldElement norm(const FieldCtx& ctx, FieldElement x) { return ctx.mul(x, ctx.conj(x)); }

// [[a, b], [-b^q, a^q]] with N(a) + N(b) = 1, placed on coordinates (i, j).
inline Mat3 random_su2_block(const FieldCtx& ctx, std::mt19937_64& rng, int i, int j) {
    while (true) {
        const FieldElement a = random_element(ctx, rng), b = random_element(ctx, rng);
        if (!ctx.add(norm(ctx, a), norm(ctx, b)).is_one()) continue;
        Mat3 m = identity_mat();
        m[3 * i + i] = a;
        m[3 * i + j] = b;
        m[3 * j + i] = ctx.neg(ctx.conj(b));
        m[3 * j + j] = ctx.conj(a);
        return m;
    }
}

// Homology I - c v v^(q)T with centre v off the curve and c = (1 - z)/<v,v>, z^{q+1} = 1.
inline Mat3 random_homology(const FieldCtx& ctx, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> d(0, ctx.q());
    while (true) {
        const Vec3 v{random_element(ctx, rng), random_element(ctx, rng), random_element(ctx, rng)};
        const FieldElement h = ctx.add(ctx.add(norm(ctx, v[0]), norm(ctx, v[1])), norm(ctx, v[2]));
        if (h.is_zero()) continue;
        const FieldElement z = FieldElement::from_log(d(rng) * (ctx.q() - 1));
        const FieldElement c = ctx.div(ctx.sub(FieldElement::one(), z), h);
        Mat3 m = identity_mat();
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m[3 * i + j] = ctx.sub(m[3 * i + j], ctx.mul(c, ctx.mul(v[i], ctx.conj(v[j]))));
        return m;
    }
}

/// Random element of PGU(3,q) for B = I: a diagonal torus element, embedded SU(2) blocks and a
/// homology (the blocks alone are monomial at q = 2).
inline Mat3 random_fermat_unitary(const FieldCtx& ctx, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> d(0, ctx.q());
    const std::int64_t step = ctx.q() - 1;
    Mat3 m = diag(FieldElement::from_log(d(rng) * step), FieldElement::from_log(d(rng) * step), FieldElement::one());
    m = mat_mul(ctx, m, random_homology(ctx, rng));
    constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (int round = 0; round < 2; ++round)
        for (const auto& pr : kPairs) m = mat_mul(ctx, m, random_su2_block(ctx, rng, pr[0], pr[1]));
    return m;
}

/// T with T^T T^(q) = B for the model-3 Gram matrix (q even).
inline Mat3 model3_frame(const FieldCtx& ctx) {
    FieldElement y = FieldElement::zero();
    bool found = false;
    ctx.for_each_element([&](FieldElement x) {
        if (!found && ctx.add(ctx.add(FieldElement::one(), x), ctx.conj(x)).is_zero()) {
            y = x;
            found = true;
        }
    });
    if (!found) throw std::logic_error("no y with 1 + y + y^q = 0");
    const FieldElement o = FieldElement::one(), z = FieldElement::zero();
    // columns (0,1,1), (0,y,1+y), (1,0,0)
    return {z, z, o, o, y, z, o, ctx.add(o, y), z};
}

inline Mat3 random_unitary(const FieldCtx& ctx, Model model, std::mt19937_64& rng) {
    const Mat3 u = random_fermat_unitary(ctx, rng);
    if (model == Model::Fermat) return u;
    const ProjMatrix t = ProjMatrix::normalize(ctx, model3_frame(ctx));
    return multiply(ctx, multiply(ctx, inverse(ctx, t), ProjMatrix::normalize(ctx, u)), t).entries();
}

inline ProjMatrix conjugate(const FieldCtx& ctx, const ProjMatrix& m, const ProjMatrix& by) {
    return multiply(ctx, multiply(ctx, inverse(ctx, by), m), by);
}

inline std::vector<std::int64_t> prime_powers_up_to(std::int64_t limit) {
    std::vector<std::int64_t> out;
    for (std::int64_t q = 2; q <= limit; ++q)
        if (as_prime_power(q)) out.push_back(q);
    return out;
}

}  // namespace hqg::testing
