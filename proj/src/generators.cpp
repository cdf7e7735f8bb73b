#include <algorithm>
#include <set>
#include <utility>

#include "hqg/errors.hpp"
#include "hqg/families.hpp"

namespace hqg {
namespace {

using FE = FieldElement;

class Builder {
public:
    Builder(const FieldCtx& ctx, Model model) : ctx_(ctx), group_{make_gram(ctx, model), {}} {}

    /// Element of order exactly m; m must divide q^2 - 1.
    FE root(std::int64_t m) const { return ctx_.root_of_unity(m); }
    /// Element of F_q* of order exactly d.
    FE fq_root(std::int64_t d) const { return ctx_.pow(theta(), (ctx_.q() - 1) / d); }
    /// Primitive element of F_q.
    FE theta() const { return ctx_.pow(ctx_.gen(), ctx_.q() + 1); }

    void add(const Mat3& m) {
        const ProjMatrix pm = ProjMatrix::normalize(ctx_, m);
        if (!pm.is_identity()) group_.generators.push_back(pm);
    }
    void add_diag(FE a, FE b) { add(diag(a, b, FE::one())); }
    /// 2x2 block on the first two coordinates.
    void add_block(FE a, FE b, FE c, FE d) {
        const FE z = FE::zero();
        add({a, b, z, c, d, z, z, z, FE::one()});
    }
    void add_transvection(FE b) { add_block(FE::one(), b, FE::zero(), FE::one()); }
    void add_block_swap() { add_block(FE::zero(), FE::one(), FE::one(), FE::zero()); }
    void add_block_diag(FE t) { add_block(t, FE::zero(), FE::zero(), ctx_.inv(t)); }
    /// Homologies with centre the third coordinate point, order w.
    void add_omega(std::int64_t w) {
        if (w > 1) add_diag(root(w), root(w));
    }

    FamilyGroup take() { return std::move(group_); }

private:
    const FieldCtx& ctx_;
    FamilyGroup group_;
};

// Order of the subgroup of Z_N x Z_N generated by gens, and how many of its nonzero
// elements lie on the three coordinate axes (x = 0, y = 0 or x = y).
std::pair<std::int64_t, std::int64_t> diag_group_shape(std::int64_t N,
                                                       const std::vector<std::pair<std::int64_t, std::int64_t>>& gens) {
    std::set<std::pair<std::int64_t, std::int64_t>> seen{{0, 0}};
    std::vector<std::pair<std::int64_t, std::int64_t>> frontier{{0, 0}};
    while (!frontier.empty()) {
        const auto [x, y] = frontier.back();
        frontier.pop_back();
        for (const auto& [gx, gy] : gens) {
            const std::pair<std::int64_t, std::int64_t> nxt{(x + gx) % N, (y + gy) % N};
            if (seen.insert(nxt).second) frontier.push_back(nxt);
        }
    }
    std::int64_t hom = 0;
    for (const auto& [x, y] : seen)
        if ((x || y) && (x == 0 || y == 0 || x == y)) ++hom;
    return {static_cast<std::int64_t>(seen.size()), hom};
}

// Order of rho in D = <diag(rho, rho^-1, 1)> such that <A, C, D> has order e with exactly
// 2a + c - 3 homologies.
std::int64_t index2_rho_order(std::int64_t q, std::int64_t a, std::int64_t c, std::int64_t e) {
    const std::int64_t N = q + 1;
    std::vector<std::int64_t> cands;
    if (e % c == 0) cands.push_back(e / c);
    if (e % a == 0) cands.push_back(e / a);
    for (const std::int64_t t : divisors(N)) cands.push_back(t);
    for (const std::int64_t t : cands) {
        if (!divides(t, N)) continue;
        const auto [order, hom] =
            diag_group_shape(N, {{N / a, 0}, {N / c, N / c}, {N / t, (N - N / t) % N}});
        if (order == e && hom == 2 * a + c - 3) return t;
    }
    throw ConsistencyError("no diag(rho, rho^-1, 1) gives the index-2 pointwise stabilizer of order " +
                           std::to_string(e));
}

}  // namespace

FamilyGroup generators(const FieldCtx& ctx, const FamilyParams& p) {
    const std::int64_t q = ctx.q();
    const Validity v = validate(q, p);
    if (!v.ok) throw DomainError("invalid " + to_string(p.family) + " parameters: " + v.reason);
    Builder b(ctx, model_of(p.family));
    const FE one = FE::one(), zero = FE::zero();
    const std::int64_t w = p.has("w") ? p.get("w") : 1;

    auto index2 = [&](std::int64_t a, std::int64_t c, std::int64_t e, FE t) {
        b.add_diag(b.root(a), one);
        b.add_diag(b.root(c), b.root(c));
        const FE rho = b.root(index2_rho_order(q, a, c, e));
        b.add_diag(rho, ctx.inv(rho));
        b.add({zero, t, zero, one, zero, zero, zero, zero, one});
    };
    auto index3 = [&](std::int64_t a, std::int64_t e, std::int64_t m, FE t) {
        b.add_diag(b.root(a), one);
        b.add_diag(one, b.root(a));
        const FE rho = b.root(e / (a * a));
        b.add_diag(rho, ctx.pow(rho, m));
        b.add({zero, t, zero, zero, zero, one, one, zero, zero});
    };

    switch (p.family) {
        case FamilyId::T31: {
            const std::int64_t a = p.get("a"), bb = p.get("b"), c = p.get("c");
            b.add_diag(b.root(a), one);
            b.add_diag(one, b.root(bb));
            b.add_diag(b.root(c), b.root(c));
            const PrimeFactorization f = factorize(q + 1);
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (p.v[i] == 0) continue;
                const std::int64_t pr = f[i].prime;
                const int s = valuation(a, pr), t = valuation(bb, pr), u = valuation(c, pr);
                const int m = std::max({s, t, u});
                const FE zeta = b.root(ipow(pr, p.v[i] + m));
                const std::int64_t pm = ipow(pr, m);
                if (s == t && t == u) b.add_diag(zeta, ctx.inv(zeta));
                else if (m == s) b.add_diag(zeta, ctx.pow(zeta, pm));
                else if (m == t) b.add_diag(ctx.pow(zeta, pm), zeta);
                else if (pr == 2) b.add_diag(zeta, ctx.pow(zeta, 1 + pm));
                else b.add_diag(ctx.pow(zeta, 1 + pm), ctx.pow(zeta, 1 - pm));
            }
            break;
        }
        case FamilyId::P32: index2(p.get("a"), p.get("c"), p.get("e"), one); break;
        case FamilyId::P33: index2(p.get("a"), p.get("c"), p.get("e"), b.root(p.get("l"))); break;
        case FamilyId::P34: index3(p.get("a"), p.get("e"), p.get("m"), one); break;
        case FamilyId::P35: index3(p.get("a"), p.get("e"), p.get("m"), b.root(p.get("l"))); break;
        case FamilyId::P36: {
            const std::int64_t a = p.get("a"), e = p.get("e");
            b.add_diag(b.root(a), one);
            b.add_diag(one, b.root(a));
            if (e == 3 * a * a) b.add_diag(b.root(3), ctx.inv(b.root(3)));
            b.add({zero, one, zero, zero, zero, one, one, zero, zero});
            b.add({zero, one, zero, one, zero, zero, zero, zero, one});
            break;
        }
        case FamilyId::M2_PSL22_EVEN_N:
        case FamilyId::M2_PSL22_SPLIT:
            b.add_block_swap();
            b.add_transvection(one);
            b.add_omega(w);
            break;
        case FamilyId::M2_PSL22_NONSPLIT:
            index2(ipow(3, valuation(w, 3)), w, 3 * w, one);
            break;
        case FamilyId::M2_CYC_QM:
        case FamilyId::M2_DIH_QM:
            b.add_block_diag(b.fq_root(p.get("d")));
            if (p.family == FamilyId::M2_DIH_QM) b.add_block_swap();
            b.add_omega(w);
            break;
        case FamilyId::M2_EAB: {
            const std::int64_t f = p.get("f");
            const int n = ctx.n();
            // F_2-basis of an f-dimensional subspace of F_q: the subfield F_{2^f} when it exists
            const FE base = (n % f == 0) ? b.fq_root((std::int64_t{1} << f) - 1) : b.theta();
            for (std::int64_t i = 0; i < f; ++i) b.add_transvection(ctx.pow(base, i));
            b.add_omega(w);
            break;
        }
        case FamilyId::M2_A4: {
            const FE t = b.fq_root(3);
            b.add_transvection(one);
            b.add_transvection(t);
            b.add_block_diag(t);
            b.add_omega(w);
            break;
        }
        case FamilyId::M2_A5: {
            b.add_transvection(one);
            b.add_block_swap();
            b.add_block_diag(b.fq_root(3));
            b.add_omega(w);
            break;
        }
        case FamilyId::M2_EABSD: {
            const std::int64_t f = p.get("f");
            const std::int64_t g = gcd(f, ctx.n());
            // F_{2^g}-span of 1, theta, ..., theta^{f/g - 1}: invariant under the torus part
            const FE gamma = b.fq_root((std::int64_t{1} << g) - 1);
            for (std::int64_t j = 0; j < f / g; ++j)
                for (std::int64_t i = 0; i < g; ++i)
                    b.add_transvection(ctx.mul(ctx.pow(gamma, i), ctx.pow(b.theta(), j)));
            b.add_block_diag(b.fq_root(p.get("d")));
            b.add_omega(w);
            break;
        }
        case FamilyId::M2_PSL2F: {
            const std::int64_t f = p.get("f");
            const FE beta = b.fq_root((std::int64_t{1} << f) - 1);
            for (std::int64_t i = 0; i < f; ++i) b.add_transvection(ctx.pow(beta, i));
            b.add_block_swap();
            b.add_omega(w);
            break;
        }
        case FamilyId::M2_OMEGA: b.add_omega(w); break;
        case FamilyId::M2_CYC_QP: {
            const FE lambda = b.root(p.get("d"));
            b.add_diag(lambda, ctx.inv(lambda));
            b.add_omega(w);
            break;
        }
        case FamilyId::M2_DIH_QP: index2(1, w, p.get("d") * w, one); break;
    }
    return b.take();
}

}  // namespace hqg
