#include "hqg/oracle.hpp"

#include <algorithm>
#include <unordered_set>

#include "hqg/errors.hpp"

namespace hqg {

GroupClosure close_group(const FieldCtx& ctx, const GramForm& gram, const std::vector<ProjMatrix>& generators,
                         std::int64_t cap) {
    for (const ProjMatrix& g : generators)
        if (!is_unitary(ctx, gram, g))
            throw DomainError("close_group: generator " + format_matrix(ctx, g.entries()) + " is not unitary under " +
                              to_string(gram.model));

    std::unordered_set<ProjMatrix, ProjMatrixHash> seen{ProjMatrix{}};
    std::vector<ProjMatrix> order{ProjMatrix{}};
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (const ProjMatrix& g : generators) {
            ProjMatrix next = multiply(ctx, order[head], g);
            if (!seen.insert(next).second) continue;
            if (static_cast<std::int64_t>(order.size()) >= cap)
                throw CapacityError("close_group: more than " + std::to_string(cap) + " elements");
            order.push_back(next);
        }
    }

    GroupClosure out;
    out.elements = std::move(order);
    std::sort(out.elements.begin(), out.elements.end());
    out.classes.resize(out.elements.size());
    for (std::size_t i = 0; i < out.elements.size(); ++i) {
        const ProjMatrix& m = out.elements[i];
        if (m.is_identity()) continue;
        const ElementClass cls = classify(ctx, m);
        out.classes[i] = cls;
        ++out.census[cls.type];
        if (cls.type == ElementType::A) {
            const auto centre = homology_center(ctx, m);
            if (!centre) throw ConsistencyError("close_group: type-A element without a centre");
            ++out.homology_centers[*centre];
        }
    }
    return out;
}

std::int64_t different_degree(std::int64_t q, const std::map<ElementType, std::int64_t>& census) {
    std::int64_t delta = 0;
    for (const auto& [type, count] : census) delta += count * contribution(type, q);
    return delta;
}

std::int64_t genus_from_census(std::int64_t q, const std::map<ElementType, std::int64_t>& census,
                               std::int64_t order) {
    if (order < 1) throw DomainError("genus_from_census: empty group");
    const wide Q = q;
    const wide num = (Q * Q - Q - 2) - different_degree(q, census);
    const wide g = exact_div(num, 2 * wide{order}, "Riemann-Hurwitz genus") + 1;
    if (g < 0 || g > Q * (Q - 1) / 2) throw ConsistencyError("Riemann-Hurwitz genus out of range: " + to_string(g));
    return static_cast<std::int64_t>(g);
}

std::int64_t genus_from_census(std::int64_t q, const GroupClosure& closure) {
    return genus_from_census(q, closure.census, closure.order());
}

std::vector<std::size_t> fixed_point_mismatches(const FieldCtx& ctx, const GramForm& gram,
                                                const GroupClosure& closure) {
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < closure.elements.size(); ++i) {
        const auto& cls = closure.classes[i];
        if (!cls || cls->order % ctx.p() == 0) continue;
        if (fixed_points_on_curve(ctx, closure.elements[i], gram) != cls->contribution) bad.push_back(i);
    }
    return bad;
}

VerifyReport verify_family(const FieldCtx& ctx, const FamilyParams& params, std::int64_t budget) {
    const std::int64_t q = ctx.q();
    VerifyReport r;
    r.params = params;
    const GenusRecord rec = genus(q, params);
    r.expected_order = rec.group_order;
    r.formula_genus = rec.genus;
    if (rec.group_order > budget) {
        r.skipped = true;
        r.skip_reason = "group order " + std::to_string(rec.group_order) + " exceeds budget " + std::to_string(budget);
        return r;
    }

    const FamilyGroup fg = generators(ctx, params);
    GroupClosure closure;
    try {
        closure = close_group(ctx, fg.gram, fg.generators, std::max(budget, rec.group_order));
    } catch (const CapacityError& e) {
        r.problems.push_back(std::string("closure larger than expected: ") + e.what());
        return r;
    } catch (const ConsistencyError& e) {
        r.problems.push_back(std::string("classifier: ") + e.what());
        return r;
    }
    r.closure_order = closure.order();
    r.census = closure.census;
    r.order_ok = r.closure_order == r.expected_order;
    if (!r.order_ok)
        r.problems.push_back("order " + std::to_string(r.closure_order) + ", expected " +
                             std::to_string(r.expected_order));

    const ExpectedCensus expect = expected_census(q, params);
    r.census_ok = true;
    for (const auto& [type, count] : expect.types) {
        const auto it = closure.census.find(type);
        const std::int64_t got = it == closure.census.end() ? 0 : it->second;
        if (got != count) {
            r.census_ok = false;
            r.problems.push_back("type " + to_string(type) + ": " + std::to_string(got) + ", expected " +
                                 std::to_string(count));
        }
    }
    for (int i = 0; i < 3; ++i) {
        if (!expect.vertex_homologies[i]) continue;
        Vec3 vertex{FieldElement::zero(), FieldElement::zero(), FieldElement::zero()};
        vertex[i] = FieldElement::one();
        const auto it = closure.homology_centers.find(vertex);
        const std::int64_t got = it == closure.homology_centers.end() ? 0 : it->second;
        if (got != *expect.vertex_homologies[i]) {
            r.census_ok = false;
            r.problems.push_back("homologies with centre at vertex " + std::to_string(i + 1) + ": " +
                                 std::to_string(got) + ", expected " + std::to_string(*expect.vertex_homologies[i]));
        }
    }

    try {
        r.oracle_genus = genus_from_census(q, closure);
        r.genus_ok = r.oracle_genus == r.formula_genus;
        if (!r.genus_ok)
            r.problems.push_back("oracle genus " + std::to_string(r.oracle_genus) + ", formula " +
                                 std::to_string(r.formula_genus));
    } catch (const ConsistencyError& e) {
        r.problems.push_back(e.what());
    }
    return r;
}

}  // namespace hqg
