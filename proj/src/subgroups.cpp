#include "hqg/subgroups.hpp"

#include <set>
#include <unordered_map>

#include "hqg/errors.hpp"
#include "hqg/oracle.hpp"

namespace hqg {
namespace {

using Bits = std::vector<std::uint64_t>;

bool test(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1u; }
void set(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

}  // namespace

std::vector<SubgroupSummary> triangle_stabilizer_subgroups(const FieldCtx& ctx) {
    const std::int64_t q = ctx.q();
    if (6 * (q + 1) * (q + 1) > kSubgroupSearchCap)
        throw CapacityError("triangle stabilizer of order " + std::to_string(6 * (q + 1) * (q + 1)) +
                            " is too large for exhaustive subgroup search");
    const GramForm gram = make_gram(ctx, Model::Fermat);
    const FieldElement z = FieldElement::zero(), o = FieldElement::one(), zeta = ctx.root_of_unity(q + 1);
    const std::vector<ProjMatrix> gens{
        ProjMatrix::normalize(ctx, diag(zeta, o, o)),
        ProjMatrix::normalize(ctx, diag(o, zeta, o)),
        ProjMatrix::normalize(ctx, {z, o, z, z, z, o, o, z, z}),
        ProjMatrix::normalize(ctx, {z, o, z, o, z, z, z, z, o}),
    };
    const GroupClosure full = close_group(ctx, gram, gens, kSubgroupSearchCap);
    const std::size_t n = full.elements.size();
    const std::size_t words = (n + 63) / 64;

    std::unordered_map<ProjMatrix, std::size_t, ProjMatrixHash> index;
    for (std::size_t i = 0; i < n; ++i) index[full.elements[i]] = i;
    std::vector<std::size_t> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            table[i * n + j] = index.at(multiply(ctx, full.elements[i], full.elements[j]));

    // closure of a set already containing the identity, by multiplying with its generators
    auto close = [&](const std::vector<std::size_t>& gen) {
        Bits b(words, 0);
        std::vector<std::size_t> members;
        const std::size_t id = index.at(ProjMatrix{});
        set(b, id);
        members.push_back(id);
        for (std::size_t h = 0; h < members.size(); ++h)
            for (const std::size_t g : gen) {
                const std::size_t k = table[members[h] * n + g];
                if (!test(b, k)) {
                    set(b, k);
                    members.push_back(k);
                }
            }
        return b;
    };

    // cyclic subgroups first; every subgroup is a join of cyclic ones
    std::set<Bits> cyclic_set;
    for (std::size_t i = 0; i < n; ++i) cyclic_set.insert(close({i}));
    std::vector<std::pair<Bits, std::size_t>> cyclic;
    for (std::size_t i = 0; i < n; ++i) {
        const Bits b = close({i});
        if (cyclic_set.erase(b)) cyclic.emplace_back(b, i);
    }

    std::set<Bits> found;
    std::vector<std::pair<Bits, std::vector<std::size_t>>> queue;
    const Bits trivial = close({});
    found.insert(trivial);
    queue.emplace_back(trivial, std::vector<std::size_t>{});
    for (std::size_t h = 0; h < queue.size(); ++h) {
        const Bits cur = queue[h].first;
        const std::vector<std::size_t> cur_gens = queue[h].second;
        for (const auto& [cb, x] : cyclic) {
            if (test(cur, x)) continue;
            std::vector<std::size_t> g = cur_gens;
            g.push_back(x);
            Bits nb = close(g);
            if (found.insert(nb).second) queue.emplace_back(std::move(nb), std::move(g));
        }
    }

    std::vector<SubgroupSummary> out;
    for (const Bits& b : found) {
        SubgroupSummary s{0, {}, 0};
        for (std::size_t i = 0; i < n; ++i) {
            if (!test(b, i)) continue;
            ++s.order;
            if (full.classes[i]) ++s.census[full.classes[i]->type];
        }
        s.genus = genus_from_census(q, s.census, s.order);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace hqg
