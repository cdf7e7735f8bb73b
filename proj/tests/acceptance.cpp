// Acceptance harness: one PASS/FAIL line per criterion, exit status 1 if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hqg/errors.hpp"
#include "hqg/families.hpp"
#include "hqg/oracle.hpp"
#include "hqg/spectrum.hpp"
#include "hqg/subgroups.hpp"
#include "support.hpp"

using namespace hqg;
using hqg::testing::make_ctx;

namespace {

const std::vector<std::int64_t> kOracleQs{3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27};

struct Outcome {
    bool pass = true;
    std::string detail;
};

Outcome table1_membership() {
    std::int64_t total = 0, present = 0;
    std::string missing;
    for (const Table1Result& r : check_table1()) {
        ++total;
        if (r.present) ++present;
        else missing += " " + r.label + ":" + std::to_string(r.genus);
    }
    std::size_t listed = 0;
    for (const Table1Row& row : table1()) listed += row.genera.size();
    return {present == total && total == static_cast<std::int64_t>(listed) && listed == 35,
            std::to_string(present) + "/" + std::to_string(total) + " values present" +
                (missing.empty() ? "" : ", missing" + missing)};
}

Outcome genus_one_witnesses() {
    bool p34 = false, p36 = false;
    for (const SpectrumEntry& e : compute_spectrum(13))
        if (e.genus == 1)
            for (const Witness& w : e.witnesses) {
                p34 |= w.params.family == FamilyId::P34;
                p36 |= w.params.family == FamilyId::P36;
            }
    return {p34 && p36, std::string("q=13 genus 1: P34 ") + (p34 ? "yes" : "no") + ", P36 " + (p36 ? "yes" : "no")};
}

Outcome formula_oracle() {
    std::int64_t checked = 0, skipped = 0;
    std::string first_failure;
    for (const std::int64_t q : kOracleQs) {
        const FieldCtx ctx = make_ctx(q);
        for (const FamilyId f : kAllFamilies)
            for (const FamilyParams& p : enumerate(q, f)) {
                const VerifyReport r = verify_family(ctx, p);
                if (r.skipped) {
                    ++skipped;
                    continue;
                }
                ++checked;
                if (!r.ok() && first_failure.empty())
                    first_failure = "q=" + std::to_string(q) + " " + to_string(f) + " " + format_params(p) +
                                    (r.problems.empty() ? "" : ": " + r.problems.front());
            }
    }
    return {first_failure.empty() && checked > 0,
            std::to_string(checked) + " tuples closed, " + std::to_string(skipped) + " above the order budget" +
                (first_failure.empty() ? "" : "; first failure " + first_failure)};
}

Outcome endpoint_identities() {
    std::vector<std::int64_t> qs = kOracleQs;
    for (const Table1Row& row : table1()) qs.push_back(row.q);
    std::int64_t checks = 0;
    std::string bad;
    auto expect = [&](bool ok, const std::string& what) {
        ++checks;
        if (!ok && bad.empty()) bad = what;
    };
    for (const std::int64_t q : qs) {
        const std::string tag = "q=" + std::to_string(q);
        const std::int64_t n1 = q + 1;
        expect(genus(q, parse_params(q, FamilyId::T31, "a=1,b=1,c=1")).genus == q * (q - 1) / 2, tag + " trivial");
        const std::string torus = "a=" + std::to_string(n1) + ",b=" + std::to_string(n1) + ",c=" + std::to_string(n1);
        expect(genus(q, parse_params(q, FamilyId::T31, torus)).genus == 0, tag + " torus");
        for (const std::int64_t w : divisors(n1)) {
            const std::int64_t closed = 1 + (q + 1) * (q - w - 1) / (2 * w);
            const std::string ws = std::to_string(w);
            expect((q + 1) * (q - w - 1) % (2 * w) == 0, tag + " w=" + ws + " integrality");
            expect(genus(q, parse_params(q, FamilyId::T31, "a=1,b=1,c=" + ws)).genus == closed, tag + " w=" + ws);
            if (applicable(FamilyId::M2_OMEGA, q))
                expect(genus(q, parse_params(q, FamilyId::M2_OMEGA, "w=" + ws)).genus == closed,
                       tag + " M2_OMEGA w=" + ws);
        }
    }
    return {bad.empty(), std::to_string(checks) + " identities" + (bad.empty() ? "" : ", first failure " + bad)};
}

Outcome classifier_soundness() {
    std::int64_t elements = 0, conjugations = 0;
    std::string bad;
    std::mt19937_64 rng(20260418);
    for (const std::int64_t q : kOracleQs) {
        const FieldCtx ctx = make_ctx(q);
        // (element, model) pool for the conjugation test
        std::vector<std::pair<ProjMatrix, Model>> pool;
        for (const FamilyId f : kAllFamilies)
            for (const FamilyParams& p : enumerate(q, f)) {
                if (group_order(q, p) > kDefaultClosureCap) continue;
                const FamilyGroup fg = generators(ctx, p);
                const GroupClosure g = close_group(ctx, fg.gram, fg.generators);
                elements += g.order();
                const auto mism = fixed_point_mismatches(ctx, fg.gram, g);
                if (!mism.empty() && bad.empty())
                    bad = "q=" + std::to_string(q) + " " + to_string(f) + " " + format_params(p) +
                          ": fixed points disagree with the contribution";
                for (std::size_t i = 0; i < g.elements.size(); i += 1 + g.elements.size() / 16)
                    if (!g.elements[i].is_identity()) pool.emplace_back(g.elements[i], fg.gram.model);
            }
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        for (int trial = 0; trial < 1000; ++trial) {
            const auto& [m, model] = pool[pick(rng)];
            const ProjMatrix n = ProjMatrix::normalize(ctx, hqg::testing::random_unitary(ctx, model, rng));
            const ProjMatrix c = hqg::testing::conjugate(ctx, m, n);
            ++conjugations;
            const ElementClass before = classify(ctx, m), after = classify(ctx, c);
            const GramForm gram = make_gram(ctx, model);
            bool same = is_unitary(ctx, gram, n) && is_unitary(ctx, gram, c) && before.type == after.type &&
                        before.order == after.order;
            if (same && before.order % ctx.p() != 0)
                same = fixed_points_on_curve(ctx, m, gram) == fixed_points_on_curve(ctx, c, gram);
            if (!same && bad.empty()) bad = "q=" + std::to_string(q) + ": conjugation changed the class";
        }
    }
    return {bad.empty(), std::to_string(elements) + " group elements, " + std::to_string(conjugations) +
                             " random conjugations" + (bad.empty() ? "" : "; " + bad)};
}

Outcome integrality_sweep() {
    std::int64_t qs = 0, genera = 0;
    std::string bad;
    for (const std::int64_t q : hqg::testing::prime_powers_up_to(2187)) {
        ++qs;
        try {
            for (const SpectrumEntry& e : compute_spectrum(q)) {
                ++genera;
                if ((e.genus < 0 || e.genus > q * (q - 1) / 2) && bad.empty())
                    bad = "q=" + std::to_string(q) + " genus " + std::to_string(e.genus) + " out of range";
            }
        } catch (const std::exception& e) {
            if (bad.empty()) bad = "q=" + std::to_string(q) + ": " + e.what();
        }
    }
    return {bad.empty(), std::to_string(qs) + " prime powers, " + std::to_string(genera) + " distinct (q, genus) pairs" +
                             (bad.empty() ? "" : "; " + bad)};
}

Outcome subgroup_necessity() {
    std::string detail, bad;
    for (const std::int64_t q : {3, 4}) {
        std::set<std::int64_t> formula;
        for (const SpectrumEntry& e : compute_spectrum(
                 q, {FamilyId::T31, FamilyId::P32, FamilyId::P33, FamilyId::P34, FamilyId::P35, FamilyId::P36}))
            formula.insert(e.genus);
        const FieldCtx ctx = make_ctx(q);
        const auto subs = triangle_stabilizer_subgroups(ctx);
        std::set<std::int64_t> seen;
        for (const SubgroupSummary& s : subs) {
            seen.insert(s.genus);
            if (!formula.count(s.genus) && bad.empty())
                bad = "q=" + std::to_string(q) + " subgroup of order " + std::to_string(s.order) + " has genus " +
                      std::to_string(s.genus) + " not in the spectrum";
        }
        if (!detail.empty()) detail += ", ";
        detail += "q=" + std::to_string(q) + ": " + std::to_string(subs.size()) + " subgroups, " +
                  std::to_string(seen.size()) + " genera";
    }
    return {bad.empty(), detail + (bad.empty() ? "" : "; " + bad)};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"table1-membership", table1_membership},
        {"q13-genus1-witnesses", genus_one_witnesses},
        {"formula-oracle-equivalence", formula_oracle},
        {"endpoint-identities", endpoint_identities},
        {"classifier-soundness", classifier_soundness},
        {"integrality-sweep", integrality_sweep},
        {"subgroup-necessity", subgroup_necessity},
    };
    int failed = 0;
    int index = 0;
    for (const Criterion& c : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %d %-28s %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str(), secs);
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
