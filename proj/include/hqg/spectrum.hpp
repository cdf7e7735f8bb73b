#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hqg/families.hpp"

namespace hqg {

struct Witness {
    FamilyParams params;
    std::int64_t group_order;
};

struct SpectrumEntry {
    std::int64_t genus;
    /// Every tuple producing this genus, ordered by family then parameters.
    std::vector<Witness> witnesses;
};

/// Genus spectrum of the requested families (all if empty) at q, ascending by genus.
/// Families that do not apply to q are skipped. Throws DomainError if q is not a prime power.
std::vector<SpectrumEntry> compute_spectrum(std::int64_t q, const std::vector<FamilyId>& families = {},
                                            unsigned jobs = 0);

struct Table1Row {
    std::int64_t q;
    std::string label;
    std::vector<std::int64_t> genera;
};

/// The published list of genera, per q.
const std::vector<Table1Row>& table1();

struct Table1Result {
    std::int64_t q;
    std::string label;
    std::int64_t genus;
    bool present;
    std::optional<Witness> witness;
};

std::vector<Table1Result> check_table1(const std::vector<FamilyId>& families = {}, unsigned jobs = 0);

/// {"q": .., "entries": [{"genus": .., "witnesses": [{"family", "params", "group_order"}]}]}
std::string spectrum_json(std::int64_t q, const std::vector<SpectrumEntry>& entries, int indent = -1);
/// Header plus one row per (genus, family, params, group_order).
std::string spectrum_csv(const std::vector<SpectrumEntry>& entries);

}  // namespace hqg
