#include "hqg/spectrum.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "hqg/errors.hpp"
#include "hqg/parallel.hpp"

namespace hqg {

std::vector<SpectrumEntry> compute_spectrum(std::int64_t q, const std::vector<FamilyId>& families, unsigned jobs) {
    if (!as_prime_power(q)) throw DomainError(std::to_string(q) + " is not a prime power");
    std::vector<FamilyId> todo;
    for (const FamilyId f : families.empty() ? std::vector<FamilyId>(kAllFamilies.begin(), kAllFamilies.end())
                                             : families)
        if (applicable(f, q) && std::find(todo.begin(), todo.end(), f) == todo.end()) todo.push_back(f);
    std::sort(todo.begin(), todo.end());

    std::vector<std::vector<GenusRecord>> per_family(todo.size());
    parallel_for(todo.size(), jobs, [&](std::size_t i) {
        for (FamilyParams& p : enumerate(q, todo[i])) per_family[i].push_back(genus(q, p));
    });

    std::size_t total = 0;
    for (const auto& v : per_family) total += v.size();
    if (static_cast<std::int64_t>(total) > kEnumerationCap)
        throw CapacityError("spectrum at q = " + std::to_string(q) + " exceeds " + std::to_string(kEnumerationCap) +
                            " tuples");

    std::map<std::int64_t, std::vector<Witness>> by_genus;
    for (auto& v : per_family)
        for (GenusRecord& rec : v) by_genus[rec.genus].push_back({std::move(rec.params), rec.group_order});
    std::vector<SpectrumEntry> out;
    for (auto& [g, ws] : by_genus) {
        std::sort(ws.begin(), ws.end(), [](const Witness& a, const Witness& b) { return a.params < b.params; });
        out.push_back({g, std::move(ws)});
    }
    return out;
}

const std::vector<Table1Row>& table1() {
    static const std::vector<Table1Row> rows{
        {13, "13", {1}},
        {32, "2^5", {20, 55}},
        {128, "2^7", {22, 133, 287, 420, 903, 904}},
        {243, "3^5", {10, 161, 280, 590, 1180, 2420}},
        {2187, "3^7", {91, 1457, 24661, 49595, 99190, 198926}},
        {125, "5^3", {17, 39, 46, 63, 91, 134, 210, 211, 273, 274, 369, 630, 631, 861}},
    };
    return rows;
}

std::vector<Table1Result> check_table1(const std::vector<FamilyId>& families, unsigned jobs) {
    std::vector<Table1Result> out;
    for (const Table1Row& row : table1()) {
        const auto spectrum = compute_spectrum(row.q, families, jobs);
        for (const std::int64_t g : row.genera) {
            Table1Result r{row.q, row.label, g, false, std::nullopt};
            const auto it = std::lower_bound(spectrum.begin(), spectrum.end(), g,
                                             [](const SpectrumEntry& e, std::int64_t x) { return e.genus < x; });
            if (it != spectrum.end() && it->genus == g) {
                r.present = true;
                r.witness = it->witnesses.front();
            }
            out.push_back(std::move(r));
        }
    }
    return out;
}

namespace {

nlohmann::ordered_json params_json(const FamilyParams& p) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const std::string& name : param_names(p.family)) {
        if (name == "v") {
            j["v"] = p.v;
        } else if (p.has(name)) {
            j[name] = p.get(name);
        }
    }
    return j;
}

}  // namespace

std::string spectrum_json(std::int64_t q, const std::vector<SpectrumEntry>& entries, int indent) {
    nlohmann::ordered_json root;
    root["q"] = q;
    root["entries"] = nlohmann::ordered_json::array();
    for (const SpectrumEntry& e : entries) {
        nlohmann::ordered_json je;
        je["genus"] = e.genus;
        je["witnesses"] = nlohmann::ordered_json::array();
        for (const Witness& w : e.witnesses) {
            nlohmann::ordered_json jw;
            jw["family"] = to_string(w.params.family);
            jw["params"] = params_json(w.params);
            jw["params_string"] = format_params(w.params);
            jw["group_order"] = w.group_order;
            je["witnesses"].push_back(std::move(jw));
        }
        root["entries"].push_back(std::move(je));
    }
    return root.dump(indent);
}

std::string spectrum_csv(const std::vector<SpectrumEntry>& entries) {
    std::ostringstream os;
    os << "genus,family,params,group_order\n";
    for (const SpectrumEntry& e : entries)
        for (const Witness& w : e.witnesses)
            os << e.genus << ',' << to_string(w.params.family) << ",\"" << format_params(w.params) << "\","
               << w.group_order << '\n';
    return os.str();
}

}  // namespace hqg
