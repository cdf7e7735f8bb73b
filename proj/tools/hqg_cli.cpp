// Command-line front end: genus spectra, single tuples, oracle verification, element
// classification and the published table of genera.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hqg/errors.hpp"
#include "hqg/families.hpp"
#include "hqg/gf.hpp"
#include "hqg/oracle.hpp"
#include "hqg/parallel.hpp"
#include "hqg/pgu.hpp"
#include "hqg/spectrum.hpp"

namespace {

using namespace hqg;
using json = nlohmann::ordered_json;

enum Exit : int { kOk = 0, kFailure = 1, kUsage = 2, kInvalidParams = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::int64_t q = 0;
    std::string family = "all";
    std::string params;
    std::string format = "table";
    std::string model;
    std::string matrix;
    std::int64_t budget = kDefaultClosureCap;
    unsigned jobs = 0;
};

PrimePower require_prime_power(std::int64_t q) {
    const auto pp = as_prime_power(q);
    if (!pp) throw UsageError(std::to_string(q) + " is not a prime power");
    return *pp;
}

std::vector<FamilyId> parse_filter(const std::string& s) {
    std::vector<FamilyId> out;
    if (s.empty() || s == "all") return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(parse_family(item));
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        }
    }
    return out;
}

FamilyId single_family(const std::string& s) {
    const auto f = parse_filter(s);
    if (f.size() != 1) throw UsageError("--family must name exactly one family");
    return f.front();
}

std::vector<FamilyId> families_or_all(const std::vector<FamilyId>& filter) {
    if (!filter.empty()) return filter;
    return {kAllFamilies.begin(), kAllFamilies.end()};
}

json params_json(const FamilyParams& p) {
    json j = json::object();
    for (const auto& name : param_names(p.family)) {
        if (name == "v") j["v"] = p.v;
        else if (p.has(name)) j[name] = p.get(name);
    }
    return j;
}

std::string census_string(const std::map<ElementType, std::int64_t>& census) {
    std::string s;
    for (const auto& [t, c] : census) {
        if (!s.empty()) s += ' ';
        s += to_string(t) + ":" + std::to_string(c);
    }
    return s.empty() ? "-" : s;
}

int cmd_spectrum(const Options& o) {
    require_prime_power(o.q);
    const auto entries = compute_spectrum(o.q, parse_filter(o.family), o.jobs);
    if (o.format == "json") {
        std::cout << spectrum_json(o.q, entries, 2) << '\n';
    } else if (o.format == "csv") {
        std::cout << spectrum_csv(entries);
    } else {
        std::cout << "q = " << o.q << ": " << entries.size() << " distinct genera\n";
        for (const auto& e : entries) {
            const Witness& w = e.witnesses.front();
            std::cout << std::setw(10) << e.genus << "  " << std::setw(5) << e.witnesses.size() << " witness(es), e.g. "
                      << to_string(w.params.family) << " " << format_params(w.params) << " |G|=" << w.group_order
                      << '\n';
        }
    }
    return kOk;
}

int cmd_genus(const Options& o) {
    require_prime_power(o.q);
    const FamilyId f = single_family(o.family);
    GenusRecord rec{};
    try {
        const FamilyParams p = parse_params(o.q, f, o.params);
        if (!applicable(f, o.q)) throw DomainError(to_string(f) + " does not apply to q = " + std::to_string(o.q));
        const Validity v = validate(o.q, p);
        if (!v.ok) throw DomainError("invalid parameters: " + v.reason);
        rec = genus(o.q, p);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalidParams;
    }
    if (o.format == "json") {
        json j{{"q", o.q},
               {"family", to_string(f)},
               {"params", params_json(rec.params)},
               {"params_string", format_params(rec.params)},
               {"genus", rec.genus},
               {"group_order", rec.group_order}};
        std::cout << j.dump(2) << '\n';
    } else if (o.format == "csv") {
        std::cout << "q,family,params,genus,group_order\n"
                  << o.q << ',' << to_string(f) << ",\"" << format_params(rec.params) << "\"," << rec.genus << ','
                  << rec.group_order << '\n';
    } else {
        std::cout << to_string(f) << " " << format_params(rec.params) << " at q = " << o.q << ": genus " << rec.genus
                  << ", |G| = " << rec.group_order << '\n';
    }
    return kOk;
}

int cmd_enumerate(const Options& o) {
    require_prime_power(o.q);
    const FamilyId f = single_family(o.family);
    const auto tuples = enumerate(o.q, f);
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& p : tuples) {
            const GenusRecord r = genus(o.q, p);
            arr.push_back({{"params", params_json(p)},
                           {"params_string", format_params(p)},
                           {"genus", r.genus},
                           {"group_order", r.group_order}});
        }
        std::cout << json{{"q", o.q}, {"family", to_string(f)}, {"tuples", arr}}.dump(2) << '\n';
    } else if (o.format == "csv") {
        std::cout << "params,genus,group_order\n";
        for (const auto& p : tuples) {
            const GenusRecord r = genus(o.q, p);
            std::cout << '"' << format_params(p) << "\"," << r.genus << ',' << r.group_order << '\n';
        }
    } else {
        std::cout << to_string(f) << " at q = " << o.q << ": " << tuples.size() << " tuple(s)\n";
        for (const auto& p : tuples) {
            const GenusRecord r = genus(o.q, p);
            std::cout << "  " << format_params(p) << "  genus " << r.genus << "  |G| " << r.group_order << '\n';
        }
    }
    return kOk;
}

int cmd_verify(const Options& o) {
    const PrimePower pp = require_prime_power(o.q);
    const std::int64_t q2 = o.q * o.q;
    if (q2 > kOracleMaxQ2) {
        std::cout << "q = " << o.q << ": q^2 = " << q2 << " exceeds the oracle field budget " << kOracleMaxQ2
                  << "; families at this q are formula-only, nothing verified\n";
        return kOk;
    }
    const FieldCtx ctx(pp.p, pp.n);
    std::vector<FamilyParams> tuples;
    for (const FamilyId f : families_or_all(parse_filter(o.family)))
        for (auto& p : enumerate(o.q, f)) tuples.push_back(std::move(p));

    std::vector<VerifyReport> reports(tuples.size());
    parallel_for(tuples.size(), o.jobs, [&](std::size_t i) { reports[i] = verify_family(ctx, tuples[i], o.budget); });

    std::size_t ok = 0, skipped = 0, failed = 0;
    for (const auto& r : reports) {
        if (r.skipped) ++skipped;
        else if (r.ok()) ++ok;
        else ++failed;
    }
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& r : reports) {
            json census = json::object();
            for (const auto& [t, c] : r.census) census[to_string(t)] = c;
            arr.push_back({{"family", to_string(r.params.family)},
                           {"params", format_params(r.params)},
                           {"skipped", r.skipped},
                           {"group_order", r.expected_order},
                           {"closure_order", r.closure_order},
                           {"formula_genus", r.formula_genus},
                           {"oracle_genus", r.oracle_genus},
                           {"order_ok", r.order_ok},
                           {"census_ok", r.census_ok},
                           {"genus_ok", r.genus_ok},
                           {"census", census},
                           {"problems", r.problems}});
        }
        std::cout << json{{"q", o.q}, {"ok", ok}, {"skipped", skipped}, {"failed", failed}, {"reports", arr}}.dump(2)
                  << '\n';
    } else if (o.format == "csv") {
        std::cout << "family,params,group_order,formula_genus,oracle_genus,status\n";
        for (const auto& r : reports)
            std::cout << to_string(r.params.family) << ",\"" << format_params(r.params) << "\"," << r.expected_order
                      << ',' << r.formula_genus << ',' << r.oracle_genus << ','
                      << (r.skipped ? "skipped" : r.ok() ? "ok" : "FAIL") << '\n';
    } else {
        for (const auto& r : reports) {
            if (r.skipped) {
                std::cout << "skip " << std::left << std::setw(18) << to_string(r.params.family) << std::setw(28)
                          << format_params(r.params) << std::right << " |G|=" << std::setw(6) << r.expected_order
                          << " g=" << r.formula_genus << "  (not closed)\n";
                continue;
            }
            std::cout << (r.ok() ? "ok   " : "FAIL ") << std::left << std::setw(18) << to_string(r.params.family)
                      << std::setw(28) << format_params(r.params) << std::right << " |G|=" << std::setw(6)
                      << r.closure_order << " g=" << r.oracle_genus << "  " << census_string(r.census) << '\n';
            for (const auto& msg : r.problems) std::cout << "     " << msg << '\n';
        }
        std::cout << "q = " << o.q << ": " << ok << " ok, " << failed << " failed, " << skipped
                  << " skipped (group order above budget " << o.budget << ")\n";
    }
    return failed == 0 ? kOk : kFailure;
}

int cmd_classify(const Options& o) {
    const PrimePower pp = require_prime_power(o.q);
    const FieldCtx ctx(pp.p, pp.n);
    Model model = o.q % 2 == 0 ? Model::Model3 : Model::Fermat;
    ProjMatrix m;
    try {
        if (!o.model.empty()) model = parse_model(o.model);
        m = ProjMatrix::normalize(ctx, parse_matrix(ctx, o.matrix));
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    const GramForm gram = make_gram(ctx, model);
    if (!is_unitary(ctx, gram, m)) {
        std::cerr << "matrix is not in PGU(3," << o.q << ") for " << to_string(model) << '\n';
        return kFailure;
    }
    if (m.is_identity()) throw UsageError("the identity has no type");
    const ElementClass c = classify(ctx, m);
    const bool tame = c.order % ctx.p() != 0;
    const std::int64_t fixed = tame ? fixed_points_on_curve(ctx, m, gram) : -1;
    if (o.format == "json") {
        json j{{"q", o.q},
               {"model", to_string(model)},
               {"matrix", format_matrix(ctx, m.entries())},
               {"type", to_string(c.type)},
               {"contribution", c.contribution},
               {"order", c.order},
               {"rational_eigenvalues", c.rational_eigenvalues},
               {"repeated_eigenvalue", c.repeated_eigenvalue},
               {"max_eigenspace_dim", c.max_eigenspace_dim}};
        if (tame) j["fixed_points_on_curve"] = fixed;
        std::cout << j.dump(2) << '\n';
    } else if (o.format == "csv") {
        std::cout << "type,contribution,order,fixed_points_on_curve\n"
                  << to_string(c.type) << ',' << c.contribution << ',' << c.order << ',' << (tame ? std::to_string(fixed) : "")
                  << '\n';
    } else {
        std::cout << "type " << to_string(c.type) << ", i = " << c.contribution << ", order " << c.order
                  << ", rational eigenvalues " << c.rational_eigenvalues
                  << (c.repeated_eigenvalue ? " (repeated)" : "") << ", largest eigenspace " << c.max_eigenspace_dim;
        if (tame) std::cout << ", fixed points on curve " << fixed;
        std::cout << '\n';
    }
    return kOk;
}

int cmd_table1(const Options& o) {
    const auto results = check_table1(parse_filter(o.family), o.jobs);
    bool all = true;
    for (const auto& r : results) all = all && r.present;
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& r : results) {
            json j{{"q", r.q}, {"label", r.label}, {"genus", r.genus}, {"present", r.present}};
            if (r.witness)
                j["witness"] = {{"family", to_string(r.witness->params.family)},
                                {"params", format_params(r.witness->params)},
                                {"group_order", r.witness->group_order}};
            arr.push_back(j);
        }
        std::cout << json{{"all_present", all}, {"values", arr}}.dump(2) << '\n';
    } else if (o.format == "csv") {
        // one row per q
        std::cout << "q,label,present,absent\n";
        for (const auto& row : table1()) {
            std::string present, absent;
            for (const auto& r : results) {
                if (r.q != row.q) continue;
                std::string& dst = r.present ? present : absent;
                if (!dst.empty()) dst += ' ';
                dst += std::to_string(r.genus);
            }
            std::cout << row.q << ',' << row.label << ",\"" << present << "\",\"" << absent << "\"\n";
        }
    } else {
        for (const auto& r : results) {
            std::cout << std::left << std::setw(5) << r.label << std::right << std::setw(8) << r.genus << "  "
                      << (r.present ? "PRESENT" : "ABSENT ");
            if (r.witness)
                std::cout << "  " << to_string(r.witness->params.family) << " " << format_params(r.witness->params)
                          << " |G|=" << r.witness->group_order;
            std::cout << '\n';
        }
        std::cout << (all ? "all values present\n" : "some values ABSENT\n");
    }
    return all ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Genera of quotients of the Hermitian curve by subgroups of PGU(3,q)"};
    app.require_subcommand(1);
    Options o;

    auto add_q = [&](CLI::App* sub) { sub->add_option("-q", o.q, "prime power q")->required(); };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "table, json or csv")
            ->check(CLI::IsMember({"table", "json", "csv"}));
    };
    auto add_jobs = [&](CLI::App* sub) { sub->add_option("--jobs", o.jobs, "worker threads (0 = all cores)"); };

    auto* spectrum = app.add_subcommand("spectrum", "genus spectrum with witnesses");
    add_q(spectrum);
    spectrum->add_option("--family", o.family, "family id, comma list or all");
    add_format(spectrum);
    add_jobs(spectrum);

    auto* genus_cmd = app.add_subcommand("genus", "genus of one parameter tuple");
    add_q(genus_cmd);
    genus_cmd->add_option("--family", o.family, "family id")->required();
    genus_cmd->add_option("--params", o.params, "e.g. a=2,b=2,c=2,e=12,v=0:1")->required();
    add_format(genus_cmd);

    auto* verify = app.add_subcommand("verify", "check formulas against the matrix-group oracle");
    add_q(verify);
    verify->add_option("--family", o.family, "family id, comma list or all");
    verify->add_option("--budget", o.budget, "largest group order to close")->check(CLI::PositiveNumber);
    add_format(verify);
    add_jobs(verify);

    auto* classify_cmd = app.add_subcommand("classify", "type of one element of PGU(3,q)");
    add_q(classify_cmd);
    classify_cmd->add_option("matrix,--matrix", o.matrix, "rows ';'-separated, entries ',' e.g. g^3,0,0;0,1,0;0,0,1")
        ->required();
    classify_cmd->add_option("--model", o.model, "MODEL1 or MODEL3 (default: MODEL3 for q even, else MODEL1)");
    add_format(classify_cmd);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "all valid tuples of one family");
    add_q(enumerate_cmd);
    enumerate_cmd->add_option("--family", o.family, "family id")->required();
    add_format(enumerate_cmd);

    auto* table = app.add_subcommand("table1", "membership of the published genera");
    table->add_option("--family", o.family, "restrict to these families");
    add_format(table);
    add_jobs(table);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*spectrum) return cmd_spectrum(o);
        if (*genus_cmd) return cmd_genus(o);
        if (*verify) return cmd_verify(o);
        if (*classify_cmd) return cmd_classify(o);
        if (*enumerate_cmd) return cmd_enumerate(o);
        if (*table) return cmd_table1(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << '\n';
        return kFailure;
    } catch (const ConsistencyError& e) {
        std::cerr << "internal consistency error: " << e.what() << '\n';
        return kFailure;
    }
    return kUsage;
}
