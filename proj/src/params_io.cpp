#include <algorithm>
#include <charconv>
#include <string>
#include <vector>

#include "hqg/errors.hpp"
#include "hqg/families.hpp"

namespace hqg {
namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view s, std::string_view key) {
    s = trim(s);
    std::int64_t x = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw DomainError("parameter " + std::string(key) + ": '" + std::string(s) + "' is not an integer");
    return x;
}

}  // namespace

FamilyParams parse_params(std::int64_t q, FamilyId family, std::string_view text) {
    FamilyParams p;
    p.family = family;
    const auto& names = param_names(family);
    bool have_v = false;
    if (!trim(text).empty()) {
        for (const std::string_view item : split(text, ',')) {
            const std::size_t eq = item.find('=');
            if (eq == std::string_view::npos) throw DomainError("expected name=value, got '" + std::string(item) + "'");
            const std::string key(trim(item.substr(0, eq)));
            const std::string_view val = item.substr(eq + 1);
            if (std::find(names.begin(), names.end(), key) == names.end())
                throw DomainError("unknown parameter '" + key + "' for " + to_string(family));
            if (key == "v") {
                if (have_v) throw DomainError("parameter v given twice");
                have_v = true;
                for (const std::string_view part : split(val, ':'))
                    p.v.push_back(static_cast<int>(parse_int(part, "v")));
                continue;
            }
            if (p.has(key)) throw DomainError("parameter " + key + " given twice");
            p.values[key] = parse_int(val, key);
        }
    }

    if (family == FamilyId::T31) {
        const PrimeFactorization f = factorize(q + 1);
        if (!have_v) p.v.assign(f.size(), 0);
        if (!p.has("e") && p.has("a") && p.has("b") && p.has("c") && p.v.size() == f.size()) {
            const std::int64_t a = p.get("a"), b = p.get("b"), c = p.get("c");
            if (a > 0 && b > 0 && c > 0) {
                std::int64_t e = a * b * c / gcd(a, b);
                for (std::size_t i = 0; i < f.size(); ++i) e *= ipow(f[i].prime, std::max(p.v[i], 0));
                p.values["e"] = e;
            }
        }
    }
    if ((family == FamilyId::P34 || family == FamilyId::P35) && !p.has("m") && p.has("a") && p.has("e")) {
        const std::int64_t a = p.get("a"), e = p.get("e");
        if (a > 0 && e > 0 && e % (a * a) == 0) {
            const std::int64_t n3 = e / (a * a);
            for (std::int64_t m = 1; m <= n3; ++m)
                if ((m * m - m + 1) % n3 == 0) {
                    p.values["m"] = m;
                    break;
                }
        }
    }
    return p;
}

std::string format_params(const FamilyParams& p) {
    std::string s;
    for (const std::string& name : param_names(p.family)) {
        if (name == "v") {
            if (!s.empty()) s += ',';
            s += "v=";
            for (std::size_t i = 0; i < p.v.size(); ++i) {
                if (i) s += ':';
                s += std::to_string(p.v[i]);
            }
            continue;
        }
        const auto it = p.values.find(name);
        if (it == p.values.end()) continue;
        if (!s.empty()) s += ',';
        s += name + "=" + std::to_string(it->second);
    }
    return s;
}

}  // namespace hqg
