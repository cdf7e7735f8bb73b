#include "hqg/families.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "hqg/errors.hpp"

namespace hqg {
namespace {

struct FamilyInfo {
    FamilyId id;
    const char* name;
    std::vector<std::string> params;
};

const std::vector<FamilyInfo>& info_table() {
    static const std::vector<FamilyInfo> table{
        {FamilyId::T31, "T31", {"a", "b", "c", "e", "v"}},
        {FamilyId::P32, "P32", {"a", "c", "e"}},
        {FamilyId::P33, "P33", {"l", "a", "c", "e"}},
        {FamilyId::P34, "P34", {"a", "e", "m"}},
        {FamilyId::P35, "P35", {"a", "e", "l", "m"}},
        {FamilyId::P36, "P36", {"a", "e"}},
        {FamilyId::M2_PSL22_EVEN_N, "M2_PSL22_EVEN_N", {"w"}},
        {FamilyId::M2_PSL22_SPLIT, "M2_PSL22_SPLIT", {"w"}},
        {FamilyId::M2_PSL22_NONSPLIT, "M2_PSL22_NONSPLIT", {"w"}},
        {FamilyId::M2_CYC_QM, "M2_CYC_QM", {"d", "w"}},
        {FamilyId::M2_EAB, "M2_EAB", {"f", "w"}},
        {FamilyId::M2_DIH_QM, "M2_DIH_QM", {"d", "w"}},
        {FamilyId::M2_A4, "M2_A4", {"w"}},
        {FamilyId::M2_A5, "M2_A5", {"w"}},
        {FamilyId::M2_EABSD, "M2_EABSD", {"f", "d", "w"}},
        {FamilyId::M2_PSL2F, "M2_PSL2F", {"f", "w"}},
        {FamilyId::M2_OMEGA, "M2_OMEGA", {"w"}},
        {FamilyId::M2_CYC_QP, "M2_CYC_QP", {"d", "w"}},
        {FamilyId::M2_DIH_QP, "M2_DIH_QP", {"d", "w"}},
    };
    return table;
}

const FamilyInfo& info(FamilyId f) {
    for (const auto& i : info_table())
        if (i.id == f) return i;
    throw ConsistencyError("unknown family id");
}

struct QInfo {
    std::int64_t q;
    std::int64_t p;
    int n;
    std::int64_t N;  // q + 1
    PrimeFactorization fact;  // of q + 1
};

QInfo qinfo(std::int64_t q) {
    const auto pp = as_prime_power(q);
    if (!pp) throw DomainError(std::to_string(q) + " is not a prime power");
    return {q, pp->p, pp->n, q + 1, factorize(q + 1)};
}

Validity bad(std::string reason) { return {false, std::move(reason)}; }

std::string str(std::int64_t x) { return std::to_string(x); }

FamilyParams make(FamilyId f, std::initializer_list<std::pair<const std::string, std::int64_t>> kv) {
    FamilyParams p;
    p.family = f;
    p.values = kv;
    return p;
}

// Orders a, b, c, e of the diagonal group generated by homologies with centre the third
// vertex (order w) and diag(x, x^-1, 1) (order d); exponents are taken modulo q+1.
struct DiagShape {
    std::int64_t a, b, c, e;
};

DiagShape cyc_qp_shape(std::int64_t N, std::int64_t d, std::int64_t w) {
    std::set<std::pair<std::int64_t, std::int64_t>> elems;
    const std::int64_t sw = N / w, sd = N / d;
    for (std::int64_t i = 0; i < w; ++i)
        for (std::int64_t j = 0; j < d; ++j) {
            const std::int64_t x = (i * sw + j * sd) % N;
            const std::int64_t y = ((i * sw - j * sd) % N + N) % N;
            elems.insert({x, y});
        }
    DiagShape s{0, 0, 0, static_cast<std::int64_t>(elems.size())};
    for (const auto& [x, y] : elems) {
        if (y == 0) ++s.a;
        if (x == 0) ++s.b;
        if (x == y) ++s.c;
    }
    return s;
}

Validity check_positive(const FamilyParams& params) {
    const auto& names = info(params.family).params;
    for (const auto& [k, val] : params.values) {
        if (std::find(names.begin(), names.end(), k) == names.end())
            return bad("unknown parameter '" + k + "' for " + to_string(params.family));
        if (val < 1) return bad("parameter " + k + " must be positive");
    }
    for (const auto& k : names)
        if (k != "v" && !params.has(k)) return bad("missing parameter " + k);
    if (params.family != FamilyId::T31 && !params.v.empty()) return bad("v is a T31 parameter");
    return {};
}

std::int64_t smallest_m(std::int64_t n3) {
    for (std::int64_t m = 1; m <= n3; ++m)
        if ((m * m - m + 1) % n3 == 0) return m;
    return 0;
}

Validity validate_t31(const QInfo& qi, const FamilyParams& p) {
    const std::int64_t a = p.get("a"), b = p.get("b"), c = p.get("c"), e = p.get("e");
    const std::int64_t N = qi.N;
    if (!divides(a, N)) return bad("a must divide q+1");
    if (!divides(b, N)) return bad("b must divide q+1");
    if (!divides(c, N)) return bad("c must divide q+1");
    if (p.v.size() != qi.fact.size())
        return bad("v needs one exponent per prime of q+1 (" + str(static_cast<std::int64_t>(qi.fact.size())) + ")");
    const bool abc_odd = (a % 2 != 0) && (b % 2 != 0) && (c % 2 != 0);
    const bool all_even = (a % 2 == 0) && (b % 2 == 0) && (c % 2 == 0);
    wide expect = static_cast<wide>(a) * b * c / gcd(a, b);
    for (std::size_t i = 0; i < qi.fact.size(); ++i) {
        const std::int64_t pr = qi.fact[i].prime;
        const int r = qi.fact[i].exponent;
        const int s = valuation(a, pr), t = valuation(b, pr), u = valuation(c, pr);
        if (s != t && u != std::min(s, t))
            return bad("exponent of " + str(pr) + " in c must be min of those in a and b");
        if (s == t && u < s) return bad("exponent of " + str(pr) + " in c must be at least that in a and b");
        const int vi = p.v[i];
        if (vi < 0 || vi > r - std::max({s, t, u}))
            return bad("v exponent for " + str(pr) + " out of range [0, " + str(r - std::max({s, t, u})) + "]");
        if (pr == 2 && vi > 0 && (abc_odd || all_even)) return bad("2-adic clause forces v = 0 at prime 2");
        expect *= ipow(pr, vi);
    }
    if (static_cast<wide>(e) != expect) return bad("e must equal abc/gcd(a,b) * prod p_i^v_i = " + to_string(expect));
    return {};
}

Validity validate_index2(const QInfo& qi, std::int64_t a, std::int64_t c, std::int64_t e) {
    const std::int64_t N = qi.N;
    if (!divides(e, N * N)) return bad("e must divide (q+1)^2");
    if (!divides(c, N)) return bad("c must divide q+1");
    if (!divides(a, c)) return bad("a must divide c");
    if (!divides(a * c, e)) return bad("ac must divide e");
    if (!divides(e / a, N)) return bad("e/a must divide q+1");
    if (gcd(e / (a * c), c / a) != 1) return bad("gcd(e/(ac), c/a) must be 1");
    return {};
}

Validity validate_index3(const QInfo& qi, std::int64_t a, std::int64_t e, std::int64_t m) {
    const std::int64_t N = qi.N;
    if (!divides(e, N * N)) return bad("e must divide (q+1)^2");
    if (!divides(a * a, e)) return bad("a^2 must divide e");
    if (!divides(e / a, N)) return bad("e/a must divide q+1");
    const std::int64_t n3 = e / (a * a);
    if (n3 % 2 == 0) return bad("e/a^2 must be odd");
    if (gcd(n3, a) != 1) return bad("gcd(e/a^2, a) must be 1");
    if (m < 1 || m > n3) return bad("m must lie in [1, e/a^2]");
    if ((m * m - m + 1) % n3 != 0) return bad("e/a^2 must divide m^2 - m + 1");
    return {};
}

std::int64_t pow2(std::int64_t f) { return std::int64_t{1} << f; }

}  // namespace

std::string to_string(FamilyId f) { return info(f).name; }

FamilyId parse_family(std::string_view s) {
    for (const auto& i : info_table())
        if (s == i.name) return i.id;
    throw DomainError("unknown family '" + std::string(s) + "'");
}

bool is_triangle_family(FamilyId f) {
    switch (f) {
        case FamilyId::T31:
        case FamilyId::P32:
        case FamilyId::P33:
        case FamilyId::P34:
        case FamilyId::P35:
        case FamilyId::P36: return true;
        default: return false;
    }
}

Model model_of(FamilyId f) {
    if (is_triangle_family(f)) return Model::Fermat;
    switch (f) {
        case FamilyId::M2_PSL22_NONSPLIT:
        case FamilyId::M2_OMEGA:
        case FamilyId::M2_CYC_QP:
        case FamilyId::M2_DIH_QP: return Model::Fermat;
        default: return Model::Model3;
    }
}

const std::vector<std::string>& param_names(FamilyId f) { return info(f).params; }

bool applicable(FamilyId f, std::int64_t q) {
    const bool even = q % 2 == 0;
    switch (f) {
        case FamilyId::T31:
        case FamilyId::P36: return true;
        case FamilyId::P32: return even;
        case FamilyId::P33: return !even;
        case FamilyId::P34: return (q + 1) % 3 != 0;
        case FamilyId::P35: return (q + 1) % 3 == 0;
        default: return even;
    }
}

std::int64_t FamilyParams::get(const std::string& name) const {
    const auto it = values.find(name);
    if (it == values.end()) throw DomainError("missing parameter " + name + " for " + to_string(family));
    return it->second;
}

Validity validate(std::int64_t q, const FamilyParams& p) {
    const QInfo qi = qinfo(q);
    if (!applicable(p.family, q))
        throw DomainError(to_string(p.family) + " does not apply to q = " + str(q));
    if (Validity v = check_positive(p); !v.ok) return v;
    const std::int64_t N = qi.N;
    const int n = qi.n;

    switch (p.family) {
        case FamilyId::T31: return validate_t31(qi, p);
        case FamilyId::P32: return validate_index2(qi, p.get("a"), p.get("c"), p.get("e"));
        case FamilyId::P33: {
            const std::int64_t a = p.get("a"), c = p.get("c"), e = p.get("e");
            if (Validity v = validate_index2(qi, a, c, e); !v.ok) return v;
            if (!divides(p.get("l"), c)) return bad("l must divide c");
            if ((a % 2 == 0 || c % 2 != 0) && (e / (a * c)) % 2 == 0)
                return bad("e/(ac) must be odd when a is even or c is odd");
            return {};
        }
        case FamilyId::P34: return validate_index3(qi, p.get("a"), p.get("e"), p.get("m"));
        case FamilyId::P35: {
            if (Validity v = validate_index3(qi, p.get("a"), p.get("e"), p.get("m")); !v.ok) return v;
            if (!divides(p.get("l"), N)) return bad("l must divide q+1");
            return {};
        }
        case FamilyId::P36: {
            const std::int64_t a = p.get("a"), e = p.get("e");
            if (!divides(a, N)) return bad("a must divide q+1");
            if (e == a * a) return {};
            if (e == 3 * a * a && N % 3 == 0 && a % 3 != 0) return {};
            return bad("e must be a^2, or 3a^2 when 3 | q+1 and 3 does not divide a");
        }
        default: break;
    }

    // pole-polar families, q even
    const std::int64_t w = p.get("w");
    if (!divides(w, N)) return bad("w must divide q+1");
    switch (p.family) {
        case FamilyId::M2_PSL22_EVEN_N:
            if (n % 2 != 0) return bad("n must be even");
            return {};
        case FamilyId::M2_PSL22_SPLIT:
            if (n % 2 == 0) return bad("n must be odd");
            if (w % 3 != 0) return bad("3 must divide w (otherwise the group is P32 with a = 1)");
            return {};
        case FamilyId::M2_PSL22_NONSPLIT: {
            if (n % 2 == 0) return bad("n must be odd");
            const int k = valuation(w, 3);
            if (k < 1) return bad("3 must divide w");
            if (!divides(ipow(3, k + 1), N)) return bad("3^(k+1) must divide q+1, 3^k the 3-part of w");
            return {};
        }
        case FamilyId::M2_CYC_QM:
        case FamilyId::M2_DIH_QM: {
            const std::int64_t d = p.get("d");
            if (d < 2) return bad("d must be at least 2");
            if (!divides(d, q - 1)) return bad("d must divide q-1");
            return {};
        }
        case FamilyId::M2_EAB: {
            const std::int64_t f = p.get("f");
            if (f > n) return bad("f must be at most n");
            return {};
        }
        case FamilyId::M2_A4:
        case FamilyId::M2_A5:
            if (n % 2 != 0) return bad("n must be even");
            return {};
        case FamilyId::M2_EABSD: {
            const std::int64_t f = p.get("f"), d = p.get("d");
            if (f > n) return bad("f must be at most n");
            if (d < 2) return bad("d must be at least 2");
            if (!divides(d, gcd(pow2(f) - 1, q - 1))) return bad("d must divide gcd(2^f - 1, q - 1)");
            return {};
        }
        case FamilyId::M2_PSL2F: {
            const std::int64_t f = p.get("f");
            if (f < 2) return bad("f must be at least 2");
            if (!divides(f, n)) return bad("f must divide n");
            return {};
        }
        case FamilyId::M2_OMEGA: return {};
        case FamilyId::M2_CYC_QP: {
            const std::int64_t d = p.get("d");
            if (d < 2) return bad("d must be at least 2");
            if (!divides(d, N)) return bad("d must divide q+1");
            return {};
        }
        case FamilyId::M2_DIH_QP: {
            const std::int64_t d = p.get("d");
            if (d < 2) return bad("d must be at least 2");
            if (!divides(d, N)) return bad("d must divide q+1");
            if (Validity v = validate_index2(qi, 1, w, d * w); !v.ok) return bad("as P32 (1, w, dw): " + v.reason);
            return {};
        }
        default: break;
    }
    throw ConsistencyError("validate: unhandled family");
}

std::int64_t group_order(std::int64_t q, const FamilyParams& p) {
    const std::int64_t w = p.has("w") ? p.get("w") : 1;
    switch (p.family) {
        case FamilyId::T31: return p.get("e");
        case FamilyId::P32:
        case FamilyId::P33: return 2 * p.get("e");
        case FamilyId::P34:
        case FamilyId::P35: return 3 * p.get("e");
        case FamilyId::P36: return 6 * p.get("e");
        case FamilyId::M2_PSL22_EVEN_N:
        case FamilyId::M2_PSL22_SPLIT:
        case FamilyId::M2_PSL22_NONSPLIT: return 6 * w;
        case FamilyId::M2_CYC_QM:
        case FamilyId::M2_CYC_QP: return p.get("d") * w;
        case FamilyId::M2_EAB: return pow2(p.get("f")) * w;
        case FamilyId::M2_DIH_QM:
        case FamilyId::M2_DIH_QP: return 2 * p.get("d") * w;
        case FamilyId::M2_A4: return 12 * w;
        case FamilyId::M2_A5: return 60 * w;
        case FamilyId::M2_EABSD: return pow2(p.get("f")) * p.get("d") * w;
        case FamilyId::M2_PSL2F: {
            const std::int64_t F = pow2(p.get("f"));
            return F * (F * F - 1) * w;
        }
        case FamilyId::M2_OMEGA: return w;
    }
    (void)q;
    throw ConsistencyError("group_order: unhandled family");
}

namespace {

wide t31_numerator(wide q, wide a, wide b, wide c, wide e, wide& den) {
    const wide d = a + b + c - 3;
    den = 2 * e;
    return (q + 1) * (q - 2 - d) + 2 * e;
}

wide p32_numerator(wide q, wide a, wide c, wide e, wide& den) {
    den = 4 * e;
    return (q + 1) * (q - 2 * a - c - e / c + 1) + 3 * e;
}

// (h, k): type-A and type-B2 counts among the elements swapping two vertices.
std::pair<wide, wide> p33_hk(std::int64_t q, std::int64_t l, std::int64_t a, std::int64_t c, std::int64_t e) {
    const std::int64_t N = q + 1;
    if (!divides(2 * a, N)) return {e / c, e / 2};
    if (!divides(2 * a, c)) return {e / c, 0};
    if (!divides(2 * l, N)) return {0, e};
    if (!divides(2 * l, c)) return {0, 0};
    return {2 * e / c, 0};
}

std::int64_t p35_h(std::int64_t q, std::int64_t a, std::int64_t l) {
    const std::int64_t third = (q + 1) / 3;
    if (!divides(a, third)) return 2;
    if (!divides(l, third)) return 0;
    return 6;
}

}  // namespace

GenusRecord genus(std::int64_t q, const FamilyParams& p) {
    const Validity v = validate(q, p);
    if (!v.ok) throw DomainError("invalid " + to_string(p.family) + " parameters: " + v.reason);
    const wide Q = q, N = q + 1;
    const int n = qinfo(q).n;
    wide num = 0, den = 1, extra = 0;
    const std::int64_t w = p.has("w") ? p.get("w") : 1;

    switch (p.family) {
        case FamilyId::T31:
            num = t31_numerator(Q, p.get("a"), p.get("b"), p.get("c"), p.get("e"), den);
            break;
        case FamilyId::P32: num = p32_numerator(Q, p.get("a"), p.get("c"), p.get("e"), den); break;
        case FamilyId::P33: {
            const std::int64_t a = p.get("a"), c = p.get("c"), e = p.get("e");
            const auto [h, k] = p33_hk(q, p.get("l"), a, c, e);
            num = N * (Q - 2 * wide{a} - c + 1 - h) - 2 * k + 4 * wide{e};
            den = 4 * wide{e};
            break;
        }
        case FamilyId::P34: {
            const wide a = p.get("a"), e = p.get("e");
            num = N * (Q - 3 * a + 1) + 2 * e;
            den = 6 * e;
            break;
        }
        case FamilyId::P35: {
            const wide a = p.get("a"), e = p.get("e");
            num = N * (Q - 3 * a + 1) + p35_h(q, p.get("a"), p.get("l")) * e;
            den = 6 * e;
            break;
        }
        case FamilyId::P36: {
            const std::int64_t a = p.get("a"), e = p.get("e");
            const bool odd = q % 2 != 0;
            const int qmod3 = static_cast<int>(q % 3);
            const bool a_div_half = odd && divides(a, (q + 1) / 2);
            const bool a_div_third = (q + 1) % 3 == 0 && divides(a, (q + 1) / 3);
            wide two_r = 0;
            if (qmod3 != 2) two_r = (odd && !a_div_half) ? 7 * wide{e} : 4 * wide{e};
            else two_r = (odd && !a_div_half) ? 3 * wide{e} : 0;
            const wide three_s = (qmod3 == 2 && !a_div_third) ? 4 * wide{e} : 0;
            const wide t = odd ? 0 : 3 * wide{e};
            num = N * (Q - 3 * wide{a} + 1 - exact_div(3 * wide{e}, a, "P36 3e/a")) - two_r - three_s - t +
                  12 * wide{e};
            den = 12 * wide{e};
            break;
        }
        case FamilyId::M2_PSL22_EVEN_N:
            num = Q * Q - w * Q - 3 * Q + 4 * wide{w} - 4;
            den = 12 * wide{w};
            break;
        case FamilyId::M2_PSL22_SPLIT:
            num = N * (Q - w - 8) + 9 * wide{w};
            den = 12 * wide{w};
            break;
        case FamilyId::M2_PSL22_NONSPLIT: {
            const wide k3 = ipow(3, valuation(w, 3));
            num = N * (Q - 2 * k3 - w - 2) + 9 * wide{w};
            den = 12 * wide{w};
            break;
        }
        case FamilyId::M2_CYC_QM:
            num = N * (Q - w - 1) + 2 * wide{w};
            den = 2 * wide{p.get("d")} * w;
            break;
        case FamilyId::M2_EAB:
        case FamilyId::M2_EABSD: {
            const wide F = pow2(p.get("f"));
            num = N * (Q - w - F) + wide{w} * (F + 1);
            den = 2 * F * w * (p.family == FamilyId::M2_EABSD ? p.get("d") : 1);
            break;
        }
        case FamilyId::M2_DIH_QM: {
            const wide d = p.get("d");
            num = Q * Q - Q * w - Q * d + w * d + w - d - 1;
            den = 4 * d * w;
            break;
        }
        case FamilyId::M2_A4:
            num = Q * Q - Q * w + 4 * wide{w} - 3 * Q - 4;
            den = 24 * wide{w};
            break;
        case FamilyId::M2_A5: {
            wide eps = 0;
            if ((q - 1) % 5 == 0) eps = w;
            else if (w % 5 == 0) eps = N;
            num = N * (Q - w - 16) + 65 * wide{w} - 48 * eps;
            den = 120 * wide{w};
            break;
        }
        case FamilyId::M2_PSL2F: {
            const std::int64_t f = p.get("f");
            const wide F = pow2(f);
            den = 2 * F * (F + 1) * (F - 1) * w;
            if ((n / f) % 2 != 0) {
                num = N * (Q - w - F * (F - 1) * gcd(pow2(f) + 1, w) - F) + (F + 1) * w * (F * F - F + 1);
            } else {
                num = N * (Q - F * F - w) - wide{w} * (2 * F * F * F - F * F - 2 * F - 1);
                extra = 1;
            }
            break;
        }
        case FamilyId::M2_OMEGA: num = t31_numerator(Q, 1, 1, w, w, den); break;
        case FamilyId::M2_CYC_QP: {
            const DiagShape s = cyc_qp_shape(q + 1, p.get("d"), w);
            num = t31_numerator(Q, s.a, s.b, s.c, s.e, den);
            break;
        }
        case FamilyId::M2_DIH_QP: num = p32_numerator(Q, 1, w, p.get("d") * wide{w}, den); break;
    }

    const std::string what = "genus of " + to_string(p.family) + " " + format_params(p);
    const wide g = exact_div(num, den, what.c_str()) + extra;
    if (g < 0 || g > Q * (Q - 1) / 2)
        throw ConsistencyError(what + " out of range: " + to_string(g));
    return {static_cast<std::int64_t>(g), group_order(q, p), p};
}

std::vector<FamilyParams> enumerate(std::int64_t q, FamilyId family) {
    const QInfo qi = qinfo(q);
    std::vector<FamilyParams> out;
    if (!applicable(family, q)) return out;
    const std::int64_t N = qi.N;
    const std::vector<std::int64_t> D = divisors(N);
    auto push = [&](FamilyParams p) {
        if (!validate(q, p).ok) return;
        if (static_cast<std::int64_t>(out.size()) >= kEnumerationCap)
            throw CapacityError("enumeration of " + to_string(family) + " at q = " + str(q) + " exceeds " +
                                str(kEnumerationCap) + " tuples");
        out.push_back(std::move(p));
    };

    switch (family) {
        case FamilyId::T31: {
            const std::size_t L = qi.fact.size();
            for (const std::int64_t a : D)
                for (const std::int64_t b : D) {
                    if (b < a) continue;
                    // per prime: admissible u_i, then admissible v_i given u_i
                    std::vector<std::vector<int>> u_opts(L);
                    for (std::size_t i = 0; i < L; ++i) {
                        const int s = valuation(a, qi.fact[i].prime), t = valuation(b, qi.fact[i].prime);
                        if (s != t) u_opts[i] = {std::min(s, t)};
                        else
                            for (int u = s; u <= qi.fact[i].exponent; ++u) u_opts[i].push_back(u);
                    }
                    std::vector<std::size_t> ui(L, 0);
                    while (true) {
                        std::int64_t c = 1;
                        for (std::size_t i = 0; i < L; ++i) c *= ipow(qi.fact[i].prime, u_opts[i][ui[i]]);
                        const int twos = (a % 2 == 0) + (b % 2 == 0) + (c % 2 == 0);
                        if (twos == 2) throw ConsistencyError("T31: 2 divides exactly two of a, b, c");
                        std::vector<int> vmax(L);
                        for (std::size_t i = 0; i < L; ++i) {
                            const std::int64_t pr = qi.fact[i].prime;
                            const int m = std::max({valuation(a, pr), valuation(b, pr), valuation(c, pr)});
                            vmax[i] = qi.fact[i].exponent - m;
                            if (pr == 2 && (twos == 0 || twos == 3)) vmax[i] = 0;
                        }
                        std::vector<int> v(L, 0);
                        while (true) {
                            FamilyParams p = make(FamilyId::T31, {{"a", a}, {"b", b}, {"c", c}});
                            std::int64_t e = a * b * c / gcd(a, b);
                            for (std::size_t i = 0; i < L; ++i) e *= ipow(qi.fact[i].prime, v[i]);
                            p.values["e"] = e;
                            p.v = v;
                            push(std::move(p));
                            std::size_t i = 0;
                            while (i < L && v[i] == vmax[i]) v[i++] = 0;
                            if (i == L) break;
                            ++v[i];
                        }
                        std::size_t i = 0;
                        while (i < L && ui[i] + 1 == u_opts[i].size()) ui[i++] = 0;
                        if (i == L) break;
                        ++ui[i];
                    }
                }
            break;
        }
        case FamilyId::P32:
        case FamilyId::P33:
            for (const std::int64_t c : D)
                for (const std::int64_t a : divisors(c))
                    for (const std::int64_t x : D) {
                        if (!divides(c, x)) continue;
                        const std::int64_t e = a * x;
                        if (family == FamilyId::P32) {
                            push(make(family, {{"a", a}, {"c", c}, {"e", e}}));
                        } else {
                            for (const std::int64_t l : divisors(c))
                                push(make(family, {{"l", l}, {"a", a}, {"c", c}, {"e", e}}));
                        }
                    }
            break;
        case FamilyId::P34:
        case FamilyId::P35:
            for (const std::int64_t a : D)
                for (const std::int64_t x : D) {
                    if (!divides(a, x)) continue;
                    const std::int64_t e = a * x, n3 = x / a;
                    if (n3 % 2 == 0 || gcd(n3, a) != 1) continue;
                    const std::int64_t m = smallest_m(n3);
                    if (m == 0) continue;
                    if (family == FamilyId::P34) {
                        push(make(family, {{"a", a}, {"e", e}, {"m", m}}));
                    } else {
                        for (const std::int64_t l : D) push(make(family, {{"a", a}, {"e", e}, {"l", l}, {"m", m}}));
                    }
                }
            break;
        case FamilyId::P36:
            for (const std::int64_t a : D) {
                push(make(family, {{"a", a}, {"e", a * a}}));
                if (N % 3 == 0 && a % 3 != 0) push(make(family, {{"a", a}, {"e", 3 * a * a}}));
            }
            break;
        case FamilyId::M2_PSL22_EVEN_N:
        case FamilyId::M2_PSL22_SPLIT:
        case FamilyId::M2_PSL22_NONSPLIT:
        case FamilyId::M2_A4:
        case FamilyId::M2_A5:
        case FamilyId::M2_OMEGA:
            for (const std::int64_t w : D) push(make(family, {{"w", w}}));
            break;
        case FamilyId::M2_CYC_QM:
        case FamilyId::M2_DIH_QM:
            for (const std::int64_t d : divisors(q - 1))
                for (const std::int64_t w : D) push(make(family, {{"d", d}, {"w", w}}));
            break;
        case FamilyId::M2_CYC_QP:
        case FamilyId::M2_DIH_QP:
            for (const std::int64_t d : D)
                for (const std::int64_t w : D) push(make(family, {{"d", d}, {"w", w}}));
            break;
        case FamilyId::M2_EAB:
            for (std::int64_t f = 1; f <= qi.n; ++f)
                for (const std::int64_t w : D) push(make(family, {{"f", f}, {"w", w}}));
            break;
        case FamilyId::M2_EABSD:
            for (std::int64_t f = 1; f <= qi.n; ++f)
                for (const std::int64_t d : divisors(gcd(pow2(f) - 1, q - 1)))
                    for (const std::int64_t w : D) push(make(family, {{"f", f}, {"d", d}, {"w", w}}));
            break;
        case FamilyId::M2_PSL2F:
            for (std::int64_t f = 2; f <= qi.n; ++f)
                for (const std::int64_t w : D) push(make(family, {{"f", f}, {"w", w}}));
            break;
    }
    return out;
}

namespace {

ExpectedCensus t31_census(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t e) {
    ExpectedCensus ec;
    const std::int64_t d = a + b + c - 3;
    ec.types[ElementType::A] = d;
    ec.types[ElementType::B1] = e - 1 - d;
    ec.vertex_homologies = {a - 1, b - 1, c - 1};
    return ec;
}

ExpectedCensus p32_census(std::int64_t a, std::int64_t c, std::int64_t e) {
    ExpectedCensus ec;
    const std::int64_t hom = 2 * a + c - 3;
    ec.types[ElementType::A] = hom;
    ec.types[ElementType::B1] = e - 1 - hom;
    ec.types[ElementType::C] = e / c;
    ec.types[ElementType::E] = e - e / c;
    ec.vertex_homologies = {a - 1, a - 1, c - 1};
    return ec;
}

}  // namespace

ExpectedCensus expected_census(std::int64_t q, const FamilyParams& p) {
    const Validity v = validate(q, p);
    if (!v.ok) throw DomainError("invalid " + to_string(p.family) + " parameters: " + v.reason);
    const int n = qinfo(q).n;
    const std::int64_t w = p.has("w") ? p.get("w") : 1;
    ExpectedCensus ec;
    auto& T = ec.types;

    switch (p.family) {
        case FamilyId::T31: return t31_census(p.get("a"), p.get("b"), p.get("c"), p.get("e"));
        case FamilyId::P32: return p32_census(p.get("a"), p.get("c"), p.get("e"));
        case FamilyId::P33: {
            const std::int64_t a = p.get("a"), c = p.get("c"), e = p.get("e");
            const auto [h, k] = p33_hk(q, p.get("l"), a, c, e);
            T[ElementType::A] = 2 * a + c - 3 + static_cast<std::int64_t>(h);
            T[ElementType::B2] = static_cast<std::int64_t>(k);
            T[ElementType::B1] = 2 * e - 1 - T[ElementType::A] - T[ElementType::B2];
            ec.vertex_homologies = {a - 1, a - 1, c - 1};
            return ec;
        }
        case FamilyId::P34: {
            const std::int64_t a = p.get("a"), e = p.get("e");
            T[ElementType::A] = 3 * (a - 1);
            T[ElementType::B1] = e - 3 * a + 2;
            T[q % 3 == 1 ? ElementType::B2 : ElementType::D] = 2 * e;
            ec.vertex_homologies = {a - 1, a - 1, a - 1};
            return ec;
        }
        case FamilyId::P35: {
            const std::int64_t a = p.get("a"), e = p.get("e");
            const std::int64_t b3 = (6 - p35_h(q, a, p.get("l"))) * e / 3;
            T[ElementType::A] = 3 * (a - 1);
            T[ElementType::B3] = b3;
            T[ElementType::B1] = e - 3 * a + 2 + 2 * e - b3;
            ec.vertex_homologies = {a - 1, a - 1, a - 1};
            return ec;
        }
        case FamilyId::P36: {
            const std::int64_t a = p.get("a");
            ec.vertex_homologies = {a - 1, a - 1, a - 1};
            return ec;
        }
        case FamilyId::M2_PSL22_EVEN_N:
            T[ElementType::B2] = 2 * w;
            T[ElementType::C] = 3;
            T[ElementType::A] = w - 1;
            T[ElementType::E] = 3 * (w - 1);
            return ec;
        case FamilyId::M2_PSL22_SPLIT: {
            ExpectedCensus s = p32_census(3, w, 3 * w);
            s.vertex_homologies = {};
            return s;
        }
        case FamilyId::M2_PSL22_NONSPLIT: return p32_census(ipow(3, valuation(w, 3)), w, 3 * w);
        case FamilyId::M2_CYC_QM:
            T[ElementType::A] = w - 1;
            T[ElementType::B2] = (p.get("d") - 1) * w;
            return ec;
        case FamilyId::M2_EAB: {
            const std::int64_t F = pow2(p.get("f"));
            T[ElementType::C] = F - 1;
            T[ElementType::A] = w - 1;
            T[ElementType::E] = (F - 1) * (w - 1);
            return ec;
        }
        case FamilyId::M2_DIH_QM: {
            const std::int64_t d = p.get("d");
            T[ElementType::B2] = (d - 1) * w;
            T[ElementType::A] = w - 1;
            T[ElementType::C] = d;
            T[ElementType::E] = d * (w - 1);
            return ec;
        }
        case FamilyId::M2_A4:
            T[ElementType::C] = 3;
            T[ElementType::B2] = 8 * w;
            T[ElementType::A] = w - 1;
            T[ElementType::E] = 3 * (w - 1);
            return ec;
        case FamilyId::M2_A5: {
            const bool five_qm = (q - 1) % 5 == 0;
            const bool five_w = w % 5 == 0;
            T[ElementType::C] = 15;
            T[ElementType::E] = 15 * (w - 1);
            T[ElementType::B2] = 20 * w + (five_qm ? 24 * w : 0);
            T[ElementType::A] = w - 1 + (five_w ? 48 : 0);
            if (!five_qm) T[ElementType::B1] = five_w ? 24 * (w - 2) : 24 * w;
            return ec;
        }
        case FamilyId::M2_EABSD: {
            const std::int64_t F = pow2(p.get("f"));
            T[ElementType::C] = F - 1;
            T[ElementType::A] = w - 1;
            T[ElementType::E] = (F - 1) * (w - 1);
            T[ElementType::B2] = F * (p.get("d") - 1) * w;
            return ec;
        }
        case FamilyId::M2_PSL2F: {
            const std::int64_t f = p.get("f"), F = pow2(f);
            const bool odd = (n / f) % 2 != 0;
            const std::int64_t gw = gcd(F + 1, w);
            const std::int64_t extra_a = odd ? (F * F - F) * (gw - 1) : 0;
            T[ElementType::A] = w - 1 + extra_a;
            T[ElementType::C] = F * F - 1;
            T[ElementType::E] = (F * F - 1) * (w - 1);
            T[ElementType::B2] = F * (F + 1) * (F - 2) / 2 * w + (odd ? 0 : F * (F * F - F) / 2 * w);
            if (odd) T[ElementType::B1] = F * (F * F - F) / 2 * w - extra_a;
            return ec;
        }
        case FamilyId::M2_OMEGA: return t31_census(1, 1, w, w);
        case FamilyId::M2_CYC_QP: {
            const DiagShape s = cyc_qp_shape(q + 1, p.get("d"), w);
            return t31_census(s.a, s.b, s.c, s.e);
        }
        case FamilyId::M2_DIH_QP: return p32_census(1, w, p.get("d") * w);
    }
    throw ConsistencyError("expected_census: unhandled family");
}

}  // namespace hqg
