#include "hqg/gf.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "hqg/errors.hpp"

namespace hqg {
namespace {

// Dense polynomials over F_p, coefficient of x^i at index i.
using Poly = std::vector<int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod(int a, int p) {
    int r = 1;
    for (int e = p - 2, b = a; e > 0; e >>= 1, b = static_cast<int>(static_cast<std::int64_t>(b) * b % p))
        if (e & 1) r = static_cast<int>(static_cast<std::int64_t>(r) * b % p);
    return r;
}

// Remainder of a modulo the monic polynomial f.
Poly mod_monic(Poly a, const Poly& f, int p) {
    const std::size_t deg = f.size() - 1;
    for (std::size_t i = a.size(); i-- > deg;) {
        const int c = a[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= deg; ++j)
            a[i - deg + j] = static_cast<int>(((a[i - deg + j] - static_cast<std::int64_t>(c) * f[j]) % p + p) % p);
    }
    a.resize(std::min(a.size(), deg));
    trim(a);
    return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& f, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<int>((r[i + j] + static_cast<std::int64_t>(a[i]) * b[j]) % p);
    return mod_monic(std::move(r), f, p);
}

Poly powmod(Poly a, std::int64_t e, const Poly& f, int p) {
    Poly r{1};
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, f, p);
        a = mulmod(a, a, f, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, int p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic, then a <- a mod b
        const int lead_inv = inv_mod(b.back(), p);
        for (int& c : b) c = static_cast<int>(static_cast<std::int64_t>(c) * lead_inv % p);
        a = mod_monic(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

// Rabin's test for a monic f of degree D over F_p.
bool is_irreducible(const Poly& f, int p) {
    const int D = static_cast<int>(f.size()) - 1;
    std::vector<Poly> frob(D + 1);  // frob[k] = x^(p^k) mod f
    frob[0] = mod_monic(Poly{0, 1}, f, p);
    for (int k = 1; k <= D; ++k) frob[k] = powmod(frob[k - 1], p, f, p);
    const Poly x = mod_monic(Poly{0, 1}, f, p);
    if (frob[D] != x) return false;
    for (const auto& [r, e] : factorize(D)) {
        (void)e;
        Poly h = frob[D / r];
        h.resize(std::max<std::size_t>(h.size(), 2), 0);
        h[1] = (h[1] - 1 + p) % p;
        trim(h);
        const Poly g = poly_gcd(f, h, p);
        if (g.size() != 1) return false;
    }
    return true;
}

// Residue whose coefficient tuple (c_0, ..., c_{D-1}) is the index-th in lexicographic order
// with c_0 most significant.
Poly lex_tuple(std::int64_t index, int D, int p) {
    Poly c(D, 0);
    for (int i = D - 1; i >= 0; --i) {
        c[i] = static_cast<int>(index % p);
        index /= p;
    }
    return c;
}

std::int32_t encode(const Poly& a, int p) {
    std::int64_t code = 0;
    for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
    return static_cast<std::int32_t>(code);
}

}  // namespace

FieldCtx::FieldCtx(std::int64_t p, int n) : p_(p), n_(n) {
    if (!is_prime(p) || n < 1) throw DomainError("make_ctx: need p prime and n >= 1");
    q_ = ipow(p, n);
    if (q_ > (std::int64_t{1} << 31) || q_ * q_ > kTableBudget)
        throw CapacityError("make_ctx: q^2 = " + std::to_string(q_) + "^2 exceeds table budget " +
                            std::to_string(kTableBudget));
    q2_ = q_ * q_;
    const int D = 2 * n;
    const int ip = static_cast<int>(p);

    // defining polynomial
    for (std::int64_t idx = 0;; ++idx) {
        Poly f = lex_tuple(idx, D, ip);
        f.push_back(1);
        if (is_irreducible(f, ip)) {
            modulus_ = f;
            break;
        }
    }

    // primitive element
    const std::int64_t N = q2_ - 1;
    const auto primes = factorize(N);
    Poly g;
    for (std::int64_t idx = 1;; ++idx) {
        Poly cand = lex_tuple(idx, D, ip);
        trim(cand);
        if (cand.empty()) continue;
        bool primitive = true;
        for (const auto& [r, e] : primes) {
            (void)e;
            const Poly t = powmod(cand, N / r, modulus_, ip);
            if (t == Poly{1}) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            g = cand;
            break;
        }
    }

    code_.resize(N);
    log_of_code_.assign(q2_, -1);
    Poly cur{1};
    const bool g_is_x = (g == Poly{0, 1});
    for (std::int64_t k = 0; k < N; ++k) {
        const std::int32_t code = encode(cur, ip);
        code_[k] = code;
        log_of_code_[code] = static_cast<std::int32_t>(k);
        if (g_is_x) {
            cur.insert(cur.begin(), 0);
            cur = mod_monic(std::move(cur), modulus_, ip);
        } else {
            cur = mulmod(cur, g, modulus_, ip);
        }
    }

    zech_.resize(N);
    for (std::int64_t k = 0; k < N; ++k) {
        const std::int32_t code = code_[k];
        const std::int32_t c0 = code % ip;
        const std::int32_t shifted = code - c0 + (c0 + 1) % ip;
        zech_[k] = shifted == 0 ? -1 : log_of_code_[shifted];
    }

    minus_one_ = (p == 2) ? FieldElement::one() : FieldElement::from_log(N / 2);
    std::int64_t e = 1;
    for (int i = 0; i < D - 1; ++i) e = e * p % N;
    pth_root_exp_ = (N == 1) ? 0 : e;
}

std::vector<int> FieldCtx::coefficients(FieldElement x) const {
    std::vector<int> c(2 * n_, 0);
    if (x.is_zero()) return c;
    std::int64_t code = code_[x.log()];
    for (int i = 0; i < 2 * n_; ++i) {
        c[i] = static_cast<int>(code % p_);
        code /= p_;
    }
    return c;
}

FieldElement FieldCtx::from_int(std::int64_t c) const {
    c %= p_;
    if (c < 0) c += p_;
    if (c == 0) return FieldElement::zero();
    return FieldElement::from_log(log_of_code_[c]);
}

FieldElement FieldCtx::add(FieldElement a, FieldElement b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const std::int32_t z = zech_[reduce(b.log() - a.log())];
    if (z < 0) return FieldElement::zero();
    return FieldElement::from_log(reduce(a.log() + z));
}

FieldElement FieldCtx::neg(FieldElement a) const { return mul(a, minus_one_); }

FieldElement FieldCtx::mul(FieldElement a, FieldElement b) const {
    if (a.is_zero() || b.is_zero()) return FieldElement::zero();
    return FieldElement::from_log(reduce(a.log() + b.log()));
}

FieldElement FieldCtx::inv(FieldElement a) const {
    if (a.is_zero()) throw DomainError("inv: zero has no inverse");
    return FieldElement::from_log(reduce(-a.log()));
}

FieldElement FieldCtx::pow(FieldElement a, std::int64_t k) const {
    if (a.is_zero()) {
        if (k < 0) throw DomainError("pow: negative power of zero");
        return k == 0 ? FieldElement::one() : a;
    }
    const std::int64_t N = q2_ - 1;
    const wide e = static_cast<wide>(a.log()) * (k % N);
    return FieldElement::from_log(reduce(static_cast<std::int64_t>(e % N)));
}

FieldElement FieldCtx::conj(FieldElement a) const {
    if (a.is_zero()) return a;
    return FieldElement::from_log(reduce(a.log() * q_));
}

FieldElement FieldCtx::pth_root(FieldElement a) const {
    if (a.is_zero()) return a;
    return pow(a, pth_root_exp_);
}

std::int64_t FieldCtx::element_order(FieldElement a) const {
    if (a.is_zero()) throw DomainError("element_order: zero has no multiplicative order");
    const std::int64_t N = q2_ - 1;
    return N / gcd(a.log(), N);
}

FieldElement FieldCtx::root_of_unity(std::int64_t m) const {
    const std::int64_t N = q2_ - 1;
    if (m < 1 || N % m != 0)
        throw DomainError("root_of_unity: " + std::to_string(m) + " does not divide q^2-1 = " +
                          std::to_string(N));
    return FieldElement::from_log(reduce(N / m));
}

FieldElement FieldCtx::parse(std::string_view s) const {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s == "0") return FieldElement::zero();
    if (s == "1") return FieldElement::one();
    if (s == "g") return gen();
    if (s.size() > 2 && s[0] == 'g' && s[1] == '^') {
        std::int64_t k = 0;
        const char* first = s.data() + 2;
        const char* last = s.data() + s.size();
        auto [ptr, ec] = std::from_chars(first, last, k);
        if (ec == std::errc{} && ptr == last) return FieldElement::from_log(reduce(k));
    }
    throw DomainError("malformed field element literal '" + std::string(s) + "'");
}

std::string FieldCtx::format(FieldElement a) const {
    if (a.is_zero()) return "0";
    if (a.is_one()) return "1";
    return "g^" + std::to_string(a.log());
}

void FieldCtx::for_each_element(const std::function<void(FieldElement)>& fn) const {
    fn(FieldElement::zero());
    for (std::int64_t k = 0; k < q2_ - 1; ++k) fn(FieldElement::from_log(k));
}

}  // namespace hqg
