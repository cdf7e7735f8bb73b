#include "hqg/numthy.hpp"

#include <algorithm>
#include <numeric>

#include "hqg/errors.hpp"

namespace hqg {

PrimeFactorization factorize(std::int64_t n) {
    if (n < 1) throw DomainError("factorize: n must be positive");
    PrimeFactorization out;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int r = 0;
        while (n % p == 0) {
            n /= p;
            ++r;
        }
        out.push_back({p, r});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out{1};
    for (const auto& [p, r] : factorize(n)) {
        const std::size_t base = out.size();
        std::int64_t pk = 1;
        for (int k = 1; k <= r; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int valuation(std::int64_t n, std::int64_t p) {
    if (n < 1 || p < 2) throw DomainError("valuation: need n >= 1 and p prime");
    int k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    return k;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::optional<PrimePower> as_prime_power(std::int64_t q) {
    if (q < 2) return std::nullopt;
    const auto f = factorize(q);
    if (f.size() != 1) return std::nullopt;
    return PrimePower{f[0].prime, f[0].exponent};
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

std::int64_t product(const PrimeFactorization& f) {
    std::int64_t r = 1;
    for (const auto& [p, e] : f) r *= ipow(p, e);
    return r;
}

wide exact_div(wide num, wide den, const char* what) {
    if (den == 0) throw ConsistencyError(std::string(what) + ": zero denominator");
    if (num % den != 0)
        throw ConsistencyError(std::string(what) + ": non-integer quotient " + to_string(num) +
                               "/" + to_string(den));
    return num / den;
}

std::string to_string(wide x) {
    if (x == 0) return "0";
    const bool neg = x < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
    std::string s;
    while (u > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

}  // namespace hqg
