#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hqg {

/// Exact wide integer for genus numerators; (q+1)^2 * q^2 overflows 64 bits long
/// before the field tables stop fitting in memory.
using wide = __int128;

struct PrimeFactor {
    std::int64_t prime;
    int exponent;

    friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/// Prime factors sorted ascending; empty for n = 1.
using PrimeFactorization = std::vector<PrimeFactor>;

/// q = p^n with p prime.
struct PrimePower {
    std::int64_t p;
    int n;
};

PrimeFactorization factorize(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);
int valuation(std::int64_t n, std::int64_t p);

bool is_prime(std::int64_t n);
std::optional<PrimePower> as_prime_power(std::int64_t q);

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t ipow(std::int64_t base, int exp);
std::int64_t product(const PrimeFactorization& f);

inline bool divides(std::int64_t d, std::int64_t n) { return d != 0 && n % d == 0; }

/// Exact quotient; throws ConsistencyError if the division leaves a remainder.
wide exact_div(wide num, wide den, const char* what);

std::string to_string(wide x);

}  // namespace hqg
