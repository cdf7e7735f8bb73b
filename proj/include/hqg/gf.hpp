#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hqg/numthy.hpp"

namespace hqg {

/// Element of F_{q^2} in discrete-log form: ZERO, or g^k with 0 <= k < q^2 - 1.
class FieldElement {
public:
    constexpr FieldElement() = default;

    static constexpr FieldElement zero() { return FieldElement{}; }
    static constexpr FieldElement one() { return FieldElement{0}; }
    /// g^k; k must already be reduced modulo q^2 - 1.
    static constexpr FieldElement from_log(std::int64_t k) { return FieldElement{static_cast<std::int32_t>(k)}; }

    constexpr bool is_zero() const { return log_ < 0; }
    constexpr bool is_one() const { return log_ == 0; }
    /// Discrete log; meaningless for ZERO.
    constexpr std::int64_t log() const { return log_; }

    friend constexpr auto operator<=>(const FieldElement&, const FieldElement&) = default;

private:
    constexpr explicit FieldElement(std::int32_t k) : log_(k) {}
    std::int32_t log_ = -1;
};

/// Arithmetic context for F_{q^2}, q = p^n. Immutable after construction.
///
/// The field is F_p[x]/(f) with f the lexicographically least irreducible monic polynomial
/// of degree 2n, comparing coefficient tuples (c_0, c_1, ..., c_{2n-1}) from c_0 on. The
/// primitive element g is the least residue, under the same tuple order, of order q^2 - 1.
class FieldCtx {
public:
    /// Largest q^2 for which a table is built.
    static constexpr std::int64_t kTableBudget = std::int64_t{1} << 24;

    FieldCtx(std::int64_t p, int n);

    std::int64_t p() const { return p_; }
    int n() const { return n_; }
    std::int64_t q() const { return q_; }
    std::int64_t q2() const { return q2_; }
    /// q^2 - 1, the order of the multiplicative group.
    std::int64_t group_order() const { return q2_ - 1; }
    /// Coefficients c_0..c_{2n} of the defining polynomial (monic, c_{2n} = 1).
    const std::vector<int>& modulus() const { return modulus_; }
    /// Coefficients c_0..c_{2n-1} of g as a residue.
    std::vector<int> coefficients(FieldElement x) const;

    FieldElement gen() const { return FieldElement::from_log(1); }
    /// Image of the integer c under Z -> F_p -> F_{q^2}.
    FieldElement from_int(std::int64_t c) const;

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
    FieldElement inv(FieldElement a) const;
    FieldElement pow(FieldElement a, std::int64_t k) const;
    /// x -> x^q.
    FieldElement conj(FieldElement a) const;
    /// Unique p-th root (inverse Frobenius).
    FieldElement pth_root(FieldElement a) const;

    bool in_subfield(FieldElement a) const { return a.is_zero() || a.log() % (q_ + 1) == 0; }

    std::int64_t element_order(FieldElement a) const;
    /// g^((q^2-1)/m), which has exact order m. Requires m | q^2 - 1.
    FieldElement root_of_unity(std::int64_t m) const;

    /// "0", "1", or "g^k".
    FieldElement parse(std::string_view literal) const;
    std::string format(FieldElement a) const;

    /// Calls fn on every element of F_{q^2}, ZERO first.
    void for_each_element(const std::function<void(FieldElement)>& fn) const;

private:
    std::int64_t reduce(std::int64_t k) const {
        k %= (q2_ - 1);
        return k < 0 ? k + (q2_ - 1) : k;
    }

    std::int64_t p_;
    int n_;
    std::int64_t q_;
    std::int64_t q2_;
    std::vector<int> modulus_;
    FieldElement minus_one_;
    std::vector<std::int32_t> zech_;   // zech_[k] = log(1 + g^k), -1 when 1 + g^k = 0
    std::vector<std::int32_t> code_;   // code_[k] = base-p code of g^k (c_0 least significant)
    std::vector<std::int32_t> log_of_code_;
    std::int64_t pth_root_exp_;
};

}  // namespace hqg
