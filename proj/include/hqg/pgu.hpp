#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hqg/gf.hpp"

namespace hqg {

/// Raw 3x3 matrix over F_{q^2}, row-major.
using Mat3 = std::array<FieldElement, 9>;
/// Column vector over F_{q^2}.
using Vec3 = std::array<FieldElement, 3>;

enum class Model { Fermat, Model3 };

/// Gram matrix B of the Hermitian form v^T B v^(q) whose zero set is the curve.
///   Fermat: B = I                      X^{q+1} + Y^{q+1} + Z^{q+1} = 0
///   Model3: B = [[0,1,0],[-1,0,0],[0,0,w3]], w3^{q+1} = -1, w3 = 1 for q even
struct GramForm {
    Model model;
    Mat3 matrix;
};

GramForm make_gram(const FieldCtx& ctx, Model model);
std::string to_string(Model model);
Model parse_model(std::string_view s);

/// Element of PGL(3, q^2): a nonsingular matrix whose first nonzero entry (row-major) is 1.
class ProjMatrix {
public:
    /// Identity.
    ProjMatrix();

    /// Canonical representative of the class of raw; throws DomainError if singular.
    static ProjMatrix normalize(const FieldCtx& ctx, const Mat3& raw);

    const Mat3& entries() const { return m_; }
    FieldElement operator()(int r, int c) const { return m_[3 * r + c]; }
    bool is_identity() const;

    friend auto operator<=>(const ProjMatrix&, const ProjMatrix&) = default;

    std::size_t hash() const;

private:
    explicit ProjMatrix(const Mat3& m) : m_(m) {}
    Mat3 m_;
};

struct ProjMatrixHash {
    std::size_t operator()(const ProjMatrix& m) const { return m.hash(); }
};

Mat3 identity_mat();
Mat3 mat_mul(const FieldCtx& ctx, const Mat3& a, const Mat3& b);
FieldElement det(const FieldCtx& ctx, const Mat3& m);
Mat3 diag(FieldElement a, FieldElement b, FieldElement c);

ProjMatrix multiply(const FieldCtx& ctx, const ProjMatrix& a, const ProjMatrix& b);
ProjMatrix inverse(const FieldCtx& ctx, const ProjMatrix& m);
ProjMatrix power(const FieldCtx& ctx, const ProjMatrix& m, std::int64_t k);

/// True iff M^T B M^(q) = lambda B for a nonzero scalar lambda.
bool is_unitary(const FieldCtx& ctx, const GramForm& gram, const ProjMatrix& m);

/// Least k >= 1 with M^k scalar. Throws ConsistencyError past q^3 + 1.
std::int64_t proj_order(const FieldCtx& ctx, const ProjMatrix& m);

/// Element types of nontrivial elements of PGU(3,q).
enum class ElementType { A, B1, B2, B3, C, D, E };
inline constexpr std::array<ElementType, 7> kAllTypes{ElementType::A,  ElementType::B1, ElementType::B2,
                                                      ElementType::B3, ElementType::C,  ElementType::D,
                                                      ElementType::E};

std::string to_string(ElementType t);
ElementType parse_element_type(std::string_view s);

/// Contribution i(sigma) to the different degree for an element of the given type.
std::int64_t contribution(ElementType t, std::int64_t q);

struct ElementClass {
    ElementType type;
    std::int64_t contribution;
    std::int64_t order;
    /// Distinct eigenvalues of a representative lying in F_{q^2}.
    int rational_eigenvalues;
    /// Characteristic polynomial has a repeated root.
    bool repeated_eigenvalue;
    /// Dimension of the largest eigenspace over F_{q^2}.
    int max_eigenspace_dim;
};

/// Type decision by order, characteristic-polynomial root pattern and eigenspace dimension.
/// Throws DomainError on the identity and ConsistencyError on patterns that cannot occur in PGU(3,q).
ElementClass classify(const FieldCtx& ctx, const ProjMatrix& m);

/// Projective fixed points of a tame M lying on the curve of the given model, counted over the
/// algebraic closure. Throws DomainError for wild (order divisible by p) input.
std::int64_t fixed_points_on_curve(const FieldCtx& ctx, const ProjMatrix& m, const GramForm& gram);

/// Center of a homology, as a point with first nonzero coordinate 1; nullopt if M is not a homology.
std::optional<Vec3> homology_center(const FieldCtx& ctx, const ProjMatrix& m);

/// v^T B v^(q).
FieldElement hermitian_value(const FieldCtx& ctx, const GramForm& gram, const Vec3& v);

/// Distinct roots in F_{q^2} of x^3 + c2 x^2 + c1 x + c0, by exhaustive search.
std::vector<FieldElement> cubic_roots(const FieldCtx& ctx, FieldElement c2, FieldElement c1, FieldElement c0);

/// "r0c0,r0c1,r0c2;r1c0,...;..." with field-element literals.
Mat3 parse_matrix(const FieldCtx& ctx, std::string_view literal);
std::string format_matrix(const FieldCtx& ctx, const Mat3& m);

}  // namespace hqg
