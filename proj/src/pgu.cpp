#include "hqg/pgu.hpp"

#include <algorithm>
#include <sstream>

#include "hqg/errors.hpp"

namespace hqg {
namespace {

using FE = FieldElement;

Mat3 sub_scalar(const FieldCtx& ctx, const Mat3& m, FE s) {
    Mat3 r = m;
    for (int i = 0; i < 3; ++i) r[4 * i] = ctx.sub(r[4 * i], s);
    return r;
}

Mat3 scale(const FieldCtx& ctx, const Mat3& m, FE s) {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r[i] = ctx.mul(m[i], s);
    return r;
}

// Reduced row echelon form; returns the rank and leaves the pivots' columns in `pivots`.
int row_reduce(const FieldCtx& ctx, Mat3& a, std::array<int, 3>& pivots) {
    int rank = 0;
    for (int col = 0; col < 3 && rank < 3; ++col) {
        int piv = -1;
        for (int r = rank; r < 3; ++r)
            if (!a[3 * r + col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        for (int c = 0; c < 3; ++c) std::swap(a[3 * rank + c], a[3 * piv + c]);
        const FE inv = ctx.inv(a[3 * rank + col]);
        for (int c = 0; c < 3; ++c) a[3 * rank + c] = ctx.mul(a[3 * rank + c], inv);
        for (int r = 0; r < 3; ++r) {
            if (r == rank || a[3 * r + col].is_zero()) continue;
            const FE f = a[3 * r + col];
            for (int c = 0; c < 3; ++c) a[3 * r + c] = ctx.sub(a[3 * r + c], ctx.mul(f, a[3 * rank + c]));
        }
        pivots[rank++] = col;
    }
    return rank;
}

int rank(const FieldCtx& ctx, Mat3 a) {
    std::array<int, 3> piv{};
    return row_reduce(ctx, a, piv);
}

// Basis of the right kernel of a.
std::vector<Vec3> kernel(const FieldCtx& ctx, Mat3 a) {
    std::array<int, 3> piv{};
    const int r = row_reduce(ctx, a, piv);
    std::vector<Vec3> basis;
    for (int free = 0; free < 3; ++free) {
        if (std::find(piv.begin(), piv.begin() + r, free) != piv.begin() + r) continue;
        Vec3 v{FE::zero(), FE::zero(), FE::zero()};
        v[free] = FE::one();
        for (int i = 0; i < r; ++i) v[piv[i]] = ctx.neg(a[3 * i + free]);
        basis.push_back(v);
    }
    return basis;
}

Vec3 normalize_point(const FieldCtx& ctx, Vec3 v) {
    for (const FE x : v) {
        if (x.is_zero()) continue;
        const FE inv = ctx.inv(x);
        for (FE& y : v) y = ctx.mul(y, inv);
        return v;
    }
    throw ConsistencyError("normalize_point: zero vector");
}

struct CharPoly {
    FE c2, c1, c0;  // x^3 + c2 x^2 + c1 x + c0
};

CharPoly char_poly(const FieldCtx& ctx, const Mat3& m) {
    const FE tr = ctx.add(ctx.add(m[0], m[4]), m[8]);
    auto minor = [&](int i, int j) {
        return ctx.sub(ctx.mul(m[4 * i], m[4 * j]), ctx.mul(m[3 * i + j], m[3 * j + i]));
    };
    const FE s = ctx.add(ctx.add(minor(0, 1), minor(0, 2)), minor(1, 2));
    return {ctx.neg(tr), s, ctx.neg(det(ctx, m))};
}

bool is_repeated_root(const FieldCtx& ctx, const CharPoly& cp, FE x) {
    // derivative 3x^2 + 2 c2 x + c1
    const FE d = ctx.add(ctx.add(ctx.mul(ctx.from_int(3), ctx.mul(x, x)), ctx.mul(ctx.from_int(2), ctx.mul(cp.c2, x))),
                         cp.c1);
    return d.is_zero();
}

// F_{q^2}[t]/(chi) for an irreducible monic cubic chi; a model of F_{q^6}.
class CubicExt {
public:
    using Elt = std::array<FE, 3>;

    CubicExt(const FieldCtx& ctx, CharPoly cp) : ctx_(ctx), cp_(cp) {}

    Elt constant(FE a) const { return {a, FE::zero(), FE::zero()}; }
    Elt t() const { return {FE::zero(), FE::one(), FE::zero()}; }

    Elt add(const Elt& a, const Elt& b) const {
        return {ctx_.add(a[0], b[0]), ctx_.add(a[1], b[1]), ctx_.add(a[2], b[2])};
    }
    Elt sub(const Elt& a, const Elt& b) const {
        return {ctx_.sub(a[0], b[0]), ctx_.sub(a[1], b[1]), ctx_.sub(a[2], b[2])};
    }
    Elt mul(const Elt& a, const Elt& b) const {
        std::array<FE, 5> r{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r[i + j] = ctx_.add(r[i + j], ctx_.mul(a[i], b[j]));
        // t^3 = -(c2 t^2 + c1 t + c0)
        for (int k = 4; k >= 3; --k) {
            const FE c = r[k];
            if (c.is_zero()) continue;
            r[k - 1] = ctx_.sub(r[k - 1], ctx_.mul(c, cp_.c2));
            r[k - 2] = ctx_.sub(r[k - 2], ctx_.mul(c, cp_.c1));
            r[k - 3] = ctx_.sub(r[k - 3], ctx_.mul(c, cp_.c0));
            r[k] = FE::zero();
        }
        return {r[0], r[1], r[2]};
    }
    Elt pow(Elt a, std::int64_t e) const {
        Elt r = constant(FE::one());
        while (e > 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    static bool is_zero(const Elt& a) { return a[0].is_zero() && a[1].is_zero() && a[2].is_zero(); }

private:
    const FieldCtx& ctx_;
    CharPoly cp_;
};

}  // namespace

GramForm make_gram(const FieldCtx& ctx, Model model) {
    const FE z = FE::zero(), o = FE::one();
    if (model == Model::Fermat) return {model, {o, z, z, z, o, z, z, z, o}};
    // w3^{q+1} = -1: g^{(q-1)/2} for q odd, 1 in characteristic 2
    const FE w3 = (ctx.p() == 2) ? o : FE::from_log((ctx.q() - 1) / 2);
    return {model, {z, o, z, ctx.neg(o), z, z, z, z, w3}};
}

std::string to_string(Model model) { return model == Model::Fermat ? "MODEL1" : "MODEL3"; }

Model parse_model(std::string_view s) {
    if (s == "MODEL1" || s == "model1" || s == "1" || s == "fermat") return Model::Fermat;
    if (s == "MODEL3" || s == "model3" || s == "3") return Model::Model3;
    throw DomainError("unknown curve model '" + std::string(s) + "'");
}

ProjMatrix::ProjMatrix() : m_(identity_mat()) {}

ProjMatrix ProjMatrix::normalize(const FieldCtx& ctx, const Mat3& raw) {
    if (det(ctx, raw).is_zero()) throw DomainError("normalize: singular matrix");
    for (const FE x : raw)
        if (!x.is_zero()) return ProjMatrix(scale(ctx, raw, ctx.inv(x)));
    throw DomainError("normalize: zero matrix");
}

bool ProjMatrix::is_identity() const { return m_ == identity_mat(); }

std::size_t ProjMatrix::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (const FE x : m_) h = (h ^ static_cast<std::size_t>(x.log() + 1)) * 1099511628211ull;
    return h;
}

Mat3 identity_mat() {
    const FE z = FE::zero(), o = FE::one();
    return {o, z, z, z, o, z, z, z, o};
}

Mat3 diag(FE a, FE b, FE c) {
    const FE z = FE::zero();
    return {a, z, z, z, b, z, z, z, c};
}

Mat3 mat_mul(const FieldCtx& ctx, const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            FE s = FE::zero();
            for (int k = 0; k < 3; ++k) s = ctx.add(s, ctx.mul(a[3 * i + k], b[3 * k + j]));
            r[3 * i + j] = s;
        }
    return r;
}

FE det(const FieldCtx& ctx, const Mat3& m) {
    auto term = [&](int a, int b, int c) { return ctx.mul(ctx.mul(m[a], m[b]), m[c]); };
    FE pos = ctx.add(ctx.add(term(0, 4, 8), term(1, 5, 6)), term(2, 3, 7));
    FE neg = ctx.add(ctx.add(term(2, 4, 6), term(0, 5, 7)), term(1, 3, 8));
    return ctx.sub(pos, neg);
}

ProjMatrix multiply(const FieldCtx& ctx, const ProjMatrix& a, const ProjMatrix& b) {
    return ProjMatrix::normalize(ctx, mat_mul(ctx, a.entries(), b.entries()));
}

ProjMatrix inverse(const FieldCtx& ctx, const ProjMatrix& m) {
    const Mat3& a = m.entries();
    auto cof = [&](int r0, int c0, int r1, int c1) {
        return ctx.sub(ctx.mul(a[3 * r0 + c0], a[3 * r1 + c1]), ctx.mul(a[3 * r0 + c1], a[3 * r1 + c0]));
    };
    // adjugate; the inverse up to the scalar det
    Mat3 adj{cof(1, 1, 2, 2), ctx.neg(cof(0, 1, 2, 2)), cof(0, 1, 1, 2),
             ctx.neg(cof(1, 0, 2, 2)), cof(0, 0, 2, 2), ctx.neg(cof(0, 0, 1, 2)),
             cof(1, 0, 2, 1), ctx.neg(cof(0, 0, 2, 1)), cof(0, 0, 1, 1)};
    return ProjMatrix::normalize(ctx, adj);
}

ProjMatrix power(const FieldCtx& ctx, const ProjMatrix& m, std::int64_t k) {
    ProjMatrix base = k < 0 ? inverse(ctx, m) : m;
    if (k < 0) k = -k;
    ProjMatrix r;
    while (k > 0) {
        if (k & 1) r = multiply(ctx, r, base);
        base = multiply(ctx, base, base);
        k >>= 1;
    }
    return r;
}

bool is_unitary(const FieldCtx& ctx, const GramForm& gram, const ProjMatrix& m) {
    const Mat3& a = m.entries();
    Mat3 at, ac;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            at[3 * i + j] = a[3 * j + i];
            ac[3 * i + j] = ctx.conj(a[3 * i + j]);
        }
    const Mat3 prod = mat_mul(ctx, mat_mul(ctx, at, gram.matrix), ac);
    std::optional<FE> lambda;
    for (int i = 0; i < 9; ++i) {
        if (gram.matrix[i].is_zero()) {
            if (!prod[i].is_zero()) return false;
            continue;
        }
        const FE l = ctx.div(prod[i], gram.matrix[i]);
        if (l.is_zero() || (lambda && *lambda != l)) return false;
        lambda = l;
    }
    return true;
}

std::int64_t proj_order(const FieldCtx& ctx, const ProjMatrix& m) {
    const std::int64_t q = ctx.q();
    const std::int64_t cap = q * q * q + 1;
    ProjMatrix cur = m;
    std::int64_t k = 1;
    while (!cur.is_identity()) {
        cur = multiply(ctx, cur, m);
        if (++k > cap) throw ConsistencyError("proj_order: exceeded q^3 + 1; not an element of PGU(3,q)");
    }
    return k;
}

std::string to_string(ElementType t) {
    switch (t) {
        case ElementType::A: return "A";
        case ElementType::B1: return "B1";
        case ElementType::B2: return "B2";
        case ElementType::B3: return "B3";
        case ElementType::C: return "C";
        case ElementType::D: return "D";
        case ElementType::E: return "E";
    }
    return "?";
}

ElementType parse_element_type(std::string_view s) {
    for (const ElementType t : kAllTypes)
        if (to_string(t) == s) return t;
    throw DomainError("unknown element type '" + std::string(s) + "'");
}

std::int64_t contribution(ElementType t, std::int64_t q) {
    switch (t) {
        case ElementType::A: return q + 1;
        case ElementType::B1: return 0;
        case ElementType::B2: return 2;
        case ElementType::B3: return 3;
        case ElementType::C: return q + 2;
        case ElementType::D: return 2;
        case ElementType::E: return 1;
    }
    return 0;
}

std::vector<FE> cubic_roots(const FieldCtx& ctx, FE c2, FE c1, FE c0) {
    std::vector<FE> roots;
    ctx.for_each_element([&](FE x) {
        const FE v = ctx.add(ctx.mul(ctx.add(ctx.mul(ctx.add(x, c2), x), c1), x), c0);
        if (v.is_zero()) roots.push_back(x);
    });
    return roots;
}

ElementClass classify(const FieldCtx& ctx, const ProjMatrix& m) {
    if (m.is_identity()) throw DomainError("classify: identity has no type");
    const std::int64_t q = ctx.q(), p = ctx.p();
    const std::int64_t order = proj_order(ctx, m);
    const Mat3& a = m.entries();
    const CharPoly cp = char_poly(ctx, a);
    const std::vector<FE> roots = cubic_roots(ctx, cp.c2, cp.c1, cp.c0);
    bool repeated = false;
    int max_dim = 0;
    for (const FE r : roots) {
        repeated = repeated || is_repeated_root(ctx, cp, r);
        max_dim = std::max(max_dim, 3 - rank(ctx, sub_scalar(ctx, a, r)));
    }
    ElementClass out{ElementType::A, 0, order, static_cast<int>(roots.size()), repeated, max_dim};
    auto finish = [&](ElementType t) {
        out.type = t;
        out.contribution = contribution(t, q);
        return out;
    };
    auto fail = [&](const std::string& why) {
        return ConsistencyError("classify: " + why + " (order " + std::to_string(order) + ", q = " +
                                std::to_string(q) + ")");
    };

    if (order % p == 0) {
        if (order == p) {
            if (roots.size() != 1 || !repeated) throw fail("order-p element without a unique eigenvalue");
            // eigenspace of the unique eigenvalue of the rescaled (unipotent) representative
            const Mat3 u = scale(ctx, a, ctx.inv(roots[0]));
            const int dim = 3 - rank(ctx, sub_scalar(ctx, u, FE::one()));
            if (dim == 2) return finish(ElementType::C);
            if (dim == 1 && p != 2) return finish(ElementType::D);
            throw fail("unipotent element with eigenspace dimension " + std::to_string(dim));
        }
        if (p == 2 && order == 4) return finish(ElementType::D);
        const std::int64_t d = order / p;
        if (d > 1 && d % p != 0 && (q + 1) % d == 0) return finish(ElementType::E);
        throw fail("wild order outside {p, 4, p*d with d | q+1}");
    }

    if (roots.empty()) {
        if ((q * q - q + 1) % order != 0 && !(order == 3 && (q + 1) % 3 == 0))
            throw fail("irreducible characteristic polynomial with order not dividing q^2-q+1");
        return finish(ElementType::B3);
    }
    if (repeated) {
        if (roots.size() != 2 || max_dim != 2) throw fail("tame element with repeated eigenvalue is not a homology");
        if ((q + 1) % order != 0) throw fail("homology with order not dividing q+1");
        return finish(ElementType::A);
    }
    if (roots.size() != 3) throw fail("characteristic polynomial splits as linear times irreducible quadratic");
    if ((q + 1) % order == 0) return finish(ElementType::B1);
    if ((q * q - 1) % order == 0) return finish(ElementType::B2);
    throw fail("split semisimple element with order not dividing q^2-1");
}

FE hermitian_value(const FieldCtx& ctx, const GramForm& gram, const Vec3& v) {
    FE s = FE::zero();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const FE b = gram.matrix[3 * i + j];
            if (b.is_zero()) continue;
            s = ctx.add(s, ctx.mul(ctx.mul(v[i], b), ctx.conj(v[j])));
        }
    return s;
}

std::int64_t fixed_points_on_curve(const FieldCtx& ctx, const ProjMatrix& m, const GramForm& gram) {
    const ElementClass cls = classify(ctx, m);
    if (cls.order % ctx.p() == 0) throw DomainError("fixed_points_on_curve: wild element");
    const Mat3& a = m.entries();
    const CharPoly cp = char_poly(ctx, a);
    auto on_curve = [&](const Vec3& v) { return hermitian_value(ctx, gram, v).is_zero(); };

    if (cls.type == ElementType::A) {
        const auto roots = cubic_roots(ctx, cp.c2, cp.c1, cp.c0);
        FE axis_val = roots[0], center_val = roots[1];
        if (!is_repeated_root(ctx, cp, axis_val)) std::swap(axis_val, center_val);
        const auto axis = kernel(ctx, sub_scalar(ctx, a, axis_val));
        const auto center = kernel(ctx, sub_scalar(ctx, a, center_val));
        std::int64_t count = on_curve(center.at(0)) ? 1 : 0;
        // points of the axis: u, and w + t u for t in F_{q^2}
        const Vec3& u = axis.at(0);
        const Vec3& w = axis.at(1);
        if (on_curve(u)) ++count;
        ctx.for_each_element([&](FE t) {
            const Vec3 pt{ctx.add(w[0], ctx.mul(t, u[0])), ctx.add(w[1], ctx.mul(t, u[1])),
                          ctx.add(w[2], ctx.mul(t, u[2]))};
            if (on_curve(pt)) ++count;
        });
        return count;
    }

    if (cls.type == ElementType::B1 || cls.type == ElementType::B2) {
        std::int64_t count = 0;
        for (const FE r : cubic_roots(ctx, cp.c2, cp.c1, cp.c0))
            if (on_curve(kernel(ctx, sub_scalar(ctx, a, r)).at(0))) ++count;
        return count;
    }

    // B3: eigenvectors live over F_{q^6} = F_{q^2}[t]/(chi)
    const CubicExt ext(ctx, cp);
    using Elt = CubicExt::Elt;
    std::array<Elt, 9> shifted;
    for (int i = 0; i < 9; ++i) shifted[i] = ext.constant(a[i]);
    for (int i = 0; i < 3; ++i) shifted[4 * i] = ext.sub(shifted[4 * i], ext.t());
    auto cross = [&](int r0, int r1) {
        auto e = [&](int r, int c) { return shifted[3 * r + c]; };
        return std::array<Elt, 3>{ext.sub(ext.mul(e(r0, 1), e(r1, 2)), ext.mul(e(r0, 2), e(r1, 1))),
                                  ext.sub(ext.mul(e(r0, 2), e(r1, 0)), ext.mul(e(r0, 0), e(r1, 2))),
                                  ext.sub(ext.mul(e(r0, 0), e(r1, 1)), ext.mul(e(r0, 1), e(r1, 0)))};
    };
    std::array<Elt, 3> v{};
    bool found = false;
    for (const auto& [r0, r1] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
        v = cross(r0, r1);
        if (!CubicExt::is_zero(v[0]) || !CubicExt::is_zero(v[1]) || !CubicExt::is_zero(v[2])) {
            found = true;
            break;
        }
    }
    if (!found) throw ConsistencyError("fixed_points_on_curve: no eigenvector for irreducible cubic");
    const std::int64_t q = ctx.q();
    std::int64_t count = 0;
    for (int k = 0; k < 3; ++k) {
        Elt h = ext.constant(FE::zero());
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const FE b = gram.matrix[3 * i + j];
                if (b.is_zero()) continue;
                h = ext.add(h, ext.mul(ext.mul(v[i], ext.constant(b)), ext.pow(v[j], q)));
            }
        if (CubicExt::is_zero(h)) ++count;
        for (auto& x : v) x = ext.pow(x, q * q);  // eigenvector for the next conjugate eigenvalue
    }
    return count;
}

std::optional<Vec3> homology_center(const FieldCtx& ctx, const ProjMatrix& m) {
    if (m.is_identity()) return std::nullopt;
    const Mat3& a = m.entries();
    const CharPoly cp = char_poly(ctx, a);
    const auto roots = cubic_roots(ctx, cp.c2, cp.c1, cp.c0);
    if (roots.size() != 2) return std::nullopt;
    FE axis_val = roots[0], center_val = roots[1];
    if (!is_repeated_root(ctx, cp, axis_val)) std::swap(axis_val, center_val);
    if (rank(ctx, sub_scalar(ctx, a, axis_val)) != 1) return std::nullopt;
    return normalize_point(ctx, kernel(ctx, sub_scalar(ctx, a, center_val)).at(0));
}

Mat3 parse_matrix(const FieldCtx& ctx, std::string_view literal) {
    std::vector<std::string> rows;
    std::string cur;
    for (const char ch : literal) {
        if (ch == ';') {
            rows.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    rows.push_back(cur);
    if (rows.size() != 3) throw DomainError("matrix literal needs 3 ';'-separated rows");
    Mat3 m;
    for (int r = 0; r < 3; ++r) {
        std::vector<std::string> cells;
        std::stringstream ss(rows[r]);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (cells.size() != 3) throw DomainError("matrix literal row " + std::to_string(r) + " needs 3 entries");
        for (int c = 0; c < 3; ++c) m[3 * r + c] = ctx.parse(cells[c]);
    }
    return m;
}

std::string format_matrix(const FieldCtx& ctx, const Mat3& m) {
    std::string s;
    for (int r = 0; r < 3; ++r) {
        if (r) s += ';';
        for (int c = 0; c < 3; ++c) {
            if (c) s += ',';
            s += ctx.format(m[3 * r + c]);
        }
    }
    return s;
}

}  // namespace hqg
