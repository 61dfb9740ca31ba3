#pragma once

// Dense matrices over a ring instance, elementary row/column operations with
// explicit inverses, transcript replay, and the 2x2 factorization identities
// used by the reduction pipeline.
//
// Side convention (fixed globally): row operations multiply on the LEFT,
// column operations multiply on the RIGHT.

#include <vector>

#include "element.hpp"

namespace bezout {

class Matrix {
public:
    int rows = 0, cols = 0;
    RingDescriptor ring;
    std::vector<RingElement> entries;  // row-major

    Matrix() = default;
    Matrix(int r, int c, const RingDescriptor& d)
        : rows(r), cols(c), ring(d), entries((size_t)r * c, RingElement::zero(d)) {}

    static Matrix identity(int n, const RingDescriptor& d) {
        Matrix m(n, n, d);
        for (int i = 0; i < n; ++i) m.at(i, i) = RingElement::one(d);
        return m;
    }

    RingElement& at(int i, int j) { return entries[(size_t)i * cols + j]; }
    const RingElement& at(int i, int j) const { return entries[(size_t)i * cols + j]; }

    bool operator==(const Matrix& o) const {
        return rows == o.rows && cols == o.cols && ring == o.ring && entries == o.entries;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_diagonal() const {
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (i != j && !at(i, j).is_zero()) return false;
        return true;
    }
};

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.ring != b.ring) throw descriptor_mismatch();
    if (a.cols != b.rows) throw ring_error("matrix shape mismatch");
    Matrix r(a.rows, b.cols, a.ring);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols; ++j)
                r.at(i, j) = add(r.at(i, j), mul(a.at(i, k), b.at(k, j)));
        }
    return r;
}

inline Matrix make2x2(const RingDescriptor& d, const RingElement& a, const RingElement& b,
                      const RingElement& c, const RingElement& e) {
    Matrix m(2, 2, d);
    m.at(0, 0) = a; m.at(0, 1) = b; m.at(1, 0) = c; m.at(1, 1) = e;
    return m;
}

struct ElementaryOp {
    enum class Kind {
        AddLeftMultiple,   // row i += lambda * row j
        AddRightMultiple,  // col i += col j * lambda
        SwapRows,
        SwapCols,
        ScaleRowLeft,      // row i = u * row i, u a unit
        ScaleColRight,     // col i = col i * u
        BlockLeft,         // rows (i,j) <- B * rows (i,j), B invertible 2x2
        BlockRight,        // cols (i,j) <- cols (i,j) * B
    };

    Kind kind;
    int i = 0, j = 0;
    RingElement lambda;                 // add / scale coefficient
    std::vector<RingElement> block;     // 8 entries: B row-major, then B^{-1}

    static ElementaryOp add_left(int i, int j, RingElement lam) {
        if (i == j) throw ring_error("add op needs distinct rows");
        return {Kind::AddLeftMultiple, i, j, std::move(lam), {}};
    }
    static ElementaryOp add_right(int i, int j, RingElement lam) {
        if (i == j) throw ring_error("add op needs distinct cols");
        return {Kind::AddRightMultiple, i, j, std::move(lam), {}};
    }
    static ElementaryOp swap_rows(int i, int j, const RingDescriptor& d) {
        if (i == j) throw ring_error("swap needs distinct indices");
        return {Kind::SwapRows, i, j, RingElement::zero(d), {}};
    }
    static ElementaryOp swap_cols(int i, int j, const RingDescriptor& d) {
        if (i == j) throw ring_error("swap needs distinct indices");
        return {Kind::SwapCols, i, j, RingElement::zero(d), {}};
    }
    static ElementaryOp scale_row_left(int i, RingElement u) {
        if (!is_unit(u)) throw not_a_unit();
        return {Kind::ScaleRowLeft, i, i, std::move(u), {}};
    }
    static ElementaryOp scale_col_right(int i, RingElement u) {
        if (!is_unit(u)) throw not_a_unit();
        return {Kind::ScaleColRight, i, i, std::move(u), {}};
    }
    static ElementaryOp block_left(int i, int j, const Matrix& b, const Matrix& binv) {
        ElementaryOp op{Kind::BlockLeft, i, j, RingElement::zero(b.ring), {}};
        op.block = {b.at(0, 0), b.at(0, 1), b.at(1, 0), b.at(1, 1),
                    binv.at(0, 0), binv.at(0, 1), binv.at(1, 0), binv.at(1, 1)};
        return op;
    }
    static ElementaryOp block_right(int i, int j, const Matrix& b, const Matrix& binv) {
        ElementaryOp op = block_left(i, j, b, binv);
        op.kind = Kind::BlockRight;
        return op;
    }

    Matrix block_matrix(const RingDescriptor& d) const {
        return make2x2(d, block[0], block[1], block[2], block[3]);
    }
    Matrix block_matrix_inv(const RingDescriptor& d) const {
        return make2x2(d, block[4], block[5], block[6], block[7]);
    }
};

inline ElementaryOp inverse(const ElementaryOp& op) {
    ElementaryOp r = op;
    switch (op.kind) {
        case ElementaryOp::Kind::AddLeftMultiple:
        case ElementaryOp::Kind::AddRightMultiple:
            r.lambda = neg(op.lambda);
            break;
        case ElementaryOp::Kind::SwapRows:
        case ElementaryOp::Kind::SwapCols:
            break;
        case ElementaryOp::Kind::ScaleRowLeft:
        case ElementaryOp::Kind::ScaleColRight:
            r.lambda = inverse(op.lambda);
            break;
        case ElementaryOp::Kind::BlockLeft:
        case ElementaryOp::Kind::BlockRight:
            std::swap(r.block[0], r.block[4]);
            std::swap(r.block[1], r.block[5]);
            std::swap(r.block[2], r.block[6]);
            std::swap(r.block[3], r.block[7]);
            break;
    }
    return r;
}

inline Matrix apply(const ElementaryOp& op, Matrix m) {
    auto check_row = [&](int i) {
        if (i < 0 || i >= m.rows) throw ring_error("row index out of range");
    };
    auto check_col = [&](int i) {
        if (i < 0 || i >= m.cols) throw ring_error("col index out of range");
    };
    switch (op.kind) {
        case ElementaryOp::Kind::AddLeftMultiple:
            check_row(op.i); check_row(op.j);
            for (int c = 0; c < m.cols; ++c)
                m.at(op.i, c) = add(m.at(op.i, c), mul(op.lambda, m.at(op.j, c)));
            break;
        case ElementaryOp::Kind::AddRightMultiple:
            check_col(op.i); check_col(op.j);
            for (int r = 0; r < m.rows; ++r)
                m.at(r, op.i) = add(m.at(r, op.i), mul(m.at(r, op.j), op.lambda));
            break;
        case ElementaryOp::Kind::SwapRows:
            check_row(op.i); check_row(op.j);
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(op.i, c), m.at(op.j, c));
            break;
        case ElementaryOp::Kind::SwapCols:
            check_col(op.i); check_col(op.j);
            for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, op.i), m.at(r, op.j));
            break;
        case ElementaryOp::Kind::ScaleRowLeft:
            check_row(op.i);
            if (!is_unit(op.lambda)) throw not_a_unit();
            for (int c = 0; c < m.cols; ++c) m.at(op.i, c) = mul(op.lambda, m.at(op.i, c));
            break;
        case ElementaryOp::Kind::ScaleColRight:
            check_col(op.i);
            if (!is_unit(op.lambda)) throw not_a_unit();
            for (int r = 0; r < m.rows; ++r) m.at(r, op.i) = mul(m.at(r, op.i), op.lambda);
            break;
        case ElementaryOp::Kind::BlockLeft: {
            check_row(op.i); check_row(op.j);
            for (int c = 0; c < m.cols; ++c) {
                RingElement a = m.at(op.i, c), b = m.at(op.j, c);
                m.at(op.i, c) = add(mul(op.block[0], a), mul(op.block[1], b));
                m.at(op.j, c) = add(mul(op.block[2], a), mul(op.block[3], b));
            }
            break;
        }
        case ElementaryOp::Kind::BlockRight: {
            check_col(op.i); check_col(op.j);
            for (int r = 0; r < m.rows; ++r) {
                RingElement a = m.at(r, op.i), b = m.at(r, op.j);
                m.at(r, op.i) = add(mul(a, op.block[0]), mul(b, op.block[2]));
                m.at(r, op.j) = add(mul(a, op.block[1]), mul(b, op.block[3]));
            }
            break;
        }
    }
    return m;
}

// Ordered elementary operations; replaying left_ops on I yields P, right_ops
// yield Q, so that replaying both on A gives P*A*Q.
struct OpTranscript {
    std::vector<ElementaryOp> left_ops;
    std::vector<ElementaryOp> right_ops;

    Matrix replay(Matrix m) const {
        for (const auto& op : left_ops) m = apply(op, m);
        for (const auto& op : right_ops) m = apply(op, m);
        return m;
    }
};

struct RealizedTransforms {
    Matrix P, Pinv, Q, Qinv;
};

inline RealizedTransforms realize(const OpTranscript& t, int size_left, int size_right,
                                  const RingDescriptor& d) {
    RealizedTransforms r{Matrix::identity(size_left, d), Matrix::identity(size_left, d),
                         Matrix::identity(size_right, d), Matrix::identity(size_right, d)};
    // replay on A gives E_k...E_1 * A * F_1...F_m, so P = E_k...E_1 and
    // P^-1 = E_1^-1 ... E_k^-1 (product over ops in forward order)
    for (const auto& op : t.left_ops) {
        r.P = apply(op, r.P);
        r.Pinv = mat_mul(r.Pinv, apply(inverse(op), Matrix::identity(size_left, d)));
    }
    for (const auto& op : t.right_ops) r.Q = apply(op, r.Q);
    for (auto it = t.right_ops.rbegin(); it != t.right_ops.rend(); ++it)
        r.Qinv = mat_mul(r.Qinv, apply(inverse(*it), Matrix::identity(size_right, d)));
    return r;
}

// --- Structured 2x2 identities ----------------------------------------------

// Four elementary factors B21(-wt) B12(s-1) B21(1) B12(wt-1), multiplied in
// the listed order.  When s*w*t = 1 the product collapses to
// [[s, 0], [1 - wts, wt]]; in general it is
// [[s, swt-1], [1-wts, 2wt - wtswt]] (noncommutative order preserved).
struct FourFactorProduct {
    std::vector<ElementaryOp> ops;  // factor order, row-side on a 2x2
    Matrix product;                 // exact product of the four factors
};

inline Matrix factor_matrix_of(const ElementaryOp& op, const RingDescriptor& d) {
    return apply(op, Matrix::identity(2, d));
}

inline FourFactorProduct four_factor_product(const RingElement& s, const RingElement& t,
                                                      const RingElement& w) {
    detail::require_same_ring(s, t);
    detail::require_same_ring(s, w);
    const auto& d = s.ring;
    RingElement one = RingElement::one(d);
    RingElement wt = mul(w, t);
    // B12(l) = [[1,l],[0,1]] adds l*row2 to row1; B21(l) adds l*row1 to row2
    std::vector<ElementaryOp> ops = {
        ElementaryOp::add_left(1, 0, neg(wt)),      // B21(-wt)
        ElementaryOp::add_left(0, 1, sub(s, one)),  // B12(s-1)
        ElementaryOp::add_left(1, 0, one),          // B21(1)
        ElementaryOp::add_left(0, 1, sub(wt, one)), // B12(wt-1)
    };
    Matrix prod = Matrix::identity(2, d);
    for (const auto& op : ops) prod = mat_mul(prod, factor_matrix_of(op, d));

    // closed form, noncommutative order preserved
    RingElement wts = mul(wt, s);
    Matrix closed = make2x2(d, s, sub(mul(s, wt), one), sub(one, wts),
                            sub(add(wt, wt), mul(wts, wt)));
    if (prod != closed) throw ring_error("four-factor product mismatch");  // internal check
    if (is_one(mul(s, wt))) {
        Matrix target = make2x2(d, s, RingElement::zero(d), sub(one, wts), wt);
        if (prod != target) throw ring_error("four-factor unit-case identity failed");
    }
    return {std::move(ops), std::move(prod)};
}

// Column-side mirror of the same identity: B12(-wt) B21(s-1) B12(1) B21(wt-1)
// equals [[wt, 1-wts], [0, s]] when s*w*t = 1.
inline FourFactorProduct four_factor_product_cols(const RingElement& s, const RingElement& t,
                                               const RingElement& w) {
    const auto& d = s.ring;
    RingElement one = RingElement::one(d);
    RingElement wt = mul(w, t);
    std::vector<ElementaryOp> ops = {
        ElementaryOp::add_right(1, 0, neg(wt)),      // col analogue of B12(-wt)
        ElementaryOp::add_right(0, 1, sub(s, one)),  // B21(s-1)
        ElementaryOp::add_right(1, 0, one),          // B12(1)
        ElementaryOp::add_right(0, 1, sub(wt, one)), // B21(wt-1)
    };
    Matrix prod = Matrix::identity(2, d);
    for (const auto& op : ops) prod = mat_mul(prod, factor_matrix_of(op, d));
    return {std::move(ops), std::move(prod)};
}

// Pivot-promotion identity: with s*b*t = 1, the factors
//   L = [[sb, 0], [1-tsb, t]]  and  R = [[s, 1-bts], [0, bt]]
// are invertible (exhibited as four-elementary-op products) and
// L * [[1,0],[b,1]] * R carries a unit into the (2,1) pivot.
struct PivotPromotionRecord {
    Matrix left, right;        // the two invertible factors
    FourFactorProduct left_fact;
    FourFactorProduct right_fact;
    Matrix conjugated;
    RingElement pivot;         // entry (1,0) of the conjugated matrix
    bool pivot_is_unit = false;
    bool pivot_is_one = false;
};

inline PivotPromotionRecord pivot_promotion_identity(const RingElement& s, const RingElement& t,
                                                    const RingElement& b) {
    detail::require_same_ring(s, t);
    detail::require_same_ring(s, b);
    const auto& d = s.ring;
    RingElement one = RingElement::one(d);
    if (!is_one(mul(mul(s, b), t))) throw ring_error("precondition s*b*t = 1 fails");

    PivotPromotionRecord rec;
    RingElement sb = mul(s, b), bt = mul(b, t);
    rec.left = make2x2(d, sb, RingElement::zero(d), sub(one, mul(t, sb)), t);
    rec.right = make2x2(d, s, sub(one, mul(bt, s)), RingElement::zero(d), bt);

    // L is the four-factor product with (s,t,w) = (sb, 1, t): s'*w'*t' = sb*t*1 = 1
    rec.left_fact = four_factor_product(sb, one, t);
    if (rec.left_fact.product != rec.left) throw ring_error("left factor mismatch");
    // R is the column mirror with (s,t,w) = (bt, 1, s): product [[s, 1-s*bt],[0, bt]],
    // which equals R since sbt = bts = 1 in every supported instance
    rec.right_fact = four_factor_product_cols(bt, one, s);
    if (rec.right_fact.product != rec.right) throw ring_error("right factor mismatch");

    Matrix a = make2x2(d, one, RingElement::zero(d), b, one);
    rec.conjugated = mat_mul(mat_mul(rec.left, a), rec.right);
    rec.pivot = rec.conjugated.at(1, 0);
    rec.pivot_is_unit = is_unit(rec.pivot);
    rec.pivot_is_one = is_one(rec.pivot);
    if (!rec.pivot_is_unit) throw ring_error("pivot entry is not a unit");
    return rec;
}

}  // namespace bezout
