#pragma once

// Constructive Hermite machinery: gcd column steps, unimodular row
// completion, and triangularization with a full transcript.

#include "element.hpp"
#include "matrix.hpp"

namespace bezout {

struct RowGcdStep {
    std::vector<ElementaryOp> ops;  // column ops on positions (0,1)
    RingElement d;                  // canonical gcd; (a,b) * Q = (d, 0)
};

// Produces an invertible 2x2 column transform Q with (a,b)*Q = (d,0).
// Commutative case: with d = ax+by, a = d a', b = d b',
//   Q = [[x, -b'], [y, a']],  Q^-1 = [[a', b'], [-y, x]].
inline RowGcdStep row_gcd_step(const RingElement& a, const RingElement& b) {
    detail::require_same_ring(a, b);
    const auto& ring = a.ring;
    if (a.is_zero() && b.is_zero()) return {{}, RingElement::zero(ring)};

    if (ring.division_ring()) {
        std::vector<ElementaryOp> ops;
        RingElement lead = a, other = b;
        if (a.is_zero()) {
            ops.push_back(ElementaryOp::swap_cols(0, 1, ring));
            std::swap(lead, other);
        }
        RingElement li = inverse(lead);
        // (lead, other) * [[li, -li*other],[0,1]] = (1, 0)
        Matrix q = make2x2(ring, li, neg(mul(li, other)), RingElement::zero(ring),
                           RingElement::one(ring));
        Matrix qi = make2x2(ring, lead, other, RingElement::zero(ring), RingElement::one(ring));
        ops.push_back(ElementaryOp::block_right(0, 1, q, qi));
        return {std::move(ops), RingElement::one(ring)};
    }

    BezoutWitness w = extended_gcd(a, b);
    RingElement ap = *try_divide(a, w.d);
    RingElement bp = *try_divide(b, w.d);
    Matrix q = make2x2(ring, w.x, neg(bp), w.y, ap);
    Matrix qi = make2x2(ring, ap, bp, neg(w.y), w.x);
    return {{ElementaryOp::block_right(0, 1, q, qi)}, w.d};
}

// Completes a comaximal row (p, q) to U in GL_2 with explicit inverse.
struct UnimodularCompletion {
    Matrix U, Uinv;
};

inline UnimodularCompletion unimodular_completion(const RingElement& p, const RingElement& q) {
    detail::require_same_ring(p, q);
    const auto& ring = p.ring;
    BezoutWitness w = extended_gcd(p, q);
    if (!is_unit(w.d)) throw not_comaximal();
    RingElement ui = inverse(w.d);
    RingElement x = mul(w.x, ui), y = mul(w.y, ui);  // px + qy = 1
    Matrix u = make2x2(ring, p, q, neg(y), x);
    Matrix uinv = make2x2(ring, x, neg(q), y, p);
    if (mat_mul(u, uinv) != Matrix::identity(2, ring))
        throw ring_error("unimodular completion inverse check failed");
    return {u, uinv};
}

namespace detail {

// Remap a 2x2-indexed op list onto concrete row/column indices.
inline ElementaryOp remap2(const ElementaryOp& op, int i0, int i1) {
    ElementaryOp r = op;
    r.i = op.i == 0 ? i0 : i1;
    r.j = op.j == 0 ? i0 : i1;
    return r;
}

}  // namespace detail

struct HermiteResult {
    OpTranscript transcript;
    Matrix T;  // lower triangular: entries above the main diagonal are zero
};

// Sweeps row_gcd_step across each pivot row, clearing everything right of the
// diagonal.  Pivots are normalized to canonical associates.
inline HermiteResult hermite_triangularize(const Matrix& A) {
    HermiteResult res{{}, A};
    Matrix& T = res.T;
    int n = std::min(T.rows, T.cols);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < T.cols; ++j) {
            if (T.at(i, j).is_zero()) continue;
            RowGcdStep step = row_gcd_step(T.at(i, i), T.at(i, j));
            for (const auto& op : step.ops) {
                ElementaryOp mapped = detail::remap2(op, i, j);
                T = apply(mapped, T);
                res.transcript.right_ops.push_back(std::move(mapped));
            }
        }
        // unit scale so the pivot is a canonical associate
        auto ca = canonical_associate(T.at(i, i));
        if (!is_one(ca.unit) && !T.at(i, i).is_zero()) {
            ElementaryOp sc = ElementaryOp::scale_col_right(i, inverse(ca.unit));
            T = apply(sc, T);
            res.transcript.right_ops.push_back(std::move(sc));
        }
    }
    return res;
}

}  // namespace bezout
