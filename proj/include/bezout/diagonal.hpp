#pragma once

// Full diagonal reduction P*A*Q = D with a divisibility chain, the
// comaximality pivot witness (p, q) and its (r, s, t) companion, the
// 2x2 pivot-growth loop, and reduction through the Jacobson quotient of
// the localized-integer instance.

#include <vector>

#include "element.hpp"
#include "hermite.hpp"
#include "matrix.hpp"

namespace bezout {

struct ReductionResult {
    Matrix P, Pinv, Q, Qinv, D;
    std::vector<RingElement> chain;
    OpTranscript transcript;
};

namespace detail {

// strictly decreasing whenever the pivot is replaced by a proper divisor
inline Int euclid_size(const RingElement& a) {
    switch (a.ring.kind) {
        case RingKind::Integers: return boost::multiprecision::abs(a.z);
        case RingKind::PolyOverPrimeField: return Int(a.coeffs.size());
        case RingKind::LocalizedIntegers: return zloc_associate_int(a);
        case RingKind::ModularIntegers:
            return a.z == 0 ? Int(a.ring.param) : gcd_int(a.z, Int(a.ring.param));
        case RingKind::RationalQuaternions: return a.is_zero() ? Int(0) : Int(1);
    }
    return 0;
}

// left 2x2 block clearing a column pair: B * (a, c)^T = (d, 0)^T
inline ElementaryOp col_gcd_block(const RingElement& a, const RingElement& c, int i0, int i1) {
    BezoutWitness w = extended_gcd(a, c);
    RingElement ap = *try_divide(a, w.d);
    RingElement cp = *try_divide(c, w.d);
    Matrix b = make2x2(a.ring, w.x, w.y, neg(cp), ap);
    Matrix bi = make2x2(a.ring, ap, neg(w.y), cp, w.x);
    ElementaryOp op = ElementaryOp::block_left(0, 1, b, bi);
    op.i = i0;
    op.j = i1;
    return op;
}

inline ElementaryOp row_gcd_block(const RingElement& a, const RingElement& b, int j0, int j1) {
    RowGcdStep st = row_gcd_step(a, b);
    // commutative path always yields exactly one block op
    ElementaryOp op = st.ops.front();
    op.i = j0;
    op.j = j1;
    return op;
}

}  // namespace detail

namespace detail {

struct Reducer {
    Matrix D;
    OpTranscript tr;

    explicit Reducer(const Matrix& A) : D(A) {}

    void left(ElementaryOp op) {
        D = apply(op, D);
        tr.left_ops.push_back(std::move(op));
    }
    void right(ElementaryOp op) {
        D = apply(op, D);
        tr.right_ops.push_back(std::move(op));
    }

    bool move_pivot(int k) {  // first nonzero entry of the trailing submatrix
        for (int i = k; i < D.rows; ++i)
            for (int j = k; j < D.cols; ++j)
                if (!D.at(i, j).is_zero()) {
                    if (i != k) left(ElementaryOp::swap_rows(k, i, D.ring));
                    if (j != k) right(ElementaryOp::swap_cols(k, j, D.ring));
                    return true;
                }
        return false;
    }

    void clear_row(int k) {
        for (int j = k + 1; j < D.cols; ++j) {
            if (D.at(k, j).is_zero()) continue;
            if (auto q = try_divide(D.at(k, j), D.at(k, k)))
                right(ElementaryOp::add_right(j, k, neg(*q)));
            else
                right(row_gcd_block(D.at(k, k), D.at(k, j), k, j));
        }
    }

    void clear_col(int k) {
        for (int i = k + 1; i < D.rows; ++i) {
            if (D.at(i, k).is_zero()) continue;
            if (auto q = try_divide(D.at(i, k), D.at(k, k)))
                left(ElementaryOp::add_left(i, k, neg(*q)));
            else
                left(col_gcd_block(D.at(k, k), D.at(i, k), k, i));
        }
    }

    bool row_clean(int k) const {
        for (int j = k + 1; j < D.cols; ++j)
            if (!D.at(k, j).is_zero()) return false;
        return true;
    }
    bool col_clean(int k) const {
        for (int i = k + 1; i < D.rows; ++i)
            if (!D.at(i, k).is_zero()) return false;
        return true;
    }

    // (i, j) with i, j > k whose entry the pivot fails to divide
    std::pair<int, int> undivided_entry(int k) const {
        for (int i = k + 1; i < D.rows; ++i)
            for (int j = k + 1; j < D.cols; ++j)
                if (!D.at(i, j).is_zero() && !try_divide(D.at(i, j), D.at(k, k)))
                    return {i, j};
        return {-1, -1};
    }

    void normalize_pivot(int k) {
        if (D.at(k, k).is_zero()) return;
        auto ca = canonical_associate(D.at(k, k));
        if (!is_one(ca.unit))
            right(ElementaryOp::scale_col_right(k, inverse(ca.unit)));
    }
};

inline void reduce_commutative(Reducer& rd) {
    int n = std::min(rd.D.rows, rd.D.cols);
    for (int k = 0; k < n; ++k) {
        if (!rd.move_pivot(k)) break;  // trailing submatrix is zero
        for (int guard = 0;; ++guard) {
            if (guard > 100000) throw ring_error("reduction failed to terminate");
            rd.clear_row(k);
            rd.clear_col(k);
            if (!rd.row_clean(k) || !rd.col_clean(k)) continue;
            auto [i, j] = rd.undivided_entry(k);
            if (i < 0) break;
            // fold the offending row into the pivot row; the next gcd step
            // strictly shrinks the pivot
            rd.left(ElementaryOp::add_left(k, i, RingElement::one(rd.D.ring)));
        }
        rd.normalize_pivot(k);
    }
}

inline void reduce_division_ring(Reducer& rd) {
    int n = std::min(rd.D.rows, rd.D.cols);
    for (int k = 0; k < n; ++k) {
        if (!rd.move_pivot(k)) break;
        rd.left(ElementaryOp::scale_row_left(k, inverse(rd.D.at(k, k))));
        for (int j = k + 1; j < rd.D.cols; ++j)
            if (!rd.D.at(k, j).is_zero())
                rd.right(ElementaryOp::add_right(j, k, neg(rd.D.at(k, j))));
        for (int i = k + 1; i < rd.D.rows; ++i)
            if (!rd.D.at(i, k).is_zero())
                rd.left(ElementaryOp::add_left(i, k, neg(rd.D.at(i, k))));
    }
}

inline ReductionResult finish(const Matrix& A, Reducer& rd) {
    ReductionResult res;
    res.D = rd.D;
    res.transcript = std::move(rd.tr);
    RealizedTransforms rt = realize(res.transcript, A.rows, A.cols, A.ring);
    res.P = std::move(rt.P);
    res.Pinv = std::move(rt.Pinv);
    res.Q = std::move(rt.Q);
    res.Qinv = std::move(rt.Qinv);
    for (int k = 0; k < std::min(res.D.rows, res.D.cols); ++k)
        res.chain.push_back(res.D.at(k, k));
    return res;
}

}  // namespace detail

inline ReductionResult diagonal_reduce(const Matrix& A) {
    detail::Reducer rd(A);
    if (A.ring.division_ring())
        detail::reduce_division_ring(rd);
    else
        detail::reduce_commutative(rd);
    return detail::finish(A, rd);
}

// Re-checks every ReductionResult invariant against the original input.
inline bool verify_reduction(const Matrix& A, const ReductionResult& r) {
    if (mat_mul(mat_mul(r.P, A), r.Q) != r.D) return false;
    if (mat_mul(r.P, r.Pinv) != Matrix::identity(A.rows, A.ring)) return false;
    if (mat_mul(r.Pinv, r.P) != Matrix::identity(A.rows, A.ring)) return false;
    if (mat_mul(r.Q, r.Qinv) != Matrix::identity(A.cols, A.ring)) return false;
    if (mat_mul(r.Qinv, r.Q) != Matrix::identity(A.cols, A.ring)) return false;
    if (!r.D.is_diagonal()) return false;
    if ((int)r.chain.size() != std::min(A.rows, A.cols)) return false;
    bool seen_zero = false;
    for (size_t i = 0; i < r.chain.size(); ++i) {
        if (r.chain[i] != r.D.at((int)i, (int)i)) return false;
        if (canonical_associate(r.chain[i]).canon != r.chain[i]) return false;
        if (r.chain[i].is_zero()) seen_zero = true;
        else if (seen_zero) return false;  // zeros must trail
        if (i + 1 < r.chain.size() && !r.chain[i].is_zero() &&
            !try_divide(r.chain[i + 1], r.chain[i]))
            return false;
    }
    return true;
}

// --- Comaximality pivot witnesses ------------------------------------------

struct KaplanskyWitness {
    RingElement p, q;        // (pa + qb)R + qcR = R
    RingElement x, y;        // x(pa+qb) + y(qc) = 1
    RingElement r, s, t;     // ra + sb + tc = 1, s | rt
    RingElement rt_quot;     // s * rt_quot = r * t
};

namespace detail {

// systematic enumeration of ring elements: 0, 1, -1, 2, -2, ... (polynomials
// by base-p digit expansion of the index)
inline RingElement enumerate_element(const RingDescriptor& ring, long long idx) {
    switch (ring.kind) {
        case RingKind::PolyOverPrimeField: {
            std::vector<long long> cs;
            long long v = idx;
            while (v > 0) {
                cs.push_back(v % ring.param);
                v /= ring.param;
            }
            return RingElement::poly(ring, std::move(cs));
        }
        default: {
            long long v = (idx + 1) / 2;
            if (idx % 2 == 0) v = -v;
            return RingElement::from_int(ring, v);
        }
    }
}

// Distinct prime (maximal-ideal) divisors of a, by trial division.
inline std::vector<RingElement> prime_divisors(const RingElement& a) {
    const auto& ring = a.ring;
    std::vector<RingElement> out;
    switch (ring.kind) {
        case RingKind::Integers:
        case RingKind::ModularIntegers: {
            Int m = ring.kind == RingKind::Integers ? boost::multiprecision::abs(a.z)
                                                    : gcd_int(a.z, Int(ring.param));
            if (m == 0) throw ring_error("prime_divisors(0)");
            for (Int d = 2; d * d <= m; ++d)
                if (m % d == 0) {
                    out.push_back(RingElement::from_int(ring, d));
                    while (m % d == 0) m /= d;
                }
            if (m > 1) out.push_back(RingElement::from_int(ring, m));
            return out;
        }
        case RingKind::LocalizedIntegers: {
            Int assoc = zloc_associate_int(a);
            if (assoc == 0) throw ring_error("prime_divisors(0)");
            if (assoc % 2 == 0) out.push_back(RingElement::from_int(ring, 2));
            if (assoc % 3 == 0) out.push_back(RingElement::from_int(ring, 3));
            return out;
        }
        case RingKind::PolyOverPrimeField: {
            RingElement f = canonical_associate(a).canon;
            if (f.is_zero()) throw ring_error("prime_divisors(0)");
            // trial division by monic polynomials in degree order; the first
            // divisor of each degree found is necessarily irreducible
            for (int deg = 1; f.degree() >= 1 && deg <= f.degree(); ++deg) {
                long long count = 1;
                for (int i = 0; i < deg; ++i) count *= ring.param;  // monic candidates
                for (long long idx = 0; idx < count && f.degree() >= 1; ++idx) {
                    std::vector<long long> cs;
                    long long v = idx;
                    for (int i = 0; i < deg; ++i) { cs.push_back(v % ring.param); v /= ring.param; }
                    cs.push_back(1);
                    RingElement g = RingElement::poly(ring, std::move(cs));
                    if (try_divide(f, g)) {
                        out.push_back(g);
                        while (auto q = try_divide(f, g)) f = *q;
                    }
                }
            }
            return out;
        }
        default:
            throw unsupported_operation("prime_divisors");
    }
}

// CRT solve p with, for every prime divisor pi of c, (p*a + b) not in (pi).
// A residue in {0,1} works per prime: if a is in (pi) then b cannot be, and
// otherwise at most one residue class mod pi is excluded.
inline RingElement kaplansky_crt(const RingElement& a, const RingElement& b,
                                 const RingElement& c) {
    const auto& ring = a.ring;
    RingElement p = RingElement::zero(ring);
    RingElement modulus = RingElement::one(ring);
    for (const auto& pi : prime_divisors(c)) {
        bool bad0 = (bool)try_divide(b, pi);  // p=0 fails mod pi
        RingElement want = bad0 ? RingElement::one(ring) : RingElement::zero(ring);
        if (bad0 && try_divide(add(a, b), pi))
            throw ring_error("no admissible residue: triple not comaximal");
        // shift p by multiples of the running modulus until it matches mod pi
        for (long long k = 0;; ++k) {
            if (k > 4096) throw ring_error("crt search exhausted");
            RingElement cand = add(p, mul(modulus, enumerate_element(ring, k)));
            if (try_divide(sub(cand, want), pi)) { p = cand; break; }
        }
        modulus = mul(modulus, pi);
    }
    return p;
}

}  // namespace detail

// Finds (p, q) with gcd(pa + qb, qc) a unit for a comaximal triple, plus the
// (r, s, t) companion with ra + sb + tc = 1 and s | rt.
// Strategy: q = 1 and a bounded search for p, with a CRT fallback over the
// prime divisors of c.
inline KaplanskyWitness kaplansky_step(const RingElement& a, const RingElement& b,
                                       const RingElement& c) {
    detail::require_same_ring(a, b);
    detail::require_same_ring(a, c);
    const auto& ring = a.ring;
    if (!ring.commutative()) throw unsupported_operation("kaplansky_step: commutative only");
    RingElement g = extended_gcd(extended_gcd(a, b).d, c).d;
    if (!is_unit(g)) throw not_comaximal();

    KaplanskyWitness w;
    if (c.is_zero()) {
        // gcd(a,b) is forced to be a unit; its witness is the pivot pair
        BezoutWitness bw = extended_gcd(a, b);
        RingElement ui = inverse(bw.d);
        w.p = mul(bw.x, ui);
        w.q = mul(bw.y, ui);
    } else {
        w.q = RingElement::one(ring);
        bool found = false;
        for (long long k = 0; k < 512; ++k) {
            RingElement cand = detail::enumerate_element(ring, k);
            if (is_unit(extended_gcd(add(mul(cand, a), b), c).d)) {
                w.p = cand;
                found = true;
                break;
            }
        }
        if (!found) w.p = detail::kaplansky_crt(a, b, c);
    }

    RingElement u = add(mul(w.p, a), mul(w.q, b));
    RingElement v = mul(w.q, c);
    BezoutWitness bw = extended_gcd(u, v);
    if (!is_unit(bw.d)) throw ring_error("kaplansky search produced a non-unit gcd");
    RingElement di = inverse(bw.d);
    w.x = mul(bw.x, di);
    w.y = mul(bw.y, di);
    w.r = mul(w.x, w.p);
    w.s = mul(w.x, w.q);
    w.t = mul(w.y, w.q);
    w.rt_quot = w.s.is_zero() ? RingElement::zero(ring) : mul(w.p, w.y);
    if (add(add(mul(w.r, a), mul(w.s, b)), mul(w.t, c)) != RingElement::one(ring))
        throw ring_error("kaplansky witness: ra+sb+tc != 1");
    if (mul(w.s, w.rt_quot) != mul(w.r, w.t))
        throw ring_error("kaplansky witness: s does not divide rt");
    return w;
}

// --- 2x2 pivot-growth loop --------------------------------------------------

struct MspecLoopResult {
    ReductionResult reduction;
    std::vector<RingElement> pivot_chain;  // strictly ascending ideal chain
};

// Alternating row/column gcd steps on a 2x2 matrix; the pivot ideal grows
// strictly at each logged stage, which bounds the loop for any instance with
// a Euclidean size.
inline MspecLoopResult mspec_pivot_loop(const Matrix& A) {
    if (A.rows != 2 || A.cols != 2) throw ring_error("mspec_pivot_loop needs a 2x2 matrix");
    switch (A.ring.kind) {
        case RingKind::Integers:
        case RingKind::PolyOverPrimeField:
        case RingKind::LocalizedIntegers: break;
        default: throw unsupported_operation("mspec_pivot_loop: Euclidean-size instances only");
    }
    detail::Reducer rd(A);
    MspecLoopResult res;
    if (rd.move_pivot(0)) {
        Int size = detail::euclid_size(rd.D.at(0, 0));
        res.pivot_chain.push_back(canonical_associate(rd.D.at(0, 0)).canon);
        for (int guard = 0;; ++guard) {
            if (guard > 100000) throw ring_error("pivot loop failed to terminate");
            if (!rd.D.at(0, 1).is_zero()) {
                if (auto q = try_divide(rd.D.at(0, 1), rd.D.at(0, 0)))
                    rd.right(ElementaryOp::add_right(1, 0, neg(*q)));
                else
                    rd.right(detail::row_gcd_block(rd.D.at(0, 0), rd.D.at(0, 1), 0, 1));
            }
            if (!rd.D.at(1, 0).is_zero()) {
                if (auto q = try_divide(rd.D.at(1, 0), rd.D.at(0, 0)))
                    rd.left(ElementaryOp::add_left(1, 0, neg(*q)));
                else
                    rd.left(detail::col_gcd_block(rd.D.at(0, 0), rd.D.at(1, 0), 0, 1));
            }
            Int nsize = detail::euclid_size(rd.D.at(0, 0));
            if (nsize < size) {  // the ideal a_iR grew strictly
                size = nsize;
                res.pivot_chain.push_back(canonical_associate(rd.D.at(0, 0)).canon);
            }
            if (!rd.D.at(0, 1).is_zero() || !rd.D.at(1, 0).is_zero()) continue;
            if (!rd.D.at(1, 1).is_zero() && !try_divide(rd.D.at(1, 1), rd.D.at(0, 0))) {
                rd.left(ElementaryOp::add_left(0, 1, RingElement::one(A.ring)));
                continue;
            }
            break;
        }
        rd.normalize_pivot(0);
        rd.normalize_pivot(1);
    }
    res.reduction = detail::finish(A, rd);
    return res;
}

// --- Reduction through R/J(R) for the localized integers --------------------

namespace detail {

inline RingElement lift_zloc(const RingElement& m6) {
    return RingElement::from_int(RingDescriptor::zloc23(), m6.z);
}

// An element invertible modulo 6R is a unit of Z_(2,3): certified through
// jacobson_membership before taking the inverse.
inline RingElement certified_unit_lift(const RingElement& m6) {
    RingElement lifted = lift_zloc(m6);
    if (jacobson_membership(lifted) || !is_unit(lifted))
        throw ring_error("unit lift failed: image not invertible mod J");
    return lifted;
}

inline ElementaryOp lift_op_zloc(const ElementaryOp& op) {
    const auto zring = RingDescriptor::zloc23();
    ElementaryOp r = op;
    switch (op.kind) {
        case ElementaryOp::Kind::AddLeftMultiple:
        case ElementaryOp::Kind::AddRightMultiple:
            r.lambda = lift_zloc(op.lambda);
            break;
        case ElementaryOp::Kind::SwapRows:
        case ElementaryOp::Kind::SwapCols:
            r.lambda = RingElement::zero(zring);
            break;
        case ElementaryOp::Kind::ScaleRowLeft:
        case ElementaryOp::Kind::ScaleColRight:
            r.lambda = certified_unit_lift(op.lambda);
            break;
        case ElementaryOp::Kind::BlockLeft:
        case ElementaryOp::Kind::BlockRight: {
            Matrix b(2, 2, zring);
            b.at(0, 0) = lift_zloc(op.block[0]);
            b.at(0, 1) = lift_zloc(op.block[1]);
            b.at(1, 0) = lift_zloc(op.block[2]);
            b.at(1, 1) = lift_zloc(op.block[3]);
            // det is invertible mod 6R, hence a unit; invert by adjugate
            RingElement det = sub(mul(b.at(0, 0), b.at(1, 1)), mul(b.at(0, 1), b.at(1, 0)));
            if (jacobson_membership(det) || !is_unit(det))
                throw ring_error("block lift failed: determinant not a unit");
            RingElement di = inverse(det);
            Matrix bi = make2x2(zring, mul(b.at(1, 1), di), neg(mul(b.at(0, 1), di)),
                                neg(mul(b.at(1, 0), di)), mul(b.at(0, 0), di));
            r.block = {b.at(0, 0), b.at(0, 1), b.at(1, 0), b.at(1, 1),
                       bi.at(0, 0), bi.at(0, 1), bi.at(1, 0), bi.at(1, 1)};
            break;
        }
    }
    return r;
}

}  // namespace detail

// Reduces the image of A in Z_(2,3) / 6R (= Z/6), lifts every elementary
// operation back (unit lifts certified via jacobson_membership), then
// finishes the divisibility chain over the localized integers.
inline ReductionResult reduce_mod_jacobson(const Matrix& A) {
    if (A.ring.kind != RingKind::LocalizedIntegers)
        throw unsupported_operation("reduce_mod_jacobson: zloc23 only");
    const auto m6 = RingDescriptor::mod(6);
    Matrix img(A.rows, A.cols, m6);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) {
            // residue of m/n mod 6R via the inverse of the (unit) denominator
            const Rat& v = A.at(i, j).q;
            RingElement num = RingElement::from_int(m6, boost::multiprecision::numerator(v));
            RingElement den = RingElement::from_int(m6, boost::multiprecision::denominator(v));
            img.at(i, j) = mul(num, inverse(den));
        }
    ReductionResult quot = diagonal_reduce(img);

    detail::Reducer rd(A);
    for (const auto& op : quot.transcript.left_ops) rd.left(detail::lift_op_zloc(op));
    for (const auto& op : quot.transcript.right_ops) rd.right(detail::lift_op_zloc(op));
    // off-diagonal residue lies in 6R now; finish the chain over Z_(2,3)
    detail::reduce_commutative(rd);
    return detail::finish(A, rd);
}

}  // namespace bezout
