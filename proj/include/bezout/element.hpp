#pragma once

// Exact elements of the five supported ring instances:
//   Z, F_p[x], Z_(2,3) (integers localized away from {2,3}), Z/n, and the
//   rational quaternions.  All values are immutable and canonical.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bezout {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct ring_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct descriptor_mismatch : ring_error {
    descriptor_mismatch() : ring_error("ring descriptor mismatch") {}
};
struct not_a_unit : ring_error {
    not_a_unit() : ring_error("element is not a unit") {}
};
struct division_by_zero : ring_error {
    division_by_zero() : ring_error("division by zero") {}
};
struct not_comaximal : ring_error {
    not_comaximal() : ring_error("elements are not comaximal") {}
};
struct unsupported_operation : ring_error {
    using ring_error::ring_error;
};
struct parse_error : ring_error {
    using ring_error::ring_error;
};

enum class RingKind {
    Integers,
    PolyOverPrimeField,
    LocalizedIntegers,   // Z localized at integers coprime to 6
    ModularIntegers,
    RationalQuaternions,
};

namespace detail {

inline bool is_prime_ll(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace detail

struct RingDescriptor {
    RingKind kind = RingKind::Integers;
    long long param = 0;  // p for PolyOverPrimeField, n for ModularIntegers

    static RingDescriptor integers() { return {RingKind::Integers, 0}; }
    static RingDescriptor poly(long long p) {
        if (!detail::is_prime_ll(p))
            throw ring_error("poly ring modulus must be prime");
        return {RingKind::PolyOverPrimeField, p};
    }
    static RingDescriptor zloc23() { return {RingKind::LocalizedIntegers, 0}; }
    static RingDescriptor mod(long long n) {
        if (n < 2) throw ring_error("modulus must be >= 2");
        return {RingKind::ModularIntegers, n};
    }
    static RingDescriptor quat() { return {RingKind::RationalQuaternions, 0}; }

    bool operator==(const RingDescriptor& o) const {
        return kind == o.kind && param == o.param;
    }
    bool operator!=(const RingDescriptor& o) const { return !(*this == o); }

    bool commutative() const { return kind != RingKind::RationalQuaternions; }
    bool division_ring() const { return kind == RingKind::RationalQuaternions; }
    bool domain() const { return kind != RingKind::ModularIntegers; }

    // descriptor strings: "int", "poly:p", "zloc23", "mod:n", "quat"
    static RingDescriptor parse(const std::string& s) {
        if (s == "int") return integers();
        if (s == "zloc23") return zloc23();
        if (s == "quat") return quat();
        if (s.rfind("poly:", 0) == 0) return poly(std::stoll(s.substr(5)));
        if (s.rfind("mod:", 0) == 0) return mod(std::stoll(s.substr(4)));
        throw parse_error("unknown ring descriptor: " + s);
    }
    std::string str() const {
        switch (kind) {
            case RingKind::Integers: return "int";
            case RingKind::PolyOverPrimeField: return "poly:" + std::to_string(param);
            case RingKind::LocalizedIntegers: return "zloc23";
            case RingKind::ModularIntegers: return "mod:" + std::to_string(param);
            case RingKind::RationalQuaternions: return "quat";
        }
        return "?";
    }
};

namespace detail {

inline long long mod_ll(long long a, long long p) {
    long long r = a % p;
    return r < 0 ? r + p : r;
}

inline long long mulmod_ll(long long a, long long b, long long p) {
    return (long long)((__int128)a * b % p);
}

inline long long pow_mod_ll(long long a, long long e, long long p) {
    long long r = 1 % p;
    a = mod_ll(a, p);
    while (e > 0) {
        if (e & 1) r = mulmod_ll(r, a, p);
        a = mulmod_ll(a, a, p);
        e >>= 1;
    }
    return r;
}

inline long long inv_mod_ll(long long a, long long p) {
    // p prime
    a = mod_ll(a, p);
    if (a == 0) throw not_a_unit();
    return pow_mod_ll(a, p - 2, p);
}

// extended gcd over Z with d >= 0
inline void xgcd_int(const Int& a, const Int& b, Int& d, Int& x, Int& y) {
    Int old_r = a, r = b;
    Int old_x = 1, xx = 0;
    Int old_y = 0, yy = 1;
    while (r != 0) {
        Int q = old_r / r;  // truncated division is fine for correctness
        Int t;
        t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * xx; old_x = xx; xx = t;
        t = old_y - q * yy; old_y = yy; yy = t;
    }
    d = old_r; x = old_x; y = old_y;
    if (d < 0) { d = -d; x = -x; y = -y; }
}

inline Int gcd_int(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

// p-adic valuation; val(0) undefined, callers guard
inline int valuation(Int m, const Int& p) {
    int v = 0;
    m = boost::multiprecision::abs(m);
    while (m % p == 0) { m /= p; ++v; }
    return v;
}

inline Int pow_int(const Int& b, int e) {
    Int r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace detail

class RingElement {
public:
    RingDescriptor ring;
    // Exactly one of these is live, chosen by ring.kind.
    Int z;                           // Integers / ModularIntegers residue in [0,n)
    std::vector<long long> coeffs;   // poly over F_p, no trailing zeros, empty = 0
    Rat q;                           // zloc23: reduced, positive denominator coprime to 6
    std::array<Rat, 4> h{};          // quaternion w + xi + yj + zk

    RingElement() = default;

    static RingElement zero(const RingDescriptor& r) { return from_int(r, 0); }
    static RingElement one(const RingDescriptor& r) { return from_int(r, 1); }

    static RingElement from_int(const RingDescriptor& r, const Int& v) {
        RingElement e;
        e.ring = r;
        switch (r.kind) {
            case RingKind::Integers: e.z = v; break;
            case RingKind::ModularIntegers: {
                Int m = v % r.param;
                if (m < 0) m += r.param;
                e.z = m;
                break;
            }
            case RingKind::PolyOverPrimeField: {
                long long c = (long long)(v % r.param);
                c = detail::mod_ll(c, r.param);
                if (c != 0) e.coeffs = {c};
                break;
            }
            case RingKind::LocalizedIntegers: e.q = Rat(v); break;
            case RingKind::RationalQuaternions: e.h = {Rat(v), Rat(0), Rat(0), Rat(0)}; break;
        }
        return e;
    }

    static RingElement poly(const RingDescriptor& r, std::vector<long long> cs) {
        if (r.kind != RingKind::PolyOverPrimeField) throw descriptor_mismatch();
        for (auto& c : cs) c = detail::mod_ll(c, r.param);
        while (!cs.empty() && cs.back() == 0) cs.pop_back();
        RingElement e;
        e.ring = r;
        e.coeffs = std::move(cs);
        return e;
    }

    static RingElement zloc(const Rat& v) {
        Int den = boost::multiprecision::denominator(v);
        if (den % 2 == 0 || den % 3 == 0)
            throw ring_error("denominator not coprime to 6 in Z_(2,3)");
        RingElement e;
        e.ring = RingDescriptor::zloc23();
        e.q = v;
        return e;
    }

    static RingElement quaternion(const Rat& w, const Rat& x, const Rat& y, const Rat& zz) {
        RingElement e;
        e.ring = RingDescriptor::quat();
        e.h = {w, x, y, zz};
        return e;
    }

    bool is_zero() const {
        switch (ring.kind) {
            case RingKind::Integers:
            case RingKind::ModularIntegers: return z == 0;
            case RingKind::PolyOverPrimeField: return coeffs.empty();
            case RingKind::LocalizedIntegers: return q == 0;
            case RingKind::RationalQuaternions:
                return h[0] == 0 && h[1] == 0 && h[2] == 0 && h[3] == 0;
        }
        return false;
    }

    bool operator==(const RingElement& o) const {
        if (ring != o.ring) return false;
        switch (ring.kind) {
            case RingKind::Integers:
            case RingKind::ModularIntegers: return z == o.z;
            case RingKind::PolyOverPrimeField: return coeffs == o.coeffs;
            case RingKind::LocalizedIntegers: return q == o.q;
            case RingKind::RationalQuaternions: return h == o.h;
        }
        return false;
    }
    bool operator!=(const RingElement& o) const { return !(*this == o); }

    int degree() const {  // poly only; -1 for zero
        return (int)coeffs.size() - 1;
    }
};

namespace detail {
inline void require_same_ring(const RingElement& a, const RingElement& b) {
    if (a.ring != b.ring) throw descriptor_mismatch();
}
}  // namespace detail

inline RingElement add(const RingElement& a, const RingElement& b) {
    detail::require_same_ring(a, b);
    RingElement r;
    r.ring = a.ring;
    switch (a.ring.kind) {
        case RingKind::Integers: r.z = a.z + b.z; break;
        case RingKind::ModularIntegers: {
            r.z = a.z + b.z;
            if (r.z >= a.ring.param) r.z -= a.ring.param;
            break;
        }
        case RingKind::PolyOverPrimeField: {
            const auto& p = a.ring.param;
            std::vector<long long> cs(std::max(a.coeffs.size(), b.coeffs.size()), 0);
            for (size_t i = 0; i < a.coeffs.size(); ++i) cs[i] = a.coeffs[i];
            for (size_t i = 0; i < b.coeffs.size(); ++i) cs[i] = detail::mod_ll(cs[i] + b.coeffs[i], p);
            while (!cs.empty() && cs.back() == 0) cs.pop_back();
            r.coeffs = std::move(cs);
            break;
        }
        case RingKind::LocalizedIntegers: r.q = a.q + b.q; break;
        case RingKind::RationalQuaternions:
            for (int i = 0; i < 4; ++i) r.h[i] = a.h[i] + b.h[i];
            break;
    }
    return r;
}

inline RingElement neg(const RingElement& a) {
    RingElement r;
    r.ring = a.ring;
    switch (a.ring.kind) {
        case RingKind::Integers: r.z = -a.z; break;
        case RingKind::ModularIntegers: r.z = a.z == 0 ? Int(0) : Int(a.ring.param - a.z); break;
        case RingKind::PolyOverPrimeField: {
            r.coeffs = a.coeffs;
            for (auto& c : r.coeffs) c = c == 0 ? 0 : a.ring.param - c;
            break;
        }
        case RingKind::LocalizedIntegers: r.q = -a.q; break;
        case RingKind::RationalQuaternions:
            for (int i = 0; i < 4; ++i) r.h[i] = -a.h[i];
            break;
    }
    return r;
}

inline RingElement sub(const RingElement& a, const RingElement& b) { return add(a, neg(b)); }

inline RingElement mul(const RingElement& a, const RingElement& b) {
    detail::require_same_ring(a, b);
    RingElement r;
    r.ring = a.ring;
    switch (a.ring.kind) {
        case RingKind::Integers: r.z = a.z * b.z; break;
        case RingKind::ModularIntegers: r.z = a.z * b.z % a.ring.param; break;
        case RingKind::PolyOverPrimeField: {
            if (a.coeffs.empty() || b.coeffs.empty()) break;
            const auto& p = a.ring.param;
            std::vector<long long> cs(a.coeffs.size() + b.coeffs.size() - 1, 0);
            for (size_t i = 0; i < a.coeffs.size(); ++i)
                for (size_t j = 0; j < b.coeffs.size(); ++j)
                    cs[i + j] = detail::mod_ll(cs[i + j] + detail::mulmod_ll(a.coeffs[i], b.coeffs[j], p), p);
            while (!cs.empty() && cs.back() == 0) cs.pop_back();
            r.coeffs = std::move(cs);
            break;
        }
        case RingKind::LocalizedIntegers: r.q = a.q * b.q; break;
        case RingKind::RationalQuaternions: {
            const auto& x = a.h;
            const auto& y = b.h;
            r.h[0] = x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3];
            r.h[1] = x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2];
            r.h[2] = x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1];
            r.h[3] = x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0];
            break;
        }
    }
    return r;
}

inline bool is_one(const RingElement& a) { return a == RingElement::one(a.ring); }

inline bool is_unit(const RingElement& a) {
    switch (a.ring.kind) {
        case RingKind::Integers: return a.z == 1 || a.z == -1;
        case RingKind::ModularIntegers: return detail::gcd_int(a.z, Int(a.ring.param)) == 1;
        case RingKind::PolyOverPrimeField: return a.coeffs.size() == 1;
        case RingKind::LocalizedIntegers: {
            if (a.q == 0) return false;
            Int num = boost::multiprecision::abs(boost::multiprecision::numerator(a.q));
            return num % 2 != 0 && num % 3 != 0;
        }
        case RingKind::RationalQuaternions: return !a.is_zero();
    }
    return false;
}

inline RingElement inverse(const RingElement& a) {
    if (!is_unit(a)) throw not_a_unit();
    RingElement r;
    r.ring = a.ring;
    switch (a.ring.kind) {
        case RingKind::Integers: r.z = a.z; break;  // 1 or -1
        case RingKind::ModularIntegers: {
            Int d, x, y;
            detail::xgcd_int(a.z, Int(a.ring.param), d, x, y);
            x %= a.ring.param;
            if (x < 0) x += a.ring.param;
            r.z = x;
            break;
        }
        case RingKind::PolyOverPrimeField:
            r.coeffs = {detail::inv_mod_ll(a.coeffs[0], a.ring.param)};
            break;
        case RingKind::LocalizedIntegers: r.q = 1 / a.q; break;
        case RingKind::RationalQuaternions: {
            Rat n = a.h[0] * a.h[0] + a.h[1] * a.h[1] + a.h[2] * a.h[2] + a.h[3] * a.h[3];
            r.h = {a.h[0] / n, -a.h[1] / n, -a.h[2] / n, -a.h[3] / n};
            break;
        }
    }
    return r;
}

// Polynomial division with remainder (same prime field).
inline std::pair<RingElement, RingElement> poly_divmod(const RingElement& a, const RingElement& b) {
    const long long p = a.ring.param;
    std::vector<long long> rem = a.coeffs;
    std::vector<long long> quo;
    if (b.coeffs.empty()) throw division_by_zero();
    if (rem.size() >= b.coeffs.size()) {
        quo.assign(rem.size() - b.coeffs.size() + 1, 0);
        long long lead_inv = detail::inv_mod_ll(b.coeffs.back(), p);
        for (int i = (int)rem.size() - 1; i >= (int)b.coeffs.size() - 1; --i) {
            long long c = detail::mulmod_ll(rem[i], lead_inv, p);
            if (c == 0) continue;
            quo[i - (b.coeffs.size() - 1)] = c;
            for (size_t j = 0; j < b.coeffs.size(); ++j) {
                size_t k = i - (b.coeffs.size() - 1) + j;
                rem[k] = detail::mod_ll(rem[k] - detail::mulmod_ll(c, b.coeffs[j], p), p);
            }
        }
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    while (!quo.empty() && quo.back() == 0) quo.pop_back();
    return {RingElement::poly(a.ring, std::move(quo)), RingElement::poly(a.ring, std::move(rem))};
}

// Returns c with a = b*c when it exists (right division: c = b^{-1} a in the
// quaternions).  b must be nonzero.
inline std::optional<RingElement> try_divide(const RingElement& a, const RingElement& b) {
    detail::require_same_ring(a, b);
    if (b.is_zero()) {
        // zero divides exactly the zero element
        if (a.is_zero()) return RingElement::zero(a.ring);
        return std::nullopt;
    }
    switch (a.ring.kind) {
        case RingKind::Integers: {
            if (a.z % b.z != 0) return std::nullopt;
            return RingElement::from_int(a.ring, a.z / b.z);
        }
        case RingKind::ModularIntegers: {
            // solve b*c = a (mod n)
            Int n = a.ring.param;
            Int g = detail::gcd_int(b.z, n);
            if (a.z % g != 0) return std::nullopt;
            Int d, x, y;
            detail::xgcd_int(b.z / g, n / g, d, x, y);
            Int c = (a.z / g % (n / g)) * (x % (n / g)) % (n / g);
            if (c < 0) c += n / g;
            return RingElement::from_int(a.ring, c);
        }
        case RingKind::PolyOverPrimeField: {
            auto [quo, rem] = poly_divmod(a, b);
            if (!rem.is_zero()) return std::nullopt;
            return quo;
        }
        case RingKind::LocalizedIntegers: {
            Rat c = a.q / b.q;
            Int den = boost::multiprecision::denominator(c);
            if (den % 2 == 0 || den % 3 == 0) return std::nullopt;
            return RingElement::zloc(c);
        }
        case RingKind::RationalQuaternions:
            return mul(inverse(b), a);
    }
    return std::nullopt;
}

// a = u * c with u a unit and c the canonical associate.
struct CanonicalAssociate {
    RingElement unit;
    RingElement canon;
};

// 2-3-part of the numerator of a zloc element (as a plain integer).
inline Int zloc_associate_int(const RingElement& a) {
    if (a.q == 0) return 0;
    Int num = boost::multiprecision::abs(boost::multiprecision::numerator(a.q));
    return detail::pow_int(2, detail::valuation(num, 2)) *
           detail::pow_int(3, detail::valuation(num, 3));
}

inline CanonicalAssociate canonical_associate(const RingElement& a) {
    const auto& ring = a.ring;
    if (a.is_zero()) return {RingElement::one(ring), RingElement::zero(ring)};
    switch (ring.kind) {
        case RingKind::Integers:
            return {RingElement::from_int(ring, a.z < 0 ? -1 : 1),
                    RingElement::from_int(ring, boost::multiprecision::abs(a.z))};
        case RingKind::PolyOverPrimeField: {
            RingElement u = RingElement::poly(ring, {a.coeffs.back()});
            return {u, mul(inverse(u), a)};
        }
        case RingKind::LocalizedIntegers: {
            Int assoc = zloc_associate_int(a);
            RingElement c = RingElement::from_int(ring, assoc);
            return {RingElement::zloc(a.q / Rat(assoc)), c};
        }
        case RingKind::ModularIntegers: {
            // canonical representative of the unit orbit is gcd(a, n)
            Int n = ring.param;
            Int c = detail::gcd_int(a.z, n);
            Int step = n / c;
            Int u = a.z / c % step;
            while (detail::gcd_int(u, n) != 1) u += step;  // a unit lift always exists
            return {RingElement::from_int(ring, u), RingElement::from_int(ring, c)};
        }
        case RingKind::RationalQuaternions:
            return {a, RingElement::one(ring)};
    }
    throw unsupported_operation("canonical_associate");
}

// d = a*x + b*y with d | a, d | b, d canonical.
struct BezoutWitness {
    RingElement d, x, y;
};

namespace detail {

// shift x into [0, m) and recompute y so that a*x + b*y = d stays exact
inline void normalize_int_witness(const Int& a, const Int& b, const Int& d, Int& x, Int& y) {
    if (b == 0) return;
    Int m = boost::multiprecision::abs(b / d);
    x %= m;
    if (x < 0) x += m;
    if (a != 0) y = (d - a * x) / b;
    else { y = d / b; x = 0; }
}

}  // namespace detail

inline BezoutWitness extended_gcd(const RingElement& a, const RingElement& b) {
    detail::require_same_ring(a, b);
    const auto& ring = a.ring;
    auto Z = [&](const Int& v) { return RingElement::from_int(ring, v); };
    switch (ring.kind) {
        case RingKind::Integers: {
            if (a.is_zero() && b.is_zero()) return {Z(0), Z(0), Z(0)};
            if (b.is_zero()) return {Z(boost::multiprecision::abs(a.z)), Z(a.z < 0 ? -1 : 1), Z(0)};
            Int d, x, y;
            detail::xgcd_int(a.z, b.z, d, x, y);
            detail::normalize_int_witness(a.z, b.z, d, x, y);
            return {Z(d), Z(x), Z(y)};
        }
        case RingKind::PolyOverPrimeField: {
            if (a.is_zero() && b.is_zero())
                return {RingElement::zero(ring), RingElement::zero(ring), RingElement::zero(ring)};
            RingElement old_r = a, r = b;
            RingElement old_x = RingElement::one(ring), x = RingElement::zero(ring);
            RingElement old_y = RingElement::zero(ring), y = RingElement::one(ring);
            while (!r.is_zero()) {
                auto [quo, rem] = poly_divmod(old_r, r);
                old_r = r; r = rem;
                RingElement t = sub(old_x, mul(quo, x)); old_x = x; x = t;
                t = sub(old_y, mul(quo, y)); old_y = y; y = t;
            }
            auto ca = canonical_associate(old_r);
            RingElement ui = inverse(ca.unit);
            RingElement d = ca.canon, gx = mul(ui, old_x), gy = mul(ui, old_y);
            // reduce x modulo b/d for a deterministic witness
            if (!b.is_zero()) {
                RingElement m = *try_divide(b, d);
                if (m.degree() >= 1) {
                    auto [q2, r2] = poly_divmod(gx, m);
                    gx = r2;
                    if (!a.is_zero()) gy = *try_divide(sub(d, mul(a, gx)), b);
                }
            }
            return {d, gx, gy};
        }
        case RingKind::LocalizedIntegers: {
            if (a.is_zero() && b.is_zero())
                return {RingElement::zero(ring), RingElement::zero(ring), RingElement::zero(ring)};
            auto ca = canonical_associate(a), cb = canonical_associate(b);
            if (b.is_zero()) return {ca.canon, inverse(ca.unit), RingElement::zero(ring)};
            if (a.is_zero()) return {cb.canon, RingElement::zero(ring), inverse(cb.unit)};
            Int A = ca.canon.q.convert_to<Int>(), B = cb.canon.q.convert_to<Int>();
            Int g = detail::gcd_int(A, B);  // = 2^min 3^min
            Int d, X, Y;
            detail::xgcd_int(A / g, B / g, d, X, Y);  // d = 1, the parts are coprime
            detail::normalize_int_witness(A / g, B / g, d, X, Y);
            RingElement x = mul(inverse(ca.unit), RingElement::from_int(ring, X));
            RingElement y = mul(inverse(cb.unit), RingElement::from_int(ring, Y));
            return {RingElement::from_int(ring, g), x, y};
        }
        case RingKind::ModularIntegers: {
            Int n = ring.param;
            Int d0, x0, y0;
            detail::xgcd_int(a.z, b.z, d0, x0, y0);
            Int g, s, t;
            detail::xgcd_int(d0, n, g, s, t);
            if (g == n)  // a = b = 0
                return {Z(0), Z(0), Z(0)};
            return {Z(g), Z(x0 * s), Z(y0 * s)};
        }
        case RingKind::RationalQuaternions: {
            if (a.is_zero() && b.is_zero())
                return {RingElement::zero(ring), RingElement::zero(ring), RingElement::zero(ring)};
            if (!a.is_zero()) return {RingElement::one(ring), inverse(a), RingElement::zero(ring)};
            return {RingElement::one(ring), RingElement::zero(ring), inverse(b)};
        }
    }
    throw unsupported_operation("extended_gcd");
}

inline Int radical_int(Int n) {
    Int r = 1;
    for (Int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            r *= d;
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) r *= n;
    return r;
}

inline bool jacobson_membership(const RingElement& a) {
    switch (a.ring.kind) {
        case RingKind::Integers:
        case RingKind::PolyOverPrimeField:
        case RingKind::RationalQuaternions:
            return a.is_zero();  // J = 0
        case RingKind::LocalizedIntegers: {
            if (a.is_zero()) return true;
            return zloc_associate_int(a) % 6 == 0;  // J = 6R
        }
        case RingKind::ModularIntegers:
            return a.z % radical_int(Int(a.ring.param)) == 0;
    }
    return false;
}

// Maximal ideals containing a, as sorted prime labels.  Integers and
// LocalizedIntegers only; a must be nonzero.
inline std::vector<Int> mspec(const RingElement& a) {
    if (a.is_zero()) throw ring_error("mspec(0): every maximal ideal contains 0");
    switch (a.ring.kind) {
        case RingKind::Integers: {
            std::vector<Int> out;
            Int m = boost::multiprecision::abs(a.z);
            for (Int d = 2; d * d <= m; ++d) {
                if (m % d == 0) {
                    out.push_back(d);
                    while (m % d == 0) m /= d;
                }
            }
            if (m > 1) out.push_back(m);
            return out;
        }
        case RingKind::LocalizedIntegers: {
            std::vector<Int> out;
            Int num = boost::multiprecision::abs(boost::multiprecision::numerator(a.q));
            if (num % 2 == 0) out.push_back(2);
            if (num % 3 == 0) out.push_back(3);
            return out;
        }
        default:
            throw unsupported_operation("mspec: only int and zloc23 instances");
    }
}

}  // namespace bezout
