#pragma once

// Constructive certification of the element-level ring conditions: stable
// range 1 of Z/n, adequate and PM splits, PM idempotent-style witnesses in
// Z/a, and feckly-clean decompositions over the localized integers.

#include <optional>
#include <vector>

#include "element.hpp"

namespace bezout {

// --- stable range 1 of Z/n ---------------------------------------------------

struct StableRangePair {
    long long a, b, y;  // a + b*y is a unit mod n
};

struct StableRangeCertificate {
    long long n = 0;
    bool verdict = false;
    std::vector<StableRangePair> table;        // every comaximal pair, when stored
    std::optional<std::pair<long long, long long>> counterexample;
};

// Exhaustively certifies that Z/n has stable range 1: for every pair with
// aZ + bZ + nZ = Z, some y makes a + b*y a unit.  Always true for finite
// rings; confirmed by enumeration rather than assumed.
inline StableRangeCertificate stable_range_one(long long n, bool store_table = false) {
    if (n < 2 || n > 10000) throw ring_error("stable_range_one: modulus out of budget [2, 10^4]");
    StableRangeCertificate cert;
    cert.n = n;
    cert.verdict = true;
    auto gcd_ll = [](long long a, long long b) {
        while (b) { long long t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    };
    for (long long a = 0; a < n && cert.verdict; ++a) {
        for (long long b = 0; b < n; ++b) {
            if (gcd_ll(gcd_ll(a, b), n) != 1) continue;
            long long found = -1;
            for (long long y = 0; y < n; ++y) {
                if (gcd_ll(a + b * y, n) == 1) { found = y; break; }
            }
            if (found < 0) {
                cert.verdict = false;
                cert.counterexample = {a, b};
                cert.table.clear();
                break;
            }
            if (store_table) cert.table.push_back({a, b, found});
        }
    }
    return cert;
}

// --- adequate splits ---------------------------------------------------------

struct AdequateSplit {
    RingElement r, s;  // a = r*s, gcd(r,b) a unit, every prime of s sticks to b
};

// Factorization-free gcd-saturation: g <- gcd(a,b); s <- g; r <- a/g; then
// repeatedly move gcd(r, s) from r into s until it becomes a unit.
inline AdequateSplit adequate_split(const RingElement& a, const RingElement& b) {
    detail::require_same_ring(a, b);
    switch (a.ring.kind) {
        case RingKind::Integers:
        case RingKind::PolyOverPrimeField:
        case RingKind::LocalizedIntegers: break;
        default: throw unsupported_operation("adequate_split: domain instances only");
    }
    if (a.is_zero()) throw ring_error("adequate_split: a must be nonzero");
    RingElement g = extended_gcd(a, b).d;
    RingElement s = g;
    RingElement r = *try_divide(a, g);
    for (;;) {
        RingElement h = extended_gcd(r, s).d;
        if (is_unit(h)) break;
        r = *try_divide(r, h);
        s = mul(s, h);
    }
    // fold the unit parts so that r*s = a exactly
    RingElement rs = mul(r, s);
    RingElement u = *try_divide(a, rs);
    r = mul(r, u);
    if (mul(r, s) != a) throw ring_error("adequate_split: reassembly failed");
    return {r, s};
}

// --- PM splits and witnesses -------------------------------------------------

struct PMSplit {
    RingElement r, s;  // a = r*s, gcd(r,b) and gcd(s,c) units
};

inline PMSplit pm_split(const RingElement& a, const RingElement& b, const RingElement& c) {
    detail::require_same_ring(a, b);
    detail::require_same_ring(a, c);
    if (!a.ring.commutative()) throw unsupported_operation("pm_split: commutative only");
    if (a.is_zero()) throw ring_error("pm_split: a must be nonzero");
    if (!is_unit(extended_gcd(b, c).d)) throw not_comaximal();
    // u is coprime to c; every prime of v divides c, so v is coprime to b
    AdequateSplit ad = adequate_split(a, c);
    PMSplit out{ad.s, ad.r};
    if (mul(out.r, out.s) != a) throw ring_error("pm_split: reassembly failed");
    if (!is_unit(extended_gcd(out.r, b).d) || !is_unit(extended_gcd(out.s, c).d))
        throw ring_error("pm_split: coprimality witness failed");
    return out;
}

struct PMWitness {
    long long r, s;  // (1 + b*r)(1 + c*s) = 0 in Z/a
};

// First (r, s) in lexicographic order with (1+br)(1+cs) = 0 mod a, for
// b + c = 1 mod a.  Existence is guaranteed (finite commutative rings are
// PM); an exhausted search would falsify that and fails loudly.
inline PMWitness pm_witness(long long a, long long b, long long c) {
    if (a < 2 || a > 1000) throw ring_error("pm_witness: modulus out of budget [2, 10^3]");
    auto m = [&](long long v) { return ((v % a) + a) % a; };
    if (m(b + c) != 1) throw ring_error("pm_witness: b + c != 1 (mod a)");
    for (long long r = 0; r < a; ++r)
        for (long long s = 0; s < a; ++s)
            if (m((1 + b * r) * (1 + c * s)) == 0) return {r, s};
    throw ring_error("pm_witness: search exhausted (should be impossible)");
}

// --- feckly clean decomposition over Z_(2,3) ---------------------------------

struct FecklyCleanWitness {
    RingElement e;     // idempotent mod J(R): e^2 - e in 6R
    RingElement unit;  // a - e, a unit
};

// e is drawn from the mod-6 idempotent lifts {0, 1, 3, 4}; a table check over
// the six residues shows a valid choice always exists.
inline FecklyCleanWitness feckly_clean_decompose(const RingElement& a) {
    if (a.ring.kind != RingKind::LocalizedIntegers)
        throw unsupported_operation("feckly_clean_decompose: zloc23 only");
    static const long long lifts[4] = {0, 1, 3, 4};
    for (long long e : lifts) {
        RingElement ee = RingElement::from_int(a.ring, e);
        RingElement u = sub(a, ee);
        if (is_unit(u)) {
            if (!jacobson_membership(sub(mul(ee, ee), ee)))
                throw ring_error("feckly clean: e^2 - e not in J(R)");
            return {ee, u};
        }
    }
    throw ring_error("feckly clean: no idempotent lift found (should be impossible)");
}

// --- Lam condition -----------------------------------------------------------

// RaR = R implies a invertible.  In every commutative instance RaR = R holds
// exactly for units; in the quaternions every nonzero element is invertible.
inline bool lam_check(const RingElement& a) {
    bool generates_unit_ideal =
        a.ring.division_ring() ? !a.is_zero() : is_unit(a);
    return !generates_unit_ideal || is_unit(a);
}

}  // namespace bezout
