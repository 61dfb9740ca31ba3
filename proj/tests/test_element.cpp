#include <catch2/catch_amalgamated.hpp>

#include "bezout/element.hpp"
#include "bezout/format.hpp"
#include "oracles.hpp"

using namespace bezout;

namespace {
const RingDescriptor ZZ = RingDescriptor::integers();
const RingDescriptor F5X = RingDescriptor::poly(5);
const RingDescriptor ZL = RingDescriptor::zloc23();
const RingDescriptor Z12 = RingDescriptor::mod(12);
const RingDescriptor H = RingDescriptor::quat();

RingElement Zi(long long v) { return RingElement::from_int(ZZ, v); }
}  // namespace

TEST_CASE("ring descriptor strings round-trip") {
    for (const char* s : {"int", "poly:5", "zloc23", "mod:12", "quat"}) {
        CHECK(RingDescriptor::parse(s).str() == s);
    }
    CHECK_THROWS_AS(RingDescriptor::parse("field:9"), parse_error);
    CHECK_THROWS_AS(RingDescriptor::poly(6), ring_error);
    CHECK_THROWS_AS(RingDescriptor::mod(1), ring_error);
}

TEST_CASE("arithmetic on pinned values") {
    CHECK(add(Zi(2), Zi(3)) == Zi(5));

    RingElement i = RingElement::quaternion(0, 1, 0, 0);
    RingElement j = RingElement::quaternion(0, 0, 1, 0);
    RingElement k = RingElement::quaternion(0, 0, 0, 1);
    CHECK(mul(i, j) == k);
    CHECK(mul(j, i) == neg(k));

    RingElement fifth = RingElement::zloc(Rat(1, 5));
    RingElement five = RingElement::from_int(ZL, 5);
    CHECK(is_one(mul(fifth, five)));
}

TEST_CASE("ring axioms on random triples") {
    oracle::Rng rng(101);
    for (const auto& ring : {ZZ, F5X, ZL, Z12, H}) {
        for (int trial = 0; trial < 200; ++trial) {
            RingElement a = rng.element(ring), b = rng.element(ring), c = rng.element(ring);
            CHECK(add(a, b) == add(b, a));
            CHECK(add(add(a, b), c) == add(a, add(b, c)));
            CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
            CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
            CHECK(mul(add(b, c), a) == add(mul(b, a), mul(c, a)));
            CHECK(add(a, neg(a)).is_zero());
            CHECK(mul(a, RingElement::one(ring)) == a);
            if (ring.commutative()) CHECK(mul(a, b) == mul(b, a));
        }
    }
}

TEST_CASE("units and inverses") {
    CHECK(is_unit(Zi(-1)));
    CHECK_FALSE(is_unit(Zi(2)));
    CHECK(is_unit(RingElement::zloc(Rat(5, 7))));
    CHECK_FALSE(is_unit(RingElement::from_int(ZL, 2)));
    CHECK_FALSE(is_unit(RingElement::from_int(ZL, 3)));
    CHECK(is_unit(RingElement::quaternion(Rat(1, 2), 3, 0, Rat(-2, 7))));
    CHECK_FALSE(is_unit(RingElement::quaternion(0, 0, 0, 0)));
    CHECK_THROWS_AS(inverse(Zi(2)), not_a_unit);

    oracle::Rng rng(202);
    for (const auto& ring : {ZZ, F5X, ZL, Z12, H}) {
        for (int trial = 0; trial < 100; ++trial) {
            RingElement u = rng.unit(ring);
            CHECK(is_one(mul(u, inverse(u))));
            CHECK(is_one(mul(inverse(u), u)));
        }
    }
}

TEST_CASE("try_divide pinned cases and consistency") {
    CHECK(*try_divide(Zi(12), Zi(4)) == Zi(3));
    CHECK_FALSE(try_divide(Zi(12), Zi(5)).has_value());
    CHECK(*try_divide(RingElement::from_int(ZL, 2), RingElement::from_int(ZL, 10)) ==
          RingElement::zloc(Rat(1, 5)));

    oracle::Rng rng(303);
    for (const auto& ring : {ZZ, F5X, ZL, Z12, H}) {
        for (int trial = 0; trial < 200; ++trial) {
            RingElement a = rng.element(ring), b = rng.element(ring);
            auto q = try_divide(a, b);
            if (q) CHECK(mul(b, *q) == a);
            // and every honest product must divide back
            if (!b.is_zero()) {
                RingElement prod = mul(b, a);
                auto q2 = try_divide(prod, b);
                REQUIRE(q2.has_value());
                CHECK(mul(b, *q2) == prod);
            }
        }
    }
}

TEST_CASE("extended gcd pinned cases") {
    BezoutWitness w = extended_gcd(Zi(12), Zi(8));
    CHECK(w.d == Zi(4));
    CHECK(add(mul(Zi(12), w.x), mul(Zi(8), w.y)) == w.d);
    CHECK(w.x == Zi(1));
    CHECK(w.y == Zi(-1));

    BezoutWitness w0 = extended_gcd(Zi(-9), Zi(0));
    CHECK(w0.d == Zi(9));
    CHECK(w0.y.is_zero());

    BezoutWitness wz = extended_gcd(RingElement::zloc(Rat(4, 5)), RingElement::from_int(ZL, 6));
    CHECK(wz.d == RingElement::from_int(ZL, 2));
}

TEST_CASE("extended gcd invariants on random pairs") {
    oracle::Rng rng(404);
    for (const auto& ring : {ZZ, F5X, ZL, Z12}) {
        for (int trial = 0; trial < 1000; ++trial) {
            RingElement a = rng.element(ring), b = rng.element(ring);
            BezoutWitness w = extended_gcd(a, b);
            CHECK(add(mul(a, w.x), mul(b, w.y)) == w.d);
            CHECK(try_divide(a, w.d).has_value());
            CHECK(try_divide(b, w.d).has_value());
            CHECK(canonical_associate(w.d).canon == w.d);
        }
    }
}

TEST_CASE("extended gcd is deterministic") {
    oracle::Rng rng(505);
    for (int trial = 0; trial < 200; ++trial) {
        RingElement a = rng.element(ZZ), b = rng.element(ZZ);
        BezoutWitness w1 = extended_gcd(a, b), w2 = extended_gcd(a, b);
        CHECK(w1.x == w2.x);
        CHECK(w1.y == w2.y);
    }
}

TEST_CASE("canonical associates") {
    auto ci = canonical_associate(Zi(-6));
    CHECK(ci.unit == Zi(-1));
    CHECK(ci.canon == Zi(6));

    auto cz = canonical_associate(RingElement::zloc(Rat(20, 7)));
    CHECK(cz.unit == RingElement::zloc(Rat(5, 7)));
    CHECK(cz.canon == RingElement::from_int(ZL, 4));

    auto cp = canonical_associate(RingElement::poly(F5X, {1, 3}));  // 3x + 1
    CHECK(cp.unit == RingElement::poly(F5X, {3}));
    CHECK(cp.canon == RingElement::poly(F5X, {2, 1}));  // x + 2

    oracle::Rng rng(606);
    for (const auto& ring : {ZZ, F5X, ZL, Z12, H}) {
        for (int trial = 0; trial < 200; ++trial) {
            RingElement a = rng.element(ring);
            auto ca = canonical_associate(a);
            CHECK(is_unit(ca.unit));
            CHECK(mul(ca.unit, ca.canon) == a);
            // canonicalizing twice is stable
            CHECK(canonical_associate(ca.canon).canon == ca.canon);
        }
    }
}

TEST_CASE("jacobson membership") {
    CHECK(jacobson_membership(RingElement::zloc(Rat(12, 5))));
    CHECK_FALSE(jacobson_membership(RingElement::from_int(ZL, 4)));
    CHECK(jacobson_membership(Zi(0)));
    CHECK_FALSE(jacobson_membership(Zi(7)));
    CHECK(jacobson_membership(RingElement::from_int(Z12, 6)));
    CHECK_FALSE(jacobson_membership(RingElement::from_int(Z12, 4)));
}

TEST_CASE("maximal ideal labels") {
    CHECK(mspec(Zi(12)) == std::vector<Int>{2, 3});
    CHECK(mspec(Zi(1)).empty());
    CHECK(mspec(RingElement::zloc(Rat(4, 7))) == std::vector<Int>{2});
    CHECK_THROWS_AS(mspec(Zi(0)), ring_error);
    CHECK_THROWS_AS(mspec(RingElement::quaternion(1, 0, 0, 0)), unsupported_operation);
}

TEST_CASE("text encoding round-trips") {
    oracle::Rng rng(707);
    for (const auto& ring : {ZZ, F5X, ZL, Z12, H}) {
        for (int trial = 0; trial < 200; ++trial) {
            RingElement a = rng.element(ring);
            CHECK(parse_element(ring, to_string(a)) == a);
        }
    }
    CHECK(to_string(RingElement::poly(F5X, {1, 0, 3})) == "1+3*x^2");
    CHECK(parse_element(F5X, "2+x") == RingElement::poly(F5X, {2, 1}));
    CHECK(to_string(RingElement::zloc(Rat(-4, 7))) == "-4/7");
    CHECK_THROWS_AS(parse_element(ZZ, "twelve"), parse_error);
}
