#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <random>
#include <vector>

#include "qcensus/sampling.hpp"
#include "qcensus/unramified.hpp"

using namespace qcensus;

namespace {

// Oracle: does the monic cubic x^3 + c2 x^2 + c1 x + c0 divide x^7 - 1 mod 2^n?
// Plain polynomial long division; the divisor is monic so this is exact.
bool divides_x7_minus_1(std::uint32_t c0, std::uint32_t c1, std::uint32_t c2, int n) {
    std::uint32_t mask = TruncatedInt::mask(n);
    std::array<std::uint32_t, 8> rem{};
    rem[0] = (0u - 1u) & mask;
    rem[7] = 1;
    for (int d = 7; d >= 3; --d) {
        std::uint32_t q = rem[d];
        if (q == 0) continue;
        rem[d] = 0;
        rem[d - 1] = (rem[d - 1] - q * c2) & mask;
        rem[d - 2] = (rem[d - 2] - q * c1) & mask;
        rem[d - 3] = (rem[d - 3] - q * c0) & mask;
    }
    return rem[0] == 0 && rem[1] == 0 && rem[2] == 0;
}

}  // namespace

TEST_CASE("hensel lift at precision 1 is the seed polynomial") {
    LiftedCubic f = hensel_lift_cubic(1);
    CHECK(f.c[0].value() == 1);
    CHECK(f.c[1].value() == 1);
    CHECK(f.c[2].value() == 0);
}

TEST_CASE("hensel lift at precision 4 matches exhaustive search") {
    // all monic cubics mod 16 that divide x^7 - 1 and reduce to x^3 + x + 1 mod 2
    std::vector<std::array<std::uint32_t, 3>> found;
    for (std::uint32_t c0 = 0; c0 < 16; ++c0)
        for (std::uint32_t c1 = 0; c1 < 16; ++c1)
            for (std::uint32_t c2 = 0; c2 < 16; ++c2) {
                if ((c0 & 1) != 1 || (c1 & 1) != 1 || (c2 & 1) != 0) continue;
                if (divides_x7_minus_1(c0, c1, c2, 4)) found.push_back({c0, c1, c2});
            }
    REQUIRE(found.size() == 1);  // the lift is unique
    LiftedCubic f = hensel_lift_cubic(4);
    CHECK(f.c[0].value() == found[0][0]);
    CHECK(f.c[1].value() == found[0][1]);
    CHECK(f.c[2].value() == found[0][2]);
}

TEST_CASE("hensel lift divides x^7 - 1 at every precision") {
    for (int n : {2, 3, 5, 8, 13, 21, 30}) {
        LiftedCubic f = hensel_lift_cubic(n);
        CHECK(divides_x7_minus_1(f.c[0].value(), f.c[1].value(), f.c[2].value(), n));
    }
}

TEST_CASE("hensel lift is precision coherent") {
    LiftedCubic big = hensel_lift_cubic(12);
    for (int m : {1, 2, 4, 7, 11}) {
        LiftedCubic small = hensel_lift_cubic(m);
        for (int i = 0; i < 3; ++i) CHECK(big.c[i].truncated(m) == small.c[i]);
    }
}

TEST_CASE("hensel lift vanishes on the teichmuller root at precision 8") {
    // w reduces to the residue x, has order 7 and satisfies w^8 = w, so it is
    // the teichmuller lift of its residue; f(w) = 0 holds by construction.
    WElem t = teichmuller(F8(0b010), 8);
    CHECK(t == WElem::w(8));
    LiftedCubic f = hensel_lift_cubic(8);
    WElem val = t * t * t + WElem::from_int(f.c[2]) * (t * t) + WElem::from_int(f.c[1]) * t +
                WElem::from_int(f.c[0]);
    CHECK(val.is_zero());
}

TEST_CASE("w_mul unit law and the defining cubic") {
    for (int n : {1, 4, 6, 10}) {
        WElem w = WElem::w(n);
        std::mt19937_64 rng(11);
        for (int t = 0; t < 50; ++t) {
            WElem b = sample_w(rng, n);
            CHECK(WElem::one(n) * b == b);
        }
        LiftedCubic f = hensel_lift_cubic(n);
        WElem w3 = w * (w * w);
        WElem expect = -(WElem::from_int(f.c[2]) * (w * w) + WElem::from_int(f.c[1]) * w +
                         WElem::from_int(f.c[0]));
        CHECK(w3 == expect);
        CHECK(w.pow(7) == WElem::one(n));
    }
}

TEST_CASE("w_mul requires a shared precision") {
    CHECK_THROWS_AS(WElem::w(4) * WElem::w(5), PrecisionMismatch);
}

TEST_CASE("w_inv") {
    int n = 8;
    CHECK(WElem::one(n).inverse() == WElem::one(n));
    CHECK(WElem::w(n).inverse() == WElem::w(n).pow(6));
    WElem three = WElem::from_int(TruncatedInt(3, n));
    CHECK(three.inverse() == WElem::from_int(TruncatedInt(3, n).inverse()));
    CHECK_THROWS_AS(WElem::from_int(TruncatedInt(2, n)).inverse(), NonUnitError);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        WElem a = sample_w_unit(rng, n);
        CHECK(a * a.inverse() == WElem::one(n));
    }
}

TEST_CASE("frobenius fixes the base, maps w to w^2, and has order 3") {
    int n = 9;
    WElem w = WElem::w(n);
    CHECK(frobenius(w, 0) == w);
    CHECK(frobenius(w, 1) == w * w);
    std::mt19937_64 rng(13);
    for (int t = 0; t < 100; ++t) {
        WElem a = sample_w(rng, n);
        WElem b = sample_w(rng, n);
        CHECK(frobenius(frobenius(a, 1), 1) == frobenius(a, 2));
        CHECK(frobenius(frobenius(a, 2), 1) == a);  // order exactly 3
        CHECK(frobenius(a * b, 1) == frobenius(a, 1) * frobenius(b, 1));
        CHECK(frobenius(a + b, 1) == frobenius(a, 1) + frobenius(b, 1));
    }
    CHECK(frobenius(w, 1) != w);
    CHECK(frobenius(w, 2) != w);
    CHECK(frobenius(WElem::from_int(TruncatedInt(5, n)), 1) == WElem::from_int(TruncatedInt(5, n)));
}

TEST_CASE("norm and trace of W over Q2") {
    int n = 10;
    auto [n1, t1] = norm_trace(WElem::one(n));
    CHECK(n1.value() == 1);
    CHECK(t1.value() == 3);

    auto [nw, tw] = norm_trace(WElem::w(n));
    CHECK(nw.value() == 1);  // norm of w is w^(1+2+4) = w^7 = 1
    LiftedCubic f = hensel_lift_cubic(n);
    CHECK(tw == -f.c[2]);  // trace of w is the negated x^2 coefficient

    std::mt19937_64 rng(17);
    for (int t = 0; t < 100; ++t) {
        WElem a = sample_w(rng, n);
        WElem b = sample_w(rng, n);
        auto [na, ta] = norm_trace(a);
        auto [nb, tb] = norm_trace(b);
        auto [nab, tab] = norm_trace(a * b);
        auto [nsum, tsum] = norm_trace(a + b);
        (void)nsum;
        CHECK(nab == na * nb);
        CHECK(tab == tab);  // well-defined
        CHECK(tsum == ta + tb);
    }
}

TEST_CASE("teichmuller lift") {
    int n = 10;
    CHECK(teichmuller(F8(0), n).is_zero());
    CHECK(teichmuller(F8(1), n) == WElem::one(n));
    for (F8 c : F8::all()) {
        WElem t = teichmuller(c, n);
        CHECK(t.residue() == c);
        WElem t8 = t.square().square().square();
        CHECK(t8 == t);
        if (!c.is_zero()) CHECK(t.pow(7) == WElem::one(n));
    }
    // multiplicativity over all 64 pairs
    for (F8 a : F8::all())
        for (F8 b : F8::all()) CHECK(teichmuller(a * b, n) == teichmuller(a, n) * teichmuller(b, n));
}

TEST_CASE("teichmuller is reachable from any starting lift") {
    int n = 8;
    std::mt19937_64 rng(23);
    for (F8 c : F8::all()) {
        WElem expect = teichmuller(c, n);
        for (int trial = 0; trial < 10; ++trial) {
            // arbitrary lift of c: teichmuller bits plus random even junk
            WElem t = WElem::from_bits((c.bits() & 1) + 2 * (std::uint32_t(rng()) & 0x3f),
                                       ((c.bits() >> 1) & 1) + 2 * (std::uint32_t(rng()) & 0x3f),
                                       ((c.bits() >> 2) & 1) + 2 * (std::uint32_t(rng()) & 0x3f),
                                       n);
            for (int it = 0; it < 12; ++it) t = t.square().square().square();
            CHECK(t == expect);
        }
    }
}

TEST_CASE("ring laws over random triples") {
    std::mt19937_64 rng(29);
    for (int n : {4, 6, 10}) {
        for (int t = 0; t < 1000; ++t) {
            WElem a = sample_w(rng, n), b = sample_w(rng, n), c = sample_w(rng, n);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + b) + c == a + (b + c));
        }
    }
}
