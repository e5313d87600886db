#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qcensus/truncated_int.hpp"

using qcensus::DomainError;
using qcensus::NonUnitError;
using qcensus::TruncatedInt;

TEST_CASE("construction masks to precision") {
    TruncatedInt a(0x1ff, 4);
    CHECK(a.value() == 0xf);
    CHECK(a.precision() == 4);
    CHECK_THROWS_AS(TruncatedInt(1, 0), DomainError);
    CHECK_THROWS_AS(TruncatedInt(1, 31), DomainError);
}

TEST_CASE("mixed-precision arithmetic truncates to the minimum") {
    TruncatedInt a(21, 8), b(13, 4);
    CHECK((a + b).precision() == 4);
    CHECK((a + b).value() == ((21 + 13) & 0xf));
    CHECK((a * b).value() == ((21 * 13) & 0xf));
    CHECK((a - b).value() == ((21 - 13) & 0xf));
}

TEST_CASE("negation and subtraction wrap") {
    TruncatedInt a(1, 6);
    CHECK((-a).value() == 63);
    CHECK((TruncatedInt::zero(6) - a).value() == 63);
}

TEST_CASE("inverse of odd values") {
    for (std::uint32_t v = 1; v < 256; v += 2) {
        TruncatedInt a(v, 8);
        CHECK((a * a.inverse()).value() == 1);
    }
    CHECK_THROWS_AS(TruncatedInt(2, 8).inverse(), NonUnitError);
    CHECK(TruncatedInt(3, 6).inverse().value() == 43);  // 3*43 = 129 = 1 mod 64
}

TEST_CASE("2-adic valuation") {
    CHECK(TruncatedInt(12, 8).v2() == 2);
    CHECK(TruncatedInt(1, 8).v2() == 0);
    CHECK(TruncatedInt(0, 8).v2() == 8);  // zero residue: valuation >= precision
}

TEST_CASE("truncation and zero extension") {
    TruncatedInt a(0b101101, 6);
    CHECK(a.truncated(3).value() == 0b101);
    CHECK_THROWS_AS(a.truncated(7), DomainError);
    CHECK(a.zero_extended(10).value() == 0b101101);
    CHECK_THROWS_AS(a.zero_extended(3), DomainError);
}

TEST_CASE("ring laws on random samples") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 1000; ++t) {
        int n = 1 + static_cast<int>(rng() % 20);
        TruncatedInt a(static_cast<std::uint32_t>(rng()), n);
        TruncatedInt b(static_cast<std::uint32_t>(rng()), n);
        TruncatedInt c(static_cast<std::uint32_t>(rng()), n);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
    }
}
