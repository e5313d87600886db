#pragma once

#include <array>
#include <cstdint>

#include "qcensus/errors.hpp"

namespace qcensus {

// F8 = F2[x]/(x^3 + x + 1), one element per 3-bit polynomial. The nonzero
// elements form a cyclic group of order 7.
class F8 {
  public:
    constexpr F8() : b_(0) {}
    constexpr explicit F8(std::uint8_t bits) : b_(static_cast<std::uint8_t>(bits & 7u)) {}

    constexpr std::uint8_t bits() const { return b_; }
    constexpr bool is_zero() const { return b_ == 0; }

    friend constexpr F8 operator+(F8 a, F8 b) { return F8(static_cast<std::uint8_t>(a.b_ ^ b.b_)); }
    friend constexpr F8 operator-(F8 a, F8 b) { return a + b; }
    friend constexpr F8 operator*(F8 a, F8 b) { return F8(mul_bits(a.b_, b.b_)); }

    constexpr F8 square() const { return *this * *this; }

    constexpr F8 pow(std::uint64_t e) const {
        if (is_zero()) return F8(0);
        F8 acc(1);
        F8 base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            base = base.square();
            e >>= 1;
        }
        return acc;
    }

    F8 inverse() const {
        if (is_zero()) throw NonUnitError("F8: inverse of zero");
        return pow(6);  // order of F8* is 7
    }

    constexpr bool operator==(F8 o) const { return b_ == o.b_; }
    constexpr bool operator!=(F8 o) const { return b_ != o.b_; }

    static constexpr std::array<F8, 8> all() {
        return {F8(0), F8(1), F8(2), F8(3), F8(4), F8(5), F8(6), F8(7)};
    }

  private:
    static constexpr std::uint8_t mul_bits(std::uint8_t a, std::uint8_t b) {
        std::uint8_t r = 0;
        for (int i = 0; i < 3; ++i)
            if (b & (1u << i)) r ^= static_cast<std::uint8_t>(a << i);
        for (int d = 4; d >= 3; --d)
            if (r & (1u << d)) r ^= static_cast<std::uint8_t>(0b1011u << (d - 3));
        return static_cast<std::uint8_t>(r & 7u);
    }

    std::uint8_t b_;
};

// Applies the 2-power Frobenius e times: x -> x^(2^e).
constexpr F8 f8_frobenius_iter(F8 x, int e) {
    for (int i = 0; i < e; ++i) x = x.square();
    return x;
}

// True iff b -> b^(2^(2i) - 1) is a bijection of F8*. Brute force over the
// 7 nonzero elements; b^(2^(2i)) is computed by 2i literal squarings.
inline bool f8_power_map_bijective(int i) {
    if (i < 1) throw DomainError("f8_power_map_bijective: i must be positive");
    bool seen[8] = {};
    int distinct = 0;
    for (F8 b : F8::all()) {
        if (b.is_zero()) continue;
        F8 img = f8_frobenius_iter(b, 2 * i) * b.inverse();
        if (!seen[img.bits()]) {
            seen[img.bits()] = true;
            ++distinct;
        }
    }
    return distinct == 7;
}

// True iff some b in F8 satisfies b^(2^(2i)) - b = 1. Brute force over all 8.
inline bool f8_artin_schreier_solvable(int i) {
    if (i < 1) throw DomainError("f8_artin_schreier_solvable: i must be positive");
    for (F8 b : F8::all())
        if (f8_frobenius_iter(b, 2 * i) + b == F8(1)) return true;
    return false;
}

}  // namespace qcensus
