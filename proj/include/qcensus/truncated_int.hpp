#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "qcensus/errors.hpp"

namespace qcensus {

// A 2-adic integer carried modulo 2^precision. Arithmetic between operands of
// unequal precision truncates to the minimum precision. Values fit in 31 bits,
// so plain uint32 wraparound keeps every product exact modulo 2^precision.
class TruncatedInt {
  public:
    static constexpr int kMaxPrecision = 30;

    TruncatedInt() : v_(0), prec_(1) {}
    TruncatedInt(std::uint32_t value, int precision) : prec_(precision) {
        if (precision < 1 || precision > kMaxPrecision)
            throw DomainError("TruncatedInt: precision out of range");
        v_ = value & mask(precision);
    }

    static TruncatedInt zero(int precision) { return TruncatedInt(0, precision); }
    static TruncatedInt one(int precision) { return TruncatedInt(1, precision); }

    std::uint32_t value() const { return v_; }
    int precision() const { return prec_; }
    bool is_zero() const { return v_ == 0; }
    bool is_unit() const { return (v_ & 1u) != 0; }

    // 2-adic valuation; the zero residue reports its precision (valuation >= precision).
    int v2() const { return v_ == 0 ? prec_ : std::countr_zero(v_); }

    TruncatedInt truncated(int new_precision) const {
        if (new_precision > prec_)
            throw DomainError("TruncatedInt: cannot truncate to higher precision");
        return TruncatedInt(v_, new_precision);
    }

    // Reinterpret as an exact integer at higher precision. Only valid when the
    // caller knows the value is exact (canonical representatives, small constants).
    TruncatedInt zero_extended(int new_precision) const {
        if (new_precision < prec_)
            throw DomainError("TruncatedInt: zero_extended would lose digits");
        return TruncatedInt(v_, new_precision);
    }

    friend TruncatedInt operator+(TruncatedInt a, TruncatedInt b) {
        int p = a.prec_ < b.prec_ ? a.prec_ : b.prec_;
        return TruncatedInt(a.v_ + b.v_, p);
    }
    friend TruncatedInt operator-(TruncatedInt a, TruncatedInt b) {
        int p = a.prec_ < b.prec_ ? a.prec_ : b.prec_;
        return TruncatedInt(a.v_ - b.v_, p);
    }
    friend TruncatedInt operator*(TruncatedInt a, TruncatedInt b) {
        int p = a.prec_ < b.prec_ ? a.prec_ : b.prec_;
        return TruncatedInt(a.v_ * b.v_, p);
    }
    TruncatedInt operator-() const { return TruncatedInt(0u - v_, prec_); }

    // Inverse of a unit (odd value) at the same precision.
    TruncatedInt inverse() const {
        if (!is_unit()) throw NonUnitError("TruncatedInt: inverse of non-unit");
        return TruncatedInt(inverse_odd(v_, prec_), prec_);
    }

    bool operator==(const TruncatedInt& o) const { return v_ == o.v_ && prec_ == o.prec_; }
    bool operator!=(const TruncatedInt& o) const { return !(*this == o); }

    std::string to_string() const { return std::to_string(v_); }

    static constexpr std::uint32_t mask(int precision) {
        return (precision >= 32) ? ~0u : ((1u << precision) - 1u);
    }

    // Newton lift of the inverse of an odd residue: x <- x(2 - ax) doubles the
    // number of correct digits; a^-1 == a (mod 8) seeds three of them.
    static std::uint32_t inverse_odd(std::uint32_t a, int precision) {
        std::uint32_t x = a;
        for (int bits = 3; bits < precision; bits *= 2) x = x * (2u - a * x);
        return x & mask(precision);
    }

  private:
    std::uint32_t v_;
    int prec_;
};

}  // namespace qcensus
