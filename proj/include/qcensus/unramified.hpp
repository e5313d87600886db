#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>

#include "qcensus/errors.hpp"
#include "qcensus/residue_field.hpp"
#include "qcensus/truncated_int.hpp"

namespace qcensus {

// Monic cubic x^3 + c[2] x^2 + c[1] x + c[0] over Z/2^precision. It is the
// Hensel lift of x^3 + x + 1 and divides x^7 - 1 at its precision, so its
// residue class ring is the valuation ring O_W of the unramified cubic
// extension W/Q2, with w = class of x a lifted primitive 7th root of unity.
struct LiftedCubic {
    std::array<TruncatedInt, 3> c;
    int precision = 1;

    std::string to_string() const {
        return "x^3 + " + std::to_string(c[2].value()) + "*x^2 + " +
               std::to_string(c[1].value()) + "*x + " + std::to_string(c[0].value()) +
               " mod 2^" + std::to_string(precision);
    }
};

namespace detail {

// Dense polynomials over F2 as bitmasks, degree <= 7.
constexpr int f2_deg(std::uint32_t p) { return p == 0 ? -1 : 31 - std::countl_zero(p); }

constexpr std::uint32_t f2_mul(std::uint32_t a, std::uint32_t b) {
    std::uint32_t r = 0;
    while (b) {
        if (b & 1u) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

constexpr std::uint32_t f2_mod(std::uint32_t a, std::uint32_t m) {
    int dm = f2_deg(m);
    for (int d = f2_deg(a); d >= dm; d = f2_deg(a)) a ^= m << (d - dm);
    return a;
}

constexpr std::uint32_t f2_divexact(std::uint32_t a, std::uint32_t m) {
    std::uint32_t q = 0;
    int dm = f2_deg(m);
    for (int d = f2_deg(a); d >= dm; d = f2_deg(a)) {
        q |= 1u << (d - dm);
        a ^= m << (d - dm);
    }
    return a == 0 ? q : 0;  // caller guarantees exact division
}

// Bezout pair over F2: a*f + b*g = 1 for coprime f, g.
inline std::pair<std::uint32_t, std::uint32_t> f2_bezout(std::uint32_t f, std::uint32_t g) {
    std::uint32_t r0 = f, r1 = g, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1) {
        std::uint32_t q = 0, r = r0;
        int d1 = f2_deg(r1);
        for (int d = f2_deg(r); d >= d1; d = f2_deg(r)) {
            q |= 1u << (d - d1);
            r ^= r1 << (d - d1);
        }
        r0 = r1; r1 = r;
        std::uint32_t s2 = s0 ^ f2_mul(q, s1), t2 = t0 ^ f2_mul(q, t1);
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    return {s0, t0};
}

}  // namespace detail

// Lifts the factorization x^7 - 1 = (x^3 + x + 1) * (x^4 + x^2 + x + 1) mod 2
// to Z/2^precision, one digit at a time, and returns the cubic factor. The
// digit-by-digit schedule makes truncation to a lower precision coincide with
// the lift computed directly at that precision.
inline LiftedCubic hensel_lift_cubic(int precision) {
    if (precision < 1 || precision > TruncatedInt::kMaxPrecision)
        throw DomainError("hensel_lift_cubic: precision out of range");
    const std::uint32_t mask = TruncatedInt::mask(precision);

    std::array<std::uint32_t, 8> f{1, 1, 0, 1, 0, 0, 0, 0};  // x^3 + x + 1
    std::array<std::uint32_t, 8> g{1, 1, 1, 0, 1, 0, 0, 0};  // x^4 + x^2 + x + 1
    std::array<std::uint32_t, 8> h{};                        // x^7 - 1
    h[0] = (0u - 1u) & mask;
    h[7] = 1;

    const std::uint32_t fbar = 0b1011, gbar = 0b10111;
    const auto [abar, bbar] = detail::f2_bezout(fbar, gbar);

    for (int m = 1; m < precision; ++m) {
        // residual (h - f*g) / 2^m mod 2
        std::array<std::uint32_t, 8> fg{};
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; j <= 4; ++j) fg[i + j] += f[i] * g[j];
        std::uint32_t dbar = 0;
        for (int i = 0; i <= 7; ++i) dbar |= (((h[i] - fg[i]) >> m) & 1u) << i;

        // solve fbar*beta + gbar*u = dbar over F2
        std::uint32_t u = detail::f2_mod(detail::f2_mul(bbar, dbar), fbar);
        std::uint32_t beta = detail::f2_divexact(dbar ^ detail::f2_mul(gbar, u), fbar);

        for (int i = 0; i <= 2; ++i) f[i] = (f[i] + (((u >> i) & 1u) << m)) & mask;
        for (int i = 0; i <= 3; ++i) g[i] = (g[i] + (((beta >> i) & 1u) << m)) & mask;
    }

    // self-check: f*g == x^7 - 1 at the requested precision
    std::array<std::uint32_t, 8> fg{};
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 4; ++j) fg[i + j] += f[i] * g[j];
    for (int i = 0; i <= 7; ++i)
        if ((fg[i] & mask) != (h[i] & mask))
            throw InternalCheckFailure("hensel_lift_cubic: lifted factorization check failed");

    return LiftedCubic{{TruncatedInt(f[0], precision), TruncatedInt(f[1], precision),
                        TruncatedInt(f[2], precision)},
                       precision};
}

namespace detail {

// Per-precision constants for O_W arithmetic: the lifted cubic, the reduction
// rows for w^3 and w^4, and the Frobenius substitution matrices.
struct WCtx {
    int prec = 0;
    std::uint32_t mask = 0;
    std::array<std::uint32_t, 3> cubic{};  // c0, c1, c2
    std::array<std::uint32_t, 3> w3{};     // coordinates of w^3
    std::array<std::uint32_t, 3> w4{};     // coordinates of w^4
    // frob[e][i][j]: coordinate i of (w^(2^e))^j, so frobenius is out = M * in.
    std::array<std::array<std::array<std::uint32_t, 3>, 3>, 3> frob{};
};

inline WCtx make_wctx(int prec) {
    WCtx ctx;
    ctx.prec = prec;
    ctx.mask = TruncatedInt::mask(prec);
    LiftedCubic f = hensel_lift_cubic(prec);
    for (int i = 0; i < 3; ++i) ctx.cubic[i] = f.c[i].value();
    for (int i = 0; i < 3; ++i) ctx.w3[i] = (0u - ctx.cubic[i]) & ctx.mask;
    // w^4 = w * w^3 = w3[0]*w + w3[1]*w^2 + w3[2]*w^3
    ctx.w4[0] = (ctx.w3[2] * ctx.w3[0]) & ctx.mask;
    ctx.w4[1] = (ctx.w3[0] + ctx.w3[2] * ctx.w3[1]) & ctx.mask;
    ctx.w4[2] = (ctx.w3[1] + ctx.w3[2] * ctx.w3[2]) & ctx.mask;

    // Frobenius e substitutes w -> w^(2^e); columns are 1, w^(2^e), (w^(2^e))^2.
    // e=1: images 1, w^2, w^4.  e=2: images 1, w^4, w^8 = w (since w^7 = 1).
    for (int i = 0; i < 3; ++i) {
        ctx.frob[0][i][0] = (i == 0);
        ctx.frob[0][i][1] = (i == 1);
        ctx.frob[0][i][2] = (i == 2);
        ctx.frob[1][i][0] = (i == 0);
        ctx.frob[1][i][1] = (i == 2);
        ctx.frob[1][i][2] = ctx.w4[i];
        ctx.frob[2][i][0] = (i == 0);
        ctx.frob[2][i][1] = ctx.w4[i];
        ctx.frob[2][i][2] = (i == 1);
    }
    return ctx;
}

inline const WCtx& wctx(int prec) {
    static const auto table = [] {
        std::array<WCtx, TruncatedInt::kMaxPrecision + 1> t{};
        for (int p = 1; p <= TruncatedInt::kMaxPrecision; ++p) t[p] = make_wctx(p);
        return t;
    }();
    return table[prec];
}

}  // namespace detail

// Element of O_W = Z2[w] in coordinates over the basis {1, w, w^2}, all three
// carried at one shared precision.
class WElem {
  public:
    WElem() : c_{0, 0, 0}, prec_(1) {}

    static WElem zero(int precision) { return WElem({0, 0, 0}, precision); }
    static WElem one(int precision) { return WElem({1, 0, 0}, precision); }
    static WElem w(int precision) { return WElem({0, 1, 0}, precision); }
    static WElem from_int(TruncatedInt a) { return WElem({a.value(), 0, 0}, a.precision()); }
    static WElem from_coords(TruncatedInt a0, TruncatedInt a1, TruncatedInt a2) {
        if (a0.precision() != a1.precision() || a0.precision() != a2.precision())
            throw PrecisionMismatch("WElem: coordinates must share precision");
        return WElem({a0.value(), a1.value(), a2.value()}, a0.precision());
    }
    static WElem from_bits(std::uint32_t a0, std::uint32_t a1, std::uint32_t a2, int precision) {
        return WElem({a0, a1, a2}, precision);
    }

    int precision() const { return prec_; }
    TruncatedInt coord(int i) const { return TruncatedInt(c_[i], prec_); }
    std::uint32_t raw(int i) const { return c_[i]; }

    F8 residue() const {
        return F8(static_cast<std::uint8_t>((c_[0] & 1u) | ((c_[1] & 1u) << 1) |
                                            ((c_[2] & 1u) << 2)));
    }
    bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }
    bool is_unit() const { return !residue().is_zero(); }

    friend WElem operator+(const WElem& a, const WElem& b) {
        int p = a.prec_ < b.prec_ ? a.prec_ : b.prec_;
        std::uint32_t m = TruncatedInt::mask(p);
        return WElem({(a.c_[0] + b.c_[0]) & m, (a.c_[1] + b.c_[1]) & m, (a.c_[2] + b.c_[2]) & m},
                     p);
    }
    friend WElem operator-(const WElem& a, const WElem& b) {
        int p = a.prec_ < b.prec_ ? a.prec_ : b.prec_;
        std::uint32_t m = TruncatedInt::mask(p);
        return WElem({(a.c_[0] - b.c_[0]) & m, (a.c_[1] - b.c_[1]) & m, (a.c_[2] - b.c_[2]) & m},
                     p);
    }
    WElem operator-() const { return zero(prec_) - *this; }

    // Product reduced modulo the lifted cubic. Operands must share precision.
    friend WElem operator*(const WElem& a, const WElem& b) {
        if (a.prec_ != b.prec_) throw PrecisionMismatch("WElem: operand precisions differ");
        const detail::WCtx& ctx = detail::wctx(a.prec_);
        std::uint32_t d0 = a.c_[0] * b.c_[0];
        std::uint32_t d1 = a.c_[0] * b.c_[1] + a.c_[1] * b.c_[0];
        std::uint32_t d2 = a.c_[0] * b.c_[2] + a.c_[1] * b.c_[1] + a.c_[2] * b.c_[0];
        std::uint32_t d3 = a.c_[1] * b.c_[2] + a.c_[2] * b.c_[1];
        std::uint32_t d4 = a.c_[2] * b.c_[2];
        return WElem({(d0 + d3 * ctx.w3[0] + d4 * ctx.w4[0]) & ctx.mask,
                      (d1 + d3 * ctx.w3[1] + d4 * ctx.w4[1]) & ctx.mask,
                      (d2 + d3 * ctx.w3[2] + d4 * ctx.w4[2]) & ctx.mask},
                     a.prec_);
    }

    WElem scaled(std::uint32_t s) const {
        std::uint32_t m = TruncatedInt::mask(prec_);
        return WElem({(c_[0] * s) & m, (c_[1] * s) & m, (c_[2] * s) & m}, prec_);
    }

    WElem square() const { return *this * *this; }

    WElem pow(std::uint64_t e) const {
        WElem acc = one(prec_);
        WElem base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            base = base.square();
            e >>= 1;
        }
        return acc;
    }

    // Unit inverse by Newton iteration z <- z(2 - az) from the residue inverse.
    WElem inverse() const {
        if (!is_unit()) throw NonUnitError("WElem: inverse of non-unit");
        F8 rinv = residue().inverse();
        WElem z = WElem({static_cast<std::uint32_t>(rinv.bits() & 1u),
                         static_cast<std::uint32_t>((rinv.bits() >> 1) & 1u),
                         static_cast<std::uint32_t>((rinv.bits() >> 2) & 1u)},
                        prec_);
        WElem two = WElem({2, 0, 0}, prec_);
        for (int it = 0; it < 8; ++it) {
            WElem e = *this * z;
            if (e == one(prec_)) return z;
            z = z * (two - e);
        }
        if (*this * z == one(prec_)) return z;
        throw InternalCheckFailure("WElem: inverse iteration did not converge");
    }

    bool operator==(const WElem& o) const {
        return prec_ == o.prec_ && c_[0] == o.c_[0] && c_[1] == o.c_[1] && c_[2] == o.c_[2];
    }
    bool operator!=(const WElem& o) const { return !(*this == o); }

    // Minimum 2-adic valuation of the coordinates; precision when zero.
    int v2() const {
        if (is_zero()) return prec_;
        int v = prec_;
        for (std::uint32_t x : c_)
            if (x) v = std::min(v, std::countr_zero(x));
        return v;
    }

    std::string to_string() const {
        return "(" + std::to_string(c_[0]) + ", " + std::to_string(c_[1]) + ", " +
               std::to_string(c_[2]) + ")";
    }

  private:
    WElem(std::array<std::uint32_t, 3> c, int precision) : prec_(precision) {
        if (precision < 1 || precision > TruncatedInt::kMaxPrecision)
            throw DomainError("WElem: precision out of range");
        std::uint32_t m = TruncatedInt::mask(precision);
        for (int i = 0; i < 3; ++i) c_[i] = c[i] & m;
    }

    std::array<std::uint32_t, 3> c_;
    int prec_;

    friend WElem frobenius(const WElem&, int);
};

// The ring automorphism determined by w -> w^(2^e), computed by substituting
// the cached images of the basis monomials (a matrix over Z/2^N), not by
// permuting coordinates.
inline WElem frobenius(const WElem& a, int e) {
    if (e < 0) throw DomainError("frobenius: negative power");
    e %= 3;
    if (e == 0) return a;
    const detail::WCtx& ctx = detail::wctx(a.precision());
    const auto& M = ctx.frob[e];
    std::array<std::uint32_t, 3> out{};
    for (int i = 0; i < 3; ++i)
        out[i] = (M[i][0] * a.c_[0] + M[i][1] * a.c_[1] + M[i][2] * a.c_[2]) & ctx.mask;
    return WElem::from_bits(out[0], out[1], out[2], a.precision());
}

// Galois norm and trace of W/Q2: norm = a * s(a) * s^2(a), trace = a + s(a) + s^2(a).
// Both must land on the Z2-line; a nonzero w-coordinate indicates an arithmetic bug.
inline std::pair<TruncatedInt, TruncatedInt> norm_trace(const WElem& a) {
    WElem s1 = frobenius(a, 1);
    WElem s2 = frobenius(a, 2);
    WElem n = a * s1 * s2;
    WElem t = a + s1 + s2;
    if (n.raw(1) != 0 || n.raw(2) != 0 || t.raw(1) != 0 || t.raw(2) != 0)
        throw InternalCheckFailure("norm_trace: result not rational");
    return {n.coord(0), t.coord(0)};
}

// The unique lift t of c with t^8 = t and t = c (mod 2), by fixed-point
// iteration t <- t^8. Each step gains three 2-adic digits.
inline WElem teichmuller(F8 c, int precision) {
    WElem t = WElem::from_bits(c.bits() & 1u, (c.bits() >> 1) & 1u, (c.bits() >> 2) & 1u,
                               precision);
    for (int it = 0; it <= precision + 2; ++it) {
        WElem t8 = t.square().square().square();
        if (t8 == t) return t;
        t = t8;
    }
    throw InternalCheckFailure("teichmuller: iteration did not stabilize");
}

}  // namespace qcensus
