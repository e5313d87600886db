#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "qcensus/errors.hpp"
#include "qcensus/residue_field.hpp"
#include "qcensus/truncated_int.hpp"
#include "qcensus/unramified.hpp"

namespace qcensus {

// Parameters of the degree-9 cyclic division algebra D = Q2[w, pi] with
// pi^3 = 2 and v*pi = pi*alpha(v) for v in W, where alpha = frobenius^r_param.
// The two admissible r values give the two algebras with this center and index;
// fixed constants: d = 3, q = 2, n = 1, pi_K = 2.
struct AlgebraConfig {
    int r_param = 1;
    int precision = 6;
    // Frobenius power picked up by a W-coefficient moved across pi^j.
    std::array<int, 3> twist{};
    // Teichmuller lift of each residue, the canonical digit system.
    std::array<WElem, 8> teich{};

    static AlgebraConfig make(int r_param, int precision) {
        if (r_param != 1 && r_param != 2)
            throw DomainError("AlgebraConfig: r_param must be 1 or 2");
        if (precision < 1 || precision > TruncatedInt::kMaxPrecision)
            throw DomainError("AlgebraConfig: precision out of range");
        AlgebraConfig cfg;
        cfg.r_param = r_param;
        cfg.precision = precision;
        for (int j = 0; j < 3; ++j) cfg.twist[j] = (r_param * j) % 3;
        for (std::uint8_t c = 0; c < 8; ++c) cfg.teich[c] = teichmuller(F8(c), precision);
        return cfg;
    }

    bool same_as(const AlgebraConfig& o) const {
        return r_param == o.r_param && precision == o.precision;
    }
};

// Element of O_D in the right-W basis {1, pi, pi^2}: x = c0 + pi*c1 + pi^2*c2.
// Folding pi^3 = 2 keeps products in this shape; moving a coefficient across
// pi^j applies alpha^j to it.
class DElem {
  public:
    DElem() : cfg_(nullptr) {}
    DElem(std::array<WElem, 3> coords, const AlgebraConfig* cfg) : c_(coords), cfg_(cfg) {
        for (const WElem& x : c_)
            if (x.precision() != cfg->precision)
                throw PrecisionMismatch("DElem: coordinate precision differs from config");
    }

    static DElem zero(const AlgebraConfig& cfg) {
        int n = cfg.precision;
        return DElem({WElem::zero(n), WElem::zero(n), WElem::zero(n)}, &cfg);
    }
    static DElem one(const AlgebraConfig& cfg) {
        int n = cfg.precision;
        return DElem({WElem::one(n), WElem::zero(n), WElem::zero(n)}, &cfg);
    }
    static DElem from_w(const WElem& a, const AlgebraConfig& cfg) {
        int n = cfg.precision;
        return DElem({a, WElem::zero(n), WElem::zero(n)}, &cfg);
    }
    static DElem pi(const AlgebraConfig& cfg) {
        int n = cfg.precision;
        return DElem({WElem::zero(n), WElem::one(n), WElem::zero(n)}, &cfg);
    }
    // pi^j for j >= 0, folding pi^3 = 2.
    static DElem pi_power(int j, const AlgebraConfig& cfg) {
        if (j < 0) throw DomainError("pi_power: negative exponent");
        int n = cfg.precision;
        std::uint32_t scalar = 1;
        for (int t = 0; t < j / 3; ++t) scalar *= 2;
        std::array<WElem, 3> c{WElem::zero(n), WElem::zero(n), WElem::zero(n)};
        c[j % 3] = WElem::from_int(TruncatedInt(scalar, n));
        return DElem(c, &cfg);
    }

    const AlgebraConfig& config() const { return *cfg_; }
    const WElem& coord(int i) const { return c_[i]; }
    int precision() const { return cfg_->precision; }

    bool is_zero() const { return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero(); }

    friend DElem operator+(const DElem& a, const DElem& b) {
        a.require_same_config(b);
        return DElem({a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2]}, a.cfg_);
    }
    friend DElem operator-(const DElem& a, const DElem& b) {
        a.require_same_config(b);
        return DElem({a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2]}, a.cfg_);
    }
    DElem operator-() const { return DElem({-c_[0], -c_[1], -c_[2]}, cfg_); }

    // x*y = sum over m,j of pi^(m+j) * alpha^j(a_m) * b_j, degree folded by pi^3 = 2.
    // Works on raw coordinate words; only products and shifts, masked once at the end.
    friend DElem operator*(const DElem& a, const DElem& b) {
        a.require_same_config(b);
        const AlgebraConfig& cfg = *a.cfg_;
        const int n = cfg.precision;
        const detail::WCtx& w = detail::wctx(n);

        // alpha^j(a_m) for the twists this config uses
        std::uint32_t ta[3][3][3];  // [twist power][m][coord]
        for (int m = 0; m < 3; ++m)
            for (int c = 0; c < 3; ++c) ta[0][m][c] = a.c_[m].raw(c);
        for (int e = 1; e < 3; ++e)
            for (int m = 0; m < 3; ++m) {
                const auto& M = w.frob[e];
                for (int i = 0; i < 3; ++i)
                    ta[e][m][i] = M[i][0] * ta[0][m][0] + M[i][1] * ta[0][m][1] +
                                  M[i][2] * ta[0][m][2];
            }

        std::uint32_t acc[3][3] = {};
        for (int j = 0; j < 3; ++j) {
            const std::uint32_t b0 = b.c_[j].raw(0), b1 = b.c_[j].raw(1), b2 = b.c_[j].raw(2);
            if ((b0 | b1 | b2) == 0) continue;
            const auto& A = ta[cfg.twist[j]];
            for (int m = 0; m < 3; ++m) {
                const std::uint32_t a0 = A[m][0], a1 = A[m][1], a2 = A[m][2];
                std::uint32_t d0 = a0 * b0;
                std::uint32_t d1 = a0 * b1 + a1 * b0;
                std::uint32_t d2 = a0 * b2 + a1 * b1 + a2 * b0;
                std::uint32_t d3 = a1 * b2 + a2 * b1;
                std::uint32_t d4 = a2 * b2;
                std::uint32_t t0 = d0 + d3 * w.w3[0] + d4 * w.w4[0];
                std::uint32_t t1 = d1 + d3 * w.w3[1] + d4 * w.w4[1];
                std::uint32_t t2 = d2 + d3 * w.w3[2] + d4 * w.w4[2];
                int deg = m + j;
                if (deg >= 3) {
                    acc[deg - 3][0] += t0 << 1;
                    acc[deg - 3][1] += t1 << 1;
                    acc[deg - 3][2] += t2 << 1;
                } else {
                    acc[deg][0] += t0;
                    acc[deg][1] += t1;
                    acc[deg][2] += t2;
                }
            }
        }
        return DElem({WElem::from_bits(acc[0][0], acc[0][1], acc[0][2], n),
                      WElem::from_bits(acc[1][0], acc[1][1], acc[1][2], n),
                      WElem::from_bits(acc[2][0], acc[2][1], acc[2][2], n)},
                     a.cfg_);
    }

    bool operator==(const DElem& o) const {
        return cfg_->same_as(*o.cfg_) && c_[0] == o.c_[0] && c_[1] == o.c_[1] && c_[2] == o.c_[2];
    }
    bool operator!=(const DElem& o) const { return !(*this == o); }

    // m_D-adic valuation: min over coordinates of 3*v2(c_j) + j. The zero
    // element reports 3*precision, meaning "at least this much".
    int valuation() const {
        int v = 3 * cfg_->precision;
        for (int j = 0; j < 3; ++j)
            if (!c_[j].is_zero()) v = std::min(v, 3 * c_[j].v2() + j);
        return v;
    }
    bool is_unit() const { return c_[0].is_unit(); }

    // Unit inverse by Newton iteration z <- z(2 - xz), seeded with the residue
    // field inverse. Callers handle non-units as unit * pi^v themselves.
    DElem inverse() const {
        if (!is_unit()) throw NonUnitError("DElem: inverse of non-unit");
        const AlgebraConfig& cfg = *cfg_;
        F8 rinv = c_[0].residue().inverse();
        WElem seed = WElem::from_bits(rinv.bits() & 1u, (rinv.bits() >> 1) & 1u,
                                      (rinv.bits() >> 2) & 1u, cfg.precision);
        DElem z = from_w(seed, cfg);
        DElem two = one(cfg) + one(cfg);
        for (int it = 0; it < 12; ++it) {
            DElem e = *this * z;
            if (e == one(cfg)) return z;
            z = z * (two - e);
        }
        if (*this * z == one(cfg)) return z;
        throw InternalCheckFailure("DElem: inverse iteration did not converge");
    }

    // Matrix of left multiplication by *this on D as a right W-space in basis
    // {1, pi, pi^2}: M[i][j] = 2^((m+j-i)/3) * alpha^j(c_m) with m = (i-j) mod 3.
    std::array<std::array<WElem, 3>, 3> regular_matrix() const {
        const AlgebraConfig& cfg = *cfg_;
        WElem two = WElem::from_int(TruncatedInt(2, cfg.precision));
        std::array<std::array<WElem, 3>, 3> M;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int m = (i - j + 3) % 3;
                WElem entry = frobenius(c_[m], cfg.twist[j]);
                if (m + j >= 3) entry = two * entry;
                M[i][j] = entry;
            }
        return M;
    }

    // Trace of the regular matrix; lands in Z2.
    TruncatedInt reduced_trace() const {
        auto M = regular_matrix();
        WElem t = M[0][0] + M[1][1] + M[2][2];
        if (t.raw(1) != 0 || t.raw(2) != 0)
            throw InternalCheckFailure("reduced_trace: result not rational");
        return t.coord(0);
    }

    // Determinant of the regular matrix; lands in Z2.
    TruncatedInt reduced_norm() const {
        auto M = regular_matrix();
        WElem det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                    M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                    M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
        if (det.raw(1) != 0 || det.raw(2) != 0)
            throw InternalCheckFailure("reduced_norm: result not rational");
        return det.coord(0);
    }

    std::string to_string() const {
        return c_[0].to_string() + " + pi*" + c_[1].to_string() + " + pi^2*" + c_[2].to_string();
    }

  private:
    void require_same_config(const DElem& o) const {
        if (cfg_ != o.cfg_ && !cfg_->same_as(*o.cfg_))
            throw ConfigMismatch("DElem: operands built over different configs");
    }

    std::array<WElem, 3> c_;
    const AlgebraConfig* cfg_;
};

inline DElem lie_bracket(const DElem& x, const DElem& y) { return x * y - y * x; }

inline bool in_sl1(const DElem& x) { return x.reduced_trace().is_zero(); }

}  // namespace qcensus
